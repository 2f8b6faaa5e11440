#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcthermo/becmodel.hpp"
#include "lcthermo/error.hpp"

using namespace lct;
using namespace lct::bec;

TEST_CASE("unit conversions") {
  const auto e = BecExperiment::reference();
  // k_B 1 nK / (hbar 2 pi 375 Hz) with CODATA values typed in directly.
  const double expect = 1.380649e-23 * 1e-9 / (1.054571817e-34 * 2 * std::numbers::pi * 375.0);
  CHECK(temperature_to_natural(e, 1e-9) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(0.05557).epsilon(1e-3));
  for (double T : {1e-10, 7e-10, 3e-9}) CHECK(temperature_to_kelvin(e, temperature_to_natural(e, T)) == doctest::Approx(T));
  CHECK(frequency_to_natural(e, e.omega_d) == doctest::Approx(0.8));
  CHECK(frequency_to_si(e, 1.0) == doctest::Approx(e.omega_I));
}

TEST_CASE("condensate scales") {
  const auto e = BecExperiment::reference();
  const double mK = 40.961825258 * 1.66053906660e-27;
  const double base = 3.0 / (4.0 * std::sqrt(2.0)) * 3e-39 * 5000 * 2 * std::numbers::pi * 750 * std::sqrt(mK);
  CHECK(chemical_potential(e) == doctest::Approx(std::cbrt(base * base)).epsilon(1e-12));
  const double r = thomas_fermi_radius(e);
  CHECK(0.5 * mK * std::pow(2 * std::numbers::pi * 750 * r, 2) == doctest::Approx(chemical_potential(e)).epsilon(1e-12));
  CHECK(gamma0(e) == doctest::Approx(7.016e-5).epsilon(1e-3));
}

TEST_CASE("coupling scales as g_IB squared") {
  auto e = BecExperiment::reference();
  const double g = gamma0(e);
  e.g_IB *= 2;
  CHECK(gamma0(e) == doctest::Approx(4 * g).epsilon(1e-12));
  CHECK(coupling_from_mantissa(0.55, -39) == doctest::Approx(0.55e-39));
}

TEST_CASE("probe model") {
  const auto e = BecExperiment::reference();
  const auto p = to_probe_model(e);
  CHECK_FALSE(p.model.is_ohmic());
  CHECK(p.model.support_end() == doctest::Approx(2.0));
  CHECK(p.drive.omega0 == 1.0);
  CHECK(p.drive.omega_d == doctest::Approx(0.8));
  CHECK(p.drive.upsilon() == doctest::Approx(0.2));
  CHECK(p.T == doctest::Approx(temperature_to_natural(e, 1e-9)));
}

TEST_CASE("invalid experiments") {
  auto e = BecExperiment::reference();
  e.N_B = -1;
  CHECK_THROWS_AS(e.validate(), Error);
}
