#include <doctest.h>

#include <cmath>

#include "lcthermo/mathieu.hpp"

using namespace lct;

namespace {

// With omega_d = 2 the standard Mathieu parameters are a = omega0^2 and
// q = upsilon / 2.
MathieuPoint standard(double a, double q, double gamma = 0.0) { return {std::sqrt(a), gamma, 2.0 * q, 2.0}; }

}  // namespace

TEST_CASE("first tongue boundaries at small q") {
  const double q = 0.1;
  const double lower = 1 - q - q * q / 8, upper = 1 + q - q * q / 8;
  CHECK(characteristic_exponent(standard(1.0, q)).stability == Stability::Unstable);
  CHECK(characteristic_exponent(standard(lower + 0.005, q)).stability == Stability::Unstable);
  CHECK(characteristic_exponent(standard(upper - 0.005, q)).stability == Stability::Unstable);
  CHECK(characteristic_exponent(standard(lower - 0.005, q)).stability != Stability::Unstable);
  CHECK(characteristic_exponent(standard(upper + 0.005, q)).stability != Stability::Unstable);
  // Growth rate at the tongue centre is q/2 to leading order.
  CHECK(characteristic_exponent(standard(1.0, q)).nu.imag() == doctest::Approx(q / 2).epsilon(2e-2));
}

TEST_CASE("second tongue boundaries") {
  const double q = 0.3;
  CHECK(characteristic_exponent(standard(4.0 - q * q / 12 + 0.002, q)).stability == Stability::Unstable);
  CHECK(characteristic_exponent(standard(4.0 - q * q / 12 - 0.002, q)).stability != Stability::Unstable);
  CHECK(characteristic_exponent(standard(4.0 + 5 * q * q / 12 + 0.002, q)).stability != Stability::Unstable);
}

TEST_CASE("monodromy determinant is one") {
  for (double a : {0.3, 1.0, 2.5, 4.1})
    for (double q : {0.0, 0.2, 0.9}) CHECK(characteristic_exponent(standard(a, q, 0.05)).det == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("damping stabilises weak parametric driving") {
  const double q = 0.1;
  // Damping rate above the undamped growth rate q/2 (in the scaled time).
  CHECK(characteristic_exponent(standard(1.0, q, 0.15)).stability == Stability::Stable);
  CHECK(characteristic_exponent(standard(1.0, q, 0.05)).stability == Stability::Unstable);
  CHECK(is_stable(MathieuPoint{1.0, 0.01, 0.0, 0.9}));
}

TEST_CASE("instability threshold") {
  // Leading order: upsilon_c = 2 gamma omega0 at the principal resonance.
  const double th = instability_threshold(1.0, 0.1, 2.0, 2.0);
  CHECK(th == doctest::Approx(0.2).epsilon(5e-3));
  CHECK(instability_threshold(1.0, 0.05, 2.0, 2.0) < th);
  CHECK(std::isinf(instability_threshold(1.0, 0.5, 2.0, 0.1)));
}

TEST_CASE("chart layout and threading do not change the flags") {
  const auto a = stability_chart(0.4, 2.4, 21, 0.0, 1.5, 11, 0.1, 1.0, 1);
  const auto b = stability_chart(0.4, 2.4, 21, 0.0, 1.5, 11, 0.1, 1.0, 3);
  REQUIRE(a.flags.size() == 21 * 11);
  CHECK(a.omega_d.front() == 0.4);
  CHECK(a.omega_d.back() == doctest::Approx(2.4));
  CHECK(a.flags == b.flags);
  CHECK(a.margin == b.margin);
  for (std::size_t i = 0; i < a.omega_d.size(); ++i) CHECK(a.at(0, i) == Stability::Stable);
}
