#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcthermo/quadrature.hpp"

using namespace lct;

TEST_CASE("finite and semi-infinite integrals") {
  CHECK(integrate_scalar([](double x) { return std::exp(x); }, {0.0, 1.0}, false) ==
        doctest::Approx(std::numbers::e - 1).epsilon(1e-13));
  CHECK(integrate_scalar([](double x) { return 1.0 / (1.0 + x * x); }, {0.0, 1.0}, true) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-11));
  CHECK(integrate_scalar([](double x) { return std::exp(-x); }, {0.0, 1.0, 5.0}, true) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vector integrand and convergence report") {
  const auto r = integrate(
      [](double x, double* out) {
        out[0] = std::sin(x);
        out[1] = x * x;
      },
      2, {0.0, std::numbers::pi}, false);
  REQUIRE(r.value.size() == 2);
  CHECK(r.converged);
  CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.value[1] == doctest::Approx(std::pow(std::numbers::pi, 3) / 3).epsilon(1e-13));
  CHECK(r.error < 1e-9 * r.value[1]);
}

TEST_CASE("interval budget exhaustion is reported") {
  QuadOptions o;
  o.max_intervals = 4;
  o.rel_tol = 1e-14;
  const auto r = integrate([](double x, double* out) { out[0] = std::sin(1.0 / (x + 1e-3)); }, 1, {0.0, 1.0}, false, o);
  CHECK_FALSE(r.converged);
}
