#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "lcthermo/lcthermo.h"

TEST_CASE("errors map to status codes") {
  lct_model* m = nullptr;
  CHECK(lct_model_ohmic(-1.0, 100.0, &m) == LCT_ERR_DOMAIN);
  CHECK(m == nullptr);
  CHECK(std::strlen(lct_last_error()) > 0);
  CHECK(lct_model_ohmic(0.01, 100.0, nullptr) == LCT_ERR_NULL);
  double v = 0;
  CHECK(lct_spectral_density(nullptr, 1.0, &v) == LCT_ERR_NULL);
  lct_cov bad{0.1, 0.0, 0.1}, vac{0.5, 0.0, 0.5};
  CHECK(lct_gaussian_fidelity(bad, vac, 0, &v) == LCT_ERR_DOMAIN);
  CHECK(std::strlen(lct_version()) > 0);
}

TEST_CASE("model and limit cycle through the C interface") {
  lct_model* m = nullptr;
  REQUIRE(lct_model_ohmic(0.01, 100.0, &m) == LCT_OK);
  double re = 0, im = 0, J = 0, w = 0;
  REQUIRE(lct_chi_hat(m, 1.0, &re, &im) == LCT_OK);
  REQUIRE(lct_spectral_density(m, 1.0, &J) == LCT_OK);
  CHECK(im == doctest::Approx(-J));
  REQUIRE(lct_linewidth(m, 1.0, &w) == LCT_OK);
  CHECK(w == doctest::Approx(J / 2));

  lct_cycle_options opt;
  lct_cycle_options_default(&opt);
  CHECK(opt.order == 2);
  lct_cycle* c = nullptr;
  REQUIRE(lct_cycle_solve(m, 1.0, 0.1, 0.9, 0.1, &opt, &c) == LCT_OK);
  lct_cov s;
  REQUIRE(lct_cycle_covariance(c, 0.3, &s) == LCT_OK);
  CHECK(4 * (s.xx * s.pp - s.xp * s.xp) >= 1.0);
  lct_qfi_summary q;
  REQUIRE(lct_cycle_qfi_summary(c, 10, &q) == LCT_OK);
  CHECK(q.min <= q.max);
  CHECK(lct_cycle_solve(m, 1.0, 0.1, 0.9, -1.0, &opt, &c) != LCT_OK);
  lct_cycle_free(c);
  lct_model_free(m);
}

TEST_CASE("stability chart handle") {
  lct_chart* c = nullptr;
  REQUIRE(lct_stability_chart(0.4, 2.4, 11, 0.0, 1.0, 5, 0.1, 1.0, 1, &c) == LCT_OK);
  int nw = 0, nu = 0;
  REQUIRE(lct_chart_dims(c, &nw, &nu) == LCT_OK);
  CHECK(nw == 11);
  CHECK(nu == 5);
  double x = 0;
  REQUIRE(lct_chart_axis(c, 1, 4, &x) == LCT_OK);
  CHECK(x == doctest::Approx(1.0));
  int st = -1;
  double margin = 0;
  REQUIRE(lct_chart_cell(c, 0, 0, &st, &margin) == LCT_OK);
  CHECK(st == LCT_STABLE);
  CHECK(lct_chart_cell(c, 9, 0, &st, &margin) == LCT_ERR_DOMAIN);
  lct_chart_free(c);
}

TEST_CASE("BEC and oracle handles") {
  lct_bec e;
  lct_bec_default(&e);
  double g0 = 0, T = 0;
  REQUIRE(lct_bec_gamma0(&e, &g0) == LCT_OK);
  CHECK(g0 == doctest::Approx(7.016e-5).epsilon(1e-3));
  REQUIRE(lct_bec_temperature_to_natural(&e, 1e-9, &T) == LCT_OK);
  double back = 0;
  REQUIRE(lct_bec_temperature_to_kelvin(&e, T, &back) == LCT_OK);
  CHECK(back == doctest::Approx(1e-9));

  lct_model* m = nullptr;
  REQUIRE(lct_model_ohmic(0.01, 100.0, &m) == LCT_OK);
  lct_bath* b = nullptr;
  REQUIRE(lct_bath_linear(m, 200, 500.0, &b) == LCT_OK);
  std::size_t n = 0;
  REQUIRE(lct_bath_size(b, &n) == LCT_OK);
  CHECK(n == 200);
  lct_system* s = nullptr;
  REQUIRE(lct_system_new(b, 1.0, &s) == LCT_OK);
  const double times[] = {0.0, 2.0};
  lct_cov out[2];
  int warn = -1;
  REQUIRE(lct_oracle_evolve(s, 0.0, 1.0, 0.5, times, 2, LCT_INIT_PRODUCT, nullptr, 0.02, out, &warn) == LCT_OK);
  CHECK(out[0].xx == doctest::Approx(0.5));
  // Mode spacing 2.5 gives a recurrence time of about 2.5; t = 2 is past half of it.
  CHECK(warn == 1);
  lct_system_free(s);
  lct_bath_free(b);
  lct_model_free(m);
}
