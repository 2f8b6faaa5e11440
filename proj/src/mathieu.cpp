#include "lcthermo/mathieu.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "lcthermo/error.hpp"

namespace lct {

namespace {

using State = std::array<double, 4>;
constexpr double kPi = std::numbers::pi;

// Pick the representative of +-re + 2m closest to the undriven exponent.
double unfold(double re, double target) {
  double best = re;
  double dist = std::numeric_limits<double>::infinity();
  const double m0 = std::floor(target / 2.0);
  for (double m = m0 - 1.0; m <= m0 + 1.0; m += 1.0) {
    for (double s : {1.0, -1.0}) {
      const double c = 2.0 * m + s * re;
      if (c < 0.0) continue;
      if (std::abs(c - target) < dist) {
        dist = std::abs(c - target);
        best = c;
      }
    }
  }
  return best;
}

void classify(MathieuResult& r, double gamma_t) {
  r.margin = r.nu.imag() - 0.5 * gamma_t;
  if (r.margin > kMarginalBand)
    r.stability = Stability::Unstable;
  else if (r.margin < -kMarginalBand)
    r.stability = Stability::Stable;
  else
    r.stability = Stability::Marginal;
}

}  // namespace

MathieuResult characteristic_exponent(const MathieuPoint& p, double tol) {
  if (!(p.omega_d > 0.0)) fail(ErrorCode::Domain, "mathieu: omega_d must be positive");
  const double A = p.a() - 0.25 * p.gamma_t() * p.gamma_t();
  const double q = p.q();
  const double target = std::sqrt(std::max(A, 0.0));
  MathieuResult r;

  if (q == 0.0) {
    // Constant coefficients: nu = sqrt(A), imaginary when overdamped.
    r.nu = A >= 0.0 ? std::complex<double>(std::sqrt(A), 0.0) : std::complex<double>(0.0, std::sqrt(-A));
    r.trace = A >= 0.0 ? 2.0 * std::cos(kPi * std::sqrt(A)) : 2.0 * std::cosh(kPi * std::sqrt(-A));
    r.det = 1.0;
    classify(r, p.gamma_t());
    return r;
  }

  namespace ode = boost::numeric::odeint;
  auto rhs = [A, q](const State& y, State& dy, double t) {
    const double k = A + 2.0 * q * std::cos(2.0 * t);
    dy[0] = y[1];
    dy[1] = -k * y[0];
    dy[2] = y[3];
    dy[3] = -k * y[2];
  };
  State y{1.0, 0.0, 0.0, 1.0};
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>());
  const double h0 = 0.05 / std::max(1.0, target);
  const std::size_t steps = ode::integrate_adaptive(stepper, rhs, y, 0.0, kPi, h0);
  if (steps == 0 || !std::isfinite(y[0]) || !std::isfinite(y[3]))
    fail(ErrorCode::Numerical, "mathieu: monodromy integration failed");

  r.trace = y[0] + y[3];
  r.det = y[0] * y[3] - y[2] * y[1];
  const double half = 0.5 * r.trace / std::sqrt(std::abs(r.det));
  if (std::abs(half) <= 1.0) {
    r.nu = {unfold(std::acos(half) / kPi, target), 0.0};
  } else {
    const double im = std::acosh(std::abs(half)) / kPi;
    const double re = half > 0.0 ? 0.0 : 1.0;
    r.nu = {unfold(re, target), im};
  }
  classify(r, p.gamma_t());
  return r;
}

bool is_stable(const MathieuPoint& p) { return characteristic_exponent(p).stability == Stability::Stable; }

StabilityChart stability_chart(double wd_min, double wd_max, int n_wd, double ups_min, double ups_max, int n_ups,
                               double gamma, double omega0, int threads) {
  if (n_wd < 2 || n_ups < 2 || !(wd_min > 0.0) || !(wd_max > wd_min) || !(ups_min >= 0.0) || !(ups_max > ups_min))
    fail(ErrorCode::Domain, "stability_chart: invalid ranges");
  StabilityChart c;
  for (int i = 0; i < n_wd; ++i) c.omega_d.push_back(wd_min + (wd_max - wd_min) * i / (n_wd - 1));
  for (int i = 0; i < n_ups; ++i) c.upsilon.push_back(ups_min + (ups_max - ups_min) * i / (n_ups - 1));
  c.flags.assign(static_cast<std::size_t>(n_wd) * n_ups, Stability::Stable);
  c.margin.assign(c.flags.size(), 0.0);
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, n_ups);

  auto work = [&](int first) {
    for (int iu = first; iu < n_ups; iu += threads)
      for (int iw = 0; iw < n_wd; ++iw) {
        const MathieuResult r = characteristic_exponent({omega0, gamma, c.upsilon[iu], c.omega_d[iw]});
        const std::size_t idx = static_cast<std::size_t>(iu) * n_wd + iw;
        c.flags[idx] = r.stability;
        c.margin[idx] = r.margin;
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return c;
}

double instability_threshold(double omega0, double gamma, double omega_d, double ups_hi, double tol) {
  auto unstable = [&](double u) {
    return characteristic_exponent({omega0, gamma, u, omega_d}).stability == Stability::Unstable;
  };
  if (!unstable(ups_hi)) return std::numeric_limits<double>::infinity();
  double lo = 0.0, hi = ups_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (unstable(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace lct
