#include "lcthermo/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lcthermo/error.hpp"

namespace lct {

void CovarianceMatrix::require_physical() const {
  if (!(xx > 0.0) || !(pp > 0.0) || !(det() >= 0.25 * (1.0 - 1e-9))) {
    std::ostringstream os;
    os << "unphysical covariance matrix (xx=" << xx << ", xp=" << xp << ", pp=" << pp << ", det=" << det() << ")";
    fail(ErrorCode::Domain, os.str());
  }
}

double gaussian_fidelity(const CovarianceMatrix& s1, const CovarianceMatrix& s2, FidelityFormula formula) {
  s1.require_physical();
  s2.require_physical();
  const CovarianceMatrix sum{s1.xx + s2.xx, s1.xp + s2.xp, s1.pp + s2.pp};
  const double kappa = 4.0 * sum.det();
  const double lambda = std::max(0.0, (4.0 * s1.det() - 1.0) * (4.0 * s2.det() - 1.0));
  const double root = formula == FidelityFormula::Corrected ? std::sqrt(kappa + lambda) : std::sqrt(kappa + 1.0);
  return 2.0 / (root - std::sqrt(lambda));
}

double qfi_closed_form(const CovarianceMatrix& s, const CovarianceMatrix& ds) {
  const double det = s.det();
  // S^-1 dS with S^-1 = [[pp, -xp], [-xp, xx]] / det
  const double m00 = (s.pp * ds.xx - s.xp * ds.xp) / det;
  const double m01 = (s.pp * ds.xp - s.xp * ds.pp) / det;
  const double m10 = (-s.xp * ds.xx + s.xx * ds.xp) / det;
  const double m11 = (-s.xp * ds.xp + s.xx * ds.pp) / det;
  const double tr2 = m00 * m00 + 2.0 * m01 * m10 + m11 * m11;
  const double P = 0.5 / std::sqrt(det);
  const double ddet = ds.xx * s.pp + s.xx * ds.pp - 2.0 * s.xp * ds.xp;
  const double dP = -0.25 * ddet / (det * std::sqrt(det));
  const double P4 = P * P * P * P;
  double purity_term = 0.0;
  if (1.0 - P4 > 1e-14) purity_term = 2.0 * dP * dP / (1.0 - P4);
  return 0.5 * tr2 / (1.0 + P * P) + purity_term;
}

double qfi_temperature(const std::function<CovarianceMatrix(double)>& source, double T, double h_rel) {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "qfi_temperature: T must be positive");
  const CovarianceMatrix s0 = source(T);
  auto second = [&](double h) {
    const double fp = gaussian_fidelity(s0, source(T + h));
    const double fm = gaussian_fidelity(s0, source(T - h));
    return (fp + fm - 2.0) / (h * h);
  };
  const double h = h_rel * T;
  const double d1 = second(h);
  const double d2 = second(0.5 * h);
  const double qfi = -2.0 * (4.0 * d2 - d1) / 3.0;
  if (qfi < 0.0) {
    if (-qfi * h * h > 1e-12) fail(ErrorCode::Numerical, "qfi_temperature: negative curvature, shrink h");
    return 0.0;
  }
  return qfi;
}

namespace {

// x^2 csch^2 x, stable for all x >= 0.
double x2csch2(double x) {
  if (x < 1e-4) return 1.0 - x * x / 3.0;
  if (x > 350.0) return 0.0;
  const double e = std::exp(-2.0 * x);
  const double d = -std::expm1(-2.0 * x);
  return 4.0 * x * x * e / (d * d);
}

}  // namespace

CovarianceMatrix gibbs_covariance(double omega0, double T) {
  if (!(T > 0.0) || !(omega0 > 0.0)) fail(ErrorCode::Domain, "gibbs_covariance: need T, omega0 > 0");
  const double c = 1.0 / std::tanh(omega0 / (2.0 * T));
  return {0.5 * c / omega0, 0.0, 0.5 * omega0 * c};
}

CovarianceMatrix gibbs_covariance_dT(double omega0, double T) {
  if (!(T > 0.0) || !(omega0 > 0.0)) fail(ErrorCode::Domain, "gibbs_covariance_dT: need T, omega0 > 0");
  const double x = omega0 / (2.0 * T);
  // d coth(x)/dT = x csch^2(x) / T
  const double dc = x < 1e-300 ? 0.0 : x2csch2(x) / (x * T);
  return {0.5 * dc / omega0, 0.0, 0.5 * omega0 * dc};
}

double gibbs_qfi(double omega0, double T) {
  const double x = omega0 / (2.0 * T);
  return x2csch2(x) / (T * T);
}

double snr_bound(double qfi, double T, double N) {
  if (qfi < 0.0 || N < 1.0) fail(ErrorCode::Domain, "snr_bound: need qfi >= 0 and N >= 1");
  return T * std::sqrt(N * qfi);
}

double limit_cycle_qfi(const ThermalLimitCycle& lc, double t) {
  return qfi_closed_form(covariance_at_time(lc.sigma, t), covariance_at_time(lc.dsigma_dT, t));
}

CycleQfi cycle_qfi(const ThermalLimitCycle& lc, int m, int avg_samples) {
  if (m < 2 || avg_samples < 2) fail(ErrorCode::Domain, "cycle_qfi: need at least two samples");
  const double period = 2.0 * std::numbers::pi / lc.sigma.drive.omega_d;
  CycleQfi out;
  out.min = std::numeric_limits<double>::infinity();
  out.max = -out.min;
  for (int i = 0; i < m; ++i) {
    const double q = limit_cycle_qfi(lc, period * i / m);
    out.min = std::min(out.min, q);
    out.max = std::max(out.max, q);
    out.mean += q / m;
  }
  for (int i = 0; i < avg_samples; ++i) out.averaged += limit_cycle_qfi(lc, period * i / avg_samples) / avg_samples;
  return out;
}

double responsiveness_x2(const ThermalLimitCycle& lc) {
  const TimeAverage avg = time_averaged_covariance(lc.sigma);
  const TimeAverage davg = time_averaged_covariance(lc.dsigma_dT);
  const double var = 3.0 * avg.sxx_sq - avg.sxx * avg.sxx;
  return davg.sxx * davg.sxx / var;
}

ScalingFit fit_scaling_exponent(const std::vector<double>& T, const std::vector<double>& value, double t_min,
                                double t_max) {
  if (T.size() != value.size()) fail(ErrorCode::Domain, "fit_scaling_exponent: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i] < t_min || T[i] > t_max) continue;
    if (!(value[i] > 0.0) || !(T[i] > 0.0)) fail(ErrorCode::Domain, "fit_scaling_exponent: nonpositive value in range");
    xs.push_back(std::log(T[i]));
    ys.push_back(std::log(value[i]));
  }
  const std::size_t n = xs.size();
  if (n < 5) fail(ErrorCode::Domain, "fit_scaling_exponent: need at least 5 points in range");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  ScalingFit fit;
  fit.points = static_cast<int>(n);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - fit.intercept - fit.slope * xs[i];
    ssr += r * r;
  }
  fit.stderr_slope = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  return fit;
}

}  // namespace lct
