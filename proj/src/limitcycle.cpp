#include "lcthermo/limitcycle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lcthermo/error.hpp"
#include "lcthermo/quadrature.hpp"

namespace lct {

namespace {

constexpr cplx kI{0.0, 1.0};

void add_window(std::vector<double>& pts, double r, double half) {
  for (double f : {-1.0, -0.5, 0.0, 0.5, 1.0}) pts.push_back(r + f * half);
}

}  // namespace

// ---------------------------------------------------------------- DriveSpec

DriveSpec DriveSpec::sinusoidal(double omega0, double upsilon, double omega_d) {
  DriveSpec d;
  d.omega0 = omega0;
  d.omega_d = omega_d;
  if (upsilon != 0.0) {
    d.b[1] = cplx(0.0, -0.5 * upsilon);
    d.b[-1] = cplx(0.0, 0.5 * upsilon);
  }
  d.validate();
  return d;
}

double DriveSpec::upsilon() const {
  double u = 0.0;
  for (const auto& [l, v] : b) u = std::max(u, 2.0 * std::abs(v));
  return u;
}

bool DriveSpec::driven() const {
  return std::any_of(b.begin(), b.end(), [](const auto& e) { return std::abs(e.second) > 0.0; });
}

double DriveSpec::omega_sq(double t) const {
  double s = omega0 * omega0;
  for (const auto& [l, v] : b) s += std::real(v * std::exp(kI * (l * omega_d * t)));
  return s;
}

double DriveSpec::d_omega_sq_dt(double t) const {
  double s = 0.0;
  for (const auto& [l, v] : b) s += std::real(kI * (l * omega_d) * v * std::exp(kI * (l * omega_d * t)));
  return s;
}

void DriveSpec::validate() const {
  if (!(omega0 > 0.0)) fail(ErrorCode::Domain, "drive: omega0 must be positive");
  if (!(omega_d > 0.0)) fail(ErrorCode::Domain, "drive: omega_d must be positive");
  for (const auto& [l, v] : b) {
    if (l == 0) fail(ErrorCode::Domain, "drive: b_0 is fixed by omega0");
    auto it = b.find(-l);
    const cplx partner = it == b.end() ? cplx(0.0) : it->second;
    if (std::abs(partner - std::conj(v)) > 1e-14 * (1.0 + std::abs(v)))
      fail(ErrorCode::Domain, "drive: b_{-l} must equal conj(b_l)");
  }
}

cplx g0_hat(const SpectralModel& m, const DriveSpec& d, double w) {
  const cplx den = d.omega0 * d.omega0 + omega_r_squared(m) - w * w - chi_hat(m, w);
  if (!std::isfinite(den.real()) || !std::isfinite(den.imag())) return 0.0;
  return 1.0 / den;
}

// ----------------------------------------------------------- AmplitudeTable

AmplitudeTable::AmplitudeTable(SpectralModel model, DriveSpec drive, int K, int n)
    : model_(std::move(model)), drive_(std::move(drive)), K_(K), n_(n) {
  drive_.validate();
  if (K < 0 || n < 0) fail(ErrorCode::Domain, "amplitudes: K and n must be non-negative");
  reach_ = 0;
  for (const auto& [l, v] : drive_.b)
    if (std::abs(v) > 0.0) reach_ = std::max(reach_, std::abs(l));
  clipped_ = n_ * reach_ > K_;

  const double w0sq = drive_.omega0 * drive_.omega0 + omega_r_squared(model_);
  double w = drive_.omega0;
  for (int it = 0; it < 50; ++it) {
    const double s = w0sq - chi_hat(model_, w).real();
    if (!(s > 0.0)) {
      w = drive_.omega0;
      break;
    }
    const double next = std::sqrt(s);
    if (std::abs(next - w) < 1e-15 * w) {
      w = next;
      break;
    }
    w = next;
  }
  w_res_ = w;
  gamma_eff_ = j_tilde(model_, w_res_) / (2.0 * w_res_);
}

void AmplitudeTable::components(double w, cplx* out) const {
  const int W = width();
  std::fill(out, out + (n_ + 1) * W, cplx(0.0));
  out[K_] = g0_hat(model_, drive_, w);
  if (n_ == 0 || reach_ == 0) return;
  std::vector<cplx> g(W);
  for (int k = -K_; k <= K_; ++k) g[k + K_] = g0_hat(model_, drive_, w + k * drive_.omega_d);
  for (int m = 1; m <= n_; ++m) {
    const cplx* prev = out + (m - 1) * W;
    cplx* cur = out + m * W;
    const int span = std::min(K_, m * reach_);
    for (int k = -span; k <= span; ++k) {
      cplx acc = 0.0;
      for (const auto& [l, bl] : drive_.b) {
        const int src = k - l;
        if (src < -K_ || src > K_) continue;
        acc += bl * prev[src + K_];
      }
      cur[k + K_] = -g[k + K_] * acc;
    }
  }
}

cplx AmplitudeTable::component(int m, int k, double w) const {
  if (m < 0 || m > n_ || std::abs(k) > K_) return 0.0;
  std::vector<cplx> c((n_ + 1) * width());
  components(w, c.data());
  return c[m * width() + k + K_];
}

cplx AmplitudeTable::a(int k, double w) const {
  if (std::abs(k) > K_) return 0.0;
  std::vector<cplx> c((n_ + 1) * width());
  components(w, c.data());
  cplx s = 0.0;
  for (int m = 0; m <= n_; ++m) s += c[m * width() + k + K_];
  return s;
}

std::vector<double> AmplitudeTable::breakpoints(double T, bool* tail) const {
  const double wd = drive_.omega_d;
  double wmax;
  if (model_.is_ohmic()) {
    wmax = std::max(10.0 * model_.cutoff(), drive_.omega0 + (K_ + 2) * wd);
    if (tail) *tail = true;
  } else {
    wmax = model_.support_end();
    if (tail) *tail = false;
  }
  std::vector<double> pts{0.0, wmax};
  const double half = std::max(10.0 * gamma_eff_, 1e-10 * w_res_);
  for (int k = -K_; k <= K_; ++k) {
    for (double s : {1.0, -1.0}) {
      add_window(pts, s * w_res_ - k * wd, half);
      if (!model_.is_ohmic()) pts.push_back(s * model_.support_end() - k * wd);
    }
  }
  if (T > 0.0)
    for (double f : {1.0, 5.0, 20.0, 50.0}) pts.push_back(f * T);
  if (model_.is_ohmic()) pts.push_back(model_.cutoff());
  pts.erase(std::remove_if(pts.begin(), pts.end(), [&](double x) { return !(x >= 0.0 && x <= wmax); }),
            pts.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

AmplitudeTable solve_amplitudes(const SpectralModel& model, const DriveSpec& drive, int K, int n) {
  return AmplitudeTable(model, drive, K, n);
}

// ------------------------------------------------------------ coefficients

LimitCycleState covariance_coefficients(const AmplitudeTable& table, double T, const CoefficientOptions& opt) {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "covariance_coefficients: T must be positive");
  const int K = table.harmonics();
  const int W = table.width();
  const int n = table.order();
  const int N = opt.order < 0 ? n : opt.order;
  const double wd = table.drive().omega_d;
  const std::size_t mat = static_cast<std::size_t>(W) * W;
  const std::size_t dim = 3 * mat * 2;

  auto integrand = [&, K, W, n, N](double w, double* out) {
    std::vector<cplx> c((n + 1) * W);
    table.components(w, c.data());
    const double kern = opt.kernel == Kernel::Noise ? noise_kernel_hat(table.model(), w, T)
                                                    : noise_kernel_hat_dT(table.model(), w, T);
    std::vector<cplx> B(mat, 0.0);
    if (opt.truncation == Truncation::Full) {
      std::vector<cplx> a(W, 0.0);
      for (int m = 0; m <= n; ++m)
        for (int i = 0; i < W; ++i) a[i] += c[m * W + i];
      for (int j = 0; j < W; ++j)
        for (int k = 0; k < W; ++k) B[j * W + k] = a[j] * std::conj(a[k]);
    } else {
      // partial[p] = sum_{m <= p} c^[m]
      std::vector<cplx> partial((n + 1) * W, 0.0);
      for (int p = 0; p <= n; ++p)
        for (int i = 0; i < W; ++i)
          partial[p * W + i] = c[p * W + i] + (p > 0 ? partial[(p - 1) * W + i] : cplx(0.0));
      for (int m = 0; m <= std::min(n, N); ++m) {
        const int p = std::min(n, N - m);
        for (int j = 0; j < W; ++j) {
          const cplx cj = c[m * W + j];
          if (cj == cplx(0.0)) continue;
          for (int k = 0; k < W; ++k) B[j * W + k] += cj * std::conj(partial[p * W + k]);
        }
      }
    }
    for (int j = 0; j < W; ++j) {
      const double wj = w + (j - K) * wd;
      for (int k = 0; k < W; ++k) {
        const double wk = w + (k - K) * wd;
        const cplx v = 0.5 * kern * B[j * W + k];
        const std::size_t idx = static_cast<std::size_t>(j) * W + k;
        const cplx xp = v * wk;
        const cplx pp = v * wj * wk;
        out[2 * idx] = v.real();
        out[2 * idx + 1] = v.imag();
        out[2 * (mat + idx)] = xp.real();
        out[2 * (mat + idx) + 1] = xp.imag();
        out[2 * (2 * mat + idx)] = pp.real();
        out[2 * (2 * mat + idx) + 1] = pp.imag();
      }
    }
  };

  bool tail = false;
  auto breaks = table.breakpoints(T, &tail);
  QuadOptions qo;
  qo.rel_tol = opt.rel_tol;
  const QuadResult r = integrate(integrand, dim, breaks, tail, qo);

  LimitCycleState s;
  s.K = K;
  s.T = T;
  s.drive = table.drive();
  s.sxx.resize(W, W);
  s.sxp.resize(W, W);
  s.spp.resize(W, W);
  for (int j = 0; j < W; ++j)
    for (int k = 0; k < W; ++k) {
      const std::size_t idx = static_cast<std::size_t>(j) * W + k;
      s.sxx(j, k) = {r.value[2 * idx], r.value[2 * idx + 1]};
      s.sxp(j, k) = {r.value[2 * (mat + idx)], r.value[2 * (mat + idx) + 1]};
      s.spp(j, k) = {r.value[2 * (2 * mat + idx)], r.value[2 * (2 * mat + idx) + 1]};
    }
  s.quad_error = r.error;
  s.converged = r.converged;
  return s;
}

namespace {

// sum_jk s(j,k) exp(i (j-k) wd t) and its time derivative.
cplx harmonic_sum(const Eigen::MatrixXcd& s, int K, double wd, double t, bool derivative) {
  cplx acc = 0.0;
  const int W = 2 * K + 1;
  for (int j = 0; j < W; ++j)
    for (int k = 0; k < W; ++k) {
      const double f = (j - k) * wd;
      cplx e = std::exp(kI * (f * t));
      if (derivative) e *= kI * f;
      acc += s(j, k) * e;
    }
  return acc;
}

}  // namespace

CovarianceMatrix covariance_at_time(const LimitCycleState& s, double t) {
  const double wd = s.drive.omega_d;
  return {harmonic_sum(s.sxx, s.K, wd, t, false).real(), harmonic_sum(s.sxp, s.K, wd, t, false).imag(),
          harmonic_sum(s.spp, s.K, wd, t, false).real()};
}

CovarianceMatrix covariance_rate(const LimitCycleState& s, double t) {
  const double wd = s.drive.omega_d;
  return {harmonic_sum(s.sxx, s.K, wd, t, true).real(), harmonic_sum(s.sxp, s.K, wd, t, true).imag(),
          harmonic_sum(s.spp, s.K, wd, t, true).real()};
}

TimeAverage time_averaged_covariance(const LimitCycleState& s) {
  const int W = 2 * s.K + 1;
  TimeAverage out;
  for (int j = 0; j < W; ++j) {
    out.sxx += s.sxx(j, j).real();
    out.spp += s.spp(j, j).real();
  }
  // sigma_xx(t) = Re sum_d C_d e^{i d wd t}, C_d = sum_{j-k=d} s_jk.
  std::vector<cplx> C(2 * W - 1, 0.0);
  for (int j = 0; j < W; ++j)
    for (int k = 0; k < W; ++k) C[j - k + W - 1] += s.sxx(j, k);
  for (int d = -(W - 1); d <= W - 1; ++d) {
    const cplx D = 0.5 * (C[d + W - 1] + std::conj(C[-d + W - 1]));
    out.sxx_sq += std::norm(D);
  }
  return out;
}

double greens_function(const AmplitudeTable& table, double t, double tp, double rel_tol) {
  const double tau = t - tp;
  const int K = table.harmonics();
  const int W = table.width();
  const int n = table.order();
  const double wd = table.drive().omega_d;
  const double wmax = std::max(table.drive().omega0 + (K + 2) * wd, 10.0 * table.model().cutoff());
  bool tail = false;
  auto breaks = table.breakpoints(0.0, &tail);
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(), [&](double x) { return x > wmax; }), breaks.end());
  const double base = breaks.empty() ? 0.0 : breaks.back();
  if (std::abs(tau) > 0.0) {
    const double step = std::numbers::pi / std::abs(tau);
    const int extra = std::min(20000, static_cast<int>(wmax / step));
    for (int i = 1; i <= extra; ++i) breaks.push_back(wmax * i / extra);
  }
  breaks.push_back(std::max(base, wmax));
  QuadOptions qo;
  qo.rel_tol = rel_tol;
  // a_0 ~ -1/w^2 at large w. Subtracting -1/(w^2 + w0^2), whose transform is
  // known, leaves an integrand that decays fast enough to truncate at wmax.
  const double w0 = table.drive().omega0;
  auto f = [&](double w, double* out) {
    std::vector<cplx> c((n + 1) * W);
    table.components(w, c.data());
    cplx acc = 0.0;
    for (int k = 0; k < W; ++k) {
      cplx ak = 0.0;
      for (int m = 0; m <= n; ++m) ak += c[m * W + k];
      acc += ak * std::exp(kI * ((k - K) * wd * t));
    }
    acc += 1.0 / (w * w + w0 * w0);
    out[0] = (acc * std::exp(kI * (w * tau))).real() / std::numbers::pi;
  };
  return integrate(f, 1, breaks, false, qo).value[0] - std::exp(-w0 * std::abs(tau)) / (2.0 * w0);
}

ThermalLimitCycle solve_limit_cycle(const SpectralModel& model, const DriveSpec& drive, double T,
                                    const LimitCycleOptions& opt) {
  if (opt.order < 0) fail(ErrorCode::Domain, "limit cycle: order must be non-negative");
  const int K = opt.harmonics < 0 ? 2 * opt.order : opt.harmonics;
  const AmplitudeTable table(model, drive, K, opt.order);
  CoefficientOptions co;
  co.truncation = opt.truncation;
  co.rel_tol = opt.rel_tol;
  ThermalLimitCycle out;
  out.sigma = covariance_coefficients(table, T, co);
  co.kernel = Kernel::NoiseDT;
  out.dsigma_dT = covariance_coefficients(table, T, co);
  for (const auto* s : {&out.sigma, &out.dsigma_dT}) {
    if (!s->converged) {
      std::ostringstream os;
      os << "limit cycle quadrature did not converge at T=" << T << " (error estimate " << s->quad_error << ")";
      fail(ErrorCode::Numerical, os.str());
    }
  }
  return out;
}

}  // namespace lct
