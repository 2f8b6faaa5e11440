#include "lcthermo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "lcthermo/error.hpp"

namespace lct::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Mean occupation plus one half, coth(w / 2T) / 2.
double half_coth(double w, double T) {
  const double x = w / (2.0 * T);
  if (x > 350.0) return 0.5;
  return 0.5 / std::tanh(x);
}

void fill_couplings(const SpectralModel& m, DiscretizedBath& b) {
  b.g.resize(b.omega.size());
  for (std::size_t i = 0; i < b.omega.size(); ++i)
    b.g[i] = std::sqrt(2.0 / kPi * b.omega[i] * j_of_omega(m, b.omega[i]) * b.width[i]);
}

double clip_omega_max(const SpectralModel& m, double omega_max) {
  if (!(omega_max > 0.0)) fail(ErrorCode::Domain, "discretize: omega_max must be positive");
  return std::min(omega_max, m.support_end());
}

// Per-mode coefficients of the exact step for b'' = -Omega^2 b + u f(s) with f
// linear over the step.
struct StepTable {
  Eigen::ArrayXd c, s_over, m_s, P0, P1, Q0, Q1;
  double S0 = 0.0, S1 = 0.0;

  StepTable(const Eigen::VectorXd& Omega, const Eigen::VectorXd& u, double h) {
    const Eigen::Index n = Omega.size();
    c.resize(n); s_over.resize(n); m_s.resize(n);
    P0.resize(n); P1.resize(n); Q0.resize(n); Q1.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double W = Omega[k];
      const double x = W * h;
      const double sx = std::sin(x), cx = std::cos(x);
      const double sinc = x < 1e-8 ? 1.0 : sx / x;
      const double half = std::sin(0.5 * x);
      const double ver = x < 1e-8 ? 0.5 : 2.0 * half * half / (x * x);  // (1 - cos x) / x^2
      const double x2 = x * x;
      const double cub = x < 1e-2 ? 1.0 / 6.0 - x2 / 120.0 + x2 * x2 / 5040.0 : (x - sx) / (x2 * x);
      const double I0 = h * h * ver;
      const double It = h * h * h * cub;
      const double J0 = h * sinc;
      const double Jt = I0;
      c[k] = cx;
      s_over[k] = h * sinc;
      m_s[k] = -W * sx;
      P0[k] = I0 - It / h;
      P1[k] = It / h;
      Q0[k] = J0 - Jt / h;
      Q1[k] = Jt / h;
    }
    const Eigen::ArrayXd u2 = u.array().square();
    S0 = (u2 * P0).sum();
    S1 = (u2 * P1).sum();
  }
};

// Integrates b'' = -Omega^2 b - mod(s) u (u.b) from s = 0 over n steps of h.
void integrate_rows(const StepTable& st, const Eigen::VectorXd& u, const std::function<double(double)>& mod,
                    double h, long n, Eigen::ArrayXd& b, Eigen::ArrayXd& v) {
  const Eigen::ArrayXd ua = u.array();
  double m0 = mod(0.0);
  double f0 = -m0 * (ua * b).sum();
  Eigen::ArrayXd bf(b.size());
  for (long i = 0; i < n; ++i) {
    const double s1 = (i + 1) * h;
    const double m1 = mod(s1);
    bf = st.c * b + st.s_over * v;
    const double X1 = ((ua * bf).sum() + f0 * st.S0) / (1.0 + m1 * st.S1);
    const double f1 = -m1 * X1;
    v = st.m_s * b + st.c * v + ua * (f0 * st.Q0 + f1 * st.Q1);
    b = bf + ua * (f0 * st.P0 + f1 * st.P1);
    f0 = f1;
  }
}

}  // namespace

double DiscretizedBath::counterterm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += g[i] * g[i] / (omega[i] * omega[i]);
  return s;
}

double DiscretizedBath::spectral_weight() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += g[i] * g[i] / omega[i];
  return 0.5 * kPi * s;
}

double DiscretizedBath::recurrence_time(double w) const {
  if (omega.empty()) return 0.0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < size(); ++i)
    if (std::abs(omega[i] - w) < std::abs(omega[best] - w)) best = i;
  return 2.0 * kPi / width[best];
}

DiscretizedBath discretize(const SpectralModel& m, int N, double omega_max) {
  if (N < 1) fail(ErrorCode::Domain, "discretize: N must be positive");
  omega_max = clip_omega_max(m, omega_max);
  DiscretizedBath b;
  const double dw = omega_max / N;
  for (int i = 0; i < N; ++i) {
    b.omega.push_back((i + 0.5) * dw);
    b.width.push_back(dw);
  }
  fill_couplings(m, b);
  return b;
}

DiscretizedBath discretize_focused(const SpectralModel& m, const FocusedGrid& spec) {
  const double wmax = clip_omega_max(m, spec.omega_max);
  const double dx = spec.spacing;
  if (!(dx > 0.0) || !(spec.half_width > 0.0) || spec.N < 4)
    fail(ErrorCode::Domain, "discretize_focused: invalid grid specification");

  std::vector<std::pair<double, double>> win;
  for (double f : spec.focus) {
    const double lo = std::max(f - spec.half_width, dx), hi = std::min(f + spec.half_width, wmax);
    if (hi > lo) win.emplace_back(lo, hi);
  }
  std::sort(win.begin(), win.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& w : win) {
    if (!merged.empty() && w.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, w.second);
    else
      merged.push_back(w);
  }

  std::vector<double> edges;
  auto push_uniform = [&](double lo, double hi, long n) {
    for (long i = 0; i < n; ++i) edges.push_back(lo + (hi - lo) * i / n);
  };

  long fine = 0;
  std::vector<long> fine_n;
  for (const auto& w : merged) {
    fine_n.push_back(std::max(1L, std::lround((w.second - w.first) / dx)));
    fine += fine_n.back();
  }
  const long coarse = spec.N - fine;
  if (coarse < static_cast<long>(merged.size()) + 1)
    fail(ErrorCode::Domain, "discretize_focused: focus windows need more modes than N");

  // Gaps between windows, filled with cells uniform in log(1 + w / dx).
  std::vector<std::pair<double, double>> gaps;
  double at = 0.0;
  for (const auto& w : merged) {
    if (w.first > at) gaps.emplace_back(at, w.first);
    at = w.second;
  }
  if (wmax > at) gaps.emplace_back(at, wmax);
  auto phi = [dx](double w) { return std::log1p(w / dx); };
  auto phi_inv = [dx](double p) { return dx * std::expm1(p); };
  double measure = 0.0;
  for (const auto& g : gaps) measure += phi(g.second) - phi(g.first);
  std::vector<long> gap_n;
  long assigned = 0;
  for (const auto& g : gaps) {
    gap_n.push_back(std::max(1L, std::lround(coarse * (phi(g.second) - phi(g.first)) / measure)));
    assigned += gap_n.back();
  }
  auto widest = std::max_element(gap_n.begin(), gap_n.end());
  *widest += coarse - assigned;
  if (*widest < 1) fail(ErrorCode::Domain, "discretize_focused: too few modes for the coarse grid");

  std::size_t gi = 0, wi = 0;
  at = 0.0;
  while (gi < gaps.size() || wi < merged.size()) {
    if (gi < gaps.size() && gaps[gi].first == at) {
      const double p0 = phi(gaps[gi].first), p1 = phi(gaps[gi].second);
      for (long i = 0; i < gap_n[gi]; ++i) edges.push_back(phi_inv(p0 + (p1 - p0) * i / gap_n[gi]));
      at = gaps[gi].second;
      ++gi;
    } else {
      push_uniform(merged[wi].first, merged[wi].second, fine_n[wi]);
      at = merged[wi].second;
      ++wi;
    }
  }
  edges.push_back(wmax);

  DiscretizedBath b;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    b.omega.push_back(0.5 * (edges[i] + edges[i + 1]));
    b.width.push_back(edges[i + 1] - edges[i]);
  }
  fill_couplings(m, b);
  return b;
}

double mode_sum_kernel(const DiscretizedBath& bath, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < bath.size(); ++i) s += bath.g[i] * bath.g[i] / bath.omega[i] * std::sin(bath.omega[i] * t);
  return s;
}

ClosedSystem::ClosedSystem(const DiscretizedBath& bath, double omega0) : bath_(bath), omega0_(omega0) {
  if (!(omega0 > 0.0)) fail(ErrorCode::Domain, "oracle: omega0 must be positive");
  if (bath.size() == 0) fail(ErrorCode::Domain, "oracle: empty bath");
  const Eigen::Index n = static_cast<Eigen::Index>(bath.size()) + 1;
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, n);
  V(0, 0) = omega0 * omega0 + bath.counterterm();
  for (Eigen::Index i = 1; i < n; ++i) {
    V(i, i) = bath.omega[i - 1] * bath.omega[i - 1];
    V(0, i) = V(i, 0) = -bath.g[i - 1];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(V);
  if (es.info() != Eigen::Success) fail(ErrorCode::Numerical, "oracle: eigendecomposition failed");
  if (es.eigenvalues().minCoeff() <= 0.0) fail(ErrorCode::Numerical, "oracle: closed system is not positive definite");
  Omega_ = es.eigenvalues().cwiseSqrt();
  U_ = es.eigenvectors();
}

CovarianceMatrix ClosedSystem::gibbs_probe(double T) const {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "oracle: T must be positive");
  CovarianceMatrix c{0.0, 0.0, 0.0};
  for (Eigen::Index k = 0; k < Omega_.size(); ++k) {
    const double u2 = U_(0, k) * U_(0, k);
    const double n = half_coth(Omega_[k], T);
    c.xx += u2 * n / Omega_[k];
    c.pp += u2 * n * Omega_[k];
  }
  return c;
}

OracleRun evolve_covariance(const ClosedSystem& sys, const DriveSpec& drive, double T, const std::vector<double>& times,
                            InitialState initial, const CovarianceMatrix& probe0, double h) {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "oracle: T must be positive");
  if (!(h > 0.0)) fail(ErrorCode::Domain, "oracle: step must be positive");
  if (std::abs(drive.omega0 - sys.omega0()) > 1e-12)
    fail(ErrorCode::Domain, "oracle: drive omega0 differs from the closed system");
  drive.validate();
  if (initial == InitialState::Product) probe0.require_physical();

  const Eigen::VectorXd& Om = sys.normal_frequencies();
  const Eigen::MatrixXd& U = sys.modes();
  const Eigen::VectorXd u = sys.probe_weights();
  const Eigen::Index n = Om.size();
  const DiscretizedBath& bath = sys.bath();

  // Thermal second moments in the basis where the initial state is diagonal.
  Eigen::ArrayXd wq(n), wp(n);
  if (initial == InitialState::Gibbs) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double occ = half_coth(Om[k], T);
      wq[k] = occ / Om[k];
      wp[k] = occ * Om[k];
    }
  } else {
    wq[0] = wp[0] = 0.0;
    for (Eigen::Index i = 1; i < n; ++i) {
      const double w = bath.omega[i - 1];
      const double occ = half_coth(w, T);
      wq[i] = occ / w;
      wp[i] = occ * w;
    }
  }

  OracleRun run;
  run.recurrence_time = bath.recurrence_time(sys.omega0());
  for (double t : times) {
    if (t < 0.0) fail(ErrorCode::Domain, "oracle: times must be non-negative");
    if (t > 0.5 * run.recurrence_time) run.recurrence_warning = true;
  }

  const auto mod = [&](double t) { return drive.omega_sq(t) - drive.omega0 * drive.omega0; };
  Eigen::ArrayXd bx(n), vx(n), bp(n), vp(n);
  for (double t : times) {
    // Rows of the propagator for x(t) and p(t), expressed as coefficients of
    // the initial normal-mode coordinates (vx, vp) and momenta (bx, bp).
    if (!drive.driven() || t == 0.0) {
      const Eigen::ArrayXd ct = (Om.array() * t).cos(), st = (Om.array() * t).sin();
      bx = u.array() * st / Om.array();
      vx = u.array() * ct;
      bp = u.array() * ct;
      vp = -u.array() * Om.array() * st;
    } else {
      const long steps = std::max(1L, static_cast<long>(std::ceil(t / h - 1e-9)));
      const double he = t / steps;
      const StepTable table(Om, u, he);
      const auto rev = [&](double s) { return mod(t - s); };
      bx.setZero();
      vx = u.array();
      integrate_rows(table, u, rev, he, steps, bx, vx);
      bp = u.array();
      vp.setZero();
      integrate_rows(table, u, rev, he, steps, bp, vp);
    }

    CovarianceMatrix c{0.0, 0.0, 0.0};
    if (initial == InitialState::Gibbs) {
      c.xx = (vx.square() * wq + bx.square() * wp).sum();
      c.pp = (vp.square() * wq + bp.square() * wp).sum();
      c.xp = (vx * vp * wq + bx * bp * wp).sum();
    } else {
      const Eigen::ArrayXd Qx = (U * vx.matrix()).array(), Px = (U * bx.matrix()).array();
      const Eigen::ArrayXd Qp = (U * vp.matrix()).array(), Pp = (U * bp.matrix()).array();
      c.xx = (Qx.square() * wq + Px.square() * wp).sum();
      c.pp = (Qp.square() * wq + Pp.square() * wp).sum();
      c.xp = (Qx * Qp * wq + Px * Pp * wp).sum();
      c.xx += Qx[0] * Qx[0] * probe0.xx + 2.0 * Qx[0] * Px[0] * probe0.xp + Px[0] * Px[0] * probe0.pp;
      c.pp += Qp[0] * Qp[0] * probe0.xx + 2.0 * Qp[0] * Pp[0] * probe0.xp + Pp[0] * Pp[0] * probe0.pp;
      c.xp += Qx[0] * Qp[0] * probe0.xx + (Qx[0] * Pp[0] + Px[0] * Qp[0]) * probe0.xp + Px[0] * Pp[0] * probe0.pp;
    }
    run.t.push_back(t);
    run.probe.push_back(c);
  }
  return run;
}

double integrator_energy_drift(const ClosedSystem& sys, double t_final, double h, double static_shift) {
  if (!(t_final > 0.0) || !(h > 0.0)) fail(ErrorCode::Domain, "oracle: invalid integration window");
  const Eigen::VectorXd& Om = sys.normal_frequencies();
  const Eigen::VectorXd u = sys.probe_weights();
  const Eigen::Index n = Om.size();
  auto energy = [&](const Eigen::ArrayXd& b, const Eigen::ArrayXd& v) {
    const double x = (u.array() * b).sum();
    return 0.5 * (v.square() + Om.array().square() * b.square()).sum() + 0.5 * static_shift * x * x;
  };
  // A mix of the probe direction and a spread of normal modes.
  Eigen::ArrayXd b = u.array() + Eigen::ArrayXd::LinSpaced(n, 0.0, 1.0) / std::sqrt(static_cast<double>(n));
  Eigen::ArrayXd v = u.array() * Om.array();
  const double e0 = energy(b, v);
  const long steps = std::max(1L, static_cast<long>(std::ceil(t_final / h - 1e-9)));
  const double he = t_final / steps;
  const StepTable table(Om, u, he);
  integrate_rows(table, u, [static_shift](double) { return static_shift; }, he, steps, b, v);
  return std::abs(energy(b, v) - e0) / e0;
}

}  // namespace lct::oracle
