#include "lcthermo/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lcthermo/error.hpp"
#include "lcthermo/quadrature.hpp"

namespace lct {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// J(w)/w for w >= 0, finite at w = 0.
double j_over_omega(const SpectralModel& m, double w) {
  return std::visit(overloaded{
                        [w](const OhmicAlgebraic& p) {
                          const double r = w / p.omega_c;
                          return 2.0 * p.gamma / (1.0 + r * r);
                        },
                        [w](const SuperOhmicHardCutoff& p) {
                          return w < p.omega_b ? 2.0 * p.gamma0 * w * w * w : 0.0;
                        },
                    },
                    m.params());
}

void check_temperature(double T) {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "temperature must be positive");
}

}  // namespace

SpectralModel SpectralModel::ohmic(double gamma, double omega_c) {
  if (!(gamma >= 0.0) || !(omega_c > 0.0))
    fail(ErrorCode::Domain, "Ohmic model needs gamma >= 0 and omega_c > 0");
  return SpectralModel(OhmicAlgebraic{gamma, omega_c});
}

SpectralModel SpectralModel::super_ohmic(double gamma0, double omega_b, SuperOhmicChi chi) {
  if (!(gamma0 >= 0.0) || !(omega_b > 0.0))
    fail(ErrorCode::Domain, "super-Ohmic model needs gamma0 >= 0 and omega_b > 0");
  return SpectralModel(SuperOhmicHardCutoff{gamma0, omega_b, chi});
}

double SpectralModel::support_end() const {
  if (const auto* p = std::get_if<SuperOhmicHardCutoff>(&v_)) return p->omega_b;
  return std::numeric_limits<double>::infinity();
}

double SpectralModel::cutoff() const {
  return std::visit(overloaded{[](const OhmicAlgebraic& p) { return p.omega_c; },
                               [](const SuperOhmicHardCutoff& p) { return p.omega_b; }},
                    v_);
}

double j_of_omega(const SpectralModel& m, double w) {
  if (w < 0.0) fail(ErrorCode::Domain, "j_of_omega: negative frequency");
  return w * j_over_omega(m, w);
}

double j_tilde(const SpectralModel& m, double w) {
  const double a = std::abs(w);
  const double v = a * j_over_omega(m, a);
  return w < 0.0 ? -v : v;
}

cplx chi_hat(const SpectralModel& m, double w) {
  const double im = -j_tilde(m, w);
  const double re = std::visit(
      overloaded{
          [w](const OhmicAlgebraic& p) {
            const double wc = p.omega_c;
            return 2.0 * p.gamma * wc * wc * wc / (wc * wc + w * w);
          },
          [w](const SuperOhmicHardCutoff& p) {
            const double wb2 = p.omega_b * p.omega_b;
            const double w2 = w * w;
            if (p.chi == SuperOhmicChi::AsPrinted) {
              const double lg = w2 > 0.0 ? w2 * std::log(w2 / (w2 + wb2)) : 0.0;
              return p.gamma0 * p.omega_b / kPi - 2.0 * p.gamma0 * w2 / (kPi * wb2 * p.omega_b) * (wb2 + lg);
            }
            const double lg = w2 > 0.0 ? w2 * w2 * std::log(std::abs((wb2 - w2) / w2)) : 0.0;
            return 2.0 * p.gamma0 / kPi * (0.5 * wb2 * wb2 + w2 * wb2 + lg);
          },
      },
      m.params());
  return {re, im};
}

double omega_r_squared(const SpectralModel& m) {
  if (const auto* p = std::get_if<OhmicAlgebraic>(&m.params())) return 2.0 * p->gamma * p->omega_c;
  return 0.0;
}

double noise_kernel_hat(const SpectralModel& m, double w, double T) {
  check_temperature(T);
  if (w < 0.0) fail(ErrorCode::Domain, "noise_kernel_hat: negative frequency");
  const double x = w / (2.0 * T);
  const double jw = j_over_omega(m, w);
  if (w < 1e-6 * T) return 2.0 / kPi * jw * 2.0 * T * (1.0 + x * x / 3.0);
  return 2.0 / kPi * jw * w / std::tanh(x);
}

double noise_kernel_hat_dT(const SpectralModel& m, double w, double T) {
  check_temperature(T);
  if (w < 0.0) fail(ErrorCode::Domain, "noise_kernel_hat_dT: negative frequency");
  const double x = w / (2.0 * T);
  const double jw = j_over_omega(m, w);
  if (x > 350.0) return 0.0;
  double x2csch2;
  if (x < 1e-4) {
    x2csch2 = 1.0 - x * x / 3.0;
  } else {
    const double e = std::exp(-2.0 * x);
    const double d = -std::expm1(-2.0 * x);
    x2csch2 = 4.0 * x * x * e / (d * d);
  }
  return 2.0 / kPi * jw * 2.0 * x2csch2;
}

double dissipation_kernel_time(const SpectralModel& m, double t) {
  if (t < 0.0) fail(ErrorCode::Domain, "dissipation_kernel_time: negative time");
  if (const auto* p = std::get_if<OhmicAlgebraic>(&m.params()))
    return 2.0 * p->gamma * p->omega_c * p->omega_c * std::exp(-p->omega_c * t);
  const double wb = m.support_end();
  std::vector<double> breaks{0.0};
  const int panels = 4 + static_cast<int>(wb * t / kPi);
  for (int i = 1; i <= panels; ++i) breaks.push_back(wb * i / panels);
  QuadOptions opt;
  opt.rel_tol = 1e-12;
  return integrate_scalar([&](double w) { return 2.0 / kPi * j_of_omega(m, w) * std::sin(w * t); }, breaks,
                          false, opt);
}

}  // namespace lct
