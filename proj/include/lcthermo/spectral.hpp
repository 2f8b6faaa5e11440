#pragma once

#include <complex>
#include <variant>

namespace lct {

using cplx = std::complex<double>;

// J(w) = 2 gamma w / (1 + (w/wc)^2).
struct OhmicAlgebraic {
  double gamma;
  double omega_c;
};

// Which closed form is used for the dissipation kernel transform of the
// hard-cutoff quartic bath.
//   Consistent: principal-value transform of J = 2 g0 w^4 Theta(wB - w).
//   AsPrinted:  g0 wB/pi - 2 g0 w^2/(pi wB^3) (wB^2 + w^2 log(w^2/(w^2 + wB^2))),
//               with -i J~(w) added as the imaginary part.
enum class SuperOhmicChi { Consistent, AsPrinted };

// J(w) = 2 g0 w^4 for w < wB, zero above.
struct SuperOhmicHardCutoff {
  double gamma0;
  double omega_b;
  SuperOhmicChi chi = SuperOhmicChi::Consistent;
};

class SpectralModel {
 public:
  using Variant = std::variant<OhmicAlgebraic, SuperOhmicHardCutoff>;

  static SpectralModel ohmic(double gamma, double omega_c);
  static SpectralModel super_ohmic(double gamma0, double omega_b,
                                   SuperOhmicChi chi = SuperOhmicChi::Consistent);

  const Variant& params() const { return v_; }
  bool is_ohmic() const { return std::holds_alternative<OhmicAlgebraic>(v_); }

  // Upper edge of the support of J; +inf for the Ohmic model.
  double support_end() const;
  // Frequency scale beyond which J has decayed (wc or wB).
  double cutoff() const;

 private:
  explicit SpectralModel(Variant v) : v_(v) {}
  Variant v_;
};

// Spectral density for w >= 0. Throws ErrorCode::Domain for w < 0.
double j_of_omega(const SpectralModel& m, double w);

// Odd extension of J to the whole real line.
double j_tilde(const SpectralModel& m, double w);

// Laplace transform of the dissipation kernel at s = i w + 0.
// Im chi_hat(w) = -j_tilde(w) in this convention, so that
// Im[g0_hat(w)^-1] = +j_tilde(w).
cplx chi_hat(const SpectralModel& m, double w);

// Counter-term frequency shift: 2 gamma wc (Ohmic), 0 (hard cutoff).
double omega_r_squared(const SpectralModel& m);

// (2/pi) J(w) coth(w / 2T), w > 0, T > 0.
double noise_kernel_hat(const SpectralModel& m, double w, double T);

// Temperature derivative of noise_kernel_hat.
double noise_kernel_hat_dT(const SpectralModel& m, double w, double T);

// chi(t) = (2/pi) int_0^inf J(w) sin(w t) dw.
double dissipation_kernel_time(const SpectralModel& m, double t);

}  // namespace lct
