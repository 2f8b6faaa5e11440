#include "lcthermo/becmodel.hpp"

#include <cmath>
#include <numbers>

#include "lcthermo/error.hpp"

namespace lct::bec {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BecExperiment BecExperiment::reference() {
  BecExperiment e;
  e.omega_I = kTwoPi * 375.0;
  e.omega_B = kTwoPi * 750.0;
  e.N_B = 5000.0;
  e.g_IB = coupling_from_mantissa(0.55, -39);
  e.g_B = coupling_from_mantissa(3.0, -39);
  e.T = 1e-9;
  e.upsilon_rel = 0.2;
  e.omega_d = 0.8 * e.omega_I;
  return e;
}

void BecExperiment::validate() const {
  const bool ok = m_I > 0.0 && m_B > 0.0 && N_B > 0.0 && omega_I > 0.0 && omega_B > 0.0 && g_IB >= 0.0 &&
                  g_B > 0.0 && T > 0.0 && upsilon_rel >= 0.0 && omega_d > 0.0;
  if (!ok) fail(ErrorCode::Domain, "BEC experiment: parameters must be positive");
}

double coupling_from_mantissa(double mantissa, int exponent) { return mantissa * std::pow(10.0, exponent); }

double chemical_potential(const BecExperiment& e) {
  e.validate();
  const double base = 3.0 / (4.0 * std::numbers::sqrt2) * e.g_B * e.N_B * e.omega_B * std::sqrt(e.m_B);
  const double p = e.mu_exponent == MuExponent::ThomasFermi ? 2.0 / 3.0 : 1.5;
  return std::pow(base, p);
}

double thomas_fermi_radius(const BecExperiment& e) {
  return std::sqrt(2.0 * chemical_potential(e) / (e.m_B * e.omega_B * e.omega_B));
}

double gamma0_si(const BecExperiment& e) {
  const double mu = chemical_potential(e);
  const double r = thomas_fermi_radius(e);
  const double wb4 = std::pow(e.omega_B, 4);
  const double ratio = e.g_IB * mu / (e.g_B * kHbar * e.omega_B);
  return std::numbers::pi * e.g_B / (wb4 * r * r * r) * ratio * ratio;
}

double gamma0(const BecExperiment& e) { return gamma0_si(e) * e.omega_I * e.omega_I / e.m_I; }

double temperature_to_natural(const BecExperiment& e, double T_kelvin) {
  return kBoltzmann * T_kelvin / (kHbar * e.omega_I);
}

double temperature_to_kelvin(const BecExperiment& e, double T_natural) {
  return T_natural * kHbar * e.omega_I / kBoltzmann;
}

double frequency_to_natural(const BecExperiment& e, double w_rad_s) { return w_rad_s / e.omega_I; }

double frequency_to_si(const BecExperiment& e, double w_natural) { return w_natural * e.omega_I; }

ProbeModel to_probe_model(const BecExperiment& e, SuperOhmicChi chi) {
  e.validate();
  return {SpectralModel::super_ohmic(gamma0(e), frequency_to_natural(e, e.omega_B), chi),
          DriveSpec::sinusoidal(1.0, e.upsilon_rel, frequency_to_natural(e, e.omega_d)),
          temperature_to_natural(e, e.T)};
}

}  // namespace lct::bec
