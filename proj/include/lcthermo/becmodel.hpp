#pragma once

#include "lcthermo/limitcycle.hpp"
#include "lcthermo/spectral.hpp"

namespace lct::bec {

// CODATA 2018 (exact where defined).
inline constexpr double kHbar = 1.05457181700e-34;  // J s
inline constexpr double kBoltzmann = 1.38064900000e-23;  // J / K
inline constexpr double kAtomicMass = 1.66053906660e-27;  // kg

inline constexpr double kMassYb174 = 173.938866437 * kAtomicMass;
inline constexpr double kMassK41 = 40.961825258 * kAtomicMass;

// Exponent applied to (3/(4 sqrt 2) g_B N_B omega_B sqrt(m_B)) to obtain the
// chemical potential. ThomasFermi (2/3) is dimensionally an energy; the
// alternative 3/2 is available for comparison.
enum class MuExponent { ThomasFermi, ThreeHalves };

struct BecExperiment {
  double m_I = kMassYb174;           // impurity mass, kg
  double m_B = kMassK41;             // boson mass, kg
  double N_B = 5000.0;               // condensate atom number
  double omega_I = 0.0;              // impurity trap, rad/s
  double omega_B = 0.0;              // condensate trap, rad/s
  double g_IB = 0.0;                 // impurity-boson coupling, J m
  double g_B = 0.0;                  // boson-boson coupling, J m
  double T = 0.0;                    // temperature, K
  double upsilon_rel = 0.0;          // modulation of omega^2 in units of omega_I^2
  double omega_d = 0.0;              // drive frequency, rad/s
  MuExponent mu_exponent = MuExponent::ThomasFermi;

  // Reference scenario: omega_I = 2 pi 375 Hz, omega_B = 2 pi 750 Hz,
  // N_B = 5000, couplings 0.55e-39 and 3e-39 J m, upsilon = 0.2,
  // omega_d = 0.8 omega_I, T = 1 nK.
  static BecExperiment reference();

  void validate() const;
};

// Coupling in J m from a printed mantissa and a decimal exponent.
double coupling_from_mantissa(double mantissa, int exponent);

double chemical_potential(const BecExperiment& e);   // J
double thomas_fermi_radius(const BecExperiment& e);  // m
double gamma0_si(const BecExperiment& e);            // kg s^2
// Dimensionless coupling of J(w~) = 2 gamma0 w~^4 with w~ = w / omega_I.
double gamma0(const BecExperiment& e);

double temperature_to_natural(const BecExperiment& e, double T_kelvin);
double temperature_to_kelvin(const BecExperiment& e, double T_natural);
double frequency_to_natural(const BecExperiment& e, double w_rad_s);
double frequency_to_si(const BecExperiment& e, double w_natural);

struct ProbeModel {
  SpectralModel model;
  DriveSpec drive;
  double T;
};

ProbeModel to_probe_model(const BecExperiment& e, SuperOhmicChi chi = SuperOhmicChi::Consistent);

}  // namespace lct::bec
