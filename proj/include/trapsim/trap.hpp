#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "trapsim/constants.hpp"
#include "trapsim/rng.hpp"

namespace trapsim {

// Motional model of one optically trapped atom: harmonic transverse
// confinement whose frequency is scaled by (1+eta) in the upper hyperfine
// state. The level-dependent differential shift of the two-level resonance
// is delta(n) = eta * omega_t * sum_d(n_d + 1/2).
struct TrapModel {
  double transverse_period = 1.4e-3;  // s
  double trap_depth = 100e-6;         // K
  double temperature = 20e-6;         // K
  double differential_factor = 2e-4;  // eta = dV/V1
  int transverse_dims = 2;
  double hyperfine_splitting = two_pi * 3.036e9;  // rad/s; absorbed by the rotating frame

  double omega_t() const { return two_pi / transverse_period; }

  // hbar * omega_t / kB, the level spacing expressed as a temperature
  double level_spacing_kelvin() const { return hbar * omega_t() / k_boltzmann; }

  // number of bound harmonic levels per transverse dimension
  int bound_levels() const { return static_cast<int>(trap_depth / level_spacing_kelvin()); }

  // Boltzmann ratio q = exp(-hbar omega_t / kB T)
  double boltzmann_q() const { return std::exp(-level_spacing_kelvin() / temperature); }

  void validate() const;  // throws std::invalid_argument on any bad field
};

struct VibrationalLevel {
  std::array<int, 2> n{0, 0};
  int dims = 2;

  int sum() const { return dims >= 2 ? n[0] + n[1] : n[0]; }
  bool operator==(const VibrationalLevel&) const = default;
};

// Cross-basis overlaps <m'(omega(1+eta)) | n(omega)> between the eigenstates
// of the two internal-state potentials (same center, scaled frequency).
// Entries are exact: the generator recursion is run on an enlarged internal
// block so truncation never contaminates the returned window.
class OverlapMatrix {
 public:
  OverlapMatrix(double eta, int size);

  double eta() const { return eta_; }
  int size() const { return static_cast<int>(o_.rows()); }
  const Eigen::MatrixXd& matrix() const { return o_; }
  double operator()(int m, int n) const { return o_(m, n); }

  // 1 - sum_m O(m,n)^2 over the stored rows; grows toward the right edge of
  // the window where |n(omega)> genuinely spreads past the block.
  double column_norm_deficit(int n) const;

 private:
  double eta_;
  Eigen::MatrixXd o_;
};

// --- operations -------------------------------------------------------------

// Independent Boltzmann draw per transverse dimension, truncated at the
// number of bound levels. Deterministic given the stream.
VibrationalLevel sample_thermal_level(const TrapModel& trap, RngStream& rng);

// Differential shift of the |1>-|2> resonance for an atom in `level` (rad/s).
double detuning_of_level(const TrapModel& trap, const VibrationalLevel& level);

// Full overlap window; pre: size >= 1, |eta| < 0.5.
OverlapMatrix overlap_matrix(double eta, int size);

// Diagonal overlaps <n'|n> up to n_max-1 without building the matrix:
// <n|S|n> = sech^{1/2}(rho) P_n(sech rho) with tanh(rho) = eta-dependent
// squeeze, P_n the Legendre polynomials. Valid for arbitrarily large n.
std::vector<double> overlap_diagonal(double eta, int n_max);

// Normalized truncated-Boltzmann weights p(n), n in [0, count).
std::vector<double> thermal_weights(const TrapModel& trap, int count);

// Closed-form mean of the truncated geometric distribution.
double truncated_thermal_mean(double q, int n_max);

}  // namespace trapsim
