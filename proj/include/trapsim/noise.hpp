#pragma once

#include <optional>
#include <vector>

#include "trapsim/rng.hpp"
#include "trapsim/trap.hpp"

namespace trapsim {

// What a Rayleigh-scattering event does to the vibrational level.
enum class RecoilModel { resample_thermal, energy_kick };

struct OuParams {
  bool enabled = false;
  double sigma = 0.0;     // stationary standard deviation
  double tau_corr = 0.0;  // s
};

struct NoiseConfig {
  double rayleigh_rate = 0.0;  // s^-1, elastic scattering (calibration knob)
  RecoilModel recoil_model = RecoilModel::resample_thermal;
  double recoil_energy = 0.0;  // K, used by energy_kick
  OuParams power_noise;        // relative trap-depth fluctuation (multiplies detunings)
  OuParams zeeman_noise;       // additive common-mode detuning, rad/s
  double f_changing_rate = 0.0;   // s^-1
  double mf_changing_rate = 0.0;  // s^-1

  void validate() const;
};

enum class LeakChannel { f_changing, mf_changing };

struct LeakEvent {
  double time = 0.0;
  LeakChannel channel = LeakChannel::f_changing;
};

// Piecewise-sampled OU trace on a uniform grid over [0, duration] plus its
// running integral, exact under linear interpolation of the process.
struct OuTrace {
  double dt = 0.0;
  std::vector<double> values;    // grid samples
  std::vector<double> integral;  // cumulative trapezoid at grid nodes

  bool empty() const { return values.empty(); }
  // integral of the (linearly interpolated) trace over [t0, t1]
  double integrate(double t0, double t1) const;
  double integral_to(double t) const;
};

// One atom's sampled trajectory of every stochastic process over [0, duration].
struct NoiseRealization {
  std::vector<double> scatter_times;            // sorted
  std::vector<VibrationalLevel> scatter_levels; // level after each scatter
  OuTrace power_factor;                         // multiplicative, > 0
  OuTrace zeeman_shift;                         // additive, rad/s
  std::optional<LeakEvent> leak;

  double power_factor_integral(double t0, double t1) const;
  double zeeman_integral(double t0, double t1) const;
};

// Exact Ornstein-Uhlenbeck update over a step dt (step-size independent):
// x' = x e^{-dt/tau} + sigma sqrt(1 - e^{-2dt/tau}) N(0,1).
double ou_step(double x, double dt, double tau_corr, double sigma, RngStream& rng);

NoiseRealization sample_realization(const NoiseConfig& config, const TrapModel& trap,
                                    double duration, RngStream& rng);

// Post-scatter level. resample_thermal draws a fresh thermal level;
// energy_kick adds the recoil energy to one randomly chosen transverse
// dimension, re-quantized to the nearest level and clipped at the trap edge.
VibrationalLevel apply_recoil(const NoiseConfig& config, const TrapModel& trap,
                              const VibrationalLevel& current, RngStream& rng);

}  // namespace trapsim
