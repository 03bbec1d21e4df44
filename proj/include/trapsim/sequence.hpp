#pragma once

#include <complex>
#include <string>
#include <vector>

#include "trapsim/constants.hpp"

namespace trapsim {

using Complex = std::complex<double>;

// One microwave rotation. duration == 0 means an ideal instantaneous pulse;
// finite durations follow the exact detuned-Rabi solution in apply_rotation.
struct Pulse {
  double start_time = 0.0;      // s
  double area = pi;             // rad
  double phase = 0.0;           // rad, rotation-axis azimuth
  double duration = 0.0;        // s
  double rabi_frequency = two_pi * 5e3;  // rad/s, used only when duration > 0
};

enum class ScheduleKind { ramsey, echo, multi_pi, pi_pi };

enum class PhaseConvention { constant, alternating };

std::string to_string(ScheduleKind kind);
ScheduleKind schedule_kind_from_string(const std::string& s);

struct PulseSchedule {
  std::vector<Pulse> pulses;  // strictly time-ordered
  double total_time = 0.0;    // s, first to last pulse
  int n_pi = 0;               // number of pi-pulses

  void validate() const;  // ordering/overlap/area invariants
};

// Standard sequences. ramsey: two pi/2 pulses. echo: pi/2 - pi - pi/2.
// multi_pi: pi/2, then n_pi pi-pulses at spacings tau/2, tau, ..., tau, tau/2
// with tau = tau_total/n_pi, closed by 3pi/2 (even n_pi) or pi/2 (odd) so a
// fully coherent ensemble returns P2 = 0. pi_pi: two bare pi-pulses, the
// leakage probe (no interference).
PulseSchedule build_schedule(ScheduleKind kind, int n_pi, double tau_total,
                             PhaseConvention convention = PhaseConvention::constant);

// Applies one pulse to internal amplitudes (c1, c2). Instantaneous pulses
// ignore the detuning; finite-duration pulses rotate about the tilted axis
// with generalized Rabi frequency sqrt(rabi^2 + detuning^2).
std::pair<Complex, Complex> apply_rotation(std::pair<Complex, Complex> amplitudes,
                                           const Pulse& pulse, double detuning = 0.0);

}  // namespace trapsim
