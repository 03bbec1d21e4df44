#include "trapsim/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace trapsim {

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::ramsey: return "ramsey";
    case ScheduleKind::echo: return "echo";
    case ScheduleKind::multi_pi: return "multi_pi";
    case ScheduleKind::pi_pi: return "pi_pi";
  }
  return "?";
}

ScheduleKind schedule_kind_from_string(const std::string& s) {
  if (s == "ramsey") return ScheduleKind::ramsey;
  if (s == "echo") return ScheduleKind::echo;
  if (s == "multi_pi") return ScheduleKind::multi_pi;
  if (s == "pi_pi") return ScheduleKind::pi_pi;
  throw std::invalid_argument("unknown schedule kind '" + s + "'");
}

void PulseSchedule::validate() const {
  if (pulses.size() < 2) throw std::invalid_argument("schedule: needs at least two pulses");
  for (std::size_t i = 0; i < pulses.size(); ++i) {
    const Pulse& p = pulses[i];
    if (p.start_time < 0.0) throw std::invalid_argument("schedule: negative pulse time");
    if (!(p.area > 0.0)) throw std::invalid_argument("schedule: pulse area must be > 0");
    if (p.duration > 0.0 &&
        std::abs(p.area - p.rabi_frequency * p.duration) > 1e-9 * p.area)
      throw std::invalid_argument("schedule: area != rabi_frequency * duration");
    if (i > 0) {
      const Pulse& prev = pulses[i - 1];
      if (p.start_time <= prev.start_time)
        throw std::invalid_argument("schedule: pulses not strictly time-ordered");
      if (prev.start_time + prev.duration > p.start_time)
        throw std::invalid_argument("schedule: overlapping finite-duration pulses");
    }
  }
}

PulseSchedule build_schedule(ScheduleKind kind, int n_pi, double tau_total,
                             PhaseConvention convention) {
  if (!(tau_total > 0.0)) throw std::invalid_argument("build_schedule: tau_total must be > 0");

  PulseSchedule s;
  s.total_time = tau_total;

  const double half_pi = 0.5 * pi;
  auto pulse = [](double t, double area, double phase) {
    Pulse p;
    p.start_time = t;
    p.area = area;
    p.phase = phase;
    return p;
  };

  // pi-pulse axis under the alternating convention: successive pi-pulses at
  // +90 / -90 degrees from the pi/2 axis (pairs compose to identity).
  auto pi_phase = [&](int k) {
    if (convention == PhaseConvention::constant) return 0.0;
    return (k % 2 == 0) ? half_pi : -half_pi;
  };

  // Closing-pulse phase keeping the fully coherent signal at P2 = 0: under
  // the alternating convention an odd pulse count leaves one unpaired
  // 90-degree pi-pulse, compensated by closing about the inverted axis.
  auto closing_phase = [&](int count) {
    if (convention == PhaseConvention::alternating && count % 2 == 1) return pi;
    return 0.0;
  };

  switch (kind) {
    case ScheduleKind::ramsey:
      s.n_pi = 0;
      s.pulses = {pulse(0.0, half_pi, 0.0), pulse(tau_total, half_pi, 0.0)};
      break;
    case ScheduleKind::echo:
      s.n_pi = 1;
      s.pulses = {pulse(0.0, half_pi, 0.0), pulse(0.5 * tau_total, pi, pi_phase(0)),
                  pulse(tau_total, half_pi, closing_phase(1))};
      break;
    case ScheduleKind::multi_pi: {
      if (n_pi < 1) throw std::invalid_argument("build_schedule: multi_pi requires n_pi >= 1");
      s.n_pi = n_pi;
      const double tau = tau_total / n_pi;
      s.pulses.push_back(pulse(0.0, half_pi, 0.0));
      for (int k = 0; k < n_pi; ++k)
        s.pulses.push_back(pulse(0.5 * tau + k * tau, pi, pi_phase(k)));
      const double closing_area = (n_pi % 2 == 0) ? 1.5 * pi : half_pi;
      s.pulses.push_back(
          pulse(tau_total, closing_area, closing_phase(n_pi)));
      break;
    }
    case ScheduleKind::pi_pi:
      s.n_pi = 2;
      s.pulses = {pulse(0.0, pi, 0.0), pulse(tau_total, pi, 0.0)};
      break;
  }
  s.validate();
  return s;
}

std::pair<Complex, Complex> apply_rotation(std::pair<Complex, Complex> amplitudes,
                                           const Pulse& pulse, double detuning) {
  const auto [c1, c2] = amplitudes;
  const Complex i_unit(0.0, 1.0);

  double cos_half, sin_half, axis_x_scale, axis_z_scale;
  if (pulse.duration > 0.0) {
    // exact rotation about the tilted axis (detuned Rabi)
    const double omega = pulse.rabi_frequency;
    const double omega_gen = std::sqrt(omega * omega + detuning * detuning);
    const double angle = omega_gen * pulse.duration;
    cos_half = std::cos(0.5 * angle);
    sin_half = std::sin(0.5 * angle);
    axis_x_scale = omega / omega_gen;
    axis_z_scale = -detuning / omega_gen;  // H = -(d/2) sz + (W/2)(cos sx + sin sy)
  } else {
    cos_half = std::cos(0.5 * pulse.area);
    sin_half = std::sin(0.5 * pulse.area);
    axis_x_scale = 1.0;
    axis_z_scale = 0.0;
  }

  const Complex phase_factor = std::exp(i_unit * pulse.phase);
  // U = cos(a/2) I - i sin(a/2) [axis_z sz + axis_x (cos(phi) sx + sin(phi) sy)]
  const Complex u11 = cos_half - i_unit * sin_half * axis_z_scale;
  const Complex u22 = cos_half + i_unit * sin_half * axis_z_scale;
  const Complex u12 = -i_unit * sin_half * axis_x_scale * std::conj(phase_factor);
  const Complex u21 = -i_unit * sin_half * axis_x_scale * phase_factor;

  return {u11 * c1 + u12 * c2, u21 * c1 + u22 * c2};
}

}  // namespace trapsim
