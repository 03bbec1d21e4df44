#pragma once

namespace trapsim {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// CODATA/SI 2019 exact values
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K

// Detection threshold defining the coherence time: P2 = (1 - 1/e)/2
inline constexpr double coherence_threshold = 0.31606027941427883;

}  // namespace trapsim
