#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "trapsim/constants.hpp"

namespace trapsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Decorrelated child seed for stream `index` of a master seed.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
}

// Order-insensitive-by-construction hash used to seed scan points: the same
// (master, tag, a, b) always maps to the same stream, independent of the
// execution schedule.
inline std::uint64_t stable_hash(std::uint64_t master, std::uint64_t tag,
                                 std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ splitmix64(tag + 0x1ULL));
  h = splitmix64(h ^ splitmix64(a + 0x2ULL));
  h = splitmix64(h ^ splitmix64(b + 0x3ULL));
  return h;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic per-atom random stream. mt19937_64 output is fixed by the
// standard; every variate transform below is hand-rolled so that sequences
// are bit-identical across platforms and compilers (std::*_distribution is
// implementation-defined and must not be used here).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1], safe as a log() argument
  double uniform_pos() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Box-Muller with one cached value
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = two_pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

  // Knuth multiplication method; mean is split to keep exp(-mean) normal.
  int poisson(double mean) {
    int count = 0;
    while (mean > 500.0) {
      count += poisson_small(500.0);
      mean -= 500.0;
    }
    return count + poisson_small(mean);
  }

  // Geometric law p(n) ~ q^n truncated to n in [0, n_max), by inverse CDF.
  int truncated_geometric(double q, int n_max) {
    if (q <= 0.0 || n_max <= 1) return 0;
    const double log_q = std::log(q);
    const double tail = std::exp(static_cast<double>(n_max) * log_q);  // q^n_max
    const double u = uniform();
    const int n = static_cast<int>(std::log1p(-u * (1.0 - tail)) / log_q);
    return n < 0 ? 0 : (n >= n_max ? n_max - 1 : n);
  }

 private:
  int poisson_small(double mean) {
    const double limit = std::exp(-mean);
    double prod = uniform();
    int n = 0;
    while (prod > limit) {
      ++n;
      prod *= uniform();
    }
    return n;
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace trapsim
