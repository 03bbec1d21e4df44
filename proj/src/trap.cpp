#include "trapsim/trap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trapsim {

void TrapModel::validate() const {
  if (!(transverse_period > 0.0)) throw std::invalid_argument("trap: transverse_period must be > 0");
  if (!(trap_depth > 0.0)) throw std::invalid_argument("trap: trap_depth must be > 0");
  if (!(temperature > 0.0)) throw std::invalid_argument("trap: temperature must be > 0");
  if (!(differential_factor > 0.0 && differential_factor < 1.0))
    throw std::invalid_argument("trap: differential_factor must lie in (0, 1)");
  if (transverse_dims != 1 && transverse_dims != 2)
    throw std::invalid_argument("trap: transverse_dims must be 1 or 2");
  if (bound_levels() < 1)
    throw std::invalid_argument("trap: trap_depth must bind at least one level");
}

VibrationalLevel sample_thermal_level(const TrapModel& trap, RngStream& rng) {
  VibrationalLevel level;
  level.dims = trap.transverse_dims;
  const double q = trap.boltzmann_q();
  const int n_max = trap.bound_levels();
  for (int d = 0; d < trap.transverse_dims; ++d)
    level.n[static_cast<std::size_t>(d)] = rng.truncated_geometric(q, n_max);
  return level;
}

double detuning_of_level(const TrapModel& trap, const VibrationalLevel& level) {
  const double half_counts = level.sum() + 0.5 * level.dims;
  return trap.differential_factor * trap.omega_t() * half_counts;
}

namespace {

// Bogoliubov coefficients connecting the two oscillator bases:
// a2 = mu a1 + nu a1^dag with mu^2 - nu^2 = 1.
struct Squeeze {
  double mu, nu;
};

Squeeze squeeze_of_eta(double eta) {
  const double ratio = std::sqrt(1.0 + eta);  // l1/l2 = sqrt(omega2/omega1)
  return {0.5 * (ratio + 1.0 / ratio), 0.5 * (ratio - 1.0 / ratio)};
}

}  // namespace

OverlapMatrix::OverlapMatrix(double eta, int size) : eta_(eta) {
  if (size < 1) throw std::invalid_argument("overlap_matrix: size must be >= 1");
  if (!(std::abs(eta) < 0.5)) throw std::invalid_argument("overlap_matrix: |eta| must be < 0.5");

  const auto [mu, nu] = squeeze_of_eta(eta);

  // Each column step of the generator recursion consumes one top row, so an
  // internal block of 2*size + 2 rows keeps every returned entry exact.
  const int rows = 2 * size + 2;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(rows, size);

  // First column from <0'|0> = 1/sqrt(mu), then
  // S(m+1,0) = (nu/mu) sqrt(m/(m+1)) S(m-1,0).
  s(0, 0) = 1.0 / std::sqrt(mu);
  for (int m = 1; m + 1 < rows; m += 2)
    s(m + 1, 0) = (nu / mu) * std::sqrt(static_cast<double>(m) / (m + 1)) * s(m - 1, 0);

  // Column step: sqrt(n+1) S(m,n+1) = mu sqrt(m) S(m-1,n) - nu sqrt(m+1) S(m+1,n).
  for (int n = 0; n + 1 < size; ++n) {
    const int top = rows - 2 - n;  // highest row still exact in column n+1
    for (int m = 0; m <= top; ++m) {
      const double up = (m > 0) ? mu * std::sqrt(static_cast<double>(m)) * s(m - 1, n) : 0.0;
      const double down = nu * std::sqrt(static_cast<double>(m + 1)) * s(m + 1, n);
      s(m, n + 1) = (up - down) / std::sqrt(static_cast<double>(n + 1));
    }
  }

  o_ = s.topRows(size);

  // Parity selection holds exactly in the recursion's zero pattern; enforce
  // clean zeros against rounding dust.
  for (int n = 0; n < size; ++n)
    for (int m = (n % 2 == 0) ? 1 : 0; m < size; m += 2) o_(m, n) = 0.0;
}

double OverlapMatrix::column_norm_deficit(int n) const {
  return 1.0 - o_.col(n).squaredNorm();
}

OverlapMatrix overlap_matrix(double eta, int size) { return OverlapMatrix(eta, size); }

std::vector<double> overlap_diagonal(double eta, int n_max) {
  if (n_max < 1) throw std::invalid_argument("overlap_diagonal: n_max must be >= 1");
  if (!(std::abs(eta) < 0.5)) throw std::invalid_argument("overlap_diagonal: |eta| must be < 0.5");
  const double x = 1.0 / squeeze_of_eta(eta).mu;  // sech(rho)
  std::vector<double> diag(static_cast<std::size_t>(n_max));
  // Legendre recursion (n+1)P_{n+1} = (2n+1)x P_n - n P_{n-1}
  double p_prev = 1.0, p = x;
  const double scale = std::sqrt(x);
  diag[0] = scale;
  if (n_max > 1) diag[1] = scale * p;
  for (int n = 1; n + 1 < n_max; ++n) {
    const double p_next = ((2.0 * n + 1.0) * x * p - n * p_prev) / (n + 1.0);
    p_prev = p;
    p = p_next;
    diag[static_cast<std::size_t>(n + 1)] = scale * p;
  }
  return diag;
}

std::vector<double> thermal_weights(const TrapModel& trap, int count) {
  const double q = trap.boltzmann_q();
  std::vector<double> w(static_cast<std::size_t>(count));
  double sum = 0.0, pw = 1.0;
  for (int n = 0; n < count; ++n, pw *= q) {
    w[static_cast<std::size_t>(n)] = pw;
    sum += pw;
  }
  for (auto& v : w) v /= sum;
  return w;
}

double truncated_thermal_mean(double q, int n_max) {
  if (q <= 0.0) return 0.0;
  const double qn = std::pow(q, n_max);
  return q / (1.0 - q) - static_cast<double>(n_max) * qn / (1.0 - qn);
}

}  // namespace trapsim
