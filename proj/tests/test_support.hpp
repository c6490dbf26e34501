#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "flagmodel/bounds.hpp"
#include "flagmodel/flagcore.hpp"
#include "flagmodel/repdim.hpp"

namespace flagmodel::testing {

inline Matrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

inline SymmetricMatrix gaussian_symmetric(int n, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(n, n, rng);
  return SymmetricMatrix::symmetrized(g);
}

/// Uniformly chosen signature with 2 <= n <= max_n.
inline FlagSignature random_signature(int max_n, std::mt19937_64& rng) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
  const auto all = all_signatures(n);
  return all[rng() % all.size()];
}

/// Rotation exp(h B) for skew B, computed independently of the library.
inline Matrix skew_exp(const Matrix& skew, double h) {
  const Matrix scaled = h * skew;
  return scaled.exp();
}

/// Binomial coefficient by Pascal recursion in big integers.
inline BigInt binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

/// Dimension from the product over positive roots of (mu + rho, alpha) /
/// (rho, alpha) in floating point. Roots of B_m are e_i +- e_j and e_i; roots
/// of D_m are e_i +- e_j.
inline double root_product_dim(int n, const std::vector<double>& mu) {
  const int m = n / 2;
  std::vector<double> rho(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rho[static_cast<std::size_t>(i)] = n % 2 ? m - i - 0.5 : m - i - 1.0;
  double dim = 1.0;
  for (int i = 0; i < m; ++i) {
    const double li = mu[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      const double lj = mu[static_cast<std::size_t>(j)] + rho[static_cast<std::size_t>(j)];
      dim *= (li - lj) / (rho[static_cast<std::size_t>(i)] - rho[static_cast<std::size_t>(j)]);
      dim *= (li + lj) / (rho[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(j)]);
    }
    if (n % 2) dim *= li / rho[static_cast<std::size_t>(i)];
  }
  return dim;
}

}  // namespace flagmodel::testing
