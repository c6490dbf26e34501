#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "flagmodel/errors.hpp"

namespace flagmodel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Numerical tolerances shared by every module. The defaults are tuned for
/// unit-scale spectra and n up to about 100.
struct Tolerances {
  double orth = 1e-10;          // ||Q^T Q - I||_F and |det Q - 1|
  double sym = 1e-10;           // max |X - X^T| entry
  double trace = 1e-10;         // |trace| for traceless checks
  double spectrum_gap = 1e-8;   // minimum separation of spectrum values
  double eig = 1e-8;            // eigenvalue-to-spectrum matching
};

/// Nested-subspace dimensions 0 < k_1 < ... < k_p < n.
class FlagSignature {
 public:
  int n() const noexcept { return n_; }
  const std::vector<int>& ks() const noexcept { return ks_; }
  /// Length p of the flag.
  int length() const noexcept { return static_cast<int>(ks_.size()); }
  /// Number of diagonal blocks, p + 1.
  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
  /// Block sizes n_i = k_i - k_{i-1} with k_0 = 0 and k_{p+1} = n.
  const std::vector<int>& block_sizes() const noexcept { return blocks_; }
  int block_size(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }
  /// First row/column of block i.
  int block_offset(int i) const {
    return i == 0 ? 0 : ks_.at(static_cast<std::size_t>(i - 1));
  }
  bool is_grassmannian() const noexcept { return ks_.size() == 1; }

  bool operator==(const FlagSignature&) const = default;

 private:
  friend FlagSignature make_signature(int n, std::vector<int> ks);
  FlagSignature(int n, std::vector<int> ks, std::vector<int> blocks)
      : n_(n), ks_(std::move(ks)), blocks_(std::move(blocks)) {}

  int n_;
  std::vector<int> ks_;
  std::vector<int> blocks_;
};

/// Throws AmbientTooSmall (n < 2), KOutOfRange, or NonIncreasingKs.
FlagSignature make_signature(int n, std::vector<int> ks);

/// Distinct values a_1, ..., a_{p+1}, one per block.
class Spectrum {
 public:
  const std::vector<double>& values() const noexcept { return values_; }
  double value(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  const FlagSignature& signature() const noexcept { return sig_; }

  /// Sum n_i a_i, the trace of every embedded point.
  double weighted_trace() const;
  bool is_traceless(double trace_tol = Tolerances{}.trace) const;
  /// Smallest |a_i - a_j| over i != j.
  double min_gap() const;
  /// Largest |a_i - a_j|.
  double max_gap() const;

  bool operator==(const Spectrum&) const = default;

 private:
  friend Spectrum make_spectrum(const FlagSignature&, std::vector<double>,
                                const Tolerances&);
  Spectrum(FlagSignature sig, std::vector<double> values)
      : sig_(std::move(sig)), values_(std::move(values)) {}

  FlagSignature sig_;
  std::vector<double> values_;
};

/// Throws InvalidSpectrum on a count mismatch, non-finite entries, or two
/// values closer than tol.spectrum_gap.
Spectrum make_spectrum(const FlagSignature& sig, std::vector<double> values,
                       const Tolerances& tol = {});

/// Canonical traceless spectrum: a_i = n c_i - sum_j n_j c_j with the integer
/// ladder c_i = p + 1 - i. Strictly decreasing, integer valued, exactly
/// traceless.
Spectrum default_traceless_spectrum(const FlagSignature& sig);

/// Traceless spectrum from the leading values a_1..a_p, closing with
/// a_{p+1} = -(n_1 a_1 + ... + n_p a_p) / n_{p+1}.
Spectrum traceless_spectrum_from_leading(const FlagSignature& sig,
                                         std::span<const double> leading,
                                         const Tolerances& tol = {});

/// A flag stored as a representative Q in SO(n); the column blocks of Q span
/// the successive increments W_i / W_{i-1}.
class FlagPoint {
 public:
  const Matrix& q() const noexcept { return q_; }
  const FlagSignature& signature() const noexcept { return sig_; }

  /// Subspace W_i spanned by the first k_i columns of Q (i in 1..p).
  Matrix subspace_basis(int i) const;

 private:
  friend FlagPoint make_flag_point(const FlagSignature&, Matrix,
                                   const Tolerances&);
  FlagPoint(FlagSignature sig, Matrix q) : sig_(std::move(sig)), q_(std::move(q)) {}

  FlagSignature sig_;
  Matrix q_;
};

/// Throws NotSpecialOrthogonal unless q is n x n, orthogonal, and det q = 1.
FlagPoint make_flag_point(const FlagSignature& sig, Matrix q,
                          const Tolerances& tol = {});

FlagPoint identity_flag(const FlagSignature& sig);

bool is_special_orthogonal(const Matrix& r, double tol = Tolerances{}.orth);

/// Haar-distributed rotation: QR of a Gaussian matrix with R-diagonal sign
/// fix and a column flip when det = -1. Deterministic in seed.
Matrix random_special_orthogonal(int n, std::uint64_t seed);

FlagPoint random_flag_point(const FlagSignature& sig, std::uint64_t seed);

/// Random element of S(O(n_1) x ... x O(n_{p+1})), the stabilizer of the
/// base flag.
Matrix random_stabilizer_element(const FlagSignature& sig, std::uint64_t seed);

/// Equality of cosets, decided by comparing embedded images under the
/// default traceless spectrum. Throws SignatureMismatch.
bool flags_equal(const FlagPoint& x, const FlagPoint& y,
                 const FlagSignature& sig, double tol);

/// Symmetric n x n matrix.
class SymmetricMatrix {
 public:
  /// Throws NotSymmetric if m is not square or not symmetric within tol.
  /// The stored matrix is the exact symmetric part of m.
  static SymmetricMatrix checked(const Matrix& m, double tol = Tolerances{}.sym);
  /// Symmetric part (m + m^T) / 2, no check.
  static SymmetricMatrix symmetrized(const Matrix& m);
  static SymmetricMatrix zero(int n);

  const Matrix& matrix() const noexcept { return m_; }
  int n() const noexcept { return static_cast<int>(m_.rows()); }
  double trace() const { return m_.trace(); }
  bool is_traceless(double tol = Tolerances{}.trace) const;

 private:
  explicit SymmetricMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Element B of the block off-diagonal complement m of the stabilizer
/// algebra: B_ii = 0 and B_ji = -B_ij^T. Stores the blocks B_ij, i < j.
class TangentBlock {
 public:
  static TangentBlock zero(const FlagSignature& sig);
  /// Extracts the strictly upper blocks; throws InvalidArgument unless the
  /// matrix is skew with vanishing diagonal blocks (within tol).
  static TangentBlock from_matrix(const FlagSignature& sig, const Matrix& b,
                                  double tol = 1e-12);
  /// Gaussian entries in every B_ij, i < j.
  static TangentBlock random(const FlagSignature& sig, std::uint64_t seed);

  const FlagSignature& signature() const noexcept { return sig_; }
  /// Block B_ij for i < j.
  const Matrix& block(int i, int j) const;
  Matrix& block(int i, int j);
  /// Assembled skew-symmetric n x n matrix.
  Matrix full() const;

  TangentBlock scaled(double s) const;

 private:
  explicit TangentBlock(FlagSignature sig);
  std::size_t index(int i, int j) const;

  FlagSignature sig_;
  std::vector<Matrix> upper_;
};

}  // namespace flagmodel
