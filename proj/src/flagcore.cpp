#include "flagmodel/flagcore.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace flagmodel {

FlagSignature make_signature(int n, std::vector<int> ks) {
  if (n < 2) {
    throw FlagError(ErrorCode::AmbientTooSmall,
                    "ambient dimension " + std::to_string(n) + " < 2");
  }
  if (ks.empty()) {
    throw FlagError(ErrorCode::KOutOfRange, "ks must be nonempty");
  }
  for (int k : ks) {
    if (k <= 0 || k >= n) {
      throw FlagError(ErrorCode::KOutOfRange,
                      "k = " + std::to_string(k) + " outside (0, " +
                          std::to_string(n) + ")");
    }
  }
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i] <= ks[i - 1]) {
      throw FlagError(ErrorCode::NonIncreasingKs,
                      "ks must be strictly increasing at position " +
                          std::to_string(i));
    }
  }
  std::vector<int> blocks;
  blocks.reserve(ks.size() + 1);
  int prev = 0;
  for (int k : ks) {
    blocks.push_back(k - prev);
    prev = k;
  }
  blocks.push_back(n - prev);
  return FlagSignature(n, std::move(ks), std::move(blocks));
}

double Spectrum::weighted_trace() const {
  double t = 0.0;
  for (int i = 0; i < sig_.num_blocks(); ++i) t += sig_.block_size(i) * value(i);
  return t;
}

bool Spectrum::is_traceless(double trace_tol) const {
  return std::abs(weighted_trace()) <= trace_tol;
}

double Spectrum::min_gap() const {
  double gap = INFINITY;
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      gap = std::min(gap, std::abs(values_[i] - values_[j]));
  return gap;
}

double Spectrum::max_gap() const {
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  return *hi - *lo;
}

Spectrum make_spectrum(const FlagSignature& sig, std::vector<double> values,
                       const Tolerances& tol) {
  if (static_cast<int>(values.size()) != sig.num_blocks()) {
    throw FlagError(ErrorCode::InvalidSpectrum,
                    "expected " + std::to_string(sig.num_blocks()) +
                        " spectrum values, got " + std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v))
      throw FlagError(ErrorCode::InvalidSpectrum, "non-finite spectrum value");
  }
  Spectrum s(sig, std::move(values));
  const double gap = s.min_gap();
  if (gap <= tol.spectrum_gap) {
    throw FlagError(ErrorCode::InvalidSpectrum,
                    "spectrum values are not distinct", gap);
  }
  return s;
}

Spectrum default_traceless_spectrum(const FlagSignature& sig) {
  const int blocks = sig.num_blocks();
  // Integer arithmetic keeps the trace exactly zero.
  long long weighted = 0;
  for (int i = 0; i < blocks; ++i)
    weighted += static_cast<long long>(sig.block_size(i)) * (blocks - 1 - i);
  std::vector<double> values(static_cast<std::size_t>(blocks));
  for (int i = 0; i < blocks; ++i) {
    values[static_cast<std::size_t>(i)] =
        static_cast<double>(static_cast<long long>(sig.n()) * (blocks - 1 - i) - weighted);
  }
  return make_spectrum(sig, std::move(values));
}

Spectrum traceless_spectrum_from_leading(const FlagSignature& sig,
                                         std::span<const double> leading,
                                         const Tolerances& tol) {
  if (static_cast<int>(leading.size()) != sig.length()) {
    throw FlagError(ErrorCode::InvalidSpectrum,
                    "expected " + std::to_string(sig.length()) + " leading values");
  }
  std::vector<double> values(leading.begin(), leading.end());
  double weighted = 0.0;
  for (int i = 0; i < sig.length(); ++i) weighted += sig.block_size(i) * leading[static_cast<std::size_t>(i)];
  values.push_back(-weighted / sig.block_size(sig.length()));
  return make_spectrum(sig, std::move(values), tol);
}

Matrix FlagPoint::subspace_basis(int i) const {
  if (i < 1 || i > sig_.length())
    throw FlagError(ErrorCode::IndexOutOfRange, "subspace index out of range");
  return q_.leftCols(sig_.ks()[static_cast<std::size_t>(i - 1)]);
}

bool is_special_orthogonal(const Matrix& r, double tol) {
  if (r.rows() != r.cols() || r.rows() == 0) return false;
  const auto n = r.rows();
  if ((r.transpose() * r - Matrix::Identity(n, n)).norm() > tol) return false;
  return std::abs(r.determinant() - 1.0) <= tol;
}

FlagPoint make_flag_point(const FlagSignature& sig, Matrix q,
                          const Tolerances& tol) {
  if (q.rows() != sig.n() || q.cols() != sig.n()) {
    throw FlagError(ErrorCode::NotSpecialOrthogonal,
                    "representative must be " + std::to_string(sig.n()) + "x" +
                        std::to_string(sig.n()));
  }
  if (!is_special_orthogonal(q, tol.orth)) {
    throw FlagError(ErrorCode::NotSpecialOrthogonal,
                    "representative is not in SO(n)",
                    (q.transpose() * q - Matrix::Identity(sig.n(), sig.n())).norm());
  }
  return FlagPoint(sig, std::move(q));
}

FlagPoint identity_flag(const FlagSignature& sig) {
  return make_flag_point(sig, Matrix::Identity(sig.n(), sig.n()));
}

namespace {

Matrix haar_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

}  // namespace

Matrix random_special_orthogonal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix q = haar_orthogonal(n, rng);
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

FlagPoint random_flag_point(const FlagSignature& sig, std::uint64_t seed) {
  return make_flag_point(sig, random_special_orthogonal(sig.n(), seed));
}

Matrix random_stabilizer_element(const FlagSignature& sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = sig.n();
  Matrix s = Matrix::Zero(n, n);
  for (int b = 0; b < sig.num_blocks(); ++b) {
    const int off = sig.block_offset(b);
    const int sz = sig.block_size(b);
    s.block(off, off, sz, sz) = haar_orthogonal(sz, rng);
  }
  if (s.determinant() < 0) s.col(0) *= -1.0;  // stays inside block 0
  return s;
}

namespace {

Matrix base_image(const FlagPoint& f, const Spectrum& spec) {
  const auto& sig = spec.signature();
  Vector diag(sig.n());
  for (int b = 0; b < sig.num_blocks(); ++b)
    diag.segment(sig.block_offset(b), sig.block_size(b)).setConstant(spec.value(b));
  return f.q() * diag.asDiagonal() * f.q().transpose();
}

}  // namespace

bool flags_equal(const FlagPoint& x, const FlagPoint& y,
                 const FlagSignature& sig, double tol) {
  if (!(x.signature() == sig) || !(y.signature() == sig)) {
    throw FlagError(ErrorCode::SignatureMismatch,
                    "flag points do not share the requested signature");
  }
  const Spectrum spec = default_traceless_spectrum(sig);
  return (base_image(x, spec) - base_image(y, spec)).norm() <= tol;
}

SymmetricMatrix SymmetricMatrix::checked(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw FlagError(ErrorCode::NotSymmetric, "matrix is not square");
  }
  if (m.size() > 0) {
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol)
      throw FlagError(ErrorCode::NotSymmetric, "matrix is not symmetric", asym);
  }
  return symmetrized(m);
}

SymmetricMatrix SymmetricMatrix::symmetrized(const Matrix& m) {
  return SymmetricMatrix(0.5 * (m + m.transpose()));
}

SymmetricMatrix SymmetricMatrix::zero(int n) {
  return SymmetricMatrix(Matrix::Zero(n, n));
}

bool SymmetricMatrix::is_traceless(double tol) const {
  return std::abs(trace()) <= tol;
}

TangentBlock::TangentBlock(FlagSignature sig) : sig_(std::move(sig)) {
  const int nb = sig_.num_blocks();
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      upper_.push_back(Matrix::Zero(sig_.block_size(i), sig_.block_size(j)));
}

std::size_t TangentBlock::index(int i, int j) const {
  const int nb = sig_.num_blocks();
  if (i < 0 || j <= i || j >= nb)
    throw FlagError(ErrorCode::IndexOutOfRange, "tangent block index must satisfy i < j");
  // Row-major position of (i, j) in the strict upper triangle.
  return static_cast<std::size_t>(i * nb - i * (i + 1) / 2 + (j - i - 1));
}

const Matrix& TangentBlock::block(int i, int j) const { return upper_[index(i, j)]; }
Matrix& TangentBlock::block(int i, int j) { return upper_[index(i, j)]; }

TangentBlock TangentBlock::zero(const FlagSignature& sig) { return TangentBlock(sig); }

TangentBlock TangentBlock::from_matrix(const FlagSignature& sig, const Matrix& b,
                                       double tol) {
  if (b.rows() != sig.n() || b.cols() != sig.n())
    throw FlagError(ErrorCode::InvalidArgument, "tangent matrix has wrong shape");
  if ((b + b.transpose()).cwiseAbs().maxCoeff() > tol)
    throw FlagError(ErrorCode::InvalidArgument, "tangent matrix is not skew-symmetric");
  TangentBlock t(sig);
  const int nb = sig.num_blocks();
  for (int i = 0; i < nb; ++i) {
    const auto diag = b.block(sig.block_offset(i), sig.block_offset(i),
                              sig.block_size(i), sig.block_size(i));
    if (diag.size() > 0 && diag.cwiseAbs().maxCoeff() > tol)
      throw FlagError(ErrorCode::InvalidArgument, "diagonal block is nonzero");
    for (int j = i + 1; j < nb; ++j) {
      t.block(i, j) = b.block(sig.block_offset(i), sig.block_offset(j),
                              sig.block_size(i), sig.block_size(j));
    }
  }
  return t;
}

TangentBlock TangentBlock::random(const FlagSignature& sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  TangentBlock t(sig);
  for (auto& blk : t.upper_)
    for (Eigen::Index c = 0; c < blk.cols(); ++c)
      for (Eigen::Index r = 0; r < blk.rows(); ++r) blk(r, c) = normal(rng);
  return t;
}

Matrix TangentBlock::full() const {
  const int nb = sig_.num_blocks();
  Matrix b = Matrix::Zero(sig_.n(), sig_.n());
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) {
      const Matrix& bij = block(i, j);
      b.block(sig_.block_offset(i), sig_.block_offset(j), bij.rows(), bij.cols()) = bij;
      b.block(sig_.block_offset(j), sig_.block_offset(i), bij.cols(), bij.rows()) =
          -bij.transpose();
    }
  }
  return b;
}

TangentBlock TangentBlock::scaled(double s) const {
  TangentBlock t = *this;
  for (auto& blk : t.upper_) blk *= s;
  return t;
}

}  // namespace flagmodel
