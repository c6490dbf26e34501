#include "flagmodel/embed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace flagmodel {

Vector block_diagonal_entries(const Spectrum& spec) {
  const auto& sig = spec.signature();
  Vector d(sig.n());
  for (int b = 0; b < sig.num_blocks(); ++b)
    d.segment(sig.block_offset(b), sig.block_size(b)).setConstant(spec.value(b));
  return d;
}

SymmetricMatrix block_diagonal_model(const Spectrum& spec) {
  return SymmetricMatrix::symmetrized(block_diagonal_entries(spec).asDiagonal());
}

EmbeddedFlag embed(const FlagPoint& f, const Spectrum& spec) {
  if (!(f.signature() == spec.signature())) {
    throw FlagError(ErrorCode::SignatureMismatch,
                    "flag point and spectrum have different signatures");
  }
  const Vector d = block_diagonal_entries(spec);
  const Matrix x = f.q() * d.asDiagonal() * f.q().transpose();
  return EmbeddedFlag{SymmetricMatrix::symmetrized(x), spec, f.q()};
}

FlagPoint act(const Matrix& r, const FlagPoint& f, const Tolerances& tol) {
  if (r.rows() != f.signature().n() || !is_special_orthogonal(r, tol.orth)) {
    throw FlagError(ErrorCode::NotSpecialOrthogonal, "group element is not in SO(n)");
  }
  return make_flag_point(f.signature(), r * f.q(), tol);
}

FlagPoint recover(const SymmetricMatrix& x, const Spectrum& spec,
                  const Tolerances& tol) {
  const auto& sig = spec.signature();
  if (x.n() != sig.n()) {
    throw FlagError(ErrorCode::SpectrumMismatch,
                    "matrix size " + std::to_string(x.n()) + " does not match n = " +
                        std::to_string(sig.n()));
  }
  const double spec_gap = spec.min_gap();
  if (spec_gap <= 2.0 * tol.eig) {
    throw FlagError(ErrorCode::EigenvalueGapTooSmall,
                    "spectrum values too close for unambiguous matching", spec_gap);
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(x.matrix());
  if (es.info() != Eigen::Success)
    throw FlagError(ErrorCode::SpectrumMismatch, "eigendecomposition failed");
  const Vector& lambda = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();

  const int nb = sig.num_blocks();
  std::vector<std::vector<int>> members(static_cast<std::size_t>(nb));
  for (int k = 0; k < sig.n(); ++k) {
    int best = 0;
    double best_dist = INFINITY;
    for (int b = 0; b < nb; ++b) {
      const double d = std::abs(lambda(k) - spec.value(b));
      if (d < best_dist) {
        best_dist = d;
        best = b;
      }
    }
    if (best_dist > tol.eig) {
      throw FlagError(ErrorCode::SpectrumMismatch,
                      "eigenvalue " + std::to_string(lambda(k)) +
                          " is not within eig_tol of any spectrum value",
                      best_dist);
    }
    members[static_cast<std::size_t>(best)].push_back(k);
  }

  Matrix q(sig.n(), sig.n());
  for (int b = 0; b < nb; ++b) {
    const auto& idx = members[static_cast<std::size_t>(b)];
    if (static_cast<int>(idx.size()) != sig.block_size(b)) {
      throw FlagError(ErrorCode::SpectrumMismatch,
                      "value a_" + std::to_string(b + 1) + " has multiplicity " +
                          std::to_string(idx.size()) + ", expected " +
                          std::to_string(sig.block_size(b)));
    }
    for (std::size_t c = 0; c < idx.size(); ++c)
      q.col(sig.block_offset(b) + static_cast<int>(c)) = vecs.col(idx[c]);
  }
  // Negating one column of the last block is a stabilizer element.
  if (q.determinant() < 0) q.col(sig.n() - 1) *= -1.0;
  return make_flag_point(sig, std::move(q), tol);
}

EmbeddedFlag embedded_from_matrix(const SymmetricMatrix& x, const Spectrum& spec,
                                  const Tolerances& tol) {
  return embed(recover(x, spec, tol), spec);
}

bool membership(const SymmetricMatrix& x, const Spectrum& spec, double tol) {
  const auto& sig = spec.signature();
  if (x.n() != sig.n()) return false;
  Vector expected = block_diagonal_entries(spec);
  std::sort(expected.begin(), expected.end());
  Eigen::SelfAdjointEigenSolver<Matrix> es(x.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return false;
  // Eigen returns eigenvalues in increasing order.
  return (es.eigenvalues() - expected).cwiseAbs().maxCoeff() <= tol;
}

std::pair<SymmetricMatrix, double> traceless_split(const SymmetricMatrix& x) {
  const int n = x.n();
  const double c = x.trace() / n;
  Matrix centered = x.matrix();
  centered.diagonal().array() -= c;
  return {SymmetricMatrix::symmetrized(centered), c};
}

}  // namespace flagmodel
