#pragma once

#include <utility>

#include "flagmodel/flagcore.hpp"

namespace flagmodel {

/// A point X = Q I_{a,n} Q^T of the isospectral model together with the
/// orthogonal frame Q that produced it. The frame is a coset representative:
/// only x is intrinsic.
struct EmbeddedFlag {
  SymmetricMatrix x;
  Spectrum spectrum;
  Matrix frame;

  const FlagSignature& signature() const noexcept { return spectrum.signature(); }
};

/// diag(a_1 I_{n_1}, ..., a_{p+1} I_{n_{p+1}}).
SymmetricMatrix block_diagonal_model(const Spectrum& spec);

/// Diagonal of block_diagonal_model, one entry per row.
Vector block_diagonal_entries(const Spectrum& spec);

/// X = Q I_{a,n} Q^T. Throws SignatureMismatch.
EmbeddedFlag embed(const FlagPoint& f, const Spectrum& spec);

/// Left action r . f with representative r Q. Throws NotSpecialOrthogonal.
FlagPoint act(const Matrix& r, const FlagPoint& f, const Tolerances& tol = {});

/// Inverse of embed: eigendecompose x, assign each eigenvalue to the nearest
/// spectrum value, and group the eigenvectors in block order. Throws
/// SpectrumMismatch or EigenvalueGapTooSmall.
FlagPoint recover(const SymmetricMatrix& x, const Spectrum& spec,
                  const Tolerances& tol = {});

/// embed(recover(x)) as an EmbeddedFlag, keeping the recovered frame.
EmbeddedFlag embedded_from_matrix(const SymmetricMatrix& x, const Spectrum& spec,
                                  const Tolerances& tol = {});

/// Sorted eigenvalues of x match {a_i repeated n_i times} within tol.
bool membership(const SymmetricMatrix& x, const Spectrum& spec, double tol);

/// (x - (tr x / n) I, tr x / n).
std::pair<SymmetricMatrix, double> traceless_split(const SymmetricMatrix& x);

}  // namespace flagmodel
