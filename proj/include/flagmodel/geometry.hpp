#pragma once

#include <functional>
#include <vector>

#include "flagmodel/embed.hpp"

namespace flagmodel {

/// Invariant metric on m with weights (a_i - a_j)^2 taken from a spectrum.
struct MetricSpec {
  Spectrum spectrum;
};

/// Tangent vector v at base.x. In the frame of base, v has vanishing
/// diagonal blocks.
struct EmbeddedTangent {
  SymmetricMatrix v;
  EmbeddedFlag base;
};

/// <B, C> = 2 sum_{i<j} (a_i - a_j)^2 tr(B_ij^T C_ij).
double metric_inner(const TangentBlock& b, const TangentBlock& c, const MetricSpec& m);

/// Commutator [B, I_{a,n}] computed as a matrix product.
Matrix bracket_with_model(const TangentBlock& b, const Spectrum& spec);

/// Pushforward Q [B, I_{a,n}] Q^T of B at f.
EmbeddedTangent push_tangent(const TangentBlock& b, const FlagPoint& f,
                             const Spectrum& spec);

/// | ||[B, I_{a,n}]||_F^2 - <B, B> |, zero when the embedding is isometric.
double isometry_defect(const TangentBlock& b, const Spectrum& spec);

/// Frobenius-orthogonal projection onto the tangent space at base.
EmbeddedTangent project_to_tangent(const SymmetricMatrix& g, const EmbeddedFlag& base);

/// Largest diagonal-block entry of Q^T v Q; zero for tangent vectors.
double tangent_residual(const SymmetricMatrix& v, const EmbeddedFlag& base);

/// Closest point of the isospectral set to a in Frobenius norm. Eigenvalues of
/// a are sorted descending and assigned to the blocks in order of decreasing
/// spectrum value. Throws DegenerateBoundaryGap if the eigenvalues on either
/// side of a block boundary are within tol.spectrum_gap of each other.
EmbeddedFlag nearest_point(const SymmetricMatrix& a, const Spectrum& spec,
                           const Tolerances& tol = {});

/// nearest_point(base.x + step v). step = 0 returns base unchanged.
EmbeddedFlag retract(const EmbeddedFlag& base, const EmbeddedTangent& v, double step,
                     const Tolerances& tol = {});

/// Euclidean gradient of the objective at a point of the embedded model.
using GradientOracle = std::function<Matrix(const Matrix&)>;

/// The step is dimensionless: rescaling the spectrum and the objective
/// together leaves the iteration unchanged.
struct DescentOptions {
  double step = 0.5;
  int max_iters = 500;
  double grad_tol = 1e-6;
};

struct DescentResult {
  EmbeddedFlag point;
  /// Projected-gradient Frobenius norm at every visited iterate.
  std::vector<double> grad_norms;
  int iterations = 0;
  bool converged = false;
};

/// Riemannian gradient descent x <- retract(x, -step * P_x(grad f(x))).
/// Throws StepNotFinite when the oracle returns non-finite entries.
DescentResult gradient_descent(const GradientOracle& grad, const Spectrum& spec,
                               const EmbeddedFlag& init, const DescentOptions& opts,
                               const Tolerances& tol = {});

}  // namespace flagmodel
