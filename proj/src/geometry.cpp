#include "flagmodel/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace flagmodel {

namespace {

void require_same(const FlagSignature& a, const FlagSignature& b) {
  if (!(a == b))
    throw FlagError(ErrorCode::SignatureMismatch, "signatures differ");
}

// Zeroes the diagonal blocks of m in place.
void mask_diagonal_blocks(Matrix& m, const FlagSignature& sig) {
  for (int b = 0; b < sig.num_blocks(); ++b) {
    const int off = sig.block_offset(b);
    const int sz = sig.block_size(b);
    m.block(off, off, sz, sz).setZero();
  }
}

// Orients the frame into SO(n) by flipping one column of the last block.
void fix_orientation(Matrix& q) {
  if (q.determinant() < 0) q.col(q.cols() - 1) *= -1.0;
}

}  // namespace

double metric_inner(const TangentBlock& b, const TangentBlock& c, const MetricSpec& m) {
  const auto& sig = m.spectrum.signature();
  require_same(b.signature(), sig);
  require_same(c.signature(), sig);
  double sum = 0.0;
  for (int i = 0; i < sig.num_blocks(); ++i) {
    for (int j = i + 1; j < sig.num_blocks(); ++j) {
      const double w = m.spectrum.value(i) - m.spectrum.value(j);
      sum += w * w * (b.block(i, j).array() * c.block(i, j).array()).sum();
    }
  }
  return 2.0 * sum;
}

Matrix bracket_with_model(const TangentBlock& b, const Spectrum& spec) {
  require_same(b.signature(), spec.signature());
  const Matrix bf = b.full();
  const Matrix model = block_diagonal_model(spec).matrix();
  return bf * model - model * bf;
}

EmbeddedTangent push_tangent(const TangentBlock& b, const FlagPoint& f,
                             const Spectrum& spec) {
  require_same(f.signature(), spec.signature());
  const Matrix v = f.q() * bracket_with_model(b, spec) * f.q().transpose();
  return EmbeddedTangent{SymmetricMatrix::symmetrized(v), embed(f, spec)};
}

double isometry_defect(const TangentBlock& b, const Spectrum& spec) {
  return std::abs(bracket_with_model(b, spec).squaredNorm() -
                  metric_inner(b, b, MetricSpec{spec}));
}

EmbeddedTangent project_to_tangent(const SymmetricMatrix& g, const EmbeddedFlag& base) {
  const Matrix& q = base.frame;
  Matrix local = q.transpose() * g.matrix() * q;
  mask_diagonal_blocks(local, base.signature());
  return EmbeddedTangent{SymmetricMatrix::symmetrized(q * local * q.transpose()), base};
}

double tangent_residual(const SymmetricMatrix& v, const EmbeddedFlag& base) {
  const Matrix& q = base.frame;
  const Matrix local = q.transpose() * v.matrix() * q;
  const auto& sig = base.signature();
  double worst = 0.0;
  for (int b = 0; b < sig.num_blocks(); ++b) {
    const int off = sig.block_offset(b);
    const int sz = sig.block_size(b);
    worst = std::max(worst, local.block(off, off, sz, sz).cwiseAbs().maxCoeff());
  }
  return worst;
}

EmbeddedFlag nearest_point(const SymmetricMatrix& a, const Spectrum& spec,
                           const Tolerances& tol) {
  const auto& sig = spec.signature();
  if (a.n() != sig.n())
    throw FlagError(ErrorCode::SignatureMismatch, "matrix size does not match n");

  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
  if (es.info() != Eigen::Success)
    throw FlagError(ErrorCode::DegenerateBoundaryGap, "eigendecomposition failed");
  const int n = sig.n();
  // Eigen sorts ascending; walk from the top.
  const Vector& lambda = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();

  std::vector<int> order(static_cast<std::size_t>(sig.num_blocks()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return spec.value(l) > spec.value(r); });

  Matrix q(n, n);
  int taken = 0;
  for (std::size_t g = 0; g < order.size(); ++g) {
    const int b = order[g];
    const int sz = sig.block_size(b);
    for (int c = 0; c < sz; ++c)
      q.col(sig.block_offset(b) + c) = vecs.col(n - 1 - (taken + c));
    taken += sz;
    if (g + 1 < order.size()) {
      const double gap = lambda(n - taken) - lambda(n - taken - 1);
      if (gap <= tol.spectrum_gap) {
        throw FlagError(ErrorCode::DegenerateBoundaryGap,
                        "eigenvalue tie at block boundary " + std::to_string(taken) +
                            " makes the nearest point non-unique",
                        gap);
      }
    }
  }
  fix_orientation(q);
  return embed(make_flag_point(sig, std::move(q), tol), spec);
}

EmbeddedFlag retract(const EmbeddedFlag& base, const EmbeddedTangent& v, double step,
                     const Tolerances& tol) {
  if (step == 0.0) return base;
  return nearest_point(
      SymmetricMatrix::symmetrized(base.x.matrix() + step * v.v.matrix()),
      base.spectrum, tol);
}

DescentResult gradient_descent(const GradientOracle& grad, const Spectrum& spec,
                               const EmbeddedFlag& init, const DescentOptions& opts,
                               const Tolerances& tol) {
  require_same(init.signature(), spec.signature());
  if (!std::isfinite(opts.step) || !(opts.step > 0.0) || opts.max_iters < 0 || !(opts.grad_tol >= 0.0))
    throw FlagError(ErrorCode::InvalidArgument, "invalid descent options");

  DescentResult result{init, {}, 0, false};
  for (int it = 0;; ++it) {
    const Matrix g = grad(result.point.x.matrix());
    if (g.rows() != spec.signature().n() || g.cols() != spec.signature().n())
      throw FlagError(ErrorCode::InvalidArgument, "gradient oracle returned wrong shape");
    if (!g.allFinite())
      throw FlagError(ErrorCode::StepNotFinite,
                      "gradient oracle returned non-finite entries at iteration " +
                          std::to_string(it));
    const EmbeddedTangent rg =
        project_to_tangent(SymmetricMatrix::symmetrized(g), result.point);
    const double norm = rg.v.matrix().norm();
    result.grad_norms.push_back(norm);
    if (norm <= opts.grad_tol) {
      result.converged = true;
      break;
    }
    if (it == opts.max_iters) break;
    result.point = retract(result.point, rg, -opts.step, tol);
    result.iterations = it + 1;
  }
  return result;
}

}  // namespace flagmodel
