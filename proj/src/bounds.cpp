#include "flagmodel/bounds.hpp"

#include <algorithm>
#include <limits>

namespace flagmodel {

namespace {

// Keeps m(m+5) well inside int64.
constexpr Count kMaxManifoldDim = Count{1} << 30;

void require_positive(Count v, const char* what) {
  if (v < 1) throw FlagError(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

}  // namespace

Count flag_dimension(const FlagSignature& sig) {
  const Count n = sig.n();
  Count squares = 0;
  for (int b : sig.block_sizes()) squares += Count{b} * b;
  return (n * n - squares) / 2;
}

Count gunther_bound(Count m) {
  require_positive(m, "manifold dimension");
  if (m > kMaxManifoldDim) throw FlagError(ErrorCode::InvalidArgument, "manifold dimension too large");
  return std::max(m * (m + 3) / 2 + 5, m * (m + 5) / 2);
}

Count isospectral_bound(Count n) {
  if (n < 2) throw FlagError(ErrorCode::AmbientTooSmall, "n must be >= 2");
  return (n - 1) * (n + 2) / 2;
}

Count whitney_bound(Count m) {
  require_positive(m, "manifold dimension");
  return 2 * m;
}

bool whitney_comparison(const FlagSignature& sig) {
  const auto& blocks = sig.block_sizes();
  Count lhs = 0;
  Count cross = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    lhs += Count{blocks[i]} * (blocks[i] + 1);
    for (std::size_t j = i + 1; j < blocks.size(); ++j) cross += Count{blocks[i]} * blocks[j];
  }
  return lhs <= 2 * (1 + cross);
}

bool gunther_comparison(const FlagSignature& sig) {
  return isospectral_bound(sig.n()) < gunther_bound(flag_dimension(sig));
}

Count wang_bound(Count d, Count group_order) {
  require_positive(d, "embedding dimension");
  require_positive(group_order, "group order");
  return d * group_order;
}

Count wang_whitney_bound(Count m, Count group_order) {
  return wang_bound(whitney_bound(m), group_order);
}

StiefelDimension stiefel_min_dim(int k, int n) {
  if (k < 1 || k >= n)
    throw FlagError(ErrorCode::InvalidArgument, "Stiefel manifold needs 1 <= k < n");
  return {Count{k} * n, n >= 17 && 2 * k < n - 1};
}

bool stiefel_check(const Matrix& y, double tol) {
  const auto k = y.cols();
  return (y.transpose() * y - Matrix::Identity(k, k)).norm() <= tol;
}

bool BoundReport::comparison(const std::string& name) const {
  const auto it = std::find_if(comparisons.begin(), comparisons.end(),
                               [&](const NamedComparison& c) { return c.name == name; });
  if (it == comparisons.end())
    throw FlagError(ErrorCode::InvalidArgument, "no comparison named " + name);
  return it->holds;
}

BoundReport bound_table(const FlagSignature& sig, std::optional<Count> group_order) {
  BoundReport r;
  r.n = sig.n();
  r.ks = sig.ks();
  r.flag_dim = flag_dimension(sig);
  r.isospectral = isospectral_bound(sig.n());
  r.gunther = gunther_bound(r.flag_dim);
  r.whitney = whitney_bound(r.flag_dim);
  r.isospectral_status = sig.n() >= 17 ? "minimum" : "achieved upper bound";
  r.comparisons.push_back({"isospectral_lt_gunther", r.isospectral < r.gunther});
  r.comparisons.push_back({"isospectral_le_whitney", whitney_comparison(sig)});
  if (group_order) {
    r.group_order = group_order;
    r.wang = wang_whitney_bound(r.flag_dim, *group_order);
    r.comparisons.push_back({"wang_whitney_gt_isospectral", *r.wang > r.isospectral});
  }
  return r;
}

std::vector<FlagSignature> all_signatures(int n) {
  if (n < 2) throw FlagError(ErrorCode::AmbientTooSmall, "n must be >= 2");
  if (n > 30) throw FlagError(ErrorCode::InvalidArgument, "exhaustive sweep limited to n <= 30");
  std::vector<FlagSignature> out;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  out.reserve(limit - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<int> ks;
    for (int k = 1; k < n; ++k)
      if (mask & (std::uint32_t{1} << (k - 1))) ks.push_back(k);
    out.push_back(make_signature(n, std::move(ks)));
  }
  return out;
}

}  // namespace flagmodel
