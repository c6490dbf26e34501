#pragma once

// Ambient-dimension bounds for embedding flag manifolds. Everything here is
// exact integer arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagmodel/flagcore.hpp"

namespace flagmodel {

using Count = std::int64_t;

/// m = (n^2 - sum n_i^2) / 2.
Count flag_dimension(const FlagSignature& sig);

/// max{ m(m+3)/2 + 5, m(m+5)/2 }.
Count gunther_bound(Count m);

/// (n - 1)(n + 2) / 2.
Count isospectral_bound(Count n);

/// 2m.
Count whitney_bound(Count m);

/// Closed-form test sum n_i(n_i + 1) <= 2 [1 + sum_{i<j} n_i n_j], which is
/// equivalent to isospectral_bound(n) <= n^2 - sum n_i^2.
bool whitney_comparison(const FlagSignature& sig);

/// isospectral_bound(n) < gunther_bound(flag_dimension(sig)).
bool gunther_comparison(const FlagSignature& sig);

/// d |G| for a finite group of order |G|.
Count wang_bound(Count d, Count group_order);
/// 2m |G|: Wang's construction applied to the Whitney embedding.
Count wang_whitney_bound(Count m, Count group_order);

struct StiefelDimension {
  Count dimension = 0;
  /// n >= 17 and k < (n - 1)/2, where n k is known to be minimal.
  bool minimality_applies = false;
};

StiefelDimension stiefel_min_dim(int k, int n);

/// ||Y^T Y - I||_F <= tol.
bool stiefel_check(const Matrix& y, double tol);

struct NamedComparison {
  std::string name;
  bool holds = false;

  bool operator==(const NamedComparison&) const = default;
};

struct BoundReport {
  int n = 0;
  std::vector<int> ks;
  Count flag_dim = 0;
  Count isospectral = 0;
  Count gunther = 0;
  Count whitney = 0;
  std::optional<Count> group_order;
  /// 2m |G| when a group order is given.
  std::optional<Count> wang;
  /// "minimum" for n >= 17, "achieved upper bound" below that.
  std::string isospectral_status;
  std::vector<NamedComparison> comparisons;

  bool comparison(const std::string& name) const;
  bool operator==(const BoundReport&) const = default;
};

BoundReport bound_table(const FlagSignature& sig,
                        std::optional<Count> group_order = std::nullopt);

/// Every signature of R^n: all nonempty subsets {k_1 < ... < k_p} of
/// {1, ..., n-1}, 2^(n-1) - 1 of them, in increasing bitmask order.
std::vector<FlagSignature> all_signatures(int n);

}  // namespace flagmodel
