#pragma once

// Exact dimensions of irreducible SO(n, C)-modules. Weights are stored
// doubled so that half-integral entries stay integral; all arithmetic is in
// arbitrary-precision integers and rationals.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagmodel/errors.hpp"

namespace flagmodel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dominant weight (mu_1, ..., mu_m), m = floor(n/2), of SO(n).
class HighestWeight {
 public:
  /// Validates length m, equal parity (InvalidWeight), monotonicity and
  /// dominance (NotDominant). Requires n >= 3.
  static HighestWeight from_doubled(int n, std::vector<int> doubled);
  /// Integral weight from plain entries; missing trailing entries are zero.
  static HighestWeight integral(int n, std::vector<int> entries);
  static HighestWeight zero(int n);

  int n() const noexcept { return n_; }
  int rank() const noexcept { return static_cast<int>(doubled_.size()); }
  const std::vector<int>& doubled() const noexcept { return doubled_; }
  bool is_spin() const noexcept;
  /// Negate mu_m (the conjugate half-spin branch for even n).
  HighestWeight conjugate() const;
  /// Entries printed as integers or "q/2", comma separated.
  std::string to_string() const;

  bool operator==(const HighestWeight&) const = default;
  auto operator<=>(const HighestWeight&) const = default;

 private:
  HighestWeight(int n, std::vector<int> doubled) : n_(n), doubled_(std::move(doubled)) {}
  int n_;
  std::vector<int> doubled_;
};

/// Parses "2,1,1/2"-style weights. Short inputs are padded with zeros.
/// Throws InvalidWeight on syntax or mixed parity, NotDominant otherwise.
HighestWeight parse_weight(int n, std::string_view text);

/// Evaluates the dimension product f_n at an arbitrary nonincreasing doubled
/// vector (not necessarily a weight). The result is an exact rational.
Rational weyl_product(int n, std::span<const int> doubled);

/// Dimension of the irreducible module with highest weight w. Throws
/// std::logic_error if the product is not an integer.
BigInt weyl_dim(const HighestWeight& w);

/// omega_i, 1 <= i <= m. Throws IndexOutOfRange.
HighestWeight fundamental_weight(int n, int i);

/// 2^m for n = 2m+1, 2^(m-1) for n = 2m. Requires n >= 3.
BigInt spin_dimension(int n);

/// Closed form (1 + 2s/(n-2)) * C(n-3+s, s) for the weight (s, 0, ..., 0).
BigInt single_row_dim(int n, int s);

/// (n - 1)(n + 2) / 2, the dimension of traceless symmetric matrices.
BigInt traceless_symmetric_dim(int n);

/// Compares w against w with delta subtracted from each leading nonzero
/// entry mu_1..mu_k. Requires 0 < delta <= mu_k (doubled units), otherwise
/// DeltaOutOfRange. Returns true iff the dimension strictly decreases.
bool shift_decrease_check(const HighestWeight& w, int delta_doubled);

struct EnumerationHit {
  HighestWeight weight;
  BigInt dimension;
  /// Even n with mu_m != 0: the weight with mu_m negated has the same
  /// dimension and is folded into this row.
  bool conjugate_pair = false;
  /// Mu satisfies the hypothesis under which the complex module is the
  /// complexification of a real one of the same dimension.
  bool real_form = false;

  bool operator==(const EnumerationHit&) const = default;
};

struct EnumerationReport {
  int n = 0;
  BigInt max_dim;
  /// Search box mu_1 <= mu1_cap_doubled / 2.
  int mu1_cap_doubled = 0;
  std::size_t weights_examined = 0;
  /// Sorted by dimension, then lexicographically by doubled weight.
  std::vector<EnumerationHit> hits;

  bool operator==(const EnumerationReport&) const = default;
};

/// Exhaustive search of every dominant weight (both parities, both signs of
/// mu_m for even n) with mu_1 <= cap. Requires n >= 3 and cap >= 2.
EnumerationReport enumerate_low_dim(int n, const BigInt& max_dim, int mu1_cap_doubled);

struct ClassificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const ClassificationCheck&) const = default;
};

struct ClassificationReport {
  int n = 0;
  BigInt bound;
  int mu1_cap_doubled = 0;
  std::vector<ClassificationCheck> checks;
  std::vector<EnumerationHit> hits;

  bool passed() const;
  bool operator==(const ClassificationReport&) const = default;
};

/// Mechanical check of the low-dimensional classification for n >= 17:
/// spin modules exceed the bound, the enumeration box contains exactly the
/// trivial, vector, exterior-square and traceless-symmetric weights, every
/// comparison weight outside that list exceeds the bound, and the single-row
/// weights with mu_1 = 3, 4 exceed it. Throws HypothesisViolated for n < 17.
ClassificationReport verify_classification(int n, int mu1_cap_doubled = 8);

}  // namespace flagmodel
