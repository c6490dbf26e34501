#include "flagmodel/repdim.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace flagmodel {

namespace {

int rank_of(int n) { return n / 2; }

void require_rank_defined(int n) {
  if (n < 3)
    throw FlagError(ErrorCode::InvalidArgument,
                    "SO(n) weights are handled for n >= 3, got n = " + std::to_string(n));
}

bool is_even(int v) { return v % 2 == 0; }

std::string format_doubled(int d) {
  if (is_even(d)) return std::to_string(d / 2);
  return std::to_string(d) + "/2";
}

}  // namespace

HighestWeight HighestWeight::from_doubled(int n, std::vector<int> doubled) {
  require_rank_defined(n);
  const int m = rank_of(n);
  if (static_cast<int>(doubled.size()) != m) {
    throw FlagError(ErrorCode::InvalidWeight,
                    "weight for n = " + std::to_string(n) + " needs " + std::to_string(m) +
                        " entries, got " + std::to_string(doubled.size()));
  }
  const bool parity = is_even(doubled.front());
  for (int d : doubled) {
    if (is_even(d) != parity)
      throw FlagError(ErrorCode::InvalidWeight,
                      "weight mixes integer and half-integer entries");
  }
  for (int i = 0; i + 1 < m; ++i) {
    // For even n the last entry may be negative; only |mu_m| is bounded.
    const bool last_even = (n % 2 == 0) && (i + 1 == m - 1);
    const int next = last_even ? std::abs(doubled[static_cast<std::size_t>(i + 1)])
                               : doubled[static_cast<std::size_t>(i + 1)];
    if (doubled[static_cast<std::size_t>(i)] < next)
      throw FlagError(ErrorCode::NotDominant, "weight entries must be nonincreasing");
  }
  if (n % 2 == 1 && doubled.back() < 0)
    throw FlagError(ErrorCode::NotDominant, "mu_m must be nonnegative for odd n");
  return HighestWeight(n, std::move(doubled));
}

HighestWeight HighestWeight::integral(int n, std::vector<int> entries) {
  require_rank_defined(n);
  if (static_cast<int>(entries.size()) > rank_of(n))
    throw FlagError(ErrorCode::InvalidWeight, "too many weight entries");
  entries.resize(static_cast<std::size_t>(rank_of(n)), 0);
  for (int& e : entries) e *= 2;
  return from_doubled(n, std::move(entries));
}

HighestWeight HighestWeight::zero(int n) { return integral(n, {}); }

bool HighestWeight::is_spin() const noexcept { return !is_even(doubled_.front()); }

HighestWeight HighestWeight::conjugate() const {
  auto d = doubled_;
  d.back() = -d.back();
  return from_doubled(n_, std::move(d));
}

std::string HighestWeight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ',';
    out += format_doubled(doubled_[i]);
  }
  return out;
}

HighestWeight parse_weight(int n, std::string_view text) {
  require_rank_defined(n);
  std::vector<int> doubled;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw FlagError(ErrorCode::InvalidWeight, "empty weight entry");

    const std::size_t slash = tok.find('/');
    const std::string_view num = tok.substr(0, slash);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw FlagError(ErrorCode::InvalidWeight,
                      "cannot parse weight entry '" + std::string(tok) + "'");
    }
    if (slash == std::string_view::npos) {
      doubled.push_back(2 * value);
    } else {
      if (tok.substr(slash + 1) != "2")
        throw FlagError(ErrorCode::InvalidWeight,
                        "fractional entries must have denominator 2: '" + std::string(tok) + "'");
      doubled.push_back(value);
    }
    pos = comma + 1;
  }
  if (static_cast<int>(doubled.size()) > rank_of(n))
    throw FlagError(ErrorCode::InvalidWeight, "too many weight entries");
  const bool parity = is_even(doubled.front());
  for (int d : doubled)
    if (is_even(d) != parity)
      throw FlagError(ErrorCode::InvalidWeight, "weight mixes integer and half-integer entries");
  doubled.resize(static_cast<std::size_t>(rank_of(n)), 0);
  return HighestWeight::from_doubled(n, std::move(doubled));
}

Rational weyl_product(int n, std::span<const int> doubled) {
  require_rank_defined(n);
  const int m = rank_of(n);
  if (static_cast<int>(doubled.size()) != m)
    throw FlagError(ErrorCode::InvalidWeight, "vector length must be floor(n/2)");
  const bool odd = n % 2 == 1;
  BigInt num = 1;
  BigInt den = 1;
  // 1-based i, j as in the product formula; D_i = 2 mu_i.
  auto d = [&](int i) { return BigInt(doubled[static_cast<std::size_t>(i - 1)]); };
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      if (j > i) {
        num *= d(i) - d(j) + 2 * (j - i);
        den *= 2 * (j - i);
      }
      if (j > i || odd) {
        num *= d(i) + d(j) + 2 * (n - i - j);
        den *= 2 * (n - i - j);
      }
    }
  }
  return Rational(num, den);
}

BigInt weyl_dim(const HighestWeight& w) {
  const Rational r = weyl_product(w.n(), w.doubled());
  if (boost::multiprecision::denominator(r) != 1) {
    throw std::logic_error("dimension product is not an integer for weight " + w.to_string());
  }
  return boost::multiprecision::numerator(r);
}

HighestWeight fundamental_weight(int n, int i) {
  require_rank_defined(n);
  const int m = rank_of(n);
  if (i < 1 || i > m) {
    throw FlagError(ErrorCode::IndexOutOfRange,
                    "fundamental weight index " + std::to_string(i) + " outside 1.." +
                        std::to_string(m));
  }
  std::vector<int> d(static_cast<std::size_t>(m), 0);
  const bool odd = n % 2 == 1;
  const bool spin = odd ? i == m : i >= m - 1;
  if (!spin) {
    std::fill_n(d.begin(), i, 2);
  } else {
    std::fill(d.begin(), d.end(), 1);
    if (!odd && i == m - 1) d.back() = -1;
  }
  return HighestWeight::from_doubled(n, std::move(d));
}

BigInt spin_dimension(int n) {
  require_rank_defined(n);
  const int m = rank_of(n);
  const int exponent = n % 2 == 1 ? m : m - 1;
  return BigInt(1) << exponent;
}

namespace {

BigInt binomial(int top, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= top - k + i;
    r /= i;  // exact: r is C(top - k + i, i) after this step
  }
  return r;
}

}  // namespace

BigInt single_row_dim(int n, int s) {
  require_rank_defined(n);
  if (s < 0) throw FlagError(ErrorCode::InvalidArgument, "single-row length must be >= 0");
  const BigInt num = BigInt(n - 2 + 2 * s) * binomial(n - 3 + s, s);
  if (num % (n - 2) != 0) throw std::logic_error("single-row closed form is not integral");
  return num / (n - 2);
}

BigInt traceless_symmetric_dim(int n) {
  return BigInt(n - 1) * (n + 2) / 2;
}

bool shift_decrease_check(const HighestWeight& w, int delta_doubled) {
  const auto& d = w.doubled();
  int k = static_cast<int>(d.size());
  while (k > 0 && d[static_cast<std::size_t>(k - 1)] == 0) --k;
  if (k == 0)
    throw FlagError(ErrorCode::DeltaOutOfRange, "weight has no nonzero entry to shift");
  const int last = d[static_cast<std::size_t>(k - 1)];
  if (delta_doubled <= 0 || delta_doubled > last) {
    throw FlagError(ErrorCode::DeltaOutOfRange,
                    "delta must satisfy 0 < delta <= mu_k = " + format_doubled(last));
  }
  std::vector<int> shifted = d;
  for (int i = 0; i < k; ++i) shifted[static_cast<std::size_t>(i)] -= delta_doubled;
  return weyl_product(w.n(), shifted) < weyl_product(w.n(), d);
}

namespace {

bool has_real_form(const HighestWeight& w) {
  const auto& d = w.doubled();
  if (w.n() % 2 == 1) return d.back() == 0;
  return d.back() == 0 && (d.size() < 2 || d[d.size() - 2] == 0);
}

}  // namespace

EnumerationReport enumerate_low_dim(int n, const BigInt& max_dim, int mu1_cap_doubled) {
  if (n < 3) throw FlagError(ErrorCode::InvalidArgument, "enumeration requires n >= 3");
  if (mu1_cap_doubled < 4)
    throw FlagError(ErrorCode::InvalidArgument, "mu1 cap must be at least 2");
  const int m = rank_of(n);
  const bool odd = n % 2 == 1;

  EnumerationReport report;
  report.n = n;
  report.max_dim = max_dim;
  report.mu1_cap_doubled = mu1_cap_doubled;

  std::vector<int> cur(static_cast<std::size_t>(m));
  std::function<void(int, int, int)> dfs = [&](int pos, int upper, int parity) {
    if (pos == m) {
      ++report.weights_examined;
      const HighestWeight w = HighestWeight::from_doubled(n, cur);
      const bool folded = !odd && cur.back() < 0;
      if (folded) {
        // Recorded through its positive partner; the two must agree.
        if (weyl_dim(w) != weyl_dim(w.conjugate()))
          throw std::logic_error("conjugate half-spin weights differ in dimension");
        return;
      }
      BigInt dim = weyl_dim(w);
      if (dim <= max_dim) {
        report.hits.push_back(EnumerationHit{w, std::move(dim), !odd && cur.back() > 0,
                                             has_real_form(w)});
      }
      return;
    }
    const bool last = pos == m - 1;
    const int lower = (last && !odd) ? -upper : parity;
    for (int v = upper; v >= lower; v -= 2) {
      cur[static_cast<std::size_t>(pos)] = v;
      dfs(pos + 1, v, parity);
    }
  };

  for (int parity = 0; parity <= 1; ++parity) {
    const int top = (mu1_cap_doubled % 2 == parity) ? mu1_cap_doubled : mu1_cap_doubled - 1;
    dfs(0, top, parity);
  }

  std::sort(report.hits.begin(), report.hits.end(),
            [](const EnumerationHit& a, const EnumerationHit& b) {
              if (a.dimension != b.dimension) return a.dimension < b.dimension;
              return a.weight.doubled() < b.weight.doubled();
            });
  return report;
}

bool ClassificationReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const ClassificationCheck& c) { return c.passed; });
}

namespace {

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

ClassificationReport verify_classification(int n, int mu1_cap_doubled) {
  if (n < 17) {
    throw FlagError(ErrorCode::HypothesisViolated,
                    "classification is asserted only for n >= 17, got n = " +
                        std::to_string(n));
  }
  const int m = rank_of(n);
  ClassificationReport report;
  report.n = n;
  report.bound = traceless_symmetric_dim(n);
  report.mu1_cap_doubled = mu1_cap_doubled;
  const BigInt& bound = report.bound;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // (i) spin modules are too large.
  {
    const BigInt spin = spin_dimension(n);
    bool ok = spin > bound;
    std::string detail = "spin " + str(spin) + " vs bound " + str(bound);
    const int first = n % 2 == 1 ? m : m - 1;
    for (int i = first; i <= m; ++i) {
      const BigInt d = weyl_dim(fundamental_weight(n, i));
      ok = ok && d == spin;
      detail += "; dim U_omega" + std::to_string(i) + " = " + str(d);
    }
    add("spin_exceeds_bound", ok, detail);
  }

  // (ii) the enumeration box holds exactly four weights.
  const EnumerationReport enumeration = enumerate_low_dim(n, bound, mu1_cap_doubled);
  report.hits = enumeration.hits;
  {
    const std::vector<HighestWeight> expected = {
        HighestWeight::zero(n), HighestWeight::integral(n, {1}),
        HighestWeight::integral(n, {1, 1}), HighestWeight::integral(n, {2})};
    bool ok = enumeration.hits.size() == expected.size();
    std::string detail = std::to_string(enumeration.hits.size()) + " hits:";
    for (const auto& h : enumeration.hits) {
      ok = ok && std::find(expected.begin(), expected.end(), h.weight) != expected.end();
      detail += " (" + h.weight.to_string() + ")->" + str(h.dimension);
    }
    add("enumeration_exactly_four", ok, detail);

    const BigInt nn = n;
    const std::vector<BigInt> closed = {1, nn, nn * (n - 1) / 2, bound};
    bool dims_ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i)
      dims_ok = dims_ok && weyl_dim(expected[i]) == closed[i];
    add("closed_form_dimensions", dims_ok, "1, n, n(n-1)/2, (n-1)(n+2)/2");

    int at_bound = 0;
    bool only_sym = true;
    bool real = true;
    for (const auto& h : enumeration.hits) {
      real = real && h.real_form;
      if (h.dimension == bound) {
        ++at_bound;
        only_sym = only_sym && h.weight == HighestWeight::integral(n, {2});
      }
    }
    add("bound_attained_only_by_2", at_bound == 1 && only_sym,
        std::to_string(at_bound) + " weight(s) at the bound");
    add("hits_have_real_forms", real, "all hits satisfy the real-form hypothesis");
  }

  // (iii) comparison weights from the case analysis exceed the bound.
  auto exceeds = [&](const std::vector<int>& entries) {
    const HighestWeight w = HighestWeight::integral(n, entries);
    const BigInt d = weyl_dim(w);
    add("exceeds_bound(" + w.to_string() + ")", d > bound, str(d) + " > " + str(bound));
  };
  exceeds({2, 1});
  exceeds({2, 1, 1});
  for (int q = 4; q <= m; ++q) {
    std::vector<int> e(static_cast<std::size_t>(q), 1);
    e[0] = 2;
    exceeds(e);
  }
  for (int q = 3; q <= m; ++q) exceeds(std::vector<int>(static_cast<std::size_t>(q), 1));

  // (iv) single-row weights beyond (2, 0, ...).
  for (int s = 3; s <= 4; ++s) {
    const BigInt closed = single_row_dim(n, s);
    const BigInt direct = weyl_dim(HighestWeight::integral(n, {s}));
    add("single_row_exceeds_bound(" + std::to_string(s) + ")",
        closed == direct && closed > bound,
        "closed form " + str(closed) + ", product " + str(direct));
  }
  return report;
}

}  // namespace flagmodel
