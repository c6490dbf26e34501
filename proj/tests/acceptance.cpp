// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flagmodel/bounds.hpp"
#include "flagmodel/geometry.hpp"
#include "flagmodel/repdim.hpp"
#include "test_support.hpp"

using namespace flagmodel;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ < 3) {
      if (!first_failures_.empty()) first_failures_ += "; ";
      first_failures_ += what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    if (failures_ == 0) return {true, notes_};
    return {false, std::to_string(failures_) + " failure(s): " + first_failures_ +
                       (notes_.empty() ? "" : " | " + notes_)};
  }

 private:
  int failures_ = 0;
  std::string first_failures_;
  std::string notes_;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string big(const BigInt& v) { return v.str(); }

Outcome closed_form_dimensions() {
  Criterion c;
  for (int n = 5; n <= 50; ++n) {
    const BigInt bn = n;
    c.require(weyl_dim(HighestWeight::integral(n, {1})) == bn, "vector n=" + std::to_string(n));
    c.require(weyl_dim(HighestWeight::integral(n, {1, 1})) == bn * (n - 1) / 2,
              "alt2 n=" + std::to_string(n));
    c.require(weyl_dim(HighestWeight::integral(n, {2})) == (bn - 1) * (n + 2) / 2,
              "sym2 n=" + std::to_string(n));
  }
  c.note("5 <= n <= 50");
  return c.outcome();
}

Outcome spin_dimensions() {
  Criterion c;
  for (int n = 5; n <= 25; ++n) {
    const int m = n / 2;
    const BigInt expected = n % 2 ? BigInt(1) << m : BigInt(1) << (m - 1);
    const BigInt last = weyl_dim(fundamental_weight(n, m));
    c.require(last == expected, "n=" + std::to_string(n) + " got " + big(last));
    c.require(spin_dimension(n) == expected, "spin_dimension n=" + std::to_string(n));
    if (n % 2 == 0) {
      c.require(weyl_dim(fundamental_weight(n, m - 1)) == last,
                "half-spin mismatch n=" + std::to_string(n));
    }
  }
  c.note("5 <= n <= 25");
  return c.outcome();
}

Outcome classification() {
  Criterion c;
  for (int n = 17; n <= 26; ++n) {
    const ClassificationReport r = verify_classification(n, 8);
    for (const auto& check : r.checks)
      c.require(check.passed, "n=" + std::to_string(n) + " " + check.name);
    const std::vector<HighestWeight> expected{
        HighestWeight::zero(n), HighestWeight::integral(n, {1}),
        HighestWeight::integral(n, {1, 1}), HighestWeight::integral(n, {2})};
    std::vector<HighestWeight> got;
    for (const auto& h : r.hits) got.push_back(h.weight);
    c.require(got == expected, "n=" + std::to_string(n) + " hit list");
  }
  c.note("17 <= n <= 26, box mu_1 <= 4");
  return c.outcome();
}

Outcome equivariance() {
  Criterion c;
  std::mt19937_64 rng(20240401);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const FlagSignature sig = testing::random_signature(12, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const FlagPoint f = random_flag_point(sig, rng());
    const Matrix r = random_special_orthogonal(sig.n(), rng());
    const Matrix lhs = embed(act(r, f), s).x.matrix();
    const Matrix rhs = r * embed(f, s).x.matrix() * r.transpose();
    const double err = (lhs - rhs).norm();
    worst = std::max(worst, err);
    c.require(err <= 1e-10, "trial " + std::to_string(t) + " err " + sci(err));
  }
  c.note("1000 trials, worst " + sci(worst));
  return c.outcome();
}

Outcome isometry() {
  Criterion c;
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const FlagSignature sig = testing::random_signature(12, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const TangentBlock b = TangentBlock::random(sig, rng());
    const double defect = isometry_defect(b, s);
    const double allowed = 1e-10 * (1 + b.full().squaredNorm());
    worst = std::max(worst, defect / allowed);
    c.require(defect <= allowed, "isometry trial " + std::to_string(t));
  }
  c.note("1000 blocks, worst defect/allowed " + sci(worst));

  const double h = 1e-5;
  double fd_worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const FlagSignature sig = testing::random_signature(12, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    std::vector<double> unit = s.values();
    for (double& a : unit) a /= s.max_gap();
    const Spectrum su = make_spectrum(sig, unit);
    const FlagPoint f = random_flag_point(sig, rng());
    TangentBlock b = TangentBlock::random(sig, rng());
    b = b.scaled(1.0 / b.full().norm());
    const Matrix v = push_tangent(b, f, su).v.matrix();
    const Matrix plus = f.q() * testing::skew_exp(b.full(), h);
    const Matrix minus = f.q() * testing::skew_exp(b.full(), -h);
    const Matrix fd = (embed(make_flag_point(sig, plus), su).x.matrix() -
                       embed(make_flag_point(sig, minus), su).x.matrix()) / (2 * h);
    const double rel = (fd - v).norm() / v.norm();
    fd_worst = std::max(fd_worst, rel);
    c.require(rel <= 1e-6, "finite difference trial " + std::to_string(t));
  }
  c.note("central differences at h=1e-5, worst relative " + sci(fd_worst));
  return c.outcome();
}

Outcome round_trip() {
  Criterion c;
  std::mt19937_64 rng(4242);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const FlagSignature sig = testing::random_signature(10, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const EmbeddedFlag e = embed(random_flag_point(sig, rng()), s);
    const double err = (embed(recover(e.x, s), s).x.matrix() - e.x.matrix()).norm();
    worst = std::max(worst, err);
    c.require(err <= 1e-8, "trial " + std::to_string(t) + " err " + sci(err));
  }
  c.note("200 flags, worst " + sci(worst));
  return c.outcome();
}

Outcome optimization() {
  Criterion c;
  std::mt19937_64 rng(7);
  int worst_crossing = 0;
  double worst_distance = 0.0;
  for (int seed = 0; seed < 20; ++seed) {
    const FlagSignature sig = testing::random_signature(8, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const Matrix anchor = embed(random_flag_point(sig, rng()), s).x.matrix();
    const Matrix noise = testing::gaussian_symmetric(sig.n(), rng).matrix();
    const SymmetricMatrix a = SymmetricMatrix::symmetrized(anchor + 0.1 * s.min_gap() * noise);
    const Matrix target = a.matrix();
    DescentOptions opts;
    opts.max_iters = 500;
    opts.grad_tol = 1e-9;
    const DescentResult r = gradient_descent(
        [&target](const Matrix& x) -> Matrix { return x - target; }, s,
        embed(random_flag_point(sig, rng()), s), opts);
    const auto crossing = std::find_if(r.grad_norms.begin(), r.grad_norms.end(),
                                       [](double g) { return g <= 1e-6; });
    const bool reached = crossing != r.grad_norms.end();
    const int at = static_cast<int>(crossing - r.grad_norms.begin());
    const double dist = (r.point.x.matrix() - nearest_point(a, s).x.matrix()).norm();
    worst_crossing = std::max(worst_crossing, reached ? at : 501);
    worst_distance = std::max(worst_distance, dist);
    c.require(reached && at <= 500, "seed " + std::to_string(seed) + " gradient tolerance not reached");
    c.require(dist <= 1e-6, "seed " + std::to_string(seed) + " distance " + sci(dist));
  }
  c.note("20 seeds, slowest crossing at iteration " + std::to_string(worst_crossing) +
         ", worst distance " + sci(worst_distance));

  const FlagSignature sig = make_signature(3, {1});
  const Spectrum s = default_traceless_spectrum(sig);
  const SymmetricMatrix a = testing::gaussian_symmetric(3, rng);
  const double best = (nearest_point(a, s).x.matrix() - a.matrix()).norm();
  double sampled = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100000; ++k) {
    const Matrix x = embed(random_flag_point(sig, 500000 + static_cast<std::uint64_t>(k)), s).x.matrix();
    sampled = std::min(sampled, (x - a.matrix()).norm());
  }
  c.require(sampled >= best - 1e-12, "random search beat nearest_point by " + sci(best - sampled));
  c.note("oracle gap " + sci(sampled - best) + " over 1e5 samples");
  return c.outcome();
}

Outcome bound_comparisons() {
  Criterion c;
  long rows = 0;
  for (int n = 2; n <= 12; ++n) {
    for (const auto& sig : all_signatures(n)) {
      ++rows;
      Count sq = 0;
      for (int b : sig.block_sizes()) sq += Count{b} * b;
      const Count m = (Count{n} * n - sq) / 2;
      const Count iso = Count{n - 1} * (n + 2) / 2;
      const Count gunther = std::max(m * (m + 3) / 2 + 5, m * (m + 5) / 2);
      const std::string tag = "n=" + std::to_string(n);
      c.require(flag_dimension(sig) == m, tag + " flag_dimension");
      c.require(isospectral_bound(n) < gunther_bound(m) && iso < gunther, tag + " gunther");
      c.require(gunther_comparison(sig), tag + " gunther_comparison");
      c.require(m >= n - 1, tag + " m >= n-1");
      if (n <= 10) c.require(whitney_comparison(sig) == (iso <= Count{n} * n - sq), tag + " whitney iff");
    }
  }
  c.note(std::to_string(rows) + " signatures");
  return c.outcome();
}

Outcome spot_values() {
  Criterion c;
  const FlagSignature sig = make_signature(5, {2});
  const BoundReport r = bound_table(sig);
  const int n = 5;
  Count sq = 0;
  for (int b : sig.block_sizes()) sq += Count{b} * b;
  const Count m = (Count{n} * n - sq) / 2;
  c.require(r.flag_dim == m, "flag_dim " + std::to_string(r.flag_dim));
  c.require(r.isospectral == Count{n - 1} * (n + 2) / 2, "isospectral");
  c.require(r.gunther == std::max(m * (m + 3) + 10, m * (m + 5)) / 2, "gunther");
  c.require(r.whitney == 2 * m, "whitney");
  c.note("Gr(2,R^5) {" + std::to_string(r.flag_dim) + ", " + std::to_string(r.isospectral) + ", " +
         std::to_string(r.gunther) + ", " + std::to_string(r.whitney) + "}");

  const int k = 17;
  const BigInt bound = BigInt(k - 1) * (k + 2) / 2;
  const EnumerationReport e = enumerate_low_dim(k, bound, 8);
  std::vector<BigInt> dims;
  for (const auto& h : e.hits) dims.push_back(h.dimension);
  const std::vector<BigInt> expected{1, k, BigInt(k) * (k - 1) / 2, bound};
  c.require(dims == expected, "n=17 hit dimensions");
  std::string shown;
  for (const auto& d : dims) shown += (shown.empty() ? "" : ", ") + big(d);
  c.note("n=17 hits {" + shown + "}");
  return c.outcome();
}

struct Entry {
  int id;
  const char* title;
  double budget_seconds;  // zero when the criterion states no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Entry> entries{
      {1, "closed-form dimension identities", 1.0, closed_form_dimensions},
      {2, "spin dimensions", 1.0, spin_dimensions},
      {3, "low-dimension classification", 60.0, classification},
      {4, "equivariance", 10.0, equivariance},
      {5, "isometry identity and pushforward", 0.0, isometry},
      {6, "embed/recover round trip", 0.0, round_trip},
      {7, "nearest point and gradient descent", 0.0, optimization},
      {8, "bound comparisons", 30.0, bound_comparisons},
      {9, "spot values", 0.0, spot_values},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.budget_seconds > 0 && secs > e.budget_seconds) {
      o.passed = false;
      o.detail += " | over time budget " + std::to_string(e.budget_seconds) + " s";
    }
    failed += o.passed ? 0 : 1;
    std::printf("criterion %d %s: %s (%s) [%.3f s]\n", e.id, o.passed ? "PASS" : "FAIL", e.title,
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
