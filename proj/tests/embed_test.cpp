#include <gtest/gtest.h>

#include <algorithm>

#include "flagmodel/embed.hpp"
#include "test_support.hpp"

namespace flagmodel {
namespace {

Matrix rotation2(double th) {
  Matrix r(2, 2);
  r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  return r;
}

TEST(BlockModel, Examples) {
  const auto circle = make_signature(2, {1});
  EXPECT_EQ(block_diagonal_model(make_spectrum(circle, {1, -1})).matrix(),
            Vector((Vector(2) << 1, -1).finished()).asDiagonal().toDenseMatrix());

  const auto gr = make_signature(5, {2});
  const SymmetricMatrix m = block_diagonal_model(make_spectrum(gr, {3, -2}));
  Vector d(5);
  d << 3, 3, -2, -2, -2;
  EXPECT_EQ(m.matrix(), Matrix(d.asDiagonal()));
  EXPECT_EQ(m.trace(), 2 * 3.0 + 3 * -2.0);

  const auto full = make_signature(3, {1, 2});
  Vector e(3);
  e << 2, 1, -3;
  EXPECT_EQ(block_diagonal_model(make_spectrum(full, {2, 1, -3})).matrix(), Matrix(e.asDiagonal()));
}

TEST(Embed, IdentityRepresentativeGivesModel) {
  const auto sig = make_signature(6, {1, 4});
  const Spectrum s = default_traceless_spectrum(sig);
  EXPECT_EQ(embed(identity_flag(sig), s).x.matrix(), block_diagonal_model(s).matrix());
}

TEST(Embed, RotatedLineClosedForm) {
  const auto sig = make_signature(2, {1});
  const Spectrum s = make_spectrum(sig, {1, -1});
  for (double th : {0.0, 0.2, 1.1, 2.5, -0.7}) {
    const Matrix x = embed(make_flag_point(sig, rotation2(th)), s).x.matrix();
    Matrix expected(2, 2);
    expected << std::cos(2 * th), std::sin(2 * th), std::sin(2 * th), -std::cos(2 * th);
    EXPECT_LE((x - expected).norm(), 1e-14) << th;
  }
}

TEST(Embed, SpectrumPreserved) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const auto sig = testing::random_signature(10, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const EmbeddedFlag e = embed(random_flag_point(sig, rng()), s);
    Eigen::SelfAdjointEigenSolver<Matrix> es(e.x.matrix());
    Vector expected = block_diagonal_entries(s);
    std::sort(expected.begin(), expected.end());
    EXPECT_LE((es.eigenvalues() - expected).cwiseAbs().maxCoeff(), 1e-10 * (1 + s.max_gap()));
    EXPECT_TRUE(membership(e.x, s, 1e-8 * (1 + s.max_gap())));
    EXPECT_NEAR(e.x.trace(), s.weighted_trace(), 1e-10 * (1 + s.max_gap()));
  }
}

TEST(Embed, SignatureMismatch) {
  const auto a = make_signature(4, {1});
  const auto b = make_signature(4, {2});
  EXPECT_THROW(embed(identity_flag(a), default_traceless_spectrum(b)), FlagError);
}

TEST(Embed, CosetIndependence) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto sig = testing::random_signature(10, rng);
    const Spectrum s = make_spectrum(sig, [&] {
      std::vector<double> v;
      for (int i = 0; i < sig.num_blocks(); ++i) v.push_back((i % 2 ? -0.75 : 0.75) * (i + 1));
      return v;
    }());
    const FlagPoint f = random_flag_point(sig, rng());
    const FlagPoint g = make_flag_point(sig, f.q() * random_stabilizer_element(sig, rng()));
    EXPECT_LE((embed(f, s).x.matrix() - embed(g, s).x.matrix()).norm(), 1e-12 * sig.n() * 10);
  }
}

TEST(Act, IdentityAndEquivariance) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const auto sig = testing::random_signature(12, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const FlagPoint f = random_flag_point(sig, rng());
    EXPECT_EQ(act(Matrix::Identity(sig.n(), sig.n()), f).q(), f.q());
    const Matrix r = random_special_orthogonal(sig.n(), rng());
    const Matrix lhs = embed(act(r, f), s).x.matrix();
    const Matrix rhs = r * embed(f, s).x.matrix() * r.transpose();
    // Default spectra are integers of size up to about n^2, so the bound is
    // relative to the spectrum scale.
    EXPECT_LE((lhs - rhs).norm(), 1e-13 * sig.n() * s.max_gap());
  }
}

TEST(Act, StabilizerFixesFlag) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto sig = testing::random_signature(9, rng);
    const FlagPoint base = identity_flag(sig);
    const Matrix s = random_stabilizer_element(sig, rng());
    EXPECT_TRUE(flags_equal(act(s, base), base, sig, 1e-9));
  }
}

TEST(Act, RejectsNonRotation) {
  const auto sig = make_signature(3, {1});
  Matrix refl = Matrix::Identity(3, 3);
  refl(2, 2) = -1;
  EXPECT_THROW(act(refl, identity_flag(sig)), FlagError);
}

TEST(Recover, ModelGivesStabilizer) {
  const auto sig = make_signature(5, {2, 3});
  const Spectrum s = default_traceless_spectrum(sig);
  const FlagPoint f = recover(block_diagonal_model(s), s);
  EXPECT_TRUE(flags_equal(f, identity_flag(sig), sig, 1e-9));
  EXPECT_NEAR(f.q().determinant(), 1.0, 1e-12);
  // Q is block diagonal: off-diagonal blocks vanish.
  for (int i = 0; i < sig.num_blocks(); ++i)
    for (int j = 0; j < sig.num_blocks(); ++j)
      if (i != j)
        EXPECT_LE(f.q().block(sig.block_offset(i), sig.block_offset(j), sig.block_size(i),
                              sig.block_size(j)).norm(), 1e-12);
}

TEST(Recover, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const auto sig = testing::random_signature(10, rng);
    const Spectrum s = default_traceless_spectrum(sig);
    const FlagPoint f = random_flag_point(sig, rng());
    const EmbeddedFlag e = embed(f, s);
    const FlagPoint g = recover(e.x, s);
    EXPECT_NEAR(g.q().determinant(), 1.0, 1e-10);
    EXPECT_LE((embed(g, s).x.matrix() - e.x.matrix()).norm(), 1e-8);
    EXPECT_TRUE(flags_equal(f, g, sig, 1e-8));
  }
}

TEST(Recover, BlocksAreEigenbasesInBlockOrder) {
  const auto sig = make_signature(6, {2, 3});
  const Spectrum s = make_spectrum(sig, {-1.0, 4.0, 0.5});  // not sorted on purpose
  const EmbeddedFlag e = embed(random_flag_point(sig, 4), s);
  const FlagPoint g = recover(e.x, s);
  for (int b = 0; b < sig.num_blocks(); ++b) {
    const Matrix v = g.q().middleCols(sig.block_offset(b), sig.block_size(b));
    EXPECT_LE((e.x.matrix() * v - s.value(b) * v).norm(), 1e-10);
  }
}

TEST(Recover, WrongEigenvalues) {
  const auto sig = make_signature(3, {1});
  const Spectrum s = default_traceless_spectrum(sig);
  Matrix m = block_diagonal_model(s).matrix();
  m(0, 0) += 1e-3;
  try {
    recover(SymmetricMatrix::checked(m), s);
    FAIL();
  } catch (const FlagError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpectrumMismatch);
  }
  // Right values, wrong multiplicities.
  Matrix swapped = block_diagonal_model(s).matrix();
  swapped(1, 1) = s.value(0);
  try {
    recover(SymmetricMatrix::checked(swapped), s);
    FAIL();
  } catch (const FlagError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpectrumMismatch);
  }
}

TEST(Recover, GapBelowMatchingResolution) {
  const auto sig = make_signature(2, {1});
  Tolerances tol;
  tol.spectrum_gap = 1e-12;
  const Spectrum s = make_spectrum(sig, {0.0, 1e-8}, tol);
  try {
    recover(block_diagonal_model(s), s, tol);
    FAIL();
  } catch (const FlagError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EigenvalueGapTooSmall);
  }
}

TEST(Membership, Examples) {
  const auto sig = make_signature(4, {1, 3});
  const Spectrum s = make_spectrum(sig, {3.0, 0.5, -2.0});
  const double tol = 1e-8;
  EXPECT_TRUE(membership(embed(random_flag_point(sig, 3), s).x, s, tol));
  EXPECT_FALSE(membership(SymmetricMatrix::zero(4), s, tol));
  Matrix p = block_diagonal_model(s).matrix();
  p(1, 1) += 10 * tol;
  EXPECT_FALSE(membership(SymmetricMatrix::checked(p), s, tol));
  p(1, 1) -= 9.5 * tol;
  EXPECT_TRUE(membership(SymmetricMatrix::checked(p), s, tol));
  EXPECT_FALSE(membership(SymmetricMatrix::zero(3), s, tol));
}

TEST(TracelessSplit, Examples) {
  const auto gr = make_signature(5, {2});
  const SymmetricMatrix traceless = block_diagonal_model(make_spectrum(gr, {3, -2}));
  auto [t0, c0] = traceless_split(traceless);
  EXPECT_EQ(t0.matrix(), traceless.matrix());
  EXPECT_EQ(c0, 0.0);

  auto [t1, c1] = traceless_split(SymmetricMatrix::checked(Matrix::Identity(4, 4)));
  EXPECT_EQ(t1.matrix(), Matrix::Zero(4, 4));
  EXPECT_EQ(c1, 1.0);

  const SymmetricMatrix shifted =
      SymmetricMatrix::checked(traceless.matrix() + Matrix::Identity(5, 5));
  auto [t2, c2] = traceless_split(shifted);
  EXPECT_EQ(c2, shifted.trace() / 5);
  EXPECT_EQ(c2, 1.0);
  EXPECT_EQ(t2.matrix(), traceless.matrix());
}

TEST(TracelessSplit, IdempotentAndRecombines) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const SymmetricMatrix x = testing::gaussian_symmetric(n, rng);
    auto [t1, c1] = traceless_split(x);
    EXPECT_TRUE(t1.is_traceless(1e-12));
    EXPECT_LE((t1.matrix() + c1 * Matrix::Identity(n, n) - x.matrix()).norm(), 1e-14 * n);
    auto [t2, c2] = traceless_split(t1);
    EXPECT_LE((t2.matrix() - t1.matrix()).norm(), 1e-14 * n);
    EXPECT_NEAR(c2, 0.0, 1e-15 * n);
  }
}

}  // namespace
}  // namespace flagmodel
