#include <gtest/gtest.h>

#include <random>

#include "hopfpar/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hopfpar;

namespace {

Mat shift3() { return Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }

}  // namespace

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(parse_scalar("1/2"), Scalar(1, 2));
  EXPECT_EQ(parse_scalar("-3"), Scalar(-3));
  EXPECT_EQ(parse_scalar("4/8"), Scalar(1, 2));
  EXPECT_EQ(to_string(parse_scalar("-4/8")), "-1/2");
  EXPECT_EQ(to_string(Scalar(6) / 3), "2");
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("x"), ParseError);
  EXPECT_THROW(parse_scalar("1.5"), ParseError);
  EXPECT_THROW(parse_scalar(""), ParseError);
}

TEST(KernelBasis, Identity) { EXPECT_EQ(kernel_basis(Mat::identity(3)).dim(), 0u); }

TEST(KernelBasis, ZeroMap) {
  const Subspace k = kernel_basis(Mat(2, 3));
  EXPECT_EQ(k.dim(), 3u);
  EXPECT_TRUE(k.is_full());
}

TEST(KernelBasis, RankOne) {
  const Subspace k = kernel_basis(Mat{{1, 1}, {2, 2}});
  EXPECT_EQ(k, Subspace::span({{1, -1}}, 2));
  EXPECT_EQ(k.basis(), (Mat{{1, -1}}));
}

TEST(SpanClosure, IdentityFixesSeed) {
  const Subspace seed = Subspace::span({{1, 0, 0}}, 3);
  EXPECT_EQ(span_closure(seed, {Mat::identity(3)}), seed);
}

TEST(SpanClosure, CyclicShiftFillsSpace) {
  EXPECT_TRUE(span_closure(Subspace::span({{1, 0, 0}}, 3), {shift3()}).is_full());
}

TEST(SpanClosure, DimensionMismatch) {
  EXPECT_THROW(span_closure(Subspace::zero(3), {Mat::identity(2)}), DimensionError);
}

TEST(QuotientMap, Trivial) {
  EXPECT_EQ(quotient_map(3, Subspace::zero(3)).map, Mat::identity(3));
  const QuotientMap q = quotient_map(3, Subspace::full(3));
  EXPECT_EQ(q.dim, 0u);
  EXPECT_EQ(q.map.rows(), 0u);
  EXPECT_EQ(q.map.cols(), 3u);
}

TEST(QuotientMap, KillsLine) {
  const QuotientMap q = quotient_map(3, Subspace::span({{1, 1, 0}}, 3));
  EXPECT_TRUE(is_zero(q.map * Vec{1, 1, 0}));
  EXPECT_EQ(oracle::rank_by_minors(q.map), 2u);
  EXPECT_EQ(q.map * q.section, Mat::identity(2));
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(Mat::identity(2), Mat::identity(3)), Mat::identity(6));
  EXPECT_TRUE(kron(shift3(), Mat(2, 2)).is_zero());
  EXPECT_EQ(kron(Mat{{0, 1}, {0, 0}}, Mat{{2}}), (Mat{{0, 2}, {0, 0}}));
}

TEST(Kron, MixedProduct) {
  const Mat a{{1, 2}, {0, 1}}, b{{0, 1}, {1, 0}}, c{{3, 0}, {1, 1}}, d{{1, 1}, {0, 2}};
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  // (a (x) b)(v (x) w) = av (x) bw
  const Vec v{1, 5}, w{2, -1};
  EXPECT_EQ(kron(a, b) * kron(v, w), kron(a * v, b * w));
}

TEST(Solve, InverseAndInconsistent) {
  const Mat a{{2, 1}, {1, 1}};
  EXPECT_EQ(*inverse(a) * a, Mat::identity(2));
  EXPECT_FALSE(inverse(Mat{{1, 1}, {1, 1}}).has_value());
  EXPECT_FALSE(solve(Mat{{1, 1}, {1, 1}}, Mat{{1}, {2}}).has_value());
}

TEST(Intersection, Planes) {
  const Subspace a = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  const Subspace b = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(intersection(a, b), Subspace::span({{0, 1, 0}}, 3));
  EXPECT_TRUE((a + b).is_full());
}

TEST(Intertwiners, Commutant) {
  // commutant of a nilpotent Jordan block is spanned by I and N
  const Mat n{{0, 0}, {1, 0}};
  const auto basis = intertwiners({n}, {n}, 2, 2);
  EXPECT_EQ(basis.size(), 2u);
  for (const auto& f : basis) EXPECT_EQ(f * n, n * f);
}

class LinalgProperties : public ::testing::Test {
 protected:
  testgen::Rng rng = testgen::make_rng("linalg");
};

TEST_F(LinalgProperties, RankNullity) {
  for (int trial = 0; trial < 40; ++trial) {
    const Mat a = testgen::random_matrix(rng, 1 + trial % 4, 1 + trial % 5, 2, trial % 3 == 0);
    const std::size_t r = rank(a);
    EXPECT_EQ(r, oracle::rank_by_minors(a));
    const Subspace k = kernel_basis(a);
    EXPECT_EQ(r + k.dim(), a.cols());
    EXPECT_TRUE((a * k.inclusion()).is_zero());
  }
}

TEST_F(LinalgProperties, ClosureIsIdempotentAndInvariant) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<Mat> ops = {testgen::random_matrix(rng, n, n, 1, true), testgen::random_matrix(rng, n, n, 1, true)};
    const Subspace seed = Subspace::span({testgen::random_vector(rng, n, 2)}, n);
    const Subspace once = span_closure(seed, ops);
    const Subspace twice = span_closure(once, ops);
    EXPECT_EQ(once.basis(), twice.basis());
    EXPECT_TRUE(once.contains(seed));
    for (const auto& op : ops) EXPECT_TRUE(once.is_invariant(op));
  }
}

TEST_F(LinalgProperties, QuotientKillsExactlyW) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Subspace w = column_space(testgen::random_matrix(rng, n, trial % 3, 2, false));
    const QuotientMap q = quotient_map(n, w);
    EXPECT_TRUE((q.map * w.inclusion()).is_zero());
    EXPECT_EQ(rank(q.map), n - w.dim());
    EXPECT_EQ(kernel_basis(q.map), w);
    EXPECT_EQ(q.map * q.section, Mat::identity(q.dim));
  }
}

TEST_F(LinalgProperties, KronAssociativeAndProductMatchesOracle) {
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = testgen::random_matrix(rng, 2, 1 + trial % 2, 2, false);
    const Mat b = testgen::random_matrix(rng, a.cols(), 1 + trial % 3, 2, false);
    const Mat c = testgen::random_matrix(rng, 2, 2, 2, false);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    EXPECT_EQ(a * b, oracle::multiply(a, b));
  }
}

TEST_F(LinalgProperties, Deterministic) {
  const Mat a = testgen::random_matrix(rng, 4, 5, 3, false);
  EXPECT_EQ(rref(a).reduced, rref(a).reduced);
  EXPECT_EQ(kernel_basis(a).basis(), kernel_basis(a).basis());
}
