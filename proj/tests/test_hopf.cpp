#include <gtest/gtest.h>

#include "hopfpar/hopf.hpp"

using namespace hopfpar;

TEST(GroupAlgebra, C2) {
  const auto h = group_algebra(cyclic_table(2));
  EXPECT_EQ(h.dim, 2u);
  EXPECT_EQ(h.antipode, Mat::identity(2));
  EXPECT_TRUE(validate_hopf(h).ok());
}

TEST(GroupAlgebra, C3AntipodeSwaps) {
  const auto h = group_algebra(cyclic_table(3));
  EXPECT_EQ(h.antipode, (Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_TRUE(validate_hopf(h).ok());
}

TEST(GroupAlgebra, S3) {
  const auto h = group_algebra(s3_table());
  EXPECT_EQ(h.dim, 6u);
  EXPECT_TRUE(validate_hopf(h).ok());
}

TEST(GroupAlgebra, RejectsNonGroups) {
  EXPECT_THROW(group_algebra({{0, 1}, {1, 1}}), InvalidInput);
  EXPECT_THROW(group_algebra({{1, 0}, {0, 1}}), InvalidInput);
  EXPECT_THROW(group_algebra({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), InvalidInput);
  EXPECT_THROW(group_algebra({}), InvalidInput);
}

TEST(DualGroupAlgebra, C2) {
  const auto h = dual_group_algebra(cyclic_table(2));
  EXPECT_EQ(h.dim, 2u);
  EXPECT_EQ(h.m(0, 0, 0), 1);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(h.m(0, 1, k), 0);
  // Delta(p0) = p0 (x) p0 + p1 (x) p1
  EXPECT_EQ(h.c(0, 0, 0), 1);
  EXPECT_EQ(h.c(0, 1, 1), 1);
  EXPECT_EQ(h.c(0, 0, 1), 0);
  EXPECT_EQ(h.c(0, 1, 0), 0);
  EXPECT_TRUE(validate_hopf(h).ok());
}

TEST(DualGroupAlgebra, TrivialAndC3) {
  const auto t = dual_group_algebra({{0}});
  EXPECT_EQ(t.dim, 1u);
  EXPECT_TRUE(validate_hopf(t).ok());
  EXPECT_TRUE(validate_hopf(dual_group_algebra(cyclic_table(3))).ok());
  EXPECT_TRUE(validate_hopf(dual_group_algebra(s3_table())).ok());
}

TEST(Sweedler, Products) {
  const auto h = sweedler_h4();
  EXPECT_EQ(h.m(1, 2, 3), 1);   // gx = y
  EXPECT_EQ(h.m(2, 1, 3), -1);  // xg = -y
  EXPECT_EQ(h.m(1, 1, 0), 1);   // g^2 = 1
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(h.m(2, 2, k), 0);
  EXPECT_TRUE(validate_hopf(h).ok());
}

TEST(Sweedler, AntipodeOrderFour) {
  const auto h = sweedler_h4();
  const Mat s2 = h.antipode * h.antipode;
  EXPECT_EQ(s2.column(2), (Vec{0, 0, -1, 0}));
  EXPECT_NE(s2, Mat::identity(4));
  EXPECT_EQ(s2 * s2, Mat::identity(4));
  EXPECT_EQ(h.antipode * h.antipode_inv, Mat::identity(4));
}

TEST(Sweedler, BrokenAntipodeWitnessesX) {
  auto h = sweedler_h4();
  h.antipode(3, 2) = 1;  // S(x) = +y
  h.antipode_inv = Mat();
  const auto report = validate_hopf(h);
  EXPECT_FALSE(report.passed("antipode"));
  EXPECT_EQ(report.at("antipode").witness, std::vector<std::size_t>{2});
  EXPECT_TRUE(report.passed("associativity"));
  EXPECT_THROW(HopfAlgebra::create(h), InvalidInput);
}

TEST(Validate, ShapeErrors) {
  auto h = sweedler_h4();
  h.mult.pop_back();
  EXPECT_THROW(validate_hopf(h), DimensionError);
}

TEST(Validate, DetectsNonCoassociative) {
  auto h = group_algebra(cyclic_table(2));
  h.c(1, 1, 1) = 0;
  h.c(1, 0, 1) = 1;
  EXPECT_FALSE(validate_hopf(h).ok());
}

TEST(Cop, Properties) {
  for (const auto& t : {cyclic_table(2), cyclic_table(3), s3_table()}) {
    const auto g = group_algebra(t);
    EXPECT_EQ(cop(g), g);
  }
  const auto h = sweedler_h4();
  EXPECT_EQ(cop(cop(h)), h);
  const auto c = cop(h);
  EXPECT_TRUE(validate_hopf(c).ok());
  EXPECT_NE(c.comult, h.comult);
  EXPECT_EQ(c.c(2, 2, 1), 1);  // Delta_cop(x) = x (x) g + 1 (x) x
  EXPECT_EQ(c.c(2, 0, 2), 1);
}

TEST(Constructors, AllBuiltinsValidate) {
  for (const auto& name : builtin_names()) {
    const auto h = builtin(name);
    EXPECT_TRUE(validate_hopf(h->data()).ok()) << name;
    EXPECT_EQ(h->unit()[0], 1) << name;
  }
  EXPECT_THROW(builtin("nope"), InvalidInput);
}

TEST(Isomorphism, DualC2IsGroupAlgebra) {
  const auto dual = dual_group_algebra(cyclic_table(2));
  const auto group = group_algebra(cyclic_table(2));
  // p0 -> (u0 + u1)/2, p1 -> (u0 - u1)/2
  const Mat f{{Scalar(1, 2), Scalar(1, 2)}, {Scalar(1, 2), Scalar(-1, 2)}};
  EXPECT_TRUE(is_hopf_morphism(f, dual, group));
  // and its inverse u0 -> p0 + p1, u1 -> p0 - p1
  EXPECT_TRUE(is_hopf_morphism(*inverse(f), group, dual));
  EXPECT_FALSE(is_hopf_morphism(Mat::identity(2), dual, group));
}

TEST(HopfAlgebraClass, Caches) {
  const auto h = builtin("sweedler");
  EXPECT_EQ(h->coproduct(2).size(), 2u);
  EXPECT_EQ(h->left_mult(1) * h->left_mult(1), Mat::identity(4));
  EXPECT_EQ(h->multiply(h->basis(1), h->basis(2)), h->basis(3));
}
