#include <gtest/gtest.h>

#include "hopfpar/actions.hpp"
#include "hopfpar/catalog.hpp"
#include "support/generators.hpp"

using namespace hopfpar;
namespace cat = hopfpar::catalog;

namespace {

const std::vector<std::string> kFamilies = {"kC2-dual", "sweedler", "kC2", "kC3"};

PartialModuleAlgebra trivial_on(const HopfPtr& h, const Algebra& alg) {
  std::vector<Mat> action;
  for (std::size_t i = 0; i < h->dim(); ++i) action.push_back(h->counit()[i] * Mat::identity(alg.dim));
  return {h, alg, action};
}

std::vector<PartialModuleAlgebra> shipped() {
  std::vector<PartialModuleAlgebra> out{cat::dual_c2_half()};
  for (const auto& ex : cat::induced_examples()) out.push_back(ex.induced());
  return out;
}

}  // namespace

TEST(Algebra, FunctionAndProductAlgebras) {
  const auto a = cat::function_algebra(3);
  EXPECT_TRUE(is_associative(a));
  EXPECT_TRUE(is_two_sided_unit(a, *a.unit));
  const auto b = cat::product_algebra(a, cat::sweedler_split_algebra(1).alg);
  EXPECT_EQ(b.dim, 5u);
  EXPECT_TRUE(is_associative(b));
  EXPECT_TRUE(is_two_sided_unit(b, *b.unit));
  EXPECT_EQ(b.product(unit_vector(5, 4), unit_vector(5, 4)), unit_vector(5, 3));
  EXPECT_TRUE(b.product(unit_vector(5, 0), unit_vector(5, 4)) == Vec(5));
}

TEST(Algebra, DetectsNonAssociativity) {
  auto a = cat::function_algebra(2);
  a.m(0, 0, 1) = 1;  // e0 e0 = e0 + e1
  EXPECT_FALSE(is_associative(a));
}

TEST(CheckPartialAction, AdjointActionIsGlobal) {
  for (const auto& name : builtin_names()) {
    const auto b = cat::adjoint_algebra(builtin(name));
    EXPECT_TRUE(check_partial_action(b).ok()) << name;
    EXPECT_TRUE(check_module_algebra(b.hopf, b.alg, b.action).ok()) << name;
  }
}

TEST(CheckPartialAction, ShippedExamples) {
  for (const auto& b : shipped()) {
    const auto r = check_partial_action(b);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.passed("PA3'"));
  }
}

TEST(CheckPartialAction, PerturbedActionReportsWitness) {
  auto b = cat::dual_c2_half();
  b.action = {Mat{{Scalar(1, 3)}}, Mat{{Scalar(2, 3)}}};
  const auto r = check_partial_action(b);
  EXPECT_TRUE(r.passed("PA1"));
  EXPECT_FALSE(r.passed("PA2"));
  EXPECT_EQ(r.at("PA2").witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(partial_smash(b), AxiomViolation);

  // x . 1 = 1 breaks PA2
  auto s = cat::sweedler_split_algebra(1);
  s.action[2] = s.action[2] + Mat::identity(2);
  EXPECT_FALSE(check_partial_action(s).ok());
}

TEST(CheckPartialAction, RandomFamilies) {
  auto rng = testgen::make_rng("partial-action-random");
  for (const auto& name : kFamilies)
    for (int trial = 0; trial < 8; ++trial) {
      const auto b = testgen::random_module_algebra(rng, name);
      EXPECT_TRUE(check_partial_action(b).ok()) << name;
    }
}

TEST(InducedPartialAlgebra, UnitGivesGlobal) {
  for (const auto& ex : cat::induced_examples()) {
    const auto a = induced_partial_algebra(ex.global, *ex.global.alg.unit);
    EXPECT_EQ(a.dim(), ex.global.dim());
    EXPECT_TRUE(is_global(a.module())) << ex.name;
  }
}

TEST(InducedPartialAlgebra, ZeroGivesZeroAlgebra) {
  const auto g = cat::dual_c2_graded_algebra();
  const auto a = induced_partial_algebra(g, Vec(3));
  EXPECT_EQ(a.dim(), 0u);
}

TEST(InducedPartialAlgebra, TranslationOnFunctions) {
  const auto a = induced_partial_algebra(cat::c2_translation_algebra(), Vec{1, 0});
  ASSERT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.action[0], Mat{{1}});
  EXPECT_EQ(a.action[1], Mat{{0}});
  EXPECT_FALSE(is_global(a.module()));
}

TEST(InducedPartialAlgebra, SweedlerScalars) {
  // A = k e with e = (1 + u)/2: g . e = e(1 - u)/2 = 0 and x . e = y . e = e alpha/2
  const auto a = induced_partial_algebra(cat::sweedler_split_algebra(3), cat::sweedler_split_idempotent());
  ASSERT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.action[1], Mat{{0}});
  EXPECT_EQ(a.action[2], Mat{{Scalar(3, 2)}});
  EXPECT_EQ(a.action[3], Mat{{Scalar(3, 2)}});
  EXPECT_TRUE(classify_sweedler(a.module()).global_part.is_zero());
}

TEST(InducedPartialAlgebra, Rejections) {
  const auto g = cat::dual_c2_graded_algebra();
  EXPECT_THROW(induced_partial_algebra(g, Vec{2, 0, 0}), InvalidInput);
  // a central idempotent is required: (1 + s)/2 in kS3 under the adjoint action
  const auto s3 = cat::adjoint_algebra(builtin("kS3"));
  Vec e(6);
  e[0] = Scalar(1, 2);
  e[1] = Scalar(1, 2);
  ASSERT_EQ(s3.alg.product(e, e), e);
  EXPECT_THROW(induced_partial_algebra(s3, e), InvalidInput);
  // a partial action is not a global module algebra
  const auto half = cat::dual_c2_half();
  EXPECT_THROW(induced_partial_algebra(half, Vec{1}), InvalidInput);
}

TEST(PartialSmash, TrivialActionGivesTensorAlgebra) {
  const auto h = builtin("sweedler");
  const auto b = trivial_on(h, cat::function_algebra(2));
  const auto s = partial_smash(b);
  EXPECT_EQ(s.alg.dim, 8u);
  EXPECT_EQ(s.inclusion, Mat::identity(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Vec expected = kron(b.alg.product(unit_vector(2, i / 4), unit_vector(2, j / 4)),
                                h->multiply(h->basis(i % 4), h->basis(j % 4)));
      EXPECT_EQ(s.alg.product(unit_vector(8, i), unit_vector(8, j)), expected);
    }
}

TEST(PartialSmash, HalfExampleIsOneDimensional) {
  const auto s = partial_smash(cat::dual_c2_half());
  ASSERT_EQ(s.alg.dim, 1u);
  // 1 # p_0 = 1 # p_1 = (1 (x) p_0 + 1 (x) p_1)/2
  const Vec half{Scalar(1, 2), Scalar(1, 2)};
  EXPECT_EQ(s.inclusion * s.h_embedding[0], half);
  EXPECT_EQ(s.inclusion * s.h_embedding[1], half);
  EXPECT_EQ(s.inclusion * *s.alg.unit, (Vec{1, 1}));
}

TEST(PartialSmash, ReportsOnShippedAndRandom) {
  auto rng = testgen::make_rng("partial-smash");
  auto all = shipped();
  for (const auto& name : kFamilies)
    for (int trial = 0; trial < 4; ++trial) all.push_back(testgen::random_module_algebra(rng, name));
  for (const auto& b : all) {
    const auto s = partial_smash(b);
    EXPECT_TRUE(s.report.ok());
    EXPECT_EQ(s.alg.dim, rank(smash_idempotent(b)));
    EXPECT_LE(s.alg.dim, b.dim() * b.hopf->dim());
  }
}

TEST(Globalize, GlobalAlgebraIsItsOwnGlobalization) {
  for (const auto& ex : cat::induced_examples()) {
    const auto g = globalize(ex.global);
    EXPECT_EQ(g.dim(), ex.global.dim()) << ex.name;
    const Mat inv = *inverse(g.phi);
    EXPECT_TRUE(is_two_sided_unit(g.alg, g.phi * ex.global.one())) << ex.name;
    for (std::size_t i = 0; i < g.action().size(); ++i) EXPECT_EQ(inv * g.action()[i] * g.phi, ex.global.action[i]);
  }
}

TEST(Globalize, DimensionMatchesGeneratedIdeal) {
  for (const auto& ex : cat::induced_examples()) {
    const auto g = globalize(ex.induced());
    const Subspace eb = column_space(ex.global.alg.left_mult(ex.idempotent));
    EXPECT_EQ(g.dim(), span_closure(eb, ex.global.action).dim()) << ex.name;
  }
}

TEST(Globalize, HalfExample) {
  const auto g = globalize(cat::dual_c2_half());
  EXPECT_EQ(g.dim(), 2u);
  EXPECT_TRUE(g.report.ok());
  EXPECT_TRUE(is_idempotent_algebra(g.alg));
  EXPECT_TRUE(is_associative(g.alg));
}

TEST(Globalize, ReportsOnRandom) {
  auto rng = testgen::make_rng("globalize");
  for (const auto& name : kFamilies)
    for (int trial = 0; trial < 5; ++trial) {
      const auto b = testgen::random_module_algebra(rng, name);
      const auto g = globalize(b);
      EXPECT_TRUE(g.report.passed("phi_multiplicative")) << name;
      EXPECT_TRUE(g.report.passed("idempotency_identity")) << name;
      EXPECT_TRUE(g.report.passed("restricted_action")) << name;
      EXPECT_EQ(g.phi, g.dilation.theta);
    }
}

TEST(Globalize, ConvolutionIsHomConvolution) {
  // compare with an independent evaluation on Hom(H, B)
  const auto b = cat::dual_c2_graded_algebra();
  const auto a = induced_partial_algebra(b, cat::dual_c2_graded_idempotent());
  const auto g = globalize(a);
  const Mat& hom = *g.dilation.hom_inclusion;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vec f = hom.column(i), k = hom.column(j);
      Vec expected(hom.rows());
      // dual group algebra: Delta(p_x) = sum_{yz = x} p_y (x) p_z
      for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t z = 0; z < 2; ++z) {
          const std::size_t x = (y + z) % 2;
          const Vec fy(f.begin() + 2 * y, f.begin() + 2 * y + 2), kz(k.begin() + 2 * z, k.begin() + 2 * z + 2);
          const Vec p = a.alg.product(fy, kz);
          expected[2 * x] += p[0];
          expected[2 * x + 1] += p[1];
        }
      EXPECT_EQ(hom * g.alg.product(unit_vector(g.dim(), i), unit_vector(g.dim(), j)), expected);
    }
}

TEST(GlobalSmash, TrivialActionGivesTensorAlgebra) {
  const auto h = builtin("kC3");
  const auto b = trivial_on(h, cat::sweedler_split_algebra(1).alg);
  const auto s = global_smash(h, b.alg, b.action);
  ASSERT_EQ(s.alg.dim, 6u);
  ASSERT_TRUE(s.alg.unit.has_value());
  EXPECT_EQ(*s.alg.unit, kron(*b.alg.unit, h->unit()));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_EQ(s.alg.product(unit_vector(6, i), unit_vector(6, j)),
                kron(b.alg.product(unit_vector(2, i / 3), unit_vector(2, j / 3)),
                     h->multiply(h->basis(i % 3), h->basis(j % 3))));
}

TEST(GlobalSmash, SweedlerAndNonUnital) {
  const auto g = cat::sweedler_split_algebra(2);
  EXPECT_TRUE(global_smash(g.hopf, g.alg, g.action).report.ok());
  const auto glob = globalize(cat::dual_c2_half());
  const auto s = global_smash(glob);
  EXPECT_TRUE(s.report.passed("associative"));
  EXPECT_EQ(s.alg.dim, glob.dim() * 2);
}

TEST(GlobalSmash, RejectsPartialAction) {
  const auto b = cat::dual_c2_half();
  EXPECT_THROW(global_smash(b.hopf, b.alg, b.action), InvalidInput);
}

TEST(ZetaXi, ShippedExamples) {
  for (const auto& b : shipped()) {
    const auto z = zeta_xi(b);
    EXPECT_TRUE(z.report.ok());
    EXPECT_EQ(z.tensor_dilation.projected.module.dim, z.glob.dim() * b.hopf->dim());
    // zeta(phi(b (x) k)) = phi(b) (x) k
    EXPECT_EQ(z.zeta * z.tensor_dilation.theta, kron(z.glob.phi, Mat::identity(b.hopf->dim())));
    EXPECT_EQ(z.summand_rank, standard_dilation(submodule(z.tensor, column_space(smash_idempotent(b)))).projected.module.dim);
  }
}

TEST(ZetaXi, TrivialActionIsReshuffle) {
  const auto h = builtin("kC2-dual");
  const auto b = trivial_on(h, cat::function_algebra(2));
  const auto z = zeta_xi(b);
  const Mat reshuffle = z.zeta * z.tensor_dilation.theta;
  EXPECT_EQ(z.glob.dim(), 2u);
  EXPECT_TRUE(is_injective(z.glob.phi) && z.glob.phi.is_square());
  EXPECT_EQ(reshuffle, kron(z.glob.phi, Mat::identity(2)));
  EXPECT_TRUE(z.tensor_dilation.theta.is_square());
}

TEST(ZetaXi, Random) {
  auto rng = testgen::make_rng("zeta-xi");
  for (const auto& name : kFamilies)
    for (int trial = 0; trial < 3; ++trial) {
      const auto z = zeta_xi(testgen::random_module_algebra(rng, name));
      EXPECT_TRUE(z.report.ok()) << name;
      EXPECT_EQ(z.summand_retraction * z.summand_embedding, Mat::identity(z.summand_embedding.cols()));
    }
}

TEST(Morita, GlobalUnitalIsFull) {
  const auto g = cat::sweedler_split_algebra(1);
  const auto mc = morita_context(g);
  EXPECT_TRUE(mc.p.is_full());
  EXPECT_TRUE(mc.q.is_full());
  EXPECT_TRUE(mc.partial_image.is_full());
  EXPECT_TRUE(mc.tau_surjective());
  EXPECT_TRUE(mc.mu_surjective());
}

TEST(Morita, HalfExample) {
  const auto mc = morita_context(cat::dual_c2_half());
  EXPECT_EQ(mc.partial_image.dim(), 1u);
  EXPECT_EQ(mc.global.alg.dim, 4u);
  EXPECT_EQ(mc.p.dim(), 2u);
  EXPECT_EQ(mc.q.dim(), 2u);
  EXPECT_EQ(mc.tau_image.dim(), 1u);
  EXPECT_EQ(mc.mu_image.dim(), 4u);
  EXPECT_TRUE(mc.report.ok());
}

TEST(Morita, BimoduleClosureWitness) {
  for (const auto& b : shipped()) {
    const auto mc = morita_context(b);
    for (std::size_t i = 0; i < b.hopf->dim(); ++i) {
      const Vec one_h = mc.big_phi * mc.partial.h_embedding[i];
      for (std::size_t k = 0; k < mc.p.dim(); ++k) EXPECT_TRUE(mc.p.contains(mc.global.alg.product(one_h, mc.p.basis_vector(k))));
    }
    EXPECT_TRUE(mc.tau_surjective());
    EXPECT_TRUE(mc.mu_surjective());
  }
}

TEST(Morita, Random) {
  auto rng = testgen::make_rng("morita");
  for (const auto& name : kFamilies)
    for (int trial = 0; trial < 3; ++trial) {
      const auto b = testgen::random_module_algebra(rng, name);
      const auto mc = morita_context(b);
      EXPECT_TRUE(mc.report.ok()) << name;
      EXPECT_TRUE(mc.tau_surjective()) << name;
      EXPECT_TRUE(mc.mu_surjective()) << name;
    }
}

TEST(ChangeBasis, PreservesAxioms) {
  auto rng = testgen::make_rng("algebra-basis");
  const auto b = cat::induced_examples()[3].induced();
  const auto c = change_basis(b, testgen::random_invertible(rng, b.dim()));
  EXPECT_TRUE(check_partial_action(c).ok());
  EXPECT_EQ(globalize(c).dim(), globalize(b).dim());
  EXPECT_EQ(partial_smash(c).alg.dim, partial_smash(b).alg.dim);
}
