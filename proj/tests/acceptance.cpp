// Acceptance suite: each criterion is checked exactly and reported on one line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hopfpar/catalog.hpp"
#include "hopfpar/dilation.hpp"
#include "support/generators.hpp"

using namespace hopfpar;

namespace {

struct Failure {
  std::string what;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const std::vector<std::string> kThree = {"kC2-dual", "sweedler", "kS3"};

// 1
void dual_c2_minimal_polynomial() {
  auto rng = testgen::make_rng("acceptance-1");
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 6));
    std::size_t n0 = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long>(n)));
    std::size_t n1 = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long>(n - n0)));
    const std::size_t nh = n - n0 - n1;
    const PartialModule m = testgen::dual_c2_module(rng, n0, n1, nh);
    need(check_partial_rep(m).ok(), "generated module is not partial");
    const Mat& t = m.pi[0];
    const Mat id = Mat::identity(n);
    need((t * (t - id) * (Scalar(2) * t - id)).is_zero(), "t(t-I)(2t-I) != 0");
    const auto c = classify_dual_c2(m);
    need(c.n0 == n0 && c.n1 == n1 && c.n_half == nh, "eigenspace dimensions");
    Vec diag;
    diag.insert(diag.end(), n0, Scalar(1));
    diag.insert(diag.end(), n1, Scalar(0));
    diag.insert(diag.end(), nh, Scalar(1, 2));
    const PartialModule b = change_basis(m, c.change_of_basis);
    need(b.pi[0] == Mat::diagonal(diag), "p0 block form");
    need(b.pi[1] == id - Mat::diagonal(diag), "p1 block form");
  }
}

// 2
void dual_c2_image_algebra() {
  need(image_algebra(catalog::dual_c2_partial(1, 1, 1)).dim() == 3, "image algebra dimension");
}

// 3
void sweedler_classification() {
  auto rng = testgen::make_rng("acceptance-3");
  for (int trial = 0; trial < 50; ++trial) {
    const PartialModule m = testgen::random_sweedler(rng, 6);
    need(m.dim <= 6 && check_partial_rep(m).ok(), "generated module is not partial");
    const Mat& g = m.pi[1];
    need(g * g * g == g, "[g]^3 != [g]");
    const auto s = classify_sweedler(m);
    need(s.c * s.d == s.d * s.c, "cd != dc");
    need(s.c * s.c == s.d * s.d, "c^2 != d^2");
    const Mat id = Mat::identity(m.dim);
    need(s.global_part == kernel_basis(g - id) + kernel_basis(g + id), "global part is not the +-1 eigenspaces");
    need(is_global(submodule(m, s.global_part)), "+-1 eigenspace part is not global");
  }
}

// 4
void dual_c2_dilation() {
  for (std::size_t n0 = 0; n0 <= 5; ++n0)
    for (std::size_t n1 = 0; n0 + n1 <= 5; ++n1)
      for (std::size_t nh = 0; n0 + n1 + nh <= 5; ++nh) {
        if (n0 + n1 + nh == 0) continue;
        const auto d = standard_dilation(catalog::dual_c2_partial(n0, n1, nh));
        need(d.projected.module.dim == n0 + n1 + 2 * nh, "dilation dimension");
      }
  const auto m = catalog::dual_c2_partial(1, 1, 1);
  const auto c = classify_dual_c2(m);
  const auto d = standard_dilation(change_basis(m, c.change_of_basis));
  const Scalar h(1, 2);
  const Mat expected{{1, 0, 0, 0}, {0, h, 0, h}, {0, 0, 1, 0}, {0, h, 0, h}};
  need(in_basis(d, catalog::dual_c2_dilation_basis(d, 1, 1, 1)).t == expected, "projection matrix");
}

// 5
void sweedler_pure_dilation() {
  for (std::size_t n = 1; n <= 4; ++n) {
    const PartialModule m = w_n_module(n);
    const Mat &c = m.pi[2], &dd = m.pi[3];
    const auto d = standard_dilation(m);
    need(d.projected.module.dim == 2 * n, "dilation dimension");
    const auto v = in_basis(d, catalog::sweedler_dilation_basis(d));
    const Mat id = Mat::identity(n), zero(n, n);
    need(v.action[1] == vstack({hstack({zero, id}, n), hstack({id, zero}, n)}, 2 * n), "g action");
    need(v.action[2] == vstack({hstack({c, -dd}, n), hstack({dd, -c}, n)}, 2 * n), "x action");
  }
}

// 6
void round_trip() {
  auto rng = testgen::make_rng("acceptance-6");
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testgen::random_module(rng, kThree[trial % 3], 4);
    const auto d = standard_dilation(m);
    need(check_dilation(d).ok(), "check_dilation");
    need(is_proper(d) && is_minimal(d), "proper and minimal");
    const auto r = restrict(d.projected);
    const Mat theta = r.coordinates * d.theta;
    need(theta.is_square() && is_injective(theta), "theta is not bijective onto the restriction");
    need(is_morphism(theta, m, r.module), "theta is not a morphism");
    need(r.inclusion * theta == d.theta, "theta does not land in the image of t");
  }
}

// 7
void global_characterization() {
  auto rng = testgen::make_rng("acceptance-7");
  for (int trial = 0; trial < 100; ++trial) {
    const std::string& h = kThree[trial % 3];
    const bool want_global = trial % 2 == 0;
    const auto m = want_global ? testgen::random_global(rng, h, 4) : testgen::random_non_global(rng, h, 4);
    const auto g = global_iff_phi_iso(m);
    need(g.global == want_global, "generator produced the wrong kind of module");
    need(g.consistent(), "the three conditions disagree");
    need(g.t_identity == g.global, "t = identity does not match globality");
    need((standard_dilation(m).projected.t == Mat::identity(standard_dilation(m).projected.module.dim)) == g.global,
         "t = identity does not match globality");
  }
}

// 8
void equivalence_lemma() {
  auto rng = testgen::make_rng("acceptance-8");
  auto all_three = [](const PartialModule& m, const Mat& t) {
    const auto r = check_equivalence_lemma(m, t);
    need(r.consistent(), "conditions disagree");
    return r.c_condition;
  };
  std::vector<ProjectedModule> candidates = {catalog::dual_c2_graded_projection(1, 1, 1),
                                             catalog::sweedler_doubled_projection(lower_shift(2), lower_shift(2))};
  int raw = 0;
  while (candidates.size() < 52) {
    const std::string& h = kThree[candidates.size() % 3];
    const auto m = testgen::random_global(rng, h, 4);
    const auto rank = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long>(m.dim)));
    const Mat t = testgen::random_idempotent(rng, m.dim, rank);
    ++raw;
    if (all_three(m, t)) candidates.push_back(make_projected(m, t));
    else candidates.push_back(testgen::random_projected(rng, h, 6));
  }
  for (const auto& p : candidates) {
    need(all_three(p.module, p.t), "candidate fails the c-condition");
    need(all_three(p.module, Mat::identity(p.module.dim) - p.t), "I - t fails");
  }
  need(raw >= 50, "too few raw idempotents");
}

// 9
void core_shadow_adjunction() {
  auto rng = testgen::make_rng("acceptance-9");
  for (int trial = 0; trial < 30; ++trial) {
    const std::string h = trial % 2 == 0 ? "kC2-dual" : "sweedler";
    const auto n = testgen::random_global(rng, h, 3);
    const auto m = testgen::random_module(rng, h, 3);
    need(n.dim <= 3 && m.dim <= 3, "dimension bound");
    const PartialModule core = submodule(m, global_core(m));
    need(hom_space(n, m).size() == hom_space(n, core).size(), "Hom(N, M) != Hom(N, core M)");
    need(hom_space(m, n).size() == hom_space(global_shadow(m).module, n).size(), "Hom(M, N) != Hom(shadow M, N)");
  }
}

std::vector<PartialModuleAlgebra> shipped_algebras() {
  std::vector<PartialModuleAlgebra> out = {catalog::dual_c2_half()};
  for (const auto& e : catalog::induced_examples()) out.push_back(e.induced());
  return out;
}

bool over_dual_or_h4(const PartialModuleAlgebra& b) {
  const auto m = b.module();
  return is_builtin(m, "kC2-dual") || is_builtin(m, "sweedler");
}

// 10
void globalization() {
  int seen = 0;
  for (const auto& b : shipped_algebras()) {
    if (b.dim() > 3 || !over_dual_or_h4(b)) continue;
    ++seen;
    const auto g = globalize(b);
    for (const char* check : {"phi_multiplicative", "ideal", "idempotent", "restricted_action"})
      need(g.report.passed(check), check);
  }
  need(seen > 0, "no shipped examples");
}

// 11
void zeta_xi_isomorphism() {
  for (const auto& b : shipped_algebras()) {
    const auto z = zeta_xi(b);
    need(z.report.passed("zeta_xi_identity"), "zeta xi != id");
    need(z.report.passed("xi_zeta_identity"), "xi zeta != id");
    need(z.report.passed("summand_splits") && z.report.passed("summand_injective"), "summand embedding");
    need(z.report.passed("summand_linear"), "summand maps are not H-linear");
    need(z.summand_rank == z.summand_embedding.cols(), "split injection rank");
    need(rank(z.summand_embedding) == z.summand_rank, "embedding rank");
    need(z.summand_retraction * z.summand_embedding == Mat::identity(z.summand_rank), "retraction");
  }
}

// 12
void morita() {
  for (const auto& b : shipped_algebras()) {
    const auto mc = morita_context(b);
    for (const char* check : {"p_left_closed", "p_right_closed", "q_left_closed", "q_right_closed"})
      need(mc.report.passed(check), check);
    need(mc.tau_surjective(), "tau not surjective");
    need(mc.mu_surjective(), "mu not surjective");
  }
}

// 13
void functor_properties() {
  auto rng = testgen::make_rng("acceptance-13");
  for (int trial = 0; trial < 30; ++trial) {
    const std::string& h = kThree[trial % 3];
    const auto f = testgen::random_morphism(rng, h, 3);
    const auto &m = f.source, &n = f.target;
    const auto dm = standard_dilation(m), dn = standard_dilation(n);
    const Mat fbar = dilate_morphism(f.mat, dm, dn);

    Mat g(n.dim, m.dim);
    const auto homs = hom_space(m, n);
    for (const auto& b : homs) g.add_scaled(testgen::random_scalar(rng, 3), b);
    need(dilate_morphism(f.mat + g, dm, dn) == fbar + dilate_morphism(g, dm, dn), "not additive");

    // faithful: the dilated basis of Hom(M, N) stays independent
    std::vector<Mat> dilated;
    for (const auto& b : homs) dilated.push_back(reshape(flatten(dilate_morphism(b, dm, dn)), 1, dn.projected.module.dim * dm.projected.module.dim));
    if (!dilated.empty()) need(rank(vstack(dilated, dilated.front().cols())) == homs.size(), "not faithful");

    if (is_injective(f.mat)) need(is_injective(fbar), "injectivity lost");
    if (is_surjective(f.mat)) need(is_surjective(fbar), "surjectivity lost");
    const Subspace core = global_core(m);
    const auto dc = standard_dilation(submodule(m, core));
    need(is_injective(dilate_morphism(core.inclusion(), dc, dm)), "core inclusion not injective after dilation");
    const auto q = global_shadow(m);
    need(is_surjective(dilate_morphism(q.projection, dm, standard_dilation(q.module))), "shadow projection not surjective after dilation");

    const auto s = dilation_preserves_sums({m, n});
    need(s.bijective, "direct sums not preserved");
    need(s.sum_dilation_dim == s.summand_dilation_dims[0] + s.summand_dilation_dims[1], "sum dimension");
  }
}

// 14
void wn_structure() {
  const PartialModule w3 = w_n_module(3);
  const auto lattice = probe_submodules(w3);
  need(lattice.size() == 4, "W3 has other than 4 submodules");
  for (std::size_t k = 0; k < 4; ++k) need(lattice[k].dim() == k, "submodule dimensions");
  for (std::size_t k = 0; k + 1 < 4; ++k) need(lattice[k + 1].contains(lattice[k]), "not a chain");
  const auto chain = uniserial_chain(w3);
  need(chain.has_value() && *chain == lattice, "uniserial chain");
  need(is_indecomposable(w_n_module(2)) == std::optional<bool>(true), "W2 decomposes");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"kC2-dual minimal polynomial and block forms", dual_c2_minimal_polynomial},
      {"kC2-dual generic image algebra is 3-dimensional", dual_c2_image_algebra},
      {"H4 classification", sweedler_classification},
      {"kC2-dual dilation dimensions and projection", dual_c2_dilation},
      {"H4 pure dilation", sweedler_pure_dilation},
      {"restriction of the dilation recovers the module", round_trip},
      {"global iff phi is an isomorphism", global_characterization},
      {"equivalence lemma", equivalence_lemma},
      {"core and shadow adjunctions", core_shadow_adjunction},
      {"globalization", globalization},
      {"zeta and xi are inverse", zeta_xi_isomorphism},
      {"Morita context", morita},
      {"dilation functor properties", functor_properties},
      {"W3 chain and W2 indecomposable", wn_structure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2zu  %-50s %8.1f ms%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms,
                detail.empty() ? "" : "  ", detail.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
