#pragma once

// Worked examples replayed with hard-coded expected values. Each demo lists
// the operations it exercises; the suite checks that together they cover all
// of them.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hopfpar/catalog.hpp"
#include "hopfpar/serialize.hpp"

namespace hopfpar::demo {

using io::json;

struct Outcome {
  std::string id;
  bool passed = true;
  std::vector<std::string> mismatches;
  json values = json::object();
};

class Checker {
 public:
  explicit Checker(Outcome& out) : out_(out) {}

  template <class A, class E>
  void expect(const std::string& name, const A& actual, const E& expected) {
    const json a = encode(actual), e = encode(expected);
    out_.values[name] = a;
    if (a != e) fail(name + ": expected " + e.dump() + ", got " + a.dump());
  }

  void expect_true(const std::string& name, bool value) { expect(name, value, true); }

  void fail(const std::string& what) {
    out_.passed = false;
    out_.mismatches.push_back(what);
  }

 private:
  template <class T>
  static json encode(const T& v) {
    if constexpr (std::is_same_v<T, Mat> || std::is_same_v<T, Vec> || std::is_same_v<T, Scalar>) return io::to_json(v);
    else return json(v);
  }
  Outcome& out_;
};

struct Demo {
  std::string id;
  std::string title;
  std::vector<std::string> ops;
  std::function<void(Checker&)> body;
};

/// Every library operation the suite must reach.
inline const std::vector<std::string>& all_ops() {
  static const std::vector<std::string> ops = {
      "kernel_basis", "span_closure", "quotient_map", "kron",
      "validate_hopf", "group_algebra", "dual_group_algebra", "sweedler_h4", "cop",
      "check_partial_rep", "is_global", "global_core", "global_shadow", "is_pure", "hom_space", "direct_sum",
      "image_algebra", "base_subalgebra", "tensor_with_global", "tensor_over_base", "classify_dual_c2",
      "classify_sweedler", "w_n_module",
      "adjoint_op", "tilde_op", "check_c_condition", "check_equivalence_lemma", "restrict", "minimalize",
      "standard_dilation", "check_dilation", "universal_morphism", "dilate_morphism", "global_iff_phi_iso",
      "dilation_preserves_sums",
      "check_partial_action", "induced_partial_algebra", "partial_smash", "globalize", "global_smash", "zeta_xi",
      "morita_context",
      "run", "demo_suite"};
  return ops;
}

namespace detail {

inline Mat expected_dual_c2_dilation_t() {
  const Scalar h(1, 2);
  return Mat{{1, 0, 0, 0}, {0, h, 0, h}, {0, 0, 1, 0}, {0, h, 0, h}};
}

inline std::vector<Demo> build_registry() {
  std::vector<Demo> demos;

  demos.push_back({"linalg", "exact linear algebra kernels",
                   {"kernel_basis", "span_closure", "quotient_map", "kron"}, [](Checker& c) {
                     c.expect("kernel_dim", kernel_basis(Mat{{1, 1}, {1, 1}}).dim(), 1);
                     const Mat shift{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
                     c.expect("closure_dim", span_closure(Subspace::span({unit_vector(3, 0)}, 3), {shift}).dim(), 3);
                     c.expect("quotient_dim", quotient_map(3, Subspace::span({unit_vector(3, 0)}, 3)).dim, 2);
                     c.expect("kron", kron(Mat{{1, 2}}, Mat{{0, 1}}), Mat{{0, 1, 0, 2}});
                   }});

  demos.push_back({"hopf-builtins", "builtin Hopf algebras validate",
                   {"validate_hopf", "group_algebra", "dual_group_algebra", "sweedler_h4", "cop"}, [](Checker& c) {
                     c.expect_true("kC3", validate_hopf(group_algebra(cyclic_table(3))).ok());
                     c.expect_true("kS3", validate_hopf(group_algebra(s3_table())).ok());
                     c.expect_true("kC2-dual", validate_hopf(dual_group_algebra(cyclic_table(2))).ok());
                     const auto h4 = sweedler_h4();
                     c.expect_true("sweedler", validate_hopf(h4).ok());
                     c.expect_true("sweedler-cop", validate_hopf(cop(h4)).ok());
                     c.expect_true("cop-involutive", cop(cop(h4)) == h4);
                     c.expect_true("sweedler-not-cocommutative", !(cop(h4).comult == h4.comult));
                   }});

  demos.push_back({"dual-c2-partial", "partial modules over the dual of C2",
                   {"check_partial_rep", "is_global", "global_core", "global_shadow", "is_pure", "hom_space",
                    "direct_sum", "image_algebra", "base_subalgebra", "classify_dual_c2"},
                   [](Checker& c) {
                     const auto m = catalog::dual_c2_partial(1, 1, 1);
                     const Mat& t = m.pi[0];
                     const Mat id = Mat::identity(3);
                     c.expect_true("partial", check_partial_rep(m).ok());
                     c.expect_true("minimal_polynomial", (t * (t - id) * (Scalar(2) * t - id)).is_zero());
                     c.expect("global", is_global(m), false);
                     c.expect("pure", is_pure(m), false);
                     c.expect("image_algebra_dim", image_algebra(m).dim(), 3);
                     c.expect("base_subalgebra_dim", base_subalgebra(m).dim(), 2);
                     c.expect("core_dim", global_core(m).dim(), 2);
                     c.expect("shadow_dim", global_shadow(m).module.dim, 2);
                     c.expect("end_dim", hom_space(m, m).size(), 3);
                     const auto cl = classify_dual_c2(direct_sum({m, catalog::dual_c2_partial(0, 2, 1)}));
                     c.expect("classified", std::vector<std::size_t>{cl.n0, cl.n1, cl.n_half},
                              std::vector<std::size_t>{1, 3, 2});
                   }});

  demos.push_back({"sweedler-partial", "partial modules over Sweedler's algebra",
                   {"w_n_module", "classify_sweedler", "tensor_with_global", "tensor_over_base", "is_pure"},
                   [](Checker& c) {
                     for (std::size_t n = 1; n <= 3; ++n) {
                       const auto s = classify_sweedler(w_n_module(n));
                       const std::string k = "W" + std::to_string(n);
                       c.expect(k + "_pure", is_pure(w_n_module(n)), true);
                       c.expect(k + "_c", s.c, lower_shift(n));
                       c.expect(k + "_d", s.d, lower_shift(n));
                     }
                     const auto w3 = w_n_module(3);
                     c.expect("W3_lattice_size", probe_submodules(w3).size(), 4);
                     c.expect_true("W3_uniserial", uniserial_chain(w3).has_value());
                     c.expect("W2_indecomposable", is_indecomposable(w_n_module(2)).value_or(false), true);
                     const auto t = tensor_with_global(w_n_module(1), regular_module(builtin("sweedler")));
                     c.expect("W1_tensor_H_dim", t.dim, 4);
                     c.expect_true("W1_tensor_H_partial", check_partial_rep(t).ok());
                     c.expect("W1_over_base_W1_dim", tensor_over_base(w_n_module(1), w_n_module(1)).module.dim, 1);
                     const auto m = catalog::dual_c2_partial(1, 1, 1);
                     c.expect("M_over_base_M_dim", tensor_over_base(m, m).module.dim, 5);
                   }});

  demos.push_back({"graded-projection", "projection on a graded space",
                   {"adjoint_op", "tilde_op", "check_c_condition", "check_equivalence_lemma", "restrict",
                    "minimalize"},
                   [](Checker& c) {
                     const auto p = catalog::dual_c2_graded_projection(1, 1, 1);
                     const Vec one = p.module.hopf->unit();
                     c.expect("adjoint_unit", adjoint_op(p.module, p.t, one), p.t);
                     c.expect("tilde_unit", tilde_op(p.module, p.t, one), p.t);
                     c.expect_true("c_condition", check_c_condition(p.module, p.t).holds);
                     c.expect_true("complement", check_c_condition(p.module, Mat::identity(4) - p.t).holds);
                     const auto e = check_equivalence_lemma(p);
                     c.expect_true("equivalence", e.c_condition && e.c_tilde_condition && e.commuting);
                     const auto r = restrict(p);
                     const auto cl = classify_dual_c2(r.module);
                     c.expect("restriction_type", std::vector<std::size_t>{cl.n0, cl.n1, cl.n_half},
                              std::vector<std::size_t>{1, 1, 1});
                     c.expect("minimalized_dim", minimalize(p).projected.module.dim, 4);
                   }});

  demos.push_back({"sweedler-projection", "projection on a doubled Sweedler module",
                   {"restrict", "classify_sweedler", "check_c_condition"}, [](Checker& c) {
                     const Mat s = lower_shift(2);
                     const auto p = catalog::sweedler_doubled_projection(s, s);
                     c.expect_true("c_condition", check_c_condition(p.module, p.t).holds);
                     const auto r = restrict(p);
                     const auto cl = classify_sweedler(r.module);
                     c.expect("global_part", cl.global_part.dim(), 0);
                     c.expect("c", cl.c, s);
                     c.expect("d", cl.d, s);
                   }});

  demos.push_back({"dual-c2-dilation", "dilation of the dual C2 module",
                   {"standard_dilation", "check_dilation"}, [](Checker& c) {
                     for (std::size_t n0 = 0; n0 <= 2; ++n0)
                       for (std::size_t n1 = 0; n1 <= 2; ++n1)
                         for (std::size_t nh = 0; nh <= 1; ++nh) {
                           const auto d = standard_dilation(catalog::dual_c2_partial(n0, n1, nh));
                           c.expect("dim_" + std::to_string(n0) + std::to_string(n1) + std::to_string(nh),
                                    d.projected.module.dim, n0 + n1 + 2 * nh);
                         }
                     const auto d = standard_dilation(catalog::dual_c2_partial(1, 1, 1));
                     const auto v = in_basis(d, catalog::dual_c2_dilation_basis(d, 1, 1, 1));
                     c.expect("t", v.t, expected_dual_c2_dilation_t());
                     const auto r = check_dilation(d);
                     c.expect_true("proper", r.passed("proper"));
                     c.expect_true("minimal", r.passed("minimal"));
                   }});

  demos.push_back({"wn-dilation", "dilation of the pure Sweedler modules",
                   {"standard_dilation", "w_n_module"}, [](Checker& c) {
                     for (std::size_t n = 1; n <= 3; ++n) {
                       const auto d = standard_dilation(w_n_module(n));
                       const std::string k = "W" + std::to_string(n);
                       c.expect(k + "_dim", d.projected.module.dim, 2 * n);
                       const auto v = in_basis(d, catalog::sweedler_dilation_basis(d));
                       const Mat s = lower_shift(n), id = Mat::identity(n), zero(n, n);
                       c.expect(k + "_g", v.action[1], vstack({hstack({zero, id}, n), hstack({id, zero}, n)}, 2 * n));
                       c.expect(k + "_x", v.action[2], vstack({hstack({s, -s}, n), hstack({s, -s}, n)}, 2 * n));
                     }
                   }});

  demos.push_back({"dilation-functor", "universal property and functoriality",
                   {"universal_morphism", "dilate_morphism", "global_iff_phi_iso", "dilation_preserves_sums"},
                   [](Checker& c) {
                     const Mat s = lower_shift(2);
                     const auto p = catalog::sweedler_doubled_projection(s, s);
                     const auto res = restrict(p);
                     const Dilation d2{res.module, p, res.inclusion, std::nullopt};
                     const Mat phi = universal_morphism(d2);
                     c.expect("universal_is_iso", phi.is_square() && is_injective(phi), true);
                     const auto f = make_morphism(w_n_module(1), w_n_module(2), Mat{{0}, {1}});
                     const Mat fbar = dilate_morphism(f);
                     c.expect("socle_dilation_shape", std::vector<std::size_t>{fbar.rows(), fbar.cols()},
                              std::vector<std::size_t>{4, 2});
                     c.expect("socle_dilation_rank", rank(fbar), 2);
                     const auto g = global_iff_phi_iso(regular_module(builtin("sweedler")));
                     c.expect_true("global_consistent", g.consistent() && g.global && g.t_identity);
                     const auto n = global_iff_phi_iso(w_n_module(2));
                     c.expect_true("partial_consistent", n.consistent() && !n.global && !n.t_identity);
                     const auto sums = dilation_preserves_sums({w_n_module(1), w_n_module(2)});
                     c.expect("sum_dims", sums.sum_dilation_dim, 6);
                     c.expect_true("sum_bijective", sums.bijective);
                   }});

  demos.push_back({"globalization", "globalization of partial module algebras",
                   {"check_partial_action", "induced_partial_algebra", "globalize"}, [](Checker& c) {
                     const auto half = globalize(catalog::dual_c2_half());
                     c.expect("half_dim", half.dim(), 2);
                     c.expect_true("half_report", half.report.ok());
                     const std::vector<std::size_t> expected = {3, 2, 2, 3, 2};
                     const auto examples = catalog::induced_examples();
                     for (std::size_t i = 0; i < examples.size(); ++i) {
                       const auto a = examples[i].induced();
                       c.expect_true(examples[i].name + "_action", check_partial_action(a).ok());
                       const auto g = globalize(a);
                       c.expect(examples[i].name + "_dim", g.dim(), expected[i]);
                       c.expect_true(examples[i].name + "_report", g.report.ok());
                     }
                   }});

  demos.push_back({"smash", "partial and global smash products",
                   {"partial_smash", "global_smash", "zeta_xi"}, [](Checker& c) {
                     const auto half = catalog::dual_c2_half();
                     c.expect("half_partial_dim", partial_smash(half).alg.dim, 1);
                     const auto z = zeta_xi(half);
                     c.expect("half_zeta_rank", z.summand_rank, 2);
                     c.expect_true("half_zeta_report", z.report.ok());
                     const std::vector<std::size_t> partial = {3, 1, 2, 6, 8}, global = {6, 4, 8, 12, 8};
                     const auto examples = catalog::induced_examples();
                     for (std::size_t i = 0; i < examples.size(); ++i) {
                       const auto a = examples[i].induced();
                       const std::string k = examples[i].name;
                       c.expect(k + "_partial_dim", partial_smash(a).alg.dim, partial[i]);
                       const auto g = global_smash(globalize(a));
                       c.expect(k + "_global_dim", g.alg.dim, global[i]);
                       c.expect_true(k + "_global_report", g.report.ok());
                       c.expect_true(k + "_zeta_xi", zeta_xi(a).report.ok());
                     }
                   }});

  demos.push_back({"morita", "Morita context between the smash products", {"morita_context"}, [](Checker& c) {
                     const auto half = morita_context(catalog::dual_c2_half());
                     c.expect("half_ranks", std::vector<std::size_t>{half.p.dim(), half.q.dim(), half.tau_image.dim(),
                                                                      half.mu_image.dim()},
                              std::vector<std::size_t>{2, 2, 1, 4});
                     for (const auto& ex : catalog::induced_examples()) {
                       const auto mc = morita_context(ex.induced());
                       c.expect_true(ex.name + "_report", mc.report.ok());
                       c.expect_true(ex.name + "_tau_surjective", mc.tau_surjective());
                       c.expect_true(ex.name + "_mu_surjective", mc.mu_surjective());
                     }
                   }});
  return demos;
}

}  // namespace detail

inline const std::vector<Demo>& registry() {
  static const std::vector<Demo> demos = detail::build_registry();
  return demos;
}

inline Outcome run_demo(const Demo& d) {
  Outcome out;
  out.id = d.id;
  Checker c(out);
  try {
    d.body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return out;
}

/// Operations named by no demo; "run" and "demo_suite" are reached by the driver itself.
inline std::vector<std::string> uncovered_ops(const std::vector<std::string>& driver_ops = {"run", "demo_suite"}) {
  std::set<std::string> covered(driver_ops.begin(), driver_ops.end());
  for (const auto& d : registry()) covered.insert(d.ops.begin(), d.ops.end());
  std::vector<std::string> missing;
  for (const auto& op : all_ops())
    if (!covered.count(op)) missing.push_back(op);
  return missing;
}

}  // namespace hopfpar::demo
