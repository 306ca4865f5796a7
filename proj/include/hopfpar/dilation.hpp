#pragma once

// Dilations of partial modules: the standard dilation inside Hom(H, M),
// dilation of morphisms, and the universal morphism onto the standard one.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpar/error.hpp"
#include "hopfpar/linalg.hpp"
#include "hopfpar/partial.hpp"
#include "hopfpar/projection.hpp"

namespace hopfpar {

struct Dilation {
  PartialModule source;
  ProjectedModule projected;
  Mat theta;  // source -> N, image t N
  // For standard dilations: N -> Hom(H, M) = M^d, block j holding f(e_j).
  std::optional<Mat> hom_inclusion;
};

namespace detail {

/// (h . f)(e_j) = f(e_j e_i) on Hom(H, M) = M^d.
inline std::vector<Mat> hom_action(const HopfAlgebra& h, std::size_t n) {
  const std::size_t d = h.dim();
  std::vector<Mat> out;
  for (std::size_t i = 0; i < d; ++i) {
    Mat r(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [l, c] : h.product(j, i)) r(j, l) += c;
    out.push_back(kron(r, Mat::identity(n)));
  }
  return out;
}

/// m -> (pi(e_0) m, ..., pi(e_{d-1}) m).
inline Mat phi_matrix(const PartialModule& m) { return vstack(m.pi, m.dim); }

/// Columns h_i . theta(m) for all basis h_i: the generators of H . theta(M).
inline Mat generator_matrix(const PartialModule& n, const Mat& theta) {
  std::vector<Mat> blocks;
  for (const auto& x : n.pi) blocks.push_back(x * theta);
  return hstack(blocks, n.dim);
}

/// Solves X g = target, requiring ker g inside ker target.
inline Mat solve_through(const Mat& g, const Mat& target, const std::string& where) {
  require(kernel_basis(target).contains(kernel_basis(g)), where + ": assembly is not well defined");
  auto x = solve(g.transpose(), target.transpose());
  require(x.has_value(), where + ": generators do not span");
  return x->transpose();
}

}  // namespace detail

inline bool is_proper(const Dilation& d) {
  const auto& n = d.projected.module;
  return span_closure(column_space(d.projected.t), n.pi).is_full();
}

inline bool is_minimal(const Dilation& d) {
  return killed_submodule(d.projected.module, d.projected.t).is_zero();
}

inline ValidationReport check_dilation(const Dilation& d) {
  ValidationReport r;
  const auto& n = d.projected.module;
  const Mat& t = d.projected.t;
  const bool shapes = d.theta.rows() == n.dim && d.theta.cols() == d.source.dim;
  r.add("shapes", shapes);
  if (!shapes) return r;
  r.add("theta_injective", is_injective(d.theta));
  r.add("image", column_space(d.theta) == column_space(t));
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < n.pi.size(); ++i)
    if (d.theta * d.source.pi[i] != t * n.pi[i] * d.theta) bad.push_back(i);
  r.add("intertwining", bad.empty(), bad);
  const Restriction res = restrict(d.projected);
  const Mat iso = res.coordinates * d.theta;
  r.add("restriction_iso", iso.is_square() && is_injective(iso) && is_morphism(iso, d.source, res.module));
  r.add("proper", is_proper(d));
  r.add("minimal", is_minimal(d));
  return r;
}

inline Dilation standard_dilation(const PartialModule& m) {
  require_partial(m, "standard_dilation");
  const HopfAlgebra& h = *m.hopf;
  const std::size_t d = h.dim(), n = m.dim;
  const std::vector<Mat> act_full = detail::hom_action(h, n);
  const Mat phi = detail::phi_matrix(m);
  // T_pi(f) = phi(f(1))
  Mat eval_unit(1, d);
  for (std::size_t j = 0; j < d; ++j) eval_unit(0, j) = h.unit()[j];
  const Mat t_full = phi * kron(eval_unit, Mat::identity(n));

  const Subspace bar = span_closure(column_space(phi), act_full);
  PartialModule nbar{m.hopf, bar.dim(), {}};
  for (const auto& a : act_full) nbar.pi.push_back(restrict_operator(a, bar));
  Mat t = restrict_operator(t_full, bar);
  Dilation out{m, make_projected(std::move(nbar), std::move(t)), bar.coordinate_map() * phi, bar.inclusion()};
  const ValidationReport r = check_dilation(out);
  detail::require(r.ok(), "standard_dilation: construction failed its own checks");
  return out;
}

/// The map Phi : N -> standard dilation of d2.source with Phi theta = phi.
inline Mat universal_morphism(const Dilation& d2, const Dilation& standard) {
  if (!is_proper(d2)) throw InvalidInput("universal_morphism: dilation is not proper");
  const auto& n = d2.projected.module;
  const auto& mbar = standard.projected.module;
  const Mat g_n = detail::generator_matrix(n, d2.theta);
  const Mat g_m = detail::generator_matrix(mbar, standard.theta);
  const Mat phi = detail::solve_through(g_n, g_m, "universal_morphism");

  detail::require(phi * d2.theta == standard.theta, "universal_morphism: Phi theta != phi");
  detail::require(is_morphism(phi, n, mbar), "universal_morphism: Phi is not H-linear");
  detail::require(standard.projected.t * phi == phi * d2.projected.t, "universal_morphism: Phi does not commute with T");
  detail::require(is_surjective(phi), "universal_morphism: Phi is not surjective");
  detail::require(kernel_basis(phi) == killed_submodule(n, d2.projected.t),
                  "universal_morphism: ker Phi differs from the submodule killed by T");
  detail::require(is_injective(phi) == is_minimal(d2), "universal_morphism: injectivity differs from minimality");
  return phi;
}

inline Mat universal_morphism(const Dilation& d2) { return universal_morphism(d2, standard_dilation(d2.source)); }

/// fbar : Mbar -> Mbar' with fbar phi = phi' f, for precomputed standard dilations.
inline Mat dilate_morphism(const Mat& f, const Dilation& src, const Dilation& dst) {
  if (!is_morphism(f, src.source, dst.source)) throw InvalidInput("dilate_morphism: not a morphism of partial modules");
  const auto& a = src.projected.module;
  const auto& b = dst.projected.module;
  const Mat g_src = detail::generator_matrix(a, src.theta);
  const Mat g_dst = detail::generator_matrix(b, dst.theta * f);
  const Mat fbar = detail::solve_through(g_src, g_dst, "dilate_morphism");

  detail::require(fbar * src.theta == dst.theta * f, "dilate_morphism: fbar phi != phi' f");
  detail::require(is_morphism(fbar, a, b), "dilate_morphism: fbar is not H-linear");
  if (src.hom_inclusion && dst.hom_inclusion) {
    const std::size_t d = src.source.hopf->dim();
    const Subspace target = Subspace::span_columns(*dst.hom_inclusion);
    const Mat image = kron(Mat::identity(d), f) * *src.hom_inclusion;
    detail::require(target.coordinate_map() * image == fbar, "dilate_morphism: differs from Hom(H, f)");
  }
  detail::require(fbar.is_zero() == f.is_zero(), "dilate_morphism: not faithful");
  if (is_injective(f)) detail::require(is_injective(fbar), "dilate_morphism: injectivity lost");
  if (is_surjective(f)) detail::require(is_surjective(fbar), "dilate_morphism: surjectivity lost");
  return fbar;
}

inline Mat dilate_morphism(const ModuleMorphism& f) {
  return dilate_morphism(f.mat, standard_dilation(f.source), standard_dilation(f.target));
}

struct GlobalCharacterization {
  bool global = false;
  bool phi_bijective = false;
  bool right_inverse = false;
  bool t_identity = false;
  bool consistent() const { return global == phi_bijective && phi_bijective == right_inverse; }
};

inline GlobalCharacterization global_iff_phi_iso(const PartialModule& m) {
  const Dilation dil = standard_dilation(m);
  const auto& mbar = dil.projected.module;
  GlobalCharacterization r;
  r.global = is_global(m);
  r.phi_bijective = dil.theta.is_square() && is_injective(dil.theta);
  r.t_identity = dil.projected.t == Mat::identity(mbar.dim);
  // psi : Mbar -> M a morphism of partial modules with phi psi = id
  const std::vector<Mat> homs = hom_space(mbar, m);
  if (!homs.empty()) {
    std::vector<Mat> cols;
    for (const auto& b : homs) {
      const Vec v = flatten(dil.theta * b);
      cols.push_back(reshape(v, v.size(), 1));
    }
    const Vec id = flatten(Mat::identity(mbar.dim));
    r.right_inverse = solve(hstack(cols, id.size()), reshape(id, id.size(), 1)).has_value();
  } else {
    r.right_inverse = mbar.dim == 0;
  }
  detail::require(r.consistent(), "global_iff_phi_iso: the three characterizations disagree");
  if (r.global) detail::require(r.t_identity, "global_iff_phi_iso: T is not the identity on a global module");
  return r;
}

struct SumReport {
  std::size_t sum_dilation_dim = 0;
  std::vector<std::size_t> summand_dilation_dims;
  Mat canonical;  // direct sum of dilations -> dilation of the sum
  bool bijective = false;
};

inline SumReport dilation_preserves_sums(const std::vector<PartialModule>& ms) {
  const PartialModule total = direct_sum(ms);
  const Dilation big = standard_dilation(total);
  const std::vector<Mat> inj = sum_injections(ms);
  SumReport r;
  r.sum_dilation_dim = big.projected.module.dim;
  std::vector<Mat> blocks;
  std::vector<PartialModule> bars;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const Dilation dk = standard_dilation(ms[k]);
    r.summand_dilation_dims.push_back(dk.projected.module.dim);
    blocks.push_back(dilate_morphism(inj[k], dk, big));
    bars.push_back(dk.projected.module);
  }
  r.canonical = hstack(blocks, r.sum_dilation_dim);
  detail::require(is_morphism(r.canonical, direct_sum(total.hopf, bars), big.projected.module),
                  "dilation_preserves_sums: canonical map is not H-linear");
  r.bijective = r.canonical.is_square() && is_injective(r.canonical);
  return r;
}

/// Action and projection of a dilation in another basis of N, given as the
/// columns of an invertible matrix in N's coordinates.
struct BasisView {
  std::vector<Mat> action;
  Mat t;
};

inline BasisView in_basis(const Dilation& d, const Mat& basis) {
  auto inv = inverse(basis);
  if (!inv) throw InvalidInput("in_basis: columns do not form a basis");
  BasisView v{{}, *inv * d.projected.t * basis};
  for (const auto& a : d.projected.module.pi) v.action.push_back(*inv * a * basis);
  return v;
}

/// Vectors of Hom(H, M) = M^d (block j = f(e_j)) in the coordinates of a standard dilation.
inline Mat hom_coordinates(const Dilation& d, const Mat& hom_vectors) {
  if (!d.hom_inclusion) throw InvalidInput("hom_coordinates: not a standard dilation");
  const Subspace bar = Subspace::span_columns(*d.hom_inclusion);
  if (!bar.contains_columns(hom_vectors)) throw InvalidInput("hom_coordinates: vectors outside the dilation");
  return bar.coordinate_map() * hom_vectors;
}

}  // namespace hopfpar
