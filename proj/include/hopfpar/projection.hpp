#pragma once

// Global modules with a projection satisfying the c-condition, and the
// restriction functor to partial modules.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpar/error.hpp"
#include "hopfpar/linalg.hpp"
#include "hopfpar/partial.hpp"

namespace hopfpar {

/// T_h = h_(1) . T(S(h_(2)) . -) for h = e_i.
inline Mat adjoint_op(const PartialModule& m, const Mat& t, std::size_t i) {
  Mat out(m.dim, m.dim);
  for (const auto& term : m.hopf->coproduct(i))
    out.add_scaled(term.coeff, m.pi[term.left] * t * act(m, m.hopf->antipode(term.right)));
  return out;
}

/// T~_h = S(h_(1)) . T(h_(2) . -) for h = e_i.
inline Mat tilde_op(const PartialModule& m, const Mat& t, std::size_t i) {
  Mat out(m.dim, m.dim);
  for (const auto& term : m.hopf->coproduct(i))
    out.add_scaled(term.coeff, act(m, m.hopf->antipode(term.left)) * t * m.pi[term.right]);
  return out;
}

/// T_h and T~_h for an arbitrary element h given in coordinates.
inline Mat adjoint_op(const PartialModule& m, const Mat& t, const Vec& h) {
  Mat out(m.dim, m.dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(h[i]) != 0) out.add_scaled(h[i], adjoint_op(m, t, i));
  return out;
}

inline Mat tilde_op(const PartialModule& m, const Mat& t, const Vec& h) {
  Mat out(m.dim, m.dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(h[i]) != 0) out.add_scaled(h[i], tilde_op(m, t, i));
  return out;
}

struct CConditionResult {
  bool holds = true;
  std::optional<std::size_t> witness;  // basis index where T_h T != T T_h
};

namespace detail {
inline void check_projection_shape(const PartialModule& m, const Mat& t) {
  check_shape(m);
  require_dims(t.rows() == m.dim && t.cols() == m.dim, "projection has wrong size");
}
}  // namespace detail

inline CConditionResult check_c_condition(const PartialModule& m, const Mat& t) {
  detail::check_projection_shape(m, t);
  if (t * t != t) throw InvalidInput("check_c_condition: t is not idempotent");
  require_global(m, "check_c_condition");
  for (std::size_t i = 0; i < m.hopf->dim(); ++i) {
    const Mat th = adjoint_op(m, t, i);
    if (th * t != t * th) return {false, i};
  }
  return {};
}

/// A global module with a projection satisfying the c-condition; only
/// constructible through make_projected, which validates both.
struct ProjectedModule {
  PartialModule module;
  Mat t;
};

inline ProjectedModule make_projected(PartialModule module, Mat t) {
  const auto c = check_c_condition(module, t);
  if (!c.holds) throw InvalidInput("projection fails the c-condition at basis index " + std::to_string(*c.witness));
  return {std::move(module), std::move(t)};
}

inline Mat adjoint_op(const ProjectedModule& p, std::size_t i) { return adjoint_op(p.module, p.t, i); }
inline Mat tilde_op(const ProjectedModule& p, std::size_t i) { return tilde_op(p.module, p.t, i); }

struct EquivalenceReport {
  bool c_condition = false;        // T_h T = T T_h
  bool c_tilde_condition = false;  // T~_h T = T T~_h
  bool commuting = false;          // T_h T~_k = T~_k T_h
  bool consistent() const { return c_condition == c_tilde_condition && c_tilde_condition == commuting; }
};

/// Evaluates the three equivalent conditions independently.
inline EquivalenceReport check_equivalence_lemma(const PartialModule& m, const Mat& t) {
  detail::check_projection_shape(m, t);
  if (t * t != t) throw InvalidInput("check_equivalence_lemma: t is not idempotent");
  require_global(m, "check_equivalence_lemma");
  const std::size_t d = m.hopf->dim();
  std::vector<Mat> th(d), tt(d);
  for (std::size_t i = 0; i < d; ++i) {
    th[i] = adjoint_op(m, t, i);
    tt[i] = tilde_op(m, t, i);
  }
  EquivalenceReport r{true, true, true};
  for (std::size_t i = 0; i < d; ++i) {
    if (th[i] * t != t * th[i]) r.c_condition = false;
    if (tt[i] * t != t * tt[i]) r.c_tilde_condition = false;
    for (std::size_t k = 0; k < d; ++k)
      if (th[i] * tt[k] != tt[k] * th[i]) r.commuting = false;
  }
  return r;
}

inline EquivalenceReport check_equivalence_lemma(const ProjectedModule& p) {
  return check_equivalence_lemma(p.module, p.t);
}

struct Restriction {
  PartialModule module;  // on T M, in the echelon basis of the column space of t
  Mat inclusion;         // T M -> M
  Mat coordinates;       // M -> T M, left inverse of inclusion on T M
};

/// The partial module T M with pi(h) = T(h . -).
inline Restriction restrict(const ProjectedModule& p) {
  const Subspace image = column_space(p.t);
  Restriction r{{p.module.hopf, image.dim(), {}}, image.inclusion(), image.coordinate_map()};
  for (const auto& x : p.module.pi) r.module.pi.push_back(r.coordinates * p.t * x * r.inclusion);
  require_partial(r.module, "restrict");
  return r;
}

/// Largest submodule of a global module annihilated by t: {x : t(h . x) = 0 for all h}.
inline Subspace killed_submodule(const PartialModule& m, const Mat& t) {
  std::vector<Mat> rows;
  for (const auto& a : algebra_basis(image_algebra(m), m.dim)) rows.push_back(t * a);
  return kernel_basis(vstack(rows, m.dim));
}

struct Minimalized {
  ProjectedModule projected;
  Mat transfer;  // M -> new module, defined on H . TM (zero elsewhere is not implied)
  Subspace generated;
  Subspace killed;
};

/// Replaces (M, T) by (H . TM / K, T) where K is the largest submodule of
/// H . TM annihilated by T.
inline Minimalized minimalize(const ProjectedModule& p) {
  const PartialModule& m = p.module;
  const Subspace gen = span_closure(column_space(p.t), m.pi);
  const PartialModule sub = submodule(m, gen);
  const Mat t_sub = restrict_operator(p.t, gen);
  const Subspace killed = killed_submodule(sub, t_sub);
  const QuotientModule q = quotient_module(sub, killed);
  const QuotientMap qm = quotient_map(sub.dim, killed);
  const Mat t_new = induced_operator(t_sub, qm);
  Minimalized out{make_projected(q.module, t_new), q.projection * gen.coordinate_map(), gen, killed};
  detail::require(killed_submodule(out.projected.module, out.projected.t).is_zero(),
                  "minimalize: result still has a submodule killed by t");
  return out;
}

/// Morphisms (M, T) -> (N, S): maps f: TM -> SN with f(T(h . m)) = S(h . f(m)),
/// each represented as the ambient map F = S F T : M -> N.
inline std::vector<Mat> projected_morphisms(const ProjectedModule& p, const ProjectedModule& q) {
  require_same_hopf(p.module, q.module);
  const std::size_t m = p.module.dim, n = q.module.dim;
  const Mat& t = p.t;
  const Mat& s = q.t;
  const Mat im = Mat::identity(m), in = Mat::identity(n);
  // vec(A F B) = (A (x) B^T) vec F
  std::vector<Mat> eqs = {kron(in, im) - kron(s, t.transpose())};
  for (std::size_t i = 0; i < p.module.pi.size(); ++i) {
    const Mat left = t * p.module.pi[i] * t;  // F T h T
    eqs.push_back(kron(in, left.transpose()) - kron(s * q.module.pi[i], t.transpose()));
  }
  const Subspace sol = kernel_basis(vstack(eqs, n * m));
  std::vector<Mat> out;
  for (std::size_t k = 0; k < sol.dim(); ++k) out.push_back(reshape(sol.basis_vector(k), n, m));
  return out;
}

}  // namespace hopfpar
