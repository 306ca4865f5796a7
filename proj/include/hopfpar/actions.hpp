#pragma once

// Partial module algebras, partial and global smash products, globalization
// through the standard dilation, and the Morita context between the smash products.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpar/dilation.hpp"
#include "hopfpar/error.hpp"
#include "hopfpar/hopf.hpp"
#include "hopfpar/linalg.hpp"
#include "hopfpar/partial.hpp"

namespace hopfpar {

/// Finite-dimensional algebra by structure constants, possibly without unit:
/// b_i b_j = sum_k mult[(i * dim + j) * dim + k] b_k.
struct Algebra {
  std::size_t dim = 0;
  std::vector<Scalar> mult;
  std::optional<Vec> unit;

  const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  Scalar& m(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }

  Vec product(const Vec& a, const Vec& b) const {
    detail::require_dims(a.size() == dim && b.size() == dim, "Algebra::product: wrong vector size");
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (sgn(b[j]) == 0) continue;
        const Scalar ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim; ++k)
          if (sgn(m(i, j, k)) != 0) detail::add_product(out[k], ab, m(i, j, k));
      }
    }
    return out;
  }

  /// Matrix of x -> a x.
  Mat left_mult(const Vec& a) const {
    Mat l(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Vec c = product(a, unit_vector(dim, j));
      for (std::size_t k = 0; k < dim; ++k) l(k, j) = c[k];
    }
    return l;
  }

  /// Matrix of x -> x a.
  Mat right_mult(const Vec& a) const {
    Mat r(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Vec c = product(unit_vector(dim, j), a);
      for (std::size_t k = 0; k < dim; ++k) r(k, j) = c[k];
    }
    return r;
  }

  /// The product as a dim x dim^2 matrix on B (x) B.
  Mat product_matrix() const {
    Mat p(dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) p(k, i * dim + j) = m(i, j, k);
    return p;
  }

  bool operator==(const Algebra&) const = default;
};

/// Builds structure constants from a product of basis vectors.
inline Algebra algebra_from(std::size_t n, const std::function<Vec(std::size_t, std::size_t)>& basis_product,
                            std::optional<Vec> unit = std::nullopt) {
  Algebra a{n, std::vector<Scalar>(n * n * n), std::move(unit)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec v = basis_product(i, j);
      detail::require_dims(v.size() == n, "algebra_from: product has wrong size");
      for (std::size_t k = 0; k < n; ++k) a.m(i, j, k) = v[k];
    }
  return a;
}

inline bool is_associative(const Algebra& a) {
  const std::size_t n = a.dim;
  // sparse basis products
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(a.m(i, j, k)) != 0) prod[i * n + j].emplace_back(k, a.m(i, j, k));
  Vec lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar(0));
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        for (const auto& [p, c] : prod[i * n + j])
          for (const auto& [q, d] : prod[p * n + k]) detail::add_product(lhs[q], c, d);
        for (const auto& [p, c] : prod[j * n + k])
          for (const auto& [q, d] : prod[i * n + p]) detail::add_product(rhs[q], c, d);
        if (lhs != rhs) return false;
      }
  return true;
}

inline bool is_two_sided_unit(const Algebra& a, const Vec& u) {
  const Mat id = Mat::identity(a.dim);
  return a.left_mult(u) == id && a.right_mult(u) == id;
}

/// Restricts a product on an ambient space to a subspace closed under it.
inline Algebra subalgebra(const Subspace& s, const std::function<Vec(const Vec&, const Vec&)>& ambient_product,
                          const std::string& where) {
  const std::size_t n = s.dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(s.basis_vector(i));
  return algebra_from(n, [&](std::size_t i, std::size_t j) {
    const Vec v = ambient_product(basis[i], basis[j]);
    detail::require(s.contains(v), where + ": subspace is not closed under the product");
    return s.coordinates(v);
  });
}

// ---------------------------------------------------------------------------
// Partial module algebras

struct PartialModuleAlgebra {
  HopfPtr hopf;
  Algebra alg;
  std::vector<Mat> action;  // e_i . - on B

  std::size_t dim() const { return alg.dim; }
  PartialModule module() const { return {hopf, alg.dim, action}; }
  const Vec& one() const {
    if (!alg.unit) throw InvalidInput("partial module algebra needs a unit");
    return *alg.unit;
  }
};

namespace detail {

inline void check_action_shape(const PartialModuleAlgebra& b) {
  if (!b.hopf) throw InvalidInput("partial module algebra without Hopf algebra");
  require_dims(b.alg.mult.size() == b.alg.dim * b.alg.dim * b.alg.dim, "algebra structure constants have wrong size");
  require_dims(b.action.size() == b.hopf->dim(), "action needs one matrix per Hopf basis element");
  for (const auto& a : b.action) require_dims(a.rows() == b.alg.dim && a.cols() == b.alg.dim, "action matrix has wrong size");
  if (b.alg.unit) require_dims(b.alg.unit->size() == b.alg.dim, "unit has wrong size");
}

/// Action of an arbitrary element of H.
inline Mat act_by(const PartialModuleAlgebra& b, const Vec& h) {
  Mat out(b.dim(), b.dim());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(h[i]) != 0) out.add_scaled(h[i], b.action[i]);
  return out;
}

}  // namespace detail

/// PA1, PA2, PA3, PA3' over all basis elements, plus the partial module axioms.
inline ValidationReport check_partial_action(const PartialModuleAlgebra& b) {
  detail::check_action_shape(b);
  ValidationReport r;
  const HopfAlgebra& h = *b.hopf;
  const std::size_t d = h.dim(), n = b.dim();
  const bool unital = b.alg.unit && is_two_sided_unit(b.alg, *b.alg.unit);
  r.add("unital", unital);
  r.add("associative", is_associative(b.alg));
  if (!unital) return r;
  const Vec& one = *b.alg.unit;

  r.add("PA1", detail::act_by(b, h.unit()) == Mat::identity(n));

  const Mat mu = b.alg.product_matrix();
  std::vector<std::size_t> bad2;
  for (std::size_t i = 0; i < d; ++i) {
    Mat rhs(n, n * n);
    for (const auto& t : h.coproduct(i)) rhs.add_scaled(t.coeff, mu * kron(b.action[t.left], b.action[t.right]));
    if (b.action[i] * mu != rhs) bad2.push_back(i);
  }
  r.add("PA2", bad2.empty(), bad2);

  std::vector<Mat> act_one_left(d), act_one_right(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec c = b.action[i] * one;
    act_one_left[i] = b.alg.left_mult(c);
    act_one_right[i] = b.alg.right_mult(c);
  }
  std::vector<std::size_t> bad3, bad3s;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Mat lhs = b.action[i] * b.action[j];
      Mat rhs3(n, n), rhs3s(n, n);
      for (const auto& t : h.coproduct(i)) {
        rhs3.add_scaled(t.coeff, act_one_left[t.left] * detail::act_by(b, h.multiply(h.basis(t.right), h.basis(j))));
        rhs3s.add_scaled(t.coeff, act_one_right[t.right] * detail::act_by(b, h.multiply(h.basis(t.left), h.basis(j))));
      }
      if (lhs != rhs3) bad3.insert(bad3.end(), {i, j});
      if (lhs != rhs3s) bad3s.insert(bad3s.end(), {i, j});
    }
  r.add("PA3", bad3.empty(), bad3);
  r.add("PA3'", bad3s.empty(), bad3s);
  r.add("partial_module", check_partial_rep(b.module()).ok());
  return r;
}

inline void require_partial_action(const PartialModuleAlgebra& b, const std::string& where) {
  const auto r = check_partial_action(b);
  for (const auto& c : r.checks)
    if (!c.passed) throw AxiomViolation(where + ": " + c.name + " fails");
}

/// Global (possibly non-unital) module algebra axioms: multiplicative action,
/// h(ab) = (h1 a)(h2 b), and h 1 = eps(h) 1 when there is a unit.
inline ValidationReport check_module_algebra(const HopfPtr& hopf, const Algebra& alg, const std::vector<Mat>& action) {
  ValidationReport r;
  const PartialModule m{hopf, alg.dim, action};
  check_shape(m);
  r.add("global", is_global(m));
  const Mat mu = alg.product_matrix();
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < hopf->dim(); ++i) {
    Mat rhs(alg.dim, alg.dim * alg.dim);
    for (const auto& t : hopf->coproduct(i)) rhs.add_scaled(t.coeff, mu * kron(action[t.left], action[t.right]));
    if (action[i] * mu != rhs) bad.push_back(i);
  }
  r.add("measuring", bad.empty(), bad);
  if (alg.unit) {
    std::vector<std::size_t> bad1;
    for (std::size_t i = 0; i < hopf->dim(); ++i)
      if (action[i] * *alg.unit != scaled(hopf->counit()[i], *alg.unit)) bad1.push_back(i);
    r.add("unit", bad1.empty(), bad1);
  }
  return r;
}

/// A = eB with h . a = e (h > a) for a global module algebra B and a central idempotent e.
inline PartialModuleAlgebra induced_partial_algebra(const PartialModuleAlgebra& global, const Vec& e) {
  detail::check_action_shape(global);
  const auto gr = check_module_algebra(global.hopf, global.alg, global.action);
  for (const auto& c : gr.checks)
    if (!c.passed) throw InvalidInput("induced_partial_algebra: not a global module algebra (" + c.name + ")");
  if (!global.alg.unit) throw InvalidInput("induced_partial_algebra: algebra needs a unit");
  const Algebra& b = global.alg;
  detail::require_dims(e.size() == b.dim, "induced_partial_algebra: idempotent has wrong size");
  if (b.product(e, e) != e) throw InvalidInput("induced_partial_algebra: e is not idempotent");
  const Mat le = b.left_mult(e);
  if (le != b.right_mult(e)) throw InvalidInput("induced_partial_algebra: e is not central");

  const Subspace a = column_space(le);
  PartialModuleAlgebra out{global.hopf, subalgebra(a, [&](const Vec& x, const Vec& y) { return b.product(x, y); },
                                                   "induced_partial_algebra"),
                           {}};
  if (a.dim() > 0) out.alg.unit = a.coordinates(e);
  else out.alg.unit = Vec{};
  for (const auto& x : global.action) out.action.push_back(a.coordinate_map() * le * x * a.inclusion());
  require_partial_action(out, "induced_partial_algebra");
  return out;
}

/// The same partial module algebra in the basis given by the columns of p.
inline PartialModuleAlgebra change_basis(const PartialModuleAlgebra& b, const Mat& p) {
  detail::check_action_shape(b);
  auto inv = inverse(p);
  if (!inv || p.rows() != b.dim()) throw InvalidInput("change_basis: not an invertible matrix of the right size");
  PartialModuleAlgebra out{b.hopf, algebra_from(b.dim(), [&](std::size_t i, std::size_t j) {
                             return *inv * b.alg.product(p.column(i), p.column(j));
                           }),
                           {}};
  if (b.alg.unit) out.alg.unit = *inv * *b.alg.unit;
  for (const auto& a : b.action) out.action.push_back(*inv * a * p);
  return out;
}

// ---------------------------------------------------------------------------
// Smash products

/// An algebra realized on a subspace of X (x) H, X = B or the globalization.
struct SmashAlgebra {
  Mat inclusion;             // (dim X * dim H) x dim, columns are the basis
  Algebra alg;
  std::vector<Mat> h_action;  // H-module structure on the algebra
  std::vector<Vec> h_embedding;  // coordinates of 1 # e_i; empty without a unit
  ValidationReport report;
};

namespace detail {

/// (a # h)(b # k) = a (h1 . b) # h2 k on X (x) H, with X an algebra acted on by act.
inline Vec smash_product(const HopfAlgebra& h, const Algebra& x, const std::vector<Mat>& act, const Vec& u,
                         const Vec& v) {
  const std::size_t d = h.dim(), n = x.dim;
  Vec out(n * d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < d; ++i) {
      const Scalar& cu = u[a * d + i];
      if (sgn(cu) == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar& cv = v[b * d + k];
          if (sgn(cv) == 0) continue;
          for (const auto& t : h.coproduct(i)) {
            const Vec left = x.product(unit_vector(n, a), act[t.left] * unit_vector(n, b));
            const Scalar coeff = cu * cv * t.coeff;
            for (const auto& [r, c] : h.product(t.right, k))
              for (std::size_t p = 0; p < n; ++p)
                if (sgn(left[p]) != 0) detail::add_product(out[p * d + r], coeff, left[p] * c);
          }
        }
    }
  return out;
}

}  // namespace detail

/// The idempotent b (x) h -> b (h1 . 1) (x) h2 on B (x) H.
inline Mat smash_idempotent(const PartialModuleAlgebra& b) {
  const HopfAlgebra& h = *b.hopf;
  const std::size_t d = h.dim(), n = b.dim();
  Mat e(n * d, n * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& t : h.coproduct(i)) {
      const Mat right = b.alg.right_mult(b.action[t.left] * b.one());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t p = 0; p < n; ++p)
          if (sgn(right(p, a)) != 0) e(p * d + t.right, a * d + i) += t.coeff * right(p, a);
    }
  }
  return e;
}

inline SmashAlgebra partial_smash(const PartialModuleAlgebra& b) {
  require_partial_action(b, "partial_smash");
  const HopfAlgebra& h = *b.hopf;
  const std::size_t d = h.dim();
  const Mat e = smash_idempotent(b);
  detail::require(e * e == e, "partial_smash: b (x) h -> b(h1 . 1) (x) h2 is not idempotent");
  const Subspace s = column_space(e);
  auto product = [&](const Vec& u, const Vec& v) { return detail::smash_product(h, b.alg, b.action, u, v); };
  SmashAlgebra out{s.inclusion(), subalgebra(s, product, "partial_smash"), {}, {}, {}};
  out.alg.unit = s.coordinates(kron(b.one(), h.unit()));
  auto& r = out.report;
  r.add("idempotent", true);
  r.add("associative", is_associative(out.alg));
  r.add("unit", is_two_sided_unit(out.alg, *out.alg.unit));
  for (std::size_t i = 0; i < d; ++i) {
    out.h_embedding.push_back(s.coordinates(e * kron(b.one(), h.basis(i))));
    out.h_action.push_back(out.alg.left_mult(out.h_embedding.back()));
  }
  r.add("partial_representation", check_partial_rep(PartialModule{b.hopf, s.dim(), out.h_action}).ok());

  // a direct summand of B (x) H with the diagonal partial action
  const PartialModule bh = tensor_with_global(b.module(), regular_module(b.hopf));
  const Subspace complement = kernel_basis(e);
  std::vector<std::size_t> commute, stable, diagonal;
  for (std::size_t i = 0; i < d; ++i) {
    if (bh.pi[i] * e != e * bh.pi[i]) commute.push_back(i);
    if (!complement.is_invariant(bh.pi[i])) stable.push_back(i);
    if (restrict_operator(bh.pi[i], s) != out.h_action[i]) diagonal.push_back(i);
  }
  r.add("idempotent_is_morphism", commute.empty(), commute);
  r.add("complement_stable", stable.empty(), stable);
  r.add("diagonal_action", diagonal.empty(), diagonal);
  detail::require(r.ok(), "partial_smash: construction failed its own checks");
  return out;
}

// ---------------------------------------------------------------------------
// Globalization

struct Globalization {
  PartialModuleAlgebra source;
  Dilation dilation;   // standard dilation of the underlying partial module
  Algebra alg;         // convolution product on Bbar, no unit in general
  Mat phi;             // B -> Bbar, equal to dilation.theta
  ValidationReport report;
  const std::vector<Mat>& action() const { return dilation.projected.module.pi; }
  std::size_t dim() const { return alg.dim; }
};

namespace detail {

/// (f * g)(e_k) = sum over Delta(e_k) of f(e_l) g(e_r) on Hom(H, B) = B^d.
inline Vec convolution(const HopfAlgebra& h, const Algebra& b, const Vec& f, const Vec& g) {
  const std::size_t d = h.dim(), n = b.dim;
  Vec out(d * n);
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& t : h.coproduct(k)) {
      const Vec fl(f.begin() + static_cast<std::ptrdiff_t>(t.left * n), f.begin() + static_cast<std::ptrdiff_t>((t.left + 1) * n));
      const Vec gr(g.begin() + static_cast<std::ptrdiff_t>(t.right * n), g.begin() + static_cast<std::ptrdiff_t>((t.right + 1) * n));
      const Vec p = b.product(fl, gr);
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(p[i]) != 0) detail::add_product(out[k * n + i], t.coeff, p[i]);
    }
  return out;
}

}  // namespace detail

/// Products of all pairs of columns.
inline Subspace product_span(const Algebra& a, const Mat& left, const Mat& right) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < left.cols(); ++i)
    for (std::size_t j = 0; j < right.cols(); ++j) vs.push_back(a.product(left.column(i), right.column(j)));
  return Subspace::span(vs, a.dim);
}

inline bool is_idempotent_algebra(const Algebra& a) {
  return product_span(a, Mat::identity(a.dim), Mat::identity(a.dim)).is_full();
}

inline Globalization globalize(const PartialModuleAlgebra& b) {
  require_partial_action(b, "globalize");
  const HopfAlgebra& h = *b.hopf;
  const std::size_t n = b.dim(), d = h.dim();
  Dilation dil = standard_dilation(b.module());
  const Subspace bar = Subspace::span_columns(*dil.hom_inclusion);
  auto conv = [&](const Vec& f, const Vec& g) { return detail::convolution(h, b.alg, f, g); };
  Globalization out{b, dil, subalgebra(bar, conv, "globalize"), dil.theta, {}};
  const Algebra& a = out.alg;
  const std::size_t m = a.dim;
  const auto& act = out.action();
  auto& r = out.report;

  r.add("closed", true);
  r.add("associative", is_associative(a));
  r.add("module_algebra", check_module_algebra(b.hopf, a, act).ok());
  r.add("phi_injective", is_injective(out.phi));
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.phi * b.alg.product(unit_vector(n, i), unit_vector(n, j)) != a.product(out.phi.column(i), out.phi.column(j)))
        bad.insert(bad.end(), {i, j});
  r.add("phi_multiplicative", bad.empty(), bad);

  const Subspace image = column_space(out.phi);
  r.add("ideal", image.contains(product_span(a, out.phi, Mat::identity(m))) &&
                     image.contains(product_span(a, Mat::identity(m), out.phi)));
  r.add("generates", span_closure(image, act).is_full());
  r.add("idempotent", is_idempotent_algebra(a));

  // (h1 > phi(b)) * (h2 > phi(1)) = h > phi(b)
  const Vec phi_one = out.phi * b.one();
  bad.clear();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs(m);
      for (const auto& t : h.coproduct(i))
        lhs = add(lhs, scaled(t.coeff, a.product(act[t.left] * out.phi.column(j), act[t.right] * phi_one)));
      if (lhs != act[i] * out.phi.column(j)) bad.insert(bad.end(), {i, j});
    }
  r.add("idempotency_identity", bad.empty(), bad);

  // h . a = phi(1) * (h > phi(a)) pulled back along phi
  bad.clear();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.phi * (b.action[i] * unit_vector(n, j)) != a.product(phi_one, act[i] * out.phi.column(j)))
        bad.insert(bad.end(), {i, j});
  r.add("restricted_action", bad.empty(), bad);
  detail::require(r.ok(), "globalize: construction failed its own checks");
  return out;
}

/// Bbar # H on Bbar (x) H with (f # h)(g # k) = f * (h1 > g) # h2 k.
inline SmashAlgebra global_smash(const HopfPtr& hopf, const Algebra& bar, const std::vector<Mat>& action) {
  const auto mr = check_module_algebra(hopf, bar, action);
  for (const auto& c : mr.checks)
    if (!c.passed) throw InvalidInput("global_smash: not an H-module algebra (" + c.name + ")");
  const HopfAlgebra& h = *hopf;
  const std::size_t d = h.dim(), n = bar.dim * d;
  SmashAlgebra out{Mat::identity(n), algebra_from(n, [&](std::size_t i, std::size_t j) {
                     return detail::smash_product(h, bar, action, unit_vector(n, i), unit_vector(n, j));
                   }),
                   {}, {}, {}};
  // H acts diagonally on Bbar (x) H
  out.h_action = tensor_with_global(PartialModule{hopf, bar.dim, action}, regular_module(hopf)).pi;
  auto& r = out.report;
  r.add("associative", is_associative(out.alg));
  if (bar.unit) {
    out.alg.unit = kron(*bar.unit, h.unit());
    r.add("unit", is_two_sided_unit(out.alg, *out.alg.unit));
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < d; ++i) {
      out.h_embedding.push_back(kron(*bar.unit, h.basis(i)));
      if (out.alg.left_mult(out.h_embedding.back()) != out.h_action[i]) bad.push_back(i);
    }
    r.add("diagonal_action", bad.empty(), bad);
  }
  detail::require(r.ok(), "global_smash: construction failed its own checks");
  return out;
}

inline SmashAlgebra global_smash(const Globalization& g) { return global_smash(g.source.hopf, g.alg, g.action()); }

// ---------------------------------------------------------------------------
// The isomorphism between the dilation of B (x) H and Bbar (x) H

struct ZetaXi {
  PartialModule tensor;       // B (x) H with the diagonal partial action
  Dilation tensor_dilation;   // its standard dilation
  Globalization glob;
  Mat zeta;                   // tensor dilation -> Bbar (x) H
  Mat xi;                     // Bbar (x) H -> tensor dilation
  Mat summand_embedding;      // dilation of the partial smash -> Bbar (x) H
  Mat summand_retraction;     // H-linear left inverse of the embedding
  std::size_t summand_rank = 0;
  ValidationReport report;
};

inline ZetaXi zeta_xi(const PartialModuleAlgebra& b) {
  require_partial_action(b, "zeta_xi");
  const HopfAlgebra& h = *b.hopf;
  const std::size_t n = b.dim(), d = h.dim();
  ZetaXi z{tensor_with_global(b.module(), regular_module(b.hopf)), {}, globalize(b), {}, {}, {}, {}, 0, {}};
  z.tensor_dilation = standard_dilation(z.tensor);
  const auto& over = z.tensor_dilation.projected.module;
  const auto& gact = z.glob.action();
  const std::size_t gbar = z.glob.dim();
  const PartialModule target = tensor_with_global(PartialModule{b.hopf, gbar, gact}, regular_module(b.hopf));

  // zeta(e_i > phi(b_j (x) e_l)) = sum (e_i1 > phi(b_j)) (x) e_i2 e_l
  std::vector<Vec> gens, images;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        gens.push_back(over.pi[i] * (z.tensor_dilation.theta * kron(unit_vector(n, j), h.basis(l))));
        Vec img(gbar * d);
        for (const auto& t : h.coproduct(i))
          img = add(img, scaled(t.coeff, kron(gact[t.left] * z.glob.phi.column(j), h.multiply(h.basis(t.right), h.basis(l)))));
        images.push_back(std::move(img));
      }
  z.zeta = detail::solve_through(Mat::from_columns(gens, over.dim), Mat::from_columns(images, gbar * d), "zeta");

  // xi((e_i > phi(b_j)) (x) e_m) = sum e_i1 > phi(b_j (x) S(e_i2) e_m)
  gens.clear();
  images.clear();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < d; ++m) {
        gens.push_back(kron(gact[i] * z.glob.phi.column(j), h.basis(m)));
        Vec img(over.dim);
        for (const auto& t : h.coproduct(i)) {
          const Vec v = kron(unit_vector(n, j), h.multiply(h.antipode(t.right), h.basis(m)));
          img = add(img, scaled(t.coeff, over.pi[t.left] * (z.tensor_dilation.theta * v)));
        }
        images.push_back(std::move(img));
      }
  z.xi = detail::solve_through(Mat::from_columns(gens, gbar * d), Mat::from_columns(images, over.dim), "xi");

  auto& r = z.report;
  r.add("zeta_xi_identity", z.zeta * z.xi == Mat::identity(gbar * d));
  r.add("xi_zeta_identity", z.xi * z.zeta == Mat::identity(over.dim));
  r.add("zeta_linear", is_morphism(z.zeta, over, target));

  // the partial smash product is a summand of B (x) H; dilate inclusion and retraction
  const Mat e = smash_idempotent(b);
  const Subspace s = column_space(e);
  const PartialModule smash_module = submodule(z.tensor, s);
  const Dilation ds = standard_dilation(smash_module);
  const Mat incl = dilate_morphism(s.inclusion(), ds, z.tensor_dilation);
  const Mat retr = dilate_morphism(s.coordinate_map() * e, z.tensor_dilation, ds);
  z.summand_embedding = z.zeta * incl;
  z.summand_retraction = retr * z.xi;
  z.summand_rank = rank(z.summand_embedding);
  r.add("summand_splits", z.summand_retraction * z.summand_embedding == Mat::identity(ds.projected.module.dim));
  r.add("summand_injective", z.summand_rank == ds.projected.module.dim);
  r.add("summand_linear", is_morphism(z.summand_embedding, ds.projected.module, target) &&
                              is_morphism(z.summand_retraction, target, ds.projected.module));
  detail::require(r.ok(), "zeta_xi: construction failed its own checks");
  return z;
}

// ---------------------------------------------------------------------------
// Morita context

struct MoritaContext {
  SmashAlgebra partial;   // the partial smash product
  SmashAlgebra global;    // Bbar # H
  Mat big_phi;            // partial smash -> Bbar # H, b # h -> phi(b) (x) h
  Subspace p, q;          // inside Bbar # H
  Subspace tau_image, mu_image, partial_image;
  ValidationReport report;
  bool tau_surjective() const { return tau_image == partial_image; }
  bool mu_surjective() const { return mu_image.is_full(); }
};

inline MoritaContext morita_context(const PartialModuleAlgebra& b) {
  const HopfAlgebra& h = *b.hopf;
  const std::size_t n = b.dim(), d = h.dim();
  const Globalization g = globalize(b);
  const std::size_t m = g.dim();
  const auto& act = g.action();
  MoritaContext mc{partial_smash(b), global_smash(g), {}, Subspace(0), Subspace(0),
                   Subspace(0), Subspace(0), Subspace(0), {}};
  const Algebra& gs = mc.global.alg;
  auto& r = mc.report;

  const Mat phi_full = kron(g.phi, Mat::identity(d));
  mc.big_phi = phi_full * mc.partial.inclusion;
  const std::size_t ps = mc.partial.alg.dim;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < ps; ++i)
    for (std::size_t j = 0; j < ps; ++j)
      if (mc.big_phi * mc.partial.alg.product(unit_vector(ps, i), unit_vector(ps, j)) !=
          gs.product(mc.big_phi.column(i), mc.big_phi.column(j)))
        bad.insert(bad.end(), {i, j});
  r.add("phi_multiplicative", bad.empty(), bad);

  // phi(a(h . 1)) = phi(a) * (h > phi(1)) = sum phi(a(h1 . 1)) * (h2 > phi(1)),
  // and at e_k the last one is (k1 . a)(k2 h . 1)
  const Vec one = b.one();
  const Vec phi_one = g.phi * one;
  const Mat& hom = *g.dilation.hom_inclusion;
  std::vector<std::size_t> bad3, badk;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < d; ++i) {
      const Vec ea = unit_vector(n, a);
      const Vec x1 = g.phi * b.alg.product(ea, b.action[i] * one);
      const Vec x2 = g.alg.product(g.phi.column(a), act[i] * phi_one);
      Vec x3(m);
      for (const auto& t : h.coproduct(i))
        x3 = add(x3, scaled(t.coeff, g.alg.product(g.phi * b.alg.product(ea, b.action[t.left] * one), act[t.right] * phi_one)));
      if (x1 != x2 || x2 != x3) bad3.insert(bad3.end(), {a, i});
      Vec direct(d * n);
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& t : h.coproduct(k)) {
          const Vec p = b.alg.product(b.action[t.left] * ea,
                                      detail::act_by(b, h.multiply(h.basis(t.right), h.basis(i))) * one);
          for (std::size_t c = 0; c < n; ++c) detail::add_product(direct[k * n + c], t.coeff, p[c]);
        }
      if (hom * x3 != direct) badk.insert(badk.end(), {a, i});
    }
  r.add("three_way_equality", bad3.empty(), bad3);
  r.add("pointwise_identity", badk.empty(), badk);

  mc.partial_image = column_space(mc.big_phi);
  mc.p = column_space(phi_full);
  std::vector<Vec> qs;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      Vec v(m * d);
      for (const auto& t : h.coproduct(i)) v = add(v, scaled(t.coeff, kron(act[t.left] * g.phi.column(j), h.basis(t.right))));
      qs.push_back(std::move(v));
    }
  mc.q = Subspace::span(qs, m * d);

  const Mat pb = mc.p.inclusion(), qb = mc.q.inclusion();
  const Mat all = Mat::identity(m * d);
  r.add("p_left_closed", mc.p.contains(product_span(gs, mc.big_phi, pb)));
  r.add("p_right_closed", mc.p.contains(product_span(gs, pb, all)));
  r.add("q_left_closed", mc.q.contains(product_span(gs, all, qb)));
  r.add("q_right_closed", mc.q.contains(product_span(gs, qb, mc.big_phi)));

  mc.tau_image = product_span(gs, pb, qb);
  mc.mu_image = product_span(gs, qb, pb);
  r.add("tau_lands_in_partial", mc.partial_image.contains(mc.tau_image));
  detail::require(r.ok(), "morita_context: construction failed its own checks");
  return mc;
}

}  // namespace hopfpar
