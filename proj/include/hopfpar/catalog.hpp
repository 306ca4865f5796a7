#pragma once

// Worked example fixtures shared by the tests, the acceptance binary and the demo.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hopfpar/actions.hpp"
#include "hopfpar/dilation.hpp"
#include "hopfpar/hopf.hpp"
#include "hopfpar/linalg.hpp"
#include "hopfpar/partial.hpp"
#include "hopfpar/projection.hpp"

namespace hopfpar::catalog {

/// Partially graded space V0 + V1 + V_half over (kC2)^*.
inline PartialModule dual_c2_partial(std::size_t n0, std::size_t n1, std::size_t nh) {
  const std::size_t n = n0 + n1 + nh;
  Vec p0(n);
  for (std::size_t i = 0; i < n; ++i) p0[i] = i < n0 ? Scalar(1) : i < n0 + n1 ? Scalar(0) : Scalar(1, 2);
  const Mat a = Mat::diagonal(p0);
  return {builtin("kC2-dual"), n, {a, Mat::identity(n) - a}};
}

/// Graded space with basis (u_1..u_a, e_1..e_c, v_1..v_b, f_1..f_c), the u, e
/// in degree 0, and T fixing u, v and sending e_k, f_k to (e_k + f_k)/2.
inline ProjectedModule dual_c2_graded_projection(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n0 = a + c, n = a + b + 2 * c;
  Vec p0(n);
  for (std::size_t i = 0; i < n0; ++i) p0[i] = 1;
  const Mat proj = Mat::diagonal(p0);
  Mat t(n, n);
  for (std::size_t i = 0; i < a; ++i) t(i, i) = 1;
  for (std::size_t j = 0; j < b; ++j) t(n0 + j, n0 + j) = 1;
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t e = a + k, f = n0 + b + k;
    for (auto r : {e, f})
      for (auto s : {e, f}) t(r, s) = Scalar(1, 2);
  }
  return make_projected({builtin("kC2-dual"), n, {proj, Mat::identity(n) - proj}}, t);
}

/// Global Sweedler module on V + V with [g] = [[0, I], [I, 0]],
/// [x] = [[c, -d], [d, -c]] and T the projection onto the first copy.
inline ProjectedModule sweedler_doubled_projection(const Mat& c, const Mat& d) {
  const std::size_t n = c.rows();
  const Mat id = Mat::identity(n), zero(n, n);
  const Mat g = vstack({hstack({zero, id}, n), hstack({id, zero}, n)}, 2 * n);
  const Mat x = vstack({hstack({c, -d}, n), hstack({d, -c}, n)}, 2 * n);
  const Mat t = block_diag({id, zero});
  return make_projected({builtin("sweedler"), 2 * n, {Mat::identity(2 * n), g, x, g * x}}, t);
}

/// Basis of the dilation of dual_c2_partial(n0, n1, nh) adapted to
/// (V0 + V_half) in the p0 slot followed by (V1 + V_half) in the p1 slot.
inline Mat dual_c2_dilation_basis(const Dilation& d, std::size_t n0, std::size_t n1, std::size_t nh) {
  const std::size_t n = n0 + n1 + nh;
  std::vector<Vec> cols;
  auto push = [&](std::size_t slot, std::size_t i) {
    Vec v(2 * n);
    v[slot * n + i] = 1;
    cols.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n0; ++i) push(0, i);
  for (std::size_t i = 0; i < nh; ++i) push(0, n0 + n1 + i);
  for (std::size_t i = 0; i < n1; ++i) push(1, n0 + i);
  for (std::size_t i = 0; i < nh; ++i) push(1, n0 + n1 + i);
  return hom_coordinates(d, Mat::from_columns(cols, 2 * n));
}

/// Expected projection on the dilation of dual_c2_partial in the basis above.
inline Mat dual_c2_dilation_projection(std::size_t n0, std::size_t n1, std::size_t nh) {
  const std::size_t a = n0 + nh, n = a + n1 + nh;
  Mat t(n, n);
  for (std::size_t i = 0; i < n0; ++i) t(i, i) = 1;
  for (std::size_t i = 0; i < n1; ++i) t(a + i, a + i) = 1;
  for (std::size_t k = 0; k < nh; ++k) {
    const std::size_t p = n0 + k, q = a + n1 + k;
    for (auto r : {p, q})
      for (auto c : {p, q}) t(r, c) = Scalar(1, 2);
  }
  return t;
}

/// Basis (w, w') -> phi(w) + g . phi(w') of the dilation of a pure Sweedler module.
inline Mat sweedler_dilation_basis(const Dilation& d) {
  return hstack({d.theta, d.projected.module.pi[1] * d.theta}, d.projected.module.dim);
}

// ---------------------------------------------------------------------------
// Module algebras

/// k^n with pointwise product.
inline Algebra function_algebra(std::size_t n) {
  return algebra_from(n, [n](std::size_t i, std::size_t j) { return i == j ? unit_vector(n, i) : Vec(n); },
                      Vec(n, Scalar(1)));
}

/// a x b with componentwise product, basis of a followed by basis of b.
inline Algebra product_algebra(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim + b.dim;
  auto out = algebra_from(n, [&](std::size_t i, std::size_t j) {
    Vec v(n);
    if (i < a.dim && j < a.dim) {
      const Vec p = a.product(unit_vector(a.dim, i), unit_vector(a.dim, j));
      std::copy(p.begin(), p.end(), v.begin());
    } else if (i >= a.dim && j >= a.dim) {
      const Vec p = b.product(unit_vector(b.dim, i - a.dim), unit_vector(b.dim, j - a.dim));
      std::copy(p.begin(), p.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim));
    }
    return v;
  });
  if (a.unit && b.unit) {
    Vec u = *a.unit;
    u.insert(u.end(), b.unit->begin(), b.unit->end());
    out.unit = std::move(u);
  }
  return out;
}

inline PartialModuleAlgebra product_module_algebra(const PartialModuleAlgebra& a, const PartialModuleAlgebra& b) {
  PartialModuleAlgebra out{a.hopf, product_algebra(a.alg, b.alg), {}};
  for (std::size_t i = 0; i < a.action.size(); ++i) out.action.push_back(block_diag({a.action[i], b.action[i]}));
  return out;
}

/// k with the trivial action h . 1 = eps(h) 1.
inline PartialModuleAlgebra trivial_algebra(const HopfPtr& h) {
  return {h, function_algebra(1), trivial_module(h).pi};
}

/// H acting on itself by h . a = h1 a S(h2).
inline PartialModuleAlgebra adjoint_algebra(const HopfPtr& hopf) {
  const HopfAlgebra& h = *hopf;
  const std::size_t d = h.dim();
  Algebra alg = algebra_from(d, [&](std::size_t i, std::size_t j) { return h.multiply(h.basis(i), h.basis(j)); }, h.unit());
  std::vector<Mat> action;
  for (std::size_t i = 0; i < d; ++i) {
    Mat a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec col(d);
      for (const auto& t : h.coproduct(i))
        col = add(col, scaled(t.coeff, h.multiply(h.multiply(h.basis(t.left), h.basis(j)), h.antipode(t.right))));
      for (std::size_t k = 0; k < d; ++k) a(k, j) = col[k];
    }
    action.push_back(std::move(a));
  }
  return {hopf, std::move(alg), std::move(action)};
}

/// (kC2)^* on k with p_0 . 1 = p_1 . 1 = 1/2.
inline PartialModuleAlgebra dual_c2_half() {
  const Mat half{{Scalar(1, 2)}};
  return {builtin("kC2-dual"), function_algebra(1), {half, half}};
}

/// k x k[u]/(u^2 - 1) graded by C2 with u odd, basis (a, b, u) where a = (1, 0), b = (0, 1).
inline PartialModuleAlgebra dual_c2_graded_algebra() {
  Algebra alg = algebra_from(3, [](std::size_t i, std::size_t j) {
    if (i == 0 && j == 0) return unit_vector(3, 0);
    if (i == 0 || j == 0) return Vec(3);
    if (i == 2 && j == 2) return unit_vector(3, 1);
    return unit_vector(3, i == 1 ? j : i);
  }, Vec{1, 1, 0});
  return {builtin("kC2-dual"), std::move(alg), {Mat::diagonal({1, 1, 0}), Mat::diagonal({0, 0, 1})}};
}

/// e = (1, (1 + u)/2) in dual_c2_graded_algebra.
inline Vec dual_c2_graded_idempotent() { return {1, Scalar(1, 2), Scalar(1, 2)}; }

/// kC2 acting on k^{C2} by translation.
inline PartialModuleAlgebra c2_translation_algebra() {
  return {builtin("kC2"), function_algebra(2), {Mat::identity(2), Mat{{0, 1}, {1, 0}}}};
}

/// Sweedler's algebra on k[u]/(u^2 - 1), basis (1, u), with g . u = -u and x . u = alpha.
inline PartialModuleAlgebra sweedler_split_algebra(const Scalar& alpha) {
  Algebra alg = algebra_from(2, [](std::size_t i, std::size_t j) { return unit_vector(2, (i + j) % 2); }, Vec{1, 0});
  const Mat g = Mat::diagonal({1, -1});
  const Mat x{{0, alpha}, {0, 0}};
  return {builtin("sweedler"), std::move(alg), {Mat::identity(2), g, x, g * x}};
}

/// (1 + u)/2.
inline Vec sweedler_split_idempotent() { return {Scalar(1, 2), Scalar(1, 2)}; }

/// Named partial module algebras induced from global ones.
struct InducedExample {
  std::string name;
  PartialModuleAlgebra global;
  Vec idempotent;
  PartialModuleAlgebra induced() const { return induced_partial_algebra(global, idempotent); }
};

inline std::vector<InducedExample> induced_examples() {
  const auto sw = sweedler_split_algebra(2);
  const auto sw_k = product_module_algebra(sw, trivial_algebra(sw.hopf));
  return {
      {"dual-c2-graded", dual_c2_graded_algebra(), dual_c2_graded_idempotent()},
      {"c2-translation", c2_translation_algebra(), Vec{1, 0}},
      {"sweedler-split", sw, sweedler_split_idempotent()},
      {"sweedler-split-times-k", sw_k, Vec{Scalar(1, 2), Scalar(1, 2), 1}},
      {"sweedler-global", sw, Vec{1, 0}},
  };
}

}  // namespace hopfpar::catalog
