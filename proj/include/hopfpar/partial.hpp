#pragma once

// Partial representations of a Hopf algebra on finite-dimensional spaces.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpar/error.hpp"
#include "hopfpar/hopf.hpp"
#include "hopfpar/linalg.hpp"

namespace hopfpar {

/// pi[i] is the matrix of pi(e_i) on k^dim.
struct PartialModule {
  HopfPtr hopf;
  std::size_t dim = 0;
  std::vector<Mat> pi;
};

inline void check_shape(const PartialModule& m) {
  detail::require_dims(m.hopf != nullptr, "partial module without Hopf algebra");
  detail::require_dims(m.pi.size() == m.hopf->dim(), "need one matrix per Hopf basis element");
  for (const auto& p : m.pi) detail::require_dims(p.rows() == m.dim && p.cols() == m.dim, "pi matrix has wrong size");
}

inline PartialModule make_module(HopfPtr hopf, std::vector<Mat> pi) {
  PartialModule m{std::move(hopf), pi.empty() ? 0 : pi.front().rows(), std::move(pi)};
  check_shape(m);
  return m;
}

inline void require_same_hopf(const PartialModule& a, const PartialModule& b) {
  if (a.hopf != b.hopf && !(a.hopf->data() == b.hopf->data()))
    throw InvalidInput("modules are over different Hopf algebras");
}

/// pi of an arbitrary element given in coordinates.
inline Mat act(const PartialModule& m, const Vec& h) {
  Mat out(m.dim, m.dim);
  for (std::size_t i = 0; i < h.size(); ++i) out.add_scaled(h[i], m.pi[i]);
  return out;
}

/// The operator [h_(1)][S(h_(2))] for h = e_i.
inline Mat eps_op(const PartialModule& m, std::size_t i) {
  Mat out(m.dim, m.dim);
  for (const auto& t : m.hopf->coproduct(i))
    out.add_scaled(t.coeff, m.pi[t.left] * act(m, m.hopf->antipode(t.right)));
  return out;
}

/// The operator [S(h_(1))][h_(2)] for h = e_i.
inline Mat eps_tilde_op(const PartialModule& m, std::size_t i) {
  Mat out(m.dim, m.dim);
  for (const auto& t : m.hopf->coproduct(i))
    out.add_scaled(t.coeff, act(m, m.hopf->antipode(t.left)) * m.pi[t.right]);
  return out;
}

/// Evaluates PR1-PR5 on all pairs of basis elements.
inline ValidationReport check_partial_rep(const PartialModule& m) {
  check_shape(m);
  const HopfAlgebra& h = *m.hopf;
  const std::size_t d = h.dim();
  std::vector<Mat> ps(d), e(d), et(d);
  for (std::size_t j = 0; j < d; ++j) {
    ps[j] = act(m, h.antipode(j));
    e[j] = eps_op(m, j);
    et[j] = eps_tilde_op(m, j);
  }
  auto pi_of = [&](const Vec& v) { return act(m, v); };
  auto prod = [&](const Vec& a, const Vec& b) { return h.multiply(a, b); };

  ValidationReport r;
  r.add("PR1", act(m, h.unit()) == Mat::identity(m.dim), {});

  std::vector<std::size_t> w2, w3, w4, w5;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Mat r2(m.dim, m.dim), r3(m.dim, m.dim), r4(m.dim, m.dim), r5(m.dim, m.dim);
      for (const auto& t : h.coproduct(b)) {
        r2.add_scaled(t.coeff, pi_of(prod(h.basis(a), h.basis(t.left))) * ps[t.right]);
        r4.add_scaled(t.coeff, pi_of(prod(h.basis(a), h.antipode(t.left))) * m.pi[t.right]);
      }
      for (const auto& t : h.coproduct(a)) {
        r3.add_scaled(t.coeff, m.pi[t.left] * pi_of(prod(h.antipode(t.right), h.basis(b))));
        r5.add_scaled(t.coeff, ps[t.left] * pi_of(prod(h.basis(t.right), h.basis(b))));
      }
      if (w2.empty() && m.pi[a] * e[b] != r2) w2 = {a, b};
      if (w3.empty() && e[a] * m.pi[b] != r3) w3 = {a, b};
      if (w4.empty() && m.pi[a] * et[b] != r4) w4 = {a, b};
      if (w5.empty() && et[a] * m.pi[b] != r5) w5 = {a, b};
    }
  r.add("PR2", w2.empty(), w2);
  r.add("PR3", w3.empty(), w3);
  r.add("PR4", w4.empty(), w4);
  r.add("PR5", w5.empty(), w5);
  return r;
}

inline void require_partial(const PartialModule& m, const std::string& where) {
  const auto r = check_partial_rep(m);
  for (const auto& c : r.checks)
    if (!c.passed) throw AxiomViolation(where + ": " + c.name + " fails");
}

/// pi(e_i e_j) - pi(e_i) pi(e_j) stacked over all pairs.
inline std::vector<Mat> multiplicativity_defects(const PartialModule& m) {
  const std::size_t d = m.hopf->dim();
  std::vector<Mat> out;
  out.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      out.push_back(m.pi[i] * m.pi[j] - act(m, m.hopf->multiply(m.hopf->basis(i), m.hopf->basis(j))));
  return out;
}

inline bool is_global(const PartialModule& m) {
  check_shape(m);
  const std::size_t d = m.hopf->dim();
  for (std::size_t i = 0; i < d; ++i)
    if (eps_op(m, i) != m.hopf->counit()[i] * Mat::identity(m.dim)) return false;
  for (const auto& defect : multiplicativity_defects(m))
    detail::require(defect.is_zero(), "is_global: module satisfies the counit criterion but is not multiplicative");
  return true;
}

inline void require_global(const PartialModule& m, const std::string& where) {
  if (!is_global(m)) throw InvalidInput(where + ": module is not global");
}

/// Action restricted to an invariant subspace, in its echelon coordinates.
inline PartialModule submodule(const PartialModule& m, const Subspace& s) {
  std::vector<Mat> pi;
  for (const auto& p : m.pi) pi.push_back(restrict_operator(p, s));
  return {m.hopf, s.dim(), std::move(pi)};
}

struct QuotientModule {
  PartialModule module;
  Mat projection;  // M -> M / W
};

inline QuotientModule quotient_module(const PartialModule& m, const Subspace& w) {
  for (const auto& p : m.pi) detail::require(w.is_invariant(p), "quotient_module: subspace is not a submodule");
  const QuotientMap q = quotient_map(m.dim, w);
  std::vector<Mat> pi;
  for (const auto& p : m.pi) pi.push_back(induced_operator(p, q));
  return {{m.hopf, q.dim, std::move(pi)}, q.map};
}

/// Submodule generated by a subspace.
inline Subspace generated_submodule(const PartialModule& m, const Subspace& s) { return span_closure(s, m.pi); }

/// {v : pi(e_i) pi(e_j) v = pi(e_i e_j) v for all i, j}, the largest global submodule.
inline Subspace global_core(const PartialModule& m) {
  check_shape(m);
  const Subspace core = kernel_basis(vstack(multiplicativity_defects(m), m.dim));
  for (const auto& p : m.pi) detail::require(core.is_invariant(p), "global_core: core is not a submodule");
  detail::require(is_global(submodule(m, core)), "global_core: restricted action is not global");
  return core;
}

/// Largest global quotient together with the projection onto it.
inline QuotientModule global_shadow(const PartialModule& m) {
  check_shape(m);
  const Subspace relations =
      generated_submodule(m, column_space(hstack(multiplicativity_defects(m), m.dim)));
  QuotientModule q = quotient_module(m, relations);
  detail::require(is_global(q.module), "global_shadow: induced action is not global");
  return q;
}

inline bool is_pure(const PartialModule& m) { return global_core(m).is_zero(); }

/// Basis of {f : f pi_m(e_i) = pi_n(e_i) f}.
inline std::vector<Mat> hom_space(const PartialModule& m, const PartialModule& n) {
  check_shape(m);
  check_shape(n);
  require_same_hopf(m, n);
  return intertwiners(m.pi, n.pi, m.dim, n.dim);
}

inline bool is_morphism(const Mat& f, const PartialModule& m, const PartialModule& n) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (std::size_t i = 0; i < m.pi.size(); ++i)
    if (f * m.pi[i] != n.pi[i] * f) return false;
  return true;
}

struct ModuleMorphism {
  PartialModule source, target;
  Mat mat;
};

inline ModuleMorphism make_morphism(PartialModule source, PartialModule target, Mat mat) {
  require_same_hopf(source, target);
  if (!is_morphism(mat, source, target)) throw InvalidInput("matrix is not a morphism of partial modules");
  return {std::move(source), std::move(target), std::move(mat)};
}

inline PartialModule direct_sum(const HopfPtr& hopf, const std::vector<PartialModule>& ms) {
  std::vector<Mat> pi;
  std::size_t dim = 0;
  for (const auto& m : ms) {
    check_shape(m);
    if (!(m.hopf->data() == hopf->data())) throw InvalidInput("direct_sum: modules over different Hopf algebras");
    dim += m.dim;
  }
  for (std::size_t i = 0; i < hopf->dim(); ++i) {
    std::vector<Mat> blocks;
    for (const auto& m : ms) blocks.push_back(m.pi[i]);
    pi.push_back(block_diag(blocks));
  }
  return {hopf, dim, std::move(pi)};
}

inline PartialModule direct_sum(const std::vector<PartialModule>& ms) {
  if (ms.empty()) throw InvalidInput("direct_sum of an empty list needs the Hopf algebra");
  return direct_sum(ms.front().hopf, ms);
}

/// Canonical injections and projections of a direct sum.
inline std::vector<Mat> sum_injections(const std::vector<PartialModule>& ms) {
  std::size_t total = 0;
  for (const auto& m : ms) total += m.dim;
  std::vector<Mat> out;
  std::size_t off = 0;
  for (const auto& m : ms) {
    Mat inj(total, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) inj(off + i, i) = 1;
    out.push_back(std::move(inj));
    off += m.dim;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Algebras of operators. Matrices are vectorised row-major, and left
// multiplication X -> A X is the operator kron(A, I).

inline Mat unvec(const Vec& v, std::size_t n) { return reshape(v, n, n); }

inline Subspace operator_algebra(const std::vector<Mat>& generators, std::size_t n) {
  std::vector<Mat> ops;
  const Mat id = Mat::identity(n);
  for (const auto& g : generators) ops.push_back(kron(g, id));
  return span_closure(Subspace::span({flatten(id)}, n * n), ops);
}

inline std::vector<Mat> algebra_basis(const Subspace& alg, std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(unvec(alg.basis_vector(i), n));
  return out;
}

/// Image of H_par in End(M): the algebra generated by the pi(e_i).
inline Subspace image_algebra(const PartialModule& m) {
  check_shape(m);
  return operator_algebra(m.pi, m.dim);
}

/// Image of the base algebra A: generated by the operators [h_(1)][S(h_(2))].
inline Subspace base_subalgebra(const PartialModule& m) {
  check_shape(m);
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < m.hopf->dim(); ++i) gens.push_back(eps_op(m, i));
  return operator_algebra(gens, m.dim);
}

inline bool is_commutative(const Subspace& alg, std::size_t n) {
  const auto basis = algebra_basis(alg, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
  return true;
}

/// Jacobson radical of a matrix algebra over a field of characteristic 0:
/// {a : tr(ab) = 0 for all b in the algebra}.
inline Subspace algebra_radical(const Subspace& alg, std::size_t n) {
  const auto basis = algebra_basis(alg, n);
  Mat gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Mat p = basis[i] * basis[j];
      for (std::size_t k = 0; k < n; ++k) gram(i, j) += p(k, k);
    }
  const Subspace coeffs = kernel_basis(gram);
  return Subspace::span_rows(coeffs.basis() * alg.basis());
}

// ---------------------------------------------------------------------------
// Standard modules

inline PartialModule regular_module(const HopfPtr& h) {
  std::vector<Mat> pi;
  for (std::size_t i = 0; i < h->dim(); ++i) pi.push_back(h->left_mult(i));
  return {h, h->dim(), std::move(pi)};
}

/// The one-dimensional module k_epsilon.
inline PartialModule trivial_module(const HopfPtr& h) {
  std::vector<Mat> pi;
  for (std::size_t i = 0; i < h->dim(); ++i) pi.push_back(Mat{{h->counit()[i]}});
  return {h, 1, std::move(pi)};
}

inline PartialModule zero_module(const HopfPtr& h) { return {h, 0, std::vector<Mat>(h->dim(), Mat(0, 0))}; }

/// Conjugate the action by an invertible change of basis p: pi -> p^-1 pi p.
inline PartialModule change_basis(const PartialModule& m, const Mat& p) {
  const auto inv = inverse(p);
  if (!inv) throw InvalidInput("change of basis is singular");
  std::vector<Mat> pi;
  for (const auto& x : m.pi) pi.push_back(*inv * x * p);
  return {m.hopf, m.dim, std::move(pi)};
}

/// m (x) n with h (m (x) n) = h_(1) m (x) h_(2) n; n must be global.
inline PartialModule tensor_with_global(const PartialModule& m, const PartialModule& n) {
  require_same_hopf(m, n);
  require_global(n, "tensor_with_global");
  std::vector<Mat> pi;
  for (std::size_t i = 0; i < m.hopf->dim(); ++i) {
    Mat p(m.dim * n.dim, m.dim * n.dim);
    for (const auto& t : m.hopf->coproduct(i)) p.add_scaled(t.coeff, kron(m.pi[t.left], n.pi[t.right]));
    pi.push_back(std::move(p));
  }
  PartialModule out{m.hopf, m.dim * n.dim, std::move(pi)};
  require_partial(out, "tensor_with_global");
  return out;
}

/// The right action of the generator eps_{e_i} of A on a partial module,
/// [h_(2)][S^-1(h_(1))].
inline Mat target_eps_op(const PartialModule& m, std::size_t i) {
  Mat out(m.dim, m.dim);
  for (const auto& t : m.hopf->coproduct(i))
    out.add_scaled(t.coeff, m.pi[t.right] * act(m, m.hopf->antipode_inv(t.left)));
  return out;
}

/// m (x)_A n: the quotient of m (x) n by t(a) v (x) w - v (x) s(a) w for a
/// in the base algebra, with the diagonal action.
inline QuotientModule tensor_over_base(const PartialModule& m, const PartialModule& n) {
  check_shape(m);
  check_shape(n);
  require_same_hopf(m, n);
  const std::size_t d = m.hopf->dim(), dm = m.dim, dn = n.dim;
  // pairs (t(a) on m, s(a) on n) for a running over the words in the generators
  const std::size_t pair_dim = dm * dm + dn * dn;
  std::vector<Mat> ops;
  for (std::size_t k = 0; k < d; ++k) {
    // (X, Y) -> (T_k X, Y E_k): vec(T X) = (T (x) I) vec X, vec(Y E) = (I (x) E^T) vec Y
    ops.push_back(block_diag({kron(target_eps_op(m, k), Mat::identity(dm)),
                              kron(Mat::identity(dn), eps_op(n, k).transpose())}));
  }
  Vec seed = flatten(Mat::identity(dm));
  const Vec id_n = flatten(Mat::identity(dn));
  seed.insert(seed.end(), id_n.begin(), id_n.end());
  const Subspace pairs = span_closure(Subspace::span({seed}, pair_dim), ops);

  std::vector<Mat> relation_ops;
  for (std::size_t p = 0; p < pairs.dim(); ++p) {
    const Vec v = pairs.basis_vector(p);
    const Mat x = reshape(Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dm * dm)), dm, dm);
    const Mat y = reshape(Vec(v.begin() + static_cast<std::ptrdiff_t>(dm * dm), v.end()), dn, dn);
    relation_ops.push_back(kron(x, Mat::identity(dn)) - kron(Mat::identity(dm), y));
  }
  const Subspace relations =
      relation_ops.empty() ? Subspace::zero(dm * dn) : column_space(hstack(relation_ops, dm * dn));

  std::vector<Mat> diag;
  for (std::size_t i = 0; i < d; ++i) {
    Mat p(dm * dn, dm * dn);
    for (const auto& t : m.hopf->coproduct(i)) p.add_scaled(t.coeff, kron(m.pi[t.left], n.pi[t.right]));
    diag.push_back(std::move(p));
  }
  for (const auto& p : diag)
    detail::require(relations.is_invariant(p), "tensor_over_base: relations are not stable under the diagonal action");
  QuotientModule q = quotient_module({m.hopf, dm * dn, std::move(diag)}, relations);
  require_partial(q.module, "tensor_over_base");
  return q;
}

// ---------------------------------------------------------------------------
// Classification over kC2* and H4

struct DualC2Classification {
  std::size_t n0 = 0, n1 = 0, n_half = 0;  // eigenvalues 1, 0, 1/2 of pi(p0)
  Mat change_of_basis;                      // columns: eigenvectors in that order
};

inline bool is_builtin(const PartialModule& m, const std::string& name) {
  return m.hopf->data() == builtin(name)->data();
}

inline DualC2Classification classify_dual_c2(const PartialModule& m) {
  check_shape(m);
  if (!is_builtin(m, "kC2-dual")) throw InvalidInput("classify_dual_c2: module is not over kC2-dual");
  const std::size_t n = m.dim;
  const Mat id = Mat::identity(n);
  const Mat& t = m.pi[0];
  detail::require(m.pi[0] + m.pi[1] == id, "classify_dual_c2: pi(p0) + pi(p1) is not the identity");
  detail::require((t * (t - id) * (Scalar(2) * t - id)).is_zero(),
                  "classify_dual_c2: pi(p0) does not satisfy t(t-1)(2t-1) = 0");
  const Subspace v1 = kernel_basis(t - id), v0 = kernel_basis(t), vh = kernel_basis(Scalar(2) * t - id);
  DualC2Classification c;
  c.n0 = v1.dim();
  c.n1 = v0.dim();
  c.n_half = vh.dim();
  c.change_of_basis = hstack({v1.inclusion(), v0.inclusion(), vh.inclusion()}, n);
  detail::require(rank(c.change_of_basis) == n, "classify_dual_c2: eigenspaces do not span");
  return c;
}

struct SweedlerClassification {
  Subspace global_part;  // eigenvalues +-1 of [g]
  Subspace pure_part;    // kernel of [g]
  Mat c, d;              // [x], [y] on the pure part
  Mat a, b;              // [x] = [[0, a], [b, 0]] on U+ (+) U-
};

inline SweedlerClassification classify_sweedler(const PartialModule& m) {
  check_shape(m);
  if (!is_builtin(m, "sweedler")) throw InvalidInput("classify_sweedler: module is not over H4");
  const std::size_t n = m.dim;
  const Mat id = Mat::identity(n);
  const Mat &g = m.pi[1], &x = m.pi[2], &y = m.pi[3];
  detail::require(g * g * g == g, "classify_sweedler: [g]^3 != [g]");
  SweedlerClassification s;
  s.global_part = kernel_basis(g * g - id);
  s.pure_part = kernel_basis(g);
  detail::require((s.global_part + s.pure_part).is_full(), "classify_sweedler: U + W is not everything");
  for (const auto& p : m.pi) {
    detail::require(s.global_part.is_invariant(p), "classify_sweedler: U is not invariant");
    detail::require(s.pure_part.is_invariant(p), "classify_sweedler: W is not invariant");
  }
  s.c = restrict_operator(x, s.pure_part);
  s.d = restrict_operator(y, s.pure_part);
  detail::require(s.c * s.d == s.d * s.c, "classify_sweedler: cd != dc");
  detail::require(s.c * s.c == s.d * s.d, "classify_sweedler: c^2 != d^2");

  const Subspace plus = kernel_basis(g - id), minus = kernel_basis(g + id);
  const Mat basis = hstack({plus.inclusion(), minus.inclusion()}, n);
  const Subspace u = column_space(basis);
  detail::require(u == s.global_part, "classify_sweedler: U is not the sum of the +-1 eigenspaces");
  // [x], [y] in the basis (U+, U-)
  const Mat coords = *solve(basis.transpose() * basis, basis.transpose());  // left inverse on U
  const Mat xu = coords * x * basis, yu = coords * y * basis;
  const std::size_t p = plus.dim(), q = minus.dim();
  auto block = [](const Mat& src, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
    Mat out(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j) = src(r0 + i, c0 + j);
    return out;
  };
  detail::require(block(xu, 0, 0, p, p).is_zero() && block(xu, p, p, q, q).is_zero(),
                  "classify_sweedler: [x] does not anticommute with [g] on U");
  s.a = block(xu, 0, p, p, q);
  s.b = block(xu, p, 0, q, p);
  detail::require(block(yu, 0, p, p, q) == s.a && block(yu, p, 0, q, p) == -s.b,
                  "classify_sweedler: [y] is not [g][x] on U");
  detail::require((s.a * s.b).is_zero() && (s.b * s.a).is_zero(), "classify_sweedler: ab or ba nonzero");
  detail::require(is_global(submodule(m, s.global_part)), "classify_sweedler: U is not global");
  return s;
}

inline Mat lower_shift(std::size_t n) {
  Mat s(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) s(k + 1, k) = 1;
  return s;
}

/// W_n over H4: pi(g) = 0, pi(x) = pi(y) = lower shift.
inline PartialModule w_n_module(std::size_t n) {
  if (n < 1) throw InvalidInput("w_n_module: n must be at least 1");
  const Mat c = lower_shift(n);
  return {builtin("sweedler"), n, {Mat::identity(n), Mat(n, n), c, c}};
}

/// Pure H4-module on W with [x] = c, [y] = d; requires cd = dc and c^2 = d^2.
inline PartialModule sweedler_pure_module(const Mat& c, const Mat& d) {
  const std::size_t n = c.rows();
  PartialModule m{builtin("sweedler"), n, {Mat::identity(n), Mat(n, n), c, d}};
  require_partial(m, "sweedler_pure_module");
  return m;
}

// ---------------------------------------------------------------------------
// Submodule structure

/// All submodules reachable by closing vectors with entries in {-1, 0, 1}
/// and taking sums. Exact for uniserial modules; a lower bound in general.
inline std::vector<Subspace> probe_submodules(const PartialModule& m) {
  check_shape(m);
  if (m.dim > 8) throw InvalidInput("probe_submodules: dimension too large");
  std::vector<Subspace> found = {Subspace::zero(m.dim)};
  auto known = [&](const Subspace& s) {
    for (const auto& f : found)
      if (f == s) return true;
    return false;
  };
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.dim; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    Vec v(m.dim);
    std::size_t c = code;
    for (std::size_t i = 0; i < m.dim; ++i, c /= 3) v[i] = static_cast<long>(c % 3) - 1;
    const Subspace s = generated_submodule(m, Subspace::span({v}, m.dim));
    if (!known(s)) found.push_back(s);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        const Subspace s = found[i] + found[j];
        if (!known(s)) {
          found.push_back(s);
          grew = true;
        }
      }
  }
  std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  return found;
}

/// Socle: vectors killed by the radical of the image algebra.
inline Subspace socle(const PartialModule& m) {
  const Subspace alg = image_algebra(m);
  const auto rad = algebra_basis(algebra_radical(alg, m.dim), m.dim);
  if (rad.empty()) return Subspace::full(m.dim);
  return kernel_basis(vstack(rad, m.dim));
}

/// If every layer of the socle series is simple (checked by a one-dimensional
/// endomorphism ring), returns the series 0 < soc < soc^2 < ... < M; in that
/// case it is the complete list of submodules.
inline std::optional<std::vector<Subspace>> uniserial_chain(const PartialModule& m) {
  std::vector<Subspace> chain = {Subspace::zero(m.dim)};
  Subspace current = Subspace::zero(m.dim);
  while (!current.is_full()) {
    const QuotientModule q = quotient_module(m, current);
    const Subspace s = socle(q.module);
    const PartialModule layer = submodule(q.module, s);
    if (hom_space(layer, layer).size() != 1) return std::nullopt;
    // preimage of the socle of M / current
    const Mat lift = quotient_map(m.dim, current).section * s.inclusion();
    current = current + column_space(lift);
    chain.push_back(current);
  }
  return chain;
}

/// true: the endomorphism ring is local with residue field k.
/// false: a Fitting decomposition by an endomorphism splits the module.
/// nullopt: neither test was conclusive.
inline std::optional<bool> is_indecomposable(const PartialModule& m) {
  if (m.dim == 0) return false;
  const auto ends = hom_space(m, m);
  Subspace alg = Subspace::span([&] {
    std::vector<Vec> v;
    for (const auto& e : ends) v.push_back(flatten(e));
    return v;
  }(), m.dim * m.dim);
  if (alg.dim() - algebra_radical(alg, m.dim).dim() == 1) return true;
  const Mat id = Mat::identity(m.dim);
  const std::vector<Scalar> shifts = {0, 1, -1, 2, -2, 3, -3, Scalar(1, 2), Scalar(-1, 2)};
  for (const auto& e : ends)
    for (const auto& lambda : shifts) {
      const Mat pw = power(e - lambda * id, static_cast<unsigned>(m.dim));
      const std::size_t r = rank(pw);
      if (r != 0 && r != m.dim) return false;
    }
  return std::nullopt;
}

}  // namespace hopfpar
