#pragma once

// Finite-dimensional Hopf algebras given by structure constants.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfpar/error.hpp"
#include "hopfpar/linalg.hpp"

namespace hopfpar {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // basis indices, empty when passed
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const AxiomCheck& at(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw InvalidInput("no check named " + name);
  }
  bool passed(const std::string& name) const { return at(name).passed; }
  void add(std::string name, bool ok, std::vector<std::size_t> witness = {}) {
    checks.push_back({std::move(name), ok, ok ? std::vector<std::size_t>{} : std::move(witness)});
  }
};

/// Raw structure constants. mult and comult are flat d^3 arrays indexed
/// (i * d + j) * d + k:  e_i e_j = sum_k mult[i][j][k] e_k and
/// Delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k.
/// antipode stores S(e_j) in column j. An empty antipode_inv means "compute it".
struct HopfAlgebraData {
  std::size_t dim = 0;
  std::vector<Scalar> mult;
  Vec unit;
  std::vector<Scalar> comult;
  Vec counit;
  Mat antipode;
  Mat antipode_inv;
  std::vector<std::string> labels;

  std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim + j) * dim + k; }
  const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const { return mult[at(i, j, k)]; }
  Scalar& m(std::size_t i, std::size_t j, std::size_t k) { return mult[at(i, j, k)]; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return comult[at(i, j, k)]; }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return comult[at(i, j, k)]; }

  static HopfAlgebraData zeros(std::size_t d) {
    HopfAlgebraData h;
    h.dim = d;
    h.mult.assign(d * d * d, Scalar(0));
    h.comult.assign(d * d * d, Scalar(0));
    h.unit.assign(d, Scalar(0));
    h.counit.assign(d, Scalar(0));
    h.antipode = Mat(d, d);
    return h;
  }

  friend bool operator==(const HopfAlgebraData&, const HopfAlgebraData&) = default;
};

namespace detail {

inline void check_shapes(const HopfAlgebraData& h) {
  const std::size_t d = h.dim, d3 = d * d * d;
  require_dims(h.mult.size() == d3, "mult must have dim^3 entries");
  require_dims(h.comult.size() == d3, "comult must have dim^3 entries");
  require_dims(h.unit.size() == d, "unit must have dim entries");
  require_dims(h.counit.size() == d, "counit must have dim entries");
  require_dims(h.antipode.rows() == d && h.antipode.cols() == d, "antipode must be dim x dim");
  require_dims(h.antipode_inv.rows() == 0 || (h.antipode_inv.rows() == d && h.antipode_inv.cols() == d),
               "antipode_inv must be dim x dim");
  require_dims(h.labels.empty() || h.labels.size() == d, "labels must have dim entries");
}

// Product of two elements given in coordinates.
inline Vec mult_vec(const HopfAlgebraData& h, const Vec& a, const Vec& b) {
  const std::size_t d = h.dim;
  Vec out(d);
  Scalar ab, scratch;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(h.m(i, j, k)) != 0) add_product(out[k], ab, h.m(i, j, k), scratch);
    }
  }
  return out;
}

// Coproduct of an element as a d x d coefficient matrix.
inline Mat comult_vec(const HopfAlgebraData& h, const Vec& a) {
  const std::size_t d = h.dim;
  Mat out(d, d);
  Scalar scratch;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(h.c(i, j, k)) != 0) add_product(out(j, k), a[i], h.c(i, j, k), scratch);
  }
  return out;
}

}  // namespace detail

/// Checks every Hopf algebra axiom on basis elements.
inline ValidationReport validate_hopf(const HopfAlgebraData& h) {
  detail::check_shapes(h);
  const std::size_t d = h.dim;
  ValidationReport r;
  auto e = [d](std::size_t i) { return unit_vector(d, i); };

  {  // (e_i e_j) e_k = e_i (e_j e_k)
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = 0; j < d && w.empty(); ++j) {
        const Vec ij = detail::mult_vec(h, e(i), e(j));
        for (std::size_t k = 0; k < d; ++k)
          if (detail::mult_vec(h, ij, e(k)) != detail::mult_vec(h, e(i), detail::mult_vec(h, e(j), e(k)))) {
            w = {i, j, k};
            break;
          }
      }
    r.add("associativity", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < d && w.empty(); ++j)
      if (detail::mult_vec(h, h.unit, e(j)) != e(j) || detail::mult_vec(h, e(j), h.unit) != e(j)) w = {j};
    r.add("unit", w.empty(), w);
  }
  {  // (Delta (x) id) Delta = (id (x) Delta) Delta, compared coefficientwise
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t a = 0; a < d && w.empty(); ++a)
        for (std::size_t b = 0; b < d && w.empty(); ++b)
          for (std::size_t c = 0; c < d; ++c) {
            Scalar left, right;
            for (std::size_t j = 0; j < d; ++j) left += h.c(i, j, c) * h.c(j, a, b);
            for (std::size_t k = 0; k < d; ++k) right += h.c(i, a, k) * h.c(k, b, c);
            if (left != right) {
              w = {i, a, b, c};
              break;
            }
          }
    r.add("coassociativity", w.empty(), w);
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t k = 0; k < d; ++k) {
        Scalar left, right;
        for (std::size_t j = 0; j < d; ++j) {
          left += h.counit[j] * h.c(i, j, k);
          right += h.counit[j] * h.c(i, k, j);
        }
        const Scalar delta = i == k ? 1 : 0;
        if (left != delta || right != delta) {
          w = {i, k};
          break;
        }
      }
    r.add("counit", w.empty(), w);
  }
  {  // Delta and epsilon are unital algebra maps
    std::vector<std::size_t> w;
    const Mat unit_unit = [&] {
      Mat u(d, d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) u(a, b) = h.unit[a] * h.unit[b];
      return u;
    }();
    Scalar eps_unit;
    for (std::size_t a = 0; a < d; ++a) eps_unit += h.counit[a] * h.unit[a];
    if (detail::comult_vec(h, h.unit) != unit_unit || eps_unit != 1) w = {0};
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = 0; j < d && w.empty(); ++j) {
        const Vec prod = detail::mult_vec(h, e(i), e(j));
        Scalar eps_prod;
        for (std::size_t a = 0; a < d; ++a) eps_prod += h.counit[a] * prod[a];
        if (eps_prod != h.counit[i] * h.counit[j]) {
          w = {i, j};
          break;
        }
        const Mat lhs = detail::comult_vec(h, prod);
        Mat rhs(d, d);
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q) {
            if (sgn(h.c(i, p, q)) == 0) continue;
            for (std::size_t s = 0; s < d; ++s)
              for (std::size_t t = 0; t < d; ++t) {
                if (sgn(h.c(j, s, t)) == 0) continue;
                const Scalar coeff = h.c(i, p, q) * h.c(j, s, t);
                for (std::size_t a = 0; a < d; ++a) {
                  if (sgn(h.m(p, s, a)) == 0) continue;
                  for (std::size_t b = 0; b < d; ++b) rhs(a, b) += coeff * h.m(p, s, a) * h.m(q, t, b);
                }
              }
          }
        if (lhs != rhs) w = {i, j};
      }
    r.add("bialgebra", w.empty(), w);
  }
  {  // S(h1) h2 = eps(h) 1 = h1 S(h2)
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      Vec left(d), right(d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(h.c(i, j, k)) == 0) continue;
          left = add(left, scaled(h.c(i, j, k), detail::mult_vec(h, h.antipode.column(j), e(k))));
          right = add(right, scaled(h.c(i, j, k), detail::mult_vec(h, e(j), h.antipode.column(k))));
        }
      const Vec target = scaled(h.counit[i], h.unit);
      if (left != target || right != target) w = {i};
    }
    r.add("antipode", w.empty(), w);
  }
  {
    bool ok = rank(h.antipode) == d;
    if (ok && h.antipode_inv.rows() != 0)
      ok = h.antipode * h.antipode_inv == Mat::identity(d) && h.antipode_inv * h.antipode == Mat::identity(d);
    r.add("antipode_invertible", ok, {});
  }
  return r;
}

/// Validated, immutable Hopf algebra with cached Sweedler term lists.
class HopfAlgebra {
 public:
  struct Term {
    std::size_t left, right;
    Scalar coeff;
  };

  static std::shared_ptr<const HopfAlgebra> create(HopfAlgebraData data, std::string name = {}) {
    detail::check_shapes(data);
    auto s_inv = inverse(data.antipode);
    if (!s_inv) throw InvalidInput("antipode is singular");
    if (data.antipode_inv.rows() == 0) data.antipode_inv = *s_inv;
    const ValidationReport report = validate_hopf(data);
    for (const auto& c : report.checks)
      if (!c.passed) throw InvalidInput("Hopf axiom fails: " + c.name);
    return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(data), std::move(name)));
  }

  const HopfAlgebraData& data() const { return data_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return data_.dim; }

  /// Nonzero terms of Delta(e_i) = sum coeff e_left (x) e_right.
  const std::vector<Term>& coproduct(std::size_t i) const { return coproduct_[i]; }
  /// Nonzero terms of e_i e_j = sum coeff e_k, stored as (k, coeff).
  const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const {
    return product_[i * dim() + j];
  }

  const Vec& unit() const { return data_.unit; }
  const Vec& counit() const { return data_.counit; }
  Vec antipode(std::size_t i) const { return data_.antipode.column(i); }
  Vec antipode_inv(std::size_t i) const { return data_.antipode_inv.column(i); }
  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }
  Vec multiply(const Vec& a, const Vec& b) const { return detail::mult_vec(data_, a, b); }
  Scalar counit(const Vec& a) const {
    Scalar s;
    for (std::size_t i = 0; i < dim(); ++i) s += data_.counit[i] * a[i];
    return s;
  }
  /// Matrix of left multiplication by e_i on H.
  Mat left_mult(std::size_t i) const {
    Mat l(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : product(i, j)) l(k, j) = c;
    return l;
  }
  /// Matrix of right multiplication by e_i on H.
  Mat right_mult(std::size_t i) const {
    Mat r(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : product(j, i)) r(k, j) = c;
    return r;
  }
  std::string label(std::size_t i) const {
    return data_.labels.empty() ? "e" + std::to_string(i) : data_.labels[i];
  }

 private:
  HopfAlgebra(HopfAlgebraData data, std::string name) : data_(std::move(data)), name_(std::move(name)) {
    const std::size_t d = data_.dim;
    coproduct_.resize(d);
    product_.resize(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(data_.c(i, j, k)) != 0) coproduct_[i].push_back({j, k, data_.c(i, j, k)});
          if (sgn(data_.m(i, j, k)) != 0) product_[i * d + j].emplace_back(k, data_.m(i, j, k));
        }
  }

  HopfAlgebraData data_;
  std::string name_;
  std::vector<std::vector<Term>> coproduct_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> product_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// ---------------------------------------------------------------------------
// Constructors

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Checks the table is a group with identity at index 0; returns inverses.
inline std::vector<std::size_t> group_inverses(const CayleyTable& t) {
  const std::size_t n = t.size();
  if (n == 0) throw InvalidInput("empty Cayley table");
  for (const auto& row : t) {
    if (row.size() != n) throw InvalidInput("Cayley table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidInput("Cayley table entry out of range");
  }
  for (std::size_t g = 0; g < n; ++g)
    if (t[0][g] != g || t[g][0] != g) throw InvalidInput("index 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) throw InvalidInput("Cayley table is not associative");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (t[g][h] == 0 && t[h][g] == 0) inv[g] = h;
  for (auto x : inv)
    if (x == n) throw InvalidInput("Cayley table has an element without inverse");
  return inv;
}

inline HopfAlgebraData group_algebra(const CayleyTable& t) {
  const auto inv = group_inverses(t);
  const std::size_t d = t.size();
  auto h = HopfAlgebraData::zeros(d);
  for (std::size_t g = 0; g < d; ++g) {
    for (std::size_t k = 0; k < d; ++k) h.m(g, k, t[g][k]) = 1;
    h.c(g, g, g) = 1;
    h.counit[g] = 1;
    h.antipode(inv[g], g) = 1;
    h.labels.push_back("u" + std::to_string(g));
  }
  h.unit[0] = 1;
  h.antipode_inv = h.antipode;
  return h;
}

inline HopfAlgebraData dual_group_algebra(const CayleyTable& t) {
  const auto inv = group_inverses(t);
  const std::size_t d = t.size();
  auto h = HopfAlgebraData::zeros(d);
  for (std::size_t g = 0; g < d; ++g) {
    h.m(g, g, g) = 1;
    h.unit[g] = 1;
    for (std::size_t x = 0; x < d; ++x) h.c(g, x, t[inv[x]][g]) += 1;
    h.antipode(inv[g], g) = 1;
    h.labels.push_back("p" + std::to_string(g));
  }
  h.counit[0] = 1;
  h.antipode_inv = h.antipode;
  return h;
}

/// Basis (1, g, x, y) with y = gx.
inline HopfAlgebraData sweedler_h4() {
  auto h = HopfAlgebraData::zeros(4);
  enum { one = 0, g = 1, x = 2, y = 3 };
  for (std::size_t i = 0; i < 4; ++i) {
    h.m(one, i, i) = 1;
    h.m(i, one, i) = 1;
  }
  h.m(g, g, one) = 1;
  h.m(g, x, y) = 1;
  h.m(g, y, x) = 1;
  h.m(x, g, y) = -1;
  h.m(y, g, x) = -1;
  h.unit[one] = 1;
  h.c(one, one, one) = 1;
  h.c(g, g, g) = 1;
  h.c(x, g, x) = 1;
  h.c(x, x, one) = 1;
  h.c(y, one, y) = 1;
  h.c(y, y, g) = 1;
  h.counit[one] = 1;
  h.counit[g] = 1;
  h.antipode(one, one) = 1;
  h.antipode(g, g) = 1;
  h.antipode(y, x) = -1;
  h.antipode(x, y) = 1;
  h.antipode_inv = *inverse(h.antipode);
  h.labels = {"1", "g", "x", "y"};
  return h;
}

/// Same algebra with the opposite comultiplication; S and S^-1 swap roles.
inline HopfAlgebraData cop(const HopfAlgebraData& h) {
  detail::check_shapes(h);
  HopfAlgebraData o = h;
  const std::size_t d = h.dim;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) o.c(i, j, k) = h.c(i, k, j);
  Mat s_inv = h.antipode_inv.rows() != 0 ? h.antipode_inv : *inverse(h.antipode);
  o.antipode = s_inv;
  o.antipode_inv = h.antipode;
  return o;
}

/// Cayley table of Z/n.
inline CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// Cayley table of a direct product, element (a, b) at index a * |B| + b.
inline CayleyTable product_table(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t m = a.size(), n = b.size();
  CayleyTable t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t x = 0; x < m * n; ++x)
    for (std::size_t y = 0; y < m * n; ++y) t[x][y] = a[x / n][y / n] * n + b[x % n][y % n];
  return t;
}

/// S3 as permutations of {0,1,2}, listed lexicographically (identity first).
inline CayleyTable s3_table() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  CayleyTable t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);  // (ab)(i) = a(b(i))
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(c);
    }
  return t;
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"kC2", "kC2-dual", "kC3", "kS3", "kC2xC2-dual", "sweedler"};
  return names;
}

inline HopfPtr builtin(const std::string& name) {
  static const std::map<std::string, HopfPtr> cache = [] {
    std::map<std::string, HopfPtr> m;
    m["kC2"] = HopfAlgebra::create(group_algebra(cyclic_table(2)), "kC2");
    m["kC2-dual"] = HopfAlgebra::create(dual_group_algebra(cyclic_table(2)), "kC2-dual");
    m["kC3"] = HopfAlgebra::create(group_algebra(cyclic_table(3)), "kC3");
    m["kS3"] = HopfAlgebra::create(group_algebra(s3_table()), "kS3");
    m["kC2xC2-dual"] =
        HopfAlgebra::create(dual_group_algebra(product_table(cyclic_table(2), cyclic_table(2))), "kC2xC2-dual");
    m["sweedler"] = HopfAlgebra::create(sweedler_h4(), "sweedler");
    return m;
  }();
  auto it = cache.find(name);
  if (it == cache.end()) throw InvalidInput("unknown builtin Hopf algebra '" + name + "'");
  return it->second;
}

/// True iff the linear map f: A -> B (columns f(a_i)) intertwines every
/// structure map.
inline bool is_hopf_morphism(const Mat& f, const HopfAlgebraData& a, const HopfAlgebraData& b) {
  if (f.rows() != b.dim || f.cols() != a.dim) return false;
  const std::size_t d = a.dim;
  if (f * a.unit != b.unit) return false;
  for (std::size_t i = 0; i < d; ++i) {
    const Vec fi = f.column(i);
    Scalar eps;
    for (std::size_t k = 0; k < b.dim; ++k) eps += b.counit[k] * fi[k];
    if (eps != a.counit[i]) return false;
    if (b.antipode * fi != f * a.antipode.column(i)) return false;
    // (f (x) f) Delta(a_i) = Delta(f a_i)
    const Mat lhs = f * detail::comult_vec(a, unit_vector(d, i)) * f.transpose();
    if (lhs != detail::comult_vec(b, fi)) return false;
    for (std::size_t j = 0; j < d; ++j)
      if (f * detail::mult_vec(a, unit_vector(d, i), unit_vector(d, j)) != detail::mult_vec(b, fi, f.column(j)))
        return false;
  }
  return true;
}

}  // namespace hopfpar
