#pragma once

// Exact dense linear algebra over the rationals.
//
// Conventions used throughout the library:
//  * vectors are column vectors, a Mat acts by left multiplication;
//  * tensor products of spaces use first-factor-major ordering, so the basis
//    vector e_i (x) f_j of U (x) V has index i * dim(V) + j, and
//    kron(a, b) is the matrix of a (x) b in that basis;
//  * matrices are vectorised row-major: vec(X)[i * cols + j] = X(i, j).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfpar/error.hpp"

namespace hopfpar {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Parses "p/q", "p" or "-p/q" into a reduced rational.
inline Scalar parse_scalar(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Scalar value;
  if (value.set_str(canonical, 10) != 0) throw ParseError("malformed scalar '" + std::string(text) + "'");
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

inline std::string to_string(Scalar s) {
  s.canonicalize();
  return s.get_str();
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

namespace detail {

// dst += a * b without temporaries in the common case.
inline void add_product(Scalar& dst, const Scalar& a, const Scalar& b, Scalar& scratch) {
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), scratch.get_mpq_t());
}

inline void add_product(Scalar& dst, const Scalar& a, const Scalar& b) {
  thread_local Scalar scratch;
  add_product(dst, a, b, scratch);
}

inline void sub_product(Scalar& dst, const Scalar& a, const Scalar& b, Scalar& scratch) {
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_sub(dst.get_mpq_t(), dst.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace detail

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      detail::require_dims(r.size() == cols_, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(const Vec& d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      detail::require_dims(rows[i].size() == cols, "row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      detail::require_dims(cols[j].size() == rows, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)); }
  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    detail::require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    detail::require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  // Adds s * o in place; the hot path of every structure-constant expansion.
  Mat& add_scaled(const Scalar& s, const Mat& o) {
    detail::require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    if (sgn(s) == 0) return *this;
    Scalar scratch;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (sgn(o.data_[k]) != 0) detail::add_product(data_[k], s, o.data_[k], scratch);
    return *this;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Mat operator+(Mat a, const Mat& b) { return a += b; }
inline Mat operator-(Mat a, const Mat& b) { return a -= b; }
inline Mat operator-(Mat a) { return a *= Scalar(-1); }
inline Mat operator*(const Scalar& s, Mat a) { return a *= s; }

inline Mat operator*(const Mat& a, const Mat& b) {
  detail::require_dims(a.cols() == b.rows(), "matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  Scalar scratch;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) != 0) detail::add_product(c(i, j), aik, bkj, scratch);
      }
    }
  return c;
}

inline Vec operator*(const Mat& a, const Vec& v) {
  detail::require_dims(a.cols() == v.size(), "matrix-vector shape mismatch");
  Vec out(a.rows());
  Scalar scratch;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) detail::add_product(out[i], a(i, k), v[k], scratch);
  return out;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

inline Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

inline Vec add(Vec a, const Vec& b) {
  detail::require_dims(a.size() == b.size(), "vector sum shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec scaled(const Scalar& s, Vec v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Kronecker product; (a (x) b)(v (x) w) = av (x) bw with first-factor-major indexing.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  Scalar scratch;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) detail::add_product(k(i * b.rows() + p, j * b.cols() + q), aij, b(p, q), scratch);
    }
  return k;
}

inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

inline Mat hstack(const std::vector<Mat>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    detail::require_dims(b.rows() == rows, "hstack row mismatch");
    cols += b.cols();
  }
  Mat out(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
    off += b.cols();
  }
  return out;
}

inline Mat vstack(const std::vector<Mat>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    detail::require_dims(b.cols() == cols, "vstack column mismatch");
    rows += b.rows();
  }
  Mat out(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(off + i, j) = b(i, j);
    off += b.rows();
  }
  return out;
}

inline Mat block_diag(const std::vector<Mat>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat out(r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

inline Vec flatten(const Mat& m) { return m.entries(); }

inline Mat reshape(const Vec& v, std::size_t rows, std::size_t cols) {
  detail::require_dims(v.size() == rows * cols, "reshape size mismatch");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

inline Mat power(const Mat& a, unsigned k) {
  Mat r = Mat::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

// ---------------------------------------------------------------------------
// Echelon forms

struct Echelon {
  Mat reduced;                       // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Pivots are the leftmost nonzero columns, so the
/// result is canonical for the row space of the input.
inline Echelon rref(Mat a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Scalar factor, scratch;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && sgn(a(p, col)) == 0) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j < n; ++j) swap(a(p, j), a(row, j));
    const Scalar inv = 1 / a(row, col);
    for (std::size_t j = col; j < n; ++j)
      if (sgn(a(row, j)) != 0) a(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      factor = a(i, col);
      for (std::size_t j = col; j < n; ++j)
        if (sgn(a(row, j)) != 0) detail::sub_product(a(i, j), factor, a(row, j), scratch);
    }
    pivots.push_back(col);
    ++row;
  }
  Mat reduced(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) = std::move(a(i, j));
  return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Mat& a) { return rref(a).rank(); }

/// A linear subspace of k^n stored by its canonical reduced echelon basis.
/// Two equal subspaces always have identical basis matrices.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient) { return span_rows(Mat::identity(ambient)); }

  static Subspace span_rows(const Mat& rows) {
    Echelon e = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace span_columns(const Mat& cols) { return span_rows(cols.transpose()); }
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
    return span_rows(Mat::from_rows(vectors, ambient));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// dim x ambient, rows form the reduced echelon basis.
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }

  /// ambient x dim; columns are the basis vectors.
  Mat inclusion() const { return basis_.transpose(); }

  /// dim x ambient; reads off coordinates of a member vector (pivot entries).
  /// Left inverse of inclusion(); meaningless on non-members.
  Mat coordinate_map() const {
    Mat c(dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i) c(i, pivots_[i]) = 1;
    return c;
  }

  Vec coordinates(const Vec& v) const {
    detail::require_dims(v.size() == ambient_, "coordinates: ambient mismatch");
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// v minus its projection along the echelon basis; zero iff v is a member.
  Vec reduce(Vec v) const {
    detail::require_dims(v.size() == ambient_, "reduce: ambient mismatch");
    Scalar scratch;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (sgn(basis_(i, j)) != 0) detail::sub_product(v[j], f, basis_(i, j), scratch);
    }
    return v;
  }

  bool contains(const Vec& v) const { return hopfpar::is_zero(reduce(v)); }

  bool contains(const Subspace& o) const {
    detail::require_dims(o.ambient_ == ambient_, "subspace ambient mismatch");
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_vector(i))) return false;
    return true;
  }

  /// Columns of m (ambient x k) all lie in the subspace.
  bool contains_columns(const Mat& m) const {
    detail::require_dims(m.rows() == ambient_, "subspace ambient mismatch");
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!contains(m.column(j))) return false;
    return true;
  }

  bool is_invariant(const Mat& op) const { return contains_columns(op * inclusion()); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace operator+(const Subspace& a, const Subspace& b) {
  detail::require_dims(a.ambient_dim() == b.ambient_dim(), "subspace sum ambient mismatch");
  return Subspace::span_rows(vstack({a.basis(), b.basis()}, a.ambient_dim()));
}

inline Subspace column_space(const Mat& a) { return Subspace::span_columns(a); }

/// Canonical basis of {v : a v = 0}.
inline Subspace kernel_basis(const Mat& a) {
  const std::size_t n = a.cols();
  Echelon e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, n);
}

inline Subspace intersection(const Subspace& a, const Subspace& b) {
  detail::require_dims(a.ambient_dim() == b.ambient_dim(), "intersection ambient mismatch");
  const std::size_t n = a.ambient_dim();
  // x = A^T s = B^T t  <=>  [A^T | -B^T] (s, t) = 0
  Mat sys = hstack({a.inclusion(), -b.inclusion()}, n);
  Subspace k = kernel_basis(sys);
  Mat coeffs(k.dim(), a.dim());
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) coeffs(i, j) = k.basis()(i, j);
  return Subspace::span_rows(coeffs * a.basis());
}

/// Incremental semi-echelon basis, used for fixpoint saturation.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }

  /// Reduces v against the current rows; returns the reduced vector if it was
  /// new (and records it), std::nullopt if v already lies in the span.
  std::optional<Vec> insert(Vec v) {
    detail::require_dims(v.size() == ambient_, "echelon builder ambient mismatch");
    Scalar scratch;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(rows_[i][j]) != 0) detail::sub_product(v[j], f, rows_[i][j], scratch);
    }
    std::size_t p = 0;
    while (p < ambient_ && sgn(v[p]) == 0) ++p;
    if (p == ambient_) return std::nullopt;
    const Scalar inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(v);
    pivots_.push_back(p);
    return v;
  }

  Subspace finish() const { return Subspace::span(rows_, ambient_); }

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing seed and stable under every operator.
inline Subspace span_closure(const Subspace& seed, const std::vector<Mat>& operators) {
  const std::size_t n = seed.ambient_dim();
  for (const auto& op : operators)
    detail::require_dims(op.rows() == n && op.cols() == n, "span_closure: operator is not ambient x ambient");
  EchelonBuilder builder(n);
  std::deque<Vec> frontier;
  for (std::size_t i = 0; i < seed.dim(); ++i)
    if (auto v = builder.insert(seed.basis_vector(i))) frontier.push_back(std::move(*v));
  while (!frontier.empty()) {
    Vec v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& op : operators)
      if (auto w = builder.insert(op * v)) frontier.push_back(std::move(*w));
  }
  return builder.finish();
}

struct QuotientMap {
  Mat map;          // (n - dim w) x n, surjective, kernel exactly w
  std::size_t dim;  // n - dim w
  Mat section;      // n x (n - dim w), map * section = identity
};

/// Quotient k^n -> k^n / w in coordinates given by the non-pivot columns of w.
inline QuotientMap quotient_map(std::size_t ambient, const Subspace& w) {
  detail::require_dims(w.ambient_dim() == ambient, "quotient_map: ambient mismatch");
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : w.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free.push_back(c);
  QuotientMap q{Mat(free.size(), ambient), free.size(), Mat(ambient, free.size())};
  for (std::size_t r = 0; r < free.size(); ++r) {
    const std::size_t c = free[r];
    q.map(r, c) = 1;
    // v -> v - sum_i v[p_i] b_i, then read coordinate c
    for (std::size_t i = 0; i < w.dim(); ++i) q.map(r, w.pivots()[i]) -= w.basis()(i, c);
    q.section(c, r) = 1;
  }
  return q;
}

/// Matrix of op restricted to an invariant subspace, in its echelon coordinates.
inline Mat restrict_operator(const Mat& op, const Subspace& s) {
  Mat image = op * s.inclusion();
  detail::require(s.contains_columns(image), "restrict_operator: subspace is not invariant");
  return s.coordinate_map() * image;
}

/// Operator induced on a quotient by an operator preserving its kernel.
inline Mat induced_operator(const Mat& op, const QuotientMap& q) { return q.map * op * q.section; }

/// Solves a x = b (b may have several columns). std::nullopt if inconsistent.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  detail::require_dims(a.rows() == b.rows(), "solve: row mismatch");
  const std::size_t n = a.cols();
  Echelon e = rref(hstack({a, b}, a.rows()));
  Mat x(n, b.cols());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const std::size_t p = e.pivots[i];
    if (p >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.reduced(i, n + j);
  }
  return x;
}

inline std::optional<Mat> inverse(const Mat& a) {
  if (!a.is_square() || rank(a) != a.rows()) return std::nullopt;
  return solve(a, Mat::identity(a.rows()));
}

/// Basis of {F : F src[i] = dst[i] F for all i}; F is dim(dst) x dim(src).
inline std::vector<Mat> intertwiners(const std::vector<Mat>& src, const std::vector<Mat>& dst,
                                     std::size_t src_dim, std::size_t dst_dim) {
  detail::require_dims(src.size() == dst.size(), "intertwiners: operator count mismatch");
  const Mat id_src = Mat::identity(src_dim), id_dst = Mat::identity(dst_dim);
  std::vector<Mat> eqs;
  for (std::size_t i = 0; i < src.size(); ++i)
    eqs.push_back(kron(id_dst, src[i].transpose()) - kron(dst[i], id_src));
  Mat system = eqs.empty() ? Mat(0, src_dim * dst_dim) : vstack(eqs, src_dim * dst_dim);
  Subspace k = kernel_basis(system);
  std::vector<Mat> out;
  for (std::size_t i = 0; i < k.dim(); ++i) out.push_back(reshape(k.basis_vector(i), dst_dim, src_dim));
  return out;
}

inline bool is_injective(const Mat& a) { return rank(a) == a.cols(); }
inline bool is_surjective(const Mat& a) { return rank(a) == a.rows(); }

}  // namespace hopfpar
