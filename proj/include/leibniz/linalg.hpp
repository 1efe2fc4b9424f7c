#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

// Exact linear algebra over the rationals: reduced row echelon form,
// subspaces, kernels, and operator matrices with polynomial entries.

#include <leibniz/algebra_table.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Row-reduces `rows` in place (each of length `cols`) to reduced echelon
/// form, drops zero rows and returns the pivot columns.
inline std::vector<std::size_t> reduce_rows(RationalMatrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// A subspace of Q^n stored as its reduced row echelon basis.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span_of(std::size_t ambient, RationalMatrix vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw std::invalid_argument("span: vector length does not match ambient dimension");
    Subspace s(ambient);
    s.pivots_ = reduce_rows(vectors, ambient);
    s.rows_ = std::move(vectors);
    return s;
  }

  static Subspace whole(std::size_t ambient) {
    RationalMatrix id(ambient, RationalVector(ambient));
    for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
    return span_of(ambient, std::move(id));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const RationalMatrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after eliminating the pivot coordinates.
  RationalVector reduce(RationalVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < ambient_; ++k) v[k] -= f * rows_[i][k];
    }
    return v;
  }

  bool contains(const RationalVector& v) const {
    for (const auto& x : reduce(v))
      if (x != 0) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    for (const auto& r : o.rows_)
      if (!contains(r)) return false;
    return true;
  }

  Subspace plus(const RationalMatrix& more) const {
    RationalMatrix all = rows_;
    all.insert(all.end(), more.begin(), more.end());
    return span_of(ambient_, std::move(all));
  }

  /// Standard basis indices not used as pivots: a complement of the subspace.
  std::vector<std::size_t> complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (p < pivots_.size() && pivots_[p] == c) {
        ++p;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  std::vector<Element> basis_elements() const {
    std::vector<Element> out;
    for (const auto& r : rows_) out.push_back(Element::from_rationals(r));
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  std::size_t ambient_;
  RationalMatrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Exact span of constant elements of a common ambient dimension.
inline Subspace span(std::size_t ambient, const std::vector<Element>& vectors) {
  RationalMatrix rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("span: element dimension mismatch");
    rows.push_back(v.to_rationals());
  }
  return Subspace::span_of(ambient, std::move(rows));
}

/// Kernel {x : A x = 0} of a matrix with `cols` columns.
inline Subspace kernel(RationalMatrix a, std::size_t cols) {
  auto pivots = reduce_rows(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return Subspace::span_of(cols, std::move(basis));
}

/// Square matrix of scalars acting on coordinate columns: column j is the
/// image of the j-th basis vector.
class OperatorMatrix {
public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static OperatorMatrix identity(std::size_t n) {
    OperatorMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(Rational(1));
    return m;
  }

  std::size_t size() const { return n_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * n_ + c); }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_.at(r * n_ + c); }

  Element column(std::size_t c) const {
    Element e(n_);
    for (std::size_t r = 0; r < n_; ++r) e[r] = (*this)(r, c);
    return e;
  }
  void set_column(std::size_t c, const Element& e) {
    for (std::size_t r = 0; r < n_; ++r) (*this)(r, c) = e[r];
  }

  Element apply(const Element& v) const {
    if (v.size() != n_) throw std::invalid_argument("operator applied to element of wrong dimension");
    Element out(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < n_; ++r)
        if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  bool is_constant() const {
    for (const auto& e : entries_)
      if (!e.is_constant()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  RationalMatrix to_rationals() const {
    RationalMatrix m(n_, RationalVector(n_));
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        if (!(*this)(r, c).is_constant()) throw std::domain_error("operator matrix has parametric entries");
        m[r][c] = (*this)(r, c).constant_value();
      }
    return m;
  }

  /// Principal block on the index range [first, first + count).
  OperatorMatrix block(std::size_t first, std::size_t count) const {
    OperatorMatrix b(count);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(first + r, first + c);
    return b;
  }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("operator size mismatch");
    OperatorMatrix r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("operator size mismatch");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
  }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("operator size mismatch");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
    return a;
  }
  friend OperatorMatrix operator*(const Polynomial& s, OperatorMatrix a) {
    for (auto& e : a.entries_) e = e * s;
    return a;
  }

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace leibniz

#endif  // LEIBNIZ_LINALG_HPP
