#ifndef LEIBNIZ_ALGEBRA_TABLE_HPP
#define LEIBNIZ_ALGEBRA_TABLE_HPP

#include <leibniz/polynomial.hpp>

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Coordinate vector of scalars over the basis of some algebra.
class Element {
public:
  Element() = default;
  explicit Element(std::size_t dim) : coords_(dim) {}
  explicit Element(std::vector<Polynomial> coords) : coords_(std::move(coords)) {}

  static Element basis_vector(std::size_t dim, std::size_t i) {
    Element e(dim);
    e.coords_.at(i) = Polynomial(Rational(1));
    return e;
  }

  static Element from_rationals(const std::vector<Rational>& values) {
    Element e(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) e.coords_[i] = Polynomial(values[i]);
    return e;
  }

  std::size_t size() const { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
  Polynomial& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Polynomial>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool is_constant() const {
    for (const auto& c : coords_)
      if (!c.is_constant()) return false;
    return true;
  }

  /// Coordinates as rationals; throws if a coordinate is parametric.
  std::vector<Rational> to_rationals() const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
      if (!c.is_constant()) throw std::domain_error("element has parametric coordinate '" + c.to_string() + "'");
      out.push_back(c.constant_value());
    }
    return out;
  }

  Element& operator+=(const Element& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Element& operator*=(const Polynomial& s) {
    for (auto& c : coords_) c = c * s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Polynomial(Rational(-1)); }
  friend Element operator*(const Polynomial& s, Element a) { return a *= s; }

  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }

  Element substitute(const Assignment& values) const {
    Element r(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i].substitute(values);
    return r;
  }

  /// `EXPR` text: `0` or signed terms `coef*mono*symbol` in basis order.
  std::string to_string(const std::vector<std::string>& basis, const std::vector<std::string>& params = {}) const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      for (const auto& [m, c] : coords_[i].terms()) {
        Rational mag = abs(c);
        if (out.empty()) {
          if (c < 0) out += '-';
        } else {
          out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += leibniz::to_string(mag) + "*";
        if (!m.is_unit()) out += m.to_string(params) + "*";
        out += basis.at(i);
      }
    }
    return out.empty() ? "0" : out;
  }

private:
  void check_same_size(const Element& o) const {
    if (o.size() != size())
      throw std::invalid_argument("element dimension mismatch: " + std::to_string(size()) + " vs " +
                                  std::to_string(o.size()));
  }

  std::vector<Polynomial> coords_;
};

/// Structure constants of a finite-dimensional algebra: entry (i,j) holds
/// the product [b_i, b_j] as an Element. Products not set are zero.
class AlgebraTable {
public:
  AlgebraTable() = default;

  AlgebraTable(std::string name, std::vector<std::string> basis, std::vector<std::string> params = {})
      : name_(std::move(name)), basis_(std::move(basis)), params_(std::move(params)) {
    if (basis_.empty()) throw std::invalid_argument("algebra must have positive dimension");
    std::set<std::string> seen;
    for (const auto& b : basis_)
      if (!seen.insert(b).second) throw std::invalid_argument("duplicate basis symbol '" + b + "'");
    std::set<std::string> pseen;
    for (const auto& p : params_) {
      if (seen.count(p)) throw std::invalid_argument("parameter '" + p + "' clashes with a basis symbol");
      if (!pseen.insert(p).second) throw std::invalid_argument("duplicate parameter '" + p + "'");
    }
    products_.assign(basis_.size() * basis_.size(), Element(basis_.size()));
  }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<std::string>& params() const { return params_; }

  std::size_t index_of(const std::string& symbol) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == symbol) return i;
    throw std::out_of_range("unknown basis symbol '" + symbol + "'");
  }

  bool has_symbol(const std::string& symbol) const {
    for (const auto& b : basis_)
      if (b == symbol) return true;
    return false;
  }

  Element basis_vector(std::size_t i) const { return Element::basis_vector(dim(), i); }
  Element basis_vector(const std::string& symbol) const { return basis_vector(index_of(symbol)); }

  const Element& product(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }
  const Element& product(const std::string& l, const std::string& r) const {
    return product(index_of(l), index_of(r));
  }

  void set_product(std::size_t i, std::size_t j, Element value) {
    if (value.size() != dim()) throw std::invalid_argument("product value has wrong dimension");
    for (const auto& c : value.coords())
      for (const auto& p : c.parameters())
        if (!is_param(p)) throw std::invalid_argument("undeclared parameter '" + p + "' in product");
    products_.at(i * dim() + j) = std::move(value);
  }
  void set_product(const std::string& l, const std::string& r, Element value) {
    set_product(index_of(l), index_of(r), std::move(value));
  }

  /// Adds `coeff * b_target` to the product [b_l, b_r].
  void add_to_product(const std::string& l, const std::string& r, const Polynomial& coeff,
                      const std::string& target) {
    Element v = product(l, r);
    v[index_of(target)] += coeff;
    set_product(l, r, std::move(v));
  }

  bool is_param(const std::string& p) const {
    for (const auto& q : params_)
      if (q == p) return true;
    return false;
  }

  /// True when no product carries a parameter.
  bool is_constant() const {
    for (const auto& e : products_)
      if (!e.is_constant()) return false;
    return true;
  }

  /// Parameters that actually occur in some product.
  std::set<std::string> used_parameters() const {
    std::set<std::string> used;
    for (const auto& e : products_)
      for (const auto& c : e.coords())
        for (auto& p : c.parameters()) used.insert(p);
    return used;
  }

  /// Same basis symbols and identical products (names and parameter lists
  /// are ignored).
  bool same_structure(const AlgebraTable& o) const { return basis_ == o.basis_ && products_ == o.products_; }

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.name_ == b.name_ && a.params_ == b.params_ && a.same_structure(b);
  }

  /// Substitutes values for (some of) the parameters; substituted names are
  /// dropped from the parameter list.
  AlgebraTable substitute(const Assignment& values, std::string new_name = {}) const {
    std::vector<std::string> rest;
    for (const auto& p : params_)
      if (!values.count(p)) rest.push_back(p);
    AlgebraTable t(new_name.empty() ? name_ : std::move(new_name), basis_, std::move(rest));
    for (std::size_t k = 0; k < products_.size(); ++k) t.products_[k] = products_[k].substitute(values);
    return t;
  }

  void require_constant(const char* operation) const {
    if (!is_constant())
      throw std::domain_error(std::string(operation) + " needs a parameter-free table; '" + name_ +
                              "' is parametric (use constraint extraction instead)");
  }

private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::string> params_;
  std::vector<Element> products_;
};

/// Bilinear extension of the table.
inline Element bracket(const AlgebraTable& t, const Element& u, const Element& v) {
  const std::size_t n = t.dim();
  if (u.size() != n || v.size() != n)
    throw std::invalid_argument("bracket: element dimension does not match algebra '" + t.name() + "'");
  Element out(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (v[q].is_zero()) continue;
      const Element& pq = t.product(p, q);
      if (pq.is_zero()) continue;
      Polynomial coeff = u[p] * v[q];
      for (std::size_t k = 0; k < n; ++k)
        if (!pq[k].is_zero()) out[k] += coeff * pq[k];
    }
  }
  return out;
}

}  // namespace leibniz

#endif  // LEIBNIZ_ALGEBRA_TABLE_HPP
