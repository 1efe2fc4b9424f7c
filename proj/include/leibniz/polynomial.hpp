#ifndef LEIBNIZ_POLYNOMIAL_HPP
#define LEIBNIZ_POLYNOMIAL_HPP

// Exact scalars: GMP rationals and sparse multivariate polynomials over them.
//
// Monomials are kept in a single canonical total order, "graded lexicographic
// over sorted parameter names":
//   - lower total degree comes first;
//   - within a degree, compare the monomials as words obtained by spelling out
//     each variable (sorted by name) as many times as its exponent, e.g.
//     a^2 -> "a a", a*l -> "a l"; the lexicographically smaller word is first.
// So 1 < a < l < a^2 < a*l < l^2. Polynomials iterate their terms in this
// order and print them in this order.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leibniz {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses `INT` or `INT/INT` (optional leading sign on the numerator).
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  return make_rational(Integer(n), Integer(std::string(den)));
}

class Monomial {
public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;

  /// Builds a monomial from (name, exponent) pairs; zero exponents are dropped
  /// and repeated names are merged.
  Monomial(std::initializer_list<Factor> factors) {
    for (const auto& [name, exp] : factors) multiply_by(name, exp);
  }

  static Monomial variable(std::string name, unsigned exponent = 1) {
    Monomial m;
    m.multiply_by(std::move(name), exponent);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  unsigned exponent(std::string_view name) const {
    for (const auto& [n, e] : factors_)
      if (n == name) return e;
    return 0;
  }

  void multiply_by(std::string name, unsigned exponent) {
    if (exponent == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                               [](const Factor& f, const std::string& n) { return f.first < n; });
    if (it != factors_.end() && it->first == name)
      it->second += exponent;
    else
      factors_.insert(it, {std::move(name), exponent});
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [n, e] : b.factors_) r.multiply_by(n, e);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// Renders factors joined by `*`. Names listed in `order` come first, in
  /// that order; any other names follow alphabetically.
  std::string to_string(const std::vector<std::string>& order = {}) const {
    std::vector<Factor> fs = factors_;
    auto rank = [&](const std::string& n) {
      auto it = std::find(order.begin(), order.end(), n);
      return static_cast<std::size_t>(it - order.begin());
    };
    std::stable_sort(fs.begin(), fs.end(),
                     [&](const Factor& x, const Factor& y) { return rank(x.first) < rank(y.first); });
    std::string out;
    for (const auto& [n, e] : fs) {
      if (!out.empty()) out += '*';
      out += n;
      if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
  }

private:
  std::vector<Factor> factors_;  // sorted by name, exponents > 0
};

/// Canonical monomial order (see the file comment). Returns true when a < b.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
      if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
      // Same letter repeated more often keeps the word smaller for longer.
      if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return false;
  }
};

using Assignment = std::map<std::string, Rational>;

class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;
  Polynomial(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT(google-explicit-constructor)

  static Polynomial variable(const std::string& name) {
    Polynomial p;
    p.add_term(Monomial::variable(name), Rational(1));
    return p;
  }

  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  /// Value of a constant polynomial; throws if any parameter occurs.
  Rational constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial '" + to_string() + "' is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  std::set<std::string> parameters() const {
    std::set<std::string> names;
    for (const auto& t : terms_)
      for (const auto& f : t.first.factors()) names.insert(f.first);
    return names;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Strict weak order used for sets of polynomials: term by term in
  /// canonical monomial order, then by coefficient, shorter prefix first.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    MonomialOrder less;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (less(ia->first, ib->first)) return true;
      if (less(ib->first, ia->first)) return false;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
  }

  /// Exact value under an assignment covering every occurring parameter.
  Rational evaluate(const Assignment& values) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (const auto& [name, e] : m.factors()) {
        auto it = values.find(name);
        if (it == values.end()) throw std::out_of_range("no value for parameter '" + name + "'");
        Rational p(1);
        for (unsigned k = 0; k < e; ++k) p *= it->second;
        v *= p;
      }
      total += v;
    }
    return total;
  }

  /// Replaces the assigned parameters by their values; others stay symbolic.
  Polynomial substitute(const Assignment& values) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      Monomial rest;
      for (const auto& [name, e] : m.factors()) {
        auto it = values.find(name);
        if (it == values.end()) {
          rest.multiply_by(name, e);
          continue;
        }
        for (unsigned k = 0; k < e; ++k) v *= it->second;
      }
      r.add_term(rest, v);
    }
    return r;
  }

  /// Text form `c*m + ...` in canonical term order; `param_order` only
  /// affects the order of factors inside each monomial.
  std::string to_string(const std::vector<std::string>& param_order = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out += '-';
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (m.is_unit()) {
        out += leibniz::to_string(mag);
      } else {
        if (mag != 1) out += leibniz::to_string(mag) + "*";
        out += m.to_string(param_order);
      }
    }
    return out;
  }

private:
  Terms terms_;
};

/// Scales p by a nonzero rational so that its coefficients are coprime
/// integers and its first term in canonical order is positive. The result
/// represents the class {c*p : c != 0}.
inline Polynomial normalize_primitive(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  Integer num_gcd(0), den_lcm(1);
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (p.terms().begin()->second < 0) scale = -scale;
  return p * scale;
}

}  // namespace leibniz

#endif  // LEIBNIZ_POLYNOMIAL_HPP
