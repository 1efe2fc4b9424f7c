#ifndef LEIBNIZ_ANALYSIS_HPP
#define LEIBNIZ_ANALYSIS_HPP

// Constraint extraction for parametric tables, changes of basis, explicit
// isomorphism checks and invariant-profile comparison.

#include <leibniz/algebra_table.hpp>
#include <leibniz/linalg.hpp>
#include <leibniz/structure.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Polynomials in primitive normal form whose common zeros are exactly the
/// parameter values making a table Leibniz.
class ConstraintSet {
public:
  /// Normalizes and inserts; zero polynomials are ignored. Returns true if
  /// the set grew.
  bool insert(const Polynomial& p) {
    if (p.is_zero()) return false;
    return polys_.insert(normalize_primitive(p)).second;
  }

  std::size_t size() const { return polys_.size(); }
  bool empty() const { return polys_.empty(); }
  auto begin() const { return polys_.begin(); }
  auto end() const { return polys_.end(); }
  bool contains(const Polynomial& p) const { return !p.is_zero() && polys_.count(normalize_primitive(p)) > 0; }

  /// First member not vanishing at `values`, if any.
  std::optional<Polynomial> first_violated(const Assignment& values) const {
    for (const auto& p : polys_)
      if (p.evaluate(values) != 0) return p;
    return std::nullopt;
  }

  std::set<std::string> parameters() const {
    std::set<std::string> names;
    for (const auto& p : polys_)
      for (auto& n : p.parameters()) names.insert(n);
    return names;
  }

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

private:
  std::set<Polynomial> polys_;
};

/// Every coordinate of every residual r(b_i,b_j,b_k), normalized and
/// deduplicated.
inline ConstraintSet extract_constraints(const AlgebraTable& t) {
  ConstraintSet out;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element r = leibniz_residual(t, i, j, k);
        for (const auto& c : r.coords()) {
          if (!c.is_constant()) {
            out.insert(c);
          } else if (!c.is_zero()) {
            out.insert(Polynomial(Rational(1)));  // unsatisfiable
          }
        }
      }
  return out;
}

/// Names in `targets` forced to zero by the homogeneous linear members of
/// `constraints` that involve only `targets`. Any other member can only
/// shrink the solution set further, so the result is sound.
inline std::vector<std::string> parameters_forced_to_zero(const ConstraintSet& constraints,
                                                          const std::vector<std::string>& targets) {
  std::map<std::string, std::size_t> column;
  for (std::size_t c = 0; c < targets.size(); ++c) column[targets[c]] = c;
  RationalMatrix rows;
  for (const auto& p : constraints) {
    bool usable = true;
    RationalVector row(targets.size());
    for (const auto& [m, coeff] : p.terms()) {
      if (m.degree() != 1 || !column.count(m.factors().front().first)) {
        usable = false;
        break;
      }
      row[column[m.factors().front().first]] = coeff;
    }
    if (usable) rows.push_back(std::move(row));
  }
  const Subspace solutions = kernel(std::move(rows), targets.size());
  std::vector<std::string> forced;
  for (std::size_t c = 0; c < targets.size(); ++c) {
    bool free = false;
    for (const auto& v : solutions.rows()) free = free || v[c] != 0;
    if (!free) forced.push_back(targets[c]);
  }
  return forced;
}

/// New basis expressed in the old one: row i holds the old coordinates of
/// new basis vector i. The determinant must be a nonzero constant, so the
/// inverse has polynomial entries.
///
/// Example (2x2): rows {(1/2, 0), (-3/2, 1)} mean y1' = 1/2 y1 and
/// y2' = -3/2 y1 + y2. A product [y1',y2'] is computed in old coordinates as
/// [row_1, row_2] and converted back with the inverse: if v = sum_p v_p b_p
/// then its new coordinates are v'_k = sum_p inv(p,k) v_p.
class BasisChange {
public:
  explicit BasisChange(const std::vector<Element>& rows) : matrix_(rows.size()) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw std::invalid_argument("basis change must be square");
      for (std::size_t p = 0; p < n; ++p) matrix_(i, p) = rows[i][p];
    }
    invert();
  }

  static BasisChange identity(std::size_t n) {
    std::vector<Element> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Element::basis_vector(n, i));
    return BasisChange(rows);
  }

  std::size_t dim() const { return matrix_.size(); }
  const Rational& determinant() const { return det_; }
  const OperatorMatrix& matrix() const { return matrix_; }
  const OperatorMatrix& inverse() const { return inverse_; }

  Element row(std::size_t i) const {
    Element e(dim());
    for (std::size_t p = 0; p < dim(); ++p) e[p] = matrix_(i, p);
    return e;
  }

  /// Old coordinates -> new coordinates.
  Element to_new(const Element& old_coords) const {
    Element out(dim());
    for (std::size_t p = 0; p < dim(); ++p) {
      if (old_coords[p].is_zero()) continue;
      for (std::size_t k = 0; k < dim(); ++k)
        if (!inverse_(p, k).is_zero()) out[k] += inverse_(p, k) * old_coords[p];
    }
    return out;
  }

  /// The change equivalent to applying *this and then `next`.
  BasisChange then(const BasisChange& next) const {
    if (next.dim() != dim()) throw std::invalid_argument("cannot compose basis changes of different size");
    OperatorMatrix prod = next.matrix_ * matrix_;
    std::vector<Element> rows;
    for (std::size_t i = 0; i < dim(); ++i) {
      Element e(dim());
      for (std::size_t p = 0; p < dim(); ++p) e[p] = prod(i, p);
      rows.push_back(std::move(e));
    }
    return BasisChange(rows);
  }

private:
  // Faddeev-LeVerrier: only divides by integers and by the determinant.
  void invert() {
    const std::size_t n = dim();
    const OperatorMatrix id = OperatorMatrix::identity(n);
    OperatorMatrix m(n);
    Polynomial c(Rational(1));
    for (std::size_t k = 1; k <= n; ++k) {
      m = matrix_ * m + c * id;
      OperatorMatrix am = matrix_ * m;
      Polynomial trace;
      for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
      c = trace * Rational(-1, static_cast<long>(k));
    }
    if (!c.is_constant())
      throw std::invalid_argument("basis change determinant is not constant: " +
                                  ((n % 2 ? -c : c)).to_string());
    const Rational c0 = c.constant_value();
    if (c0 == 0) throw std::invalid_argument("basis change is singular (determinant 0)");
    det_ = n % 2 ? Rational(-c0) : c0;
    inverse_ = Polynomial(Rational(-1 / c0)) * m;
  }

  OperatorMatrix matrix_;
  OperatorMatrix inverse_;
  Rational det_;
};

/// The same algebra written in the new basis.
inline AlgebraTable apply_basis_change(const AlgebraTable& t, const BasisChange& c) {
  if (c.dim() != t.dim())
    throw std::invalid_argument("basis change of size " + std::to_string(c.dim()) + " applied to algebra of dim " +
                                std::to_string(t.dim()));
  std::vector<std::string> params = t.params();
  std::set<std::string> extra;
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t p = 0; p < c.dim(); ++p)
      for (auto& name : c.matrix()(i, p).parameters()) extra.insert(name);
  for (const auto& name : extra)
    if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);

  AlgebraTable out(t.name(), t.basis(), params);
  std::vector<Element> rows;
  for (std::size_t i = 0; i < t.dim(); ++i) rows.push_back(c.row(i));
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) out.set_product(i, j, c.to_new(bracket(t, rows[i], rows[j])));
  return out;
}

/// PASS iff `c` carries t1 onto t2 entry for entry.
inline Verdict verify_isomorphism(const AlgebraTable& t1, const AlgebraTable& t2, const BasisChange& c) {
  if (t1.dim() != t2.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(t1.dim()) + " vs " + std::to_string(t2.dim()));
  t1.require_constant("verify_isomorphism");
  t2.require_constant("verify_isomorphism");
  const AlgebraTable image = apply_basis_change(t1, c);
  for (std::size_t i = 0; i < t1.dim(); ++i)
    for (std::size_t j = 0; j < t1.dim(); ++j)
      if (!(image.product(i, j) == t2.product(i, j))) {
        const std::string where = "[" + t2.basis()[i] + "," + t2.basis()[j] + "]";
        return Verdict::fail({"product " + where + " maps to " + image.product(i, j).to_string(t2.basis()) +
                                  " but the target has " + t2.product(i, j).to_string(t2.basis()),
                              std::nullopt, image.product(i, j) - t2.product(i, j)});
      }
  return Verdict::pass();
}

enum class ProfileOutcome { distinguished, inconclusive };

inline const char* to_string(ProfileOutcome o) {
  return o == ProfileOutcome::distinguished ? "DISTINGUISHED" : "INCONCLUSIVE";
}

struct ProfileReport {
  InvariantProfile first;
  InvariantProfile second;
  ProfileOutcome outcome = ProfileOutcome::inconclusive;
  std::vector<std::string> separating;  // names of invariants that differ
};

/// DISTINGUISHED when some invariant differs (so the algebras are not
/// isomorphic); INCONCLUSIVE otherwise. Never claims isomorphism.
inline ProfileReport compare_profiles(const AlgebraTable& t1, const AlgebraTable& t2) {
  ProfileReport r{derived_and_centers(t1), derived_and_centers(t2), ProfileOutcome::inconclusive, {}};
  const auto a = r.first.entries(), b = r.second.entries();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].second != b[k].second) r.separating.push_back(a[k].first);
  if (!r.separating.empty()) r.outcome = ProfileOutcome::distinguished;
  return r;
}

}  // namespace leibniz

#endif  // LEIBNIZ_ANALYSIS_HPP
