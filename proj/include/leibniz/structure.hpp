#ifndef LEIBNIZ_STRUCTURE_HPP
#define LEIBNIZ_STRUCTURE_HPP

// Identity residuals, Lie/Leibniz checks, ideals, quotients, module closure
// and the dimension invariants of an algebra table.

#include <leibniz/algebra_table.hpp>
#include <leibniz/linalg.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct Witness {
  std::string description;
  std::optional<std::array<std::size_t, 3>> triple;
  std::optional<Element> residual;
};

/// Outcome of a check. A failing verdict always carries a witness.
class Verdict {
public:
  static Verdict pass() { return Verdict(Status::pass, std::nullopt); }
  static Verdict inconclusive(std::optional<Witness> note = std::nullopt) {
    return Verdict(Status::inconclusive, std::move(note));
  }
  static Verdict fail(Witness w) { return Verdict(Status::fail, std::move(w)); }

  Status status() const { return status_; }
  bool passed() const { return status_ == Status::pass; }
  const std::optional<Witness>& witness() const { return witness_; }

private:
  Verdict(Status s, std::optional<Witness> w) : status_(s), witness_(std::move(w)) {}
  Status status_;
  std::optional<Witness> witness_;
};

/// r(x,y,z) = [x,[y,z]] - [[x,y],z] + [[x,z],y] on basis vectors i, j, k.
inline Element leibniz_residual(const AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k) {
  const Element bi = t.basis_vector(i);
  Element r = bracket(t, bi, t.product(j, k));
  r -= bracket(t, t.product(i, j), t.basis_vector(k));
  r += bracket(t, t.product(i, k), t.basis_vector(j));
  return r;
}

inline std::string triple_label(const AlgebraTable& t, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + t.basis()[i] + "," + t.basis()[j] + "," + t.basis()[k] + ")";
}

/// PASS iff every residual vanishes; on failure reports the first triple in
/// lexicographic index order.
inline Verdict check_leibniz(const AlgebraTable& t) {
  t.require_constant("check_leibniz");
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element r = leibniz_residual(t, i, j, k);
        if (!r.is_zero())
          return Verdict::fail({"Leibniz identity fails on " + triple_label(t, i, j, k),
                                std::array<std::size_t, 3>{i, j, k}, std::move(r)});
      }
  return Verdict::pass();
}

/// PASS iff the table is antisymmetric (including [b_i,b_i] = 0) and
/// satisfies the Jacobi identity on all basis triples.
inline Verdict check_lie(const AlgebraTable& t) {
  t.require_constant("check_lie");
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element s = t.product(i, j) + t.product(j, i);
      if (!s.is_zero())
        return Verdict::fail({"antisymmetry fails: [" + t.basis()[i] + "," + t.basis()[j] + "]+[" + t.basis()[j] +
                                  "," + t.basis()[i] + "] != 0",
                              std::nullopt, std::move(s)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element r = bracket(t, t.basis_vector(i), t.product(j, k));
        r += bracket(t, t.basis_vector(j), t.product(k, i));
        r += bracket(t, t.basis_vector(k), t.product(i, j));
        if (!r.is_zero())
          return Verdict::fail({"Jacobi identity fails on " + triple_label(t, i, j, k),
                                std::array<std::size_t, 3>{i, j, k}, std::move(r)});
      }
  return Verdict::pass();
}

/// Matrix of right multiplication v -> [v, a].
inline OperatorMatrix right_mult_matrix(const AlgebraTable& t, const Element& a) {
  OperatorMatrix m(t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j) m.set_column(j, bracket(t, t.basis_vector(j), a));
  return m;
}

/// Matrix of left multiplication v -> [a, v].
inline OperatorMatrix left_mult_matrix(const AlgebraTable& t, const Element& a) {
  OperatorMatrix m(t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j) m.set_column(j, bracket(t, a, t.basis_vector(j)));
  return m;
}

/// Smallest subspace containing `seed` and closed under v -> [v,b_j] and
/// v -> [b_j,v] for every basis vector b_j.
inline Subspace ideal_closure(const AlgebraTable& t, const Subspace& seed) {
  t.require_constant("ideal_closure");
  if (seed.ambient_dim() != t.dim()) throw std::invalid_argument("ideal_closure: seed lives in a different space");
  Subspace current = seed;
  while (true) {
    RationalMatrix images;
    for (const auto& v : current.basis_elements())
      for (std::size_t j = 0; j < t.dim(); ++j) {
        images.push_back(bracket(t, v, t.basis_vector(j)).to_rationals());
        images.push_back(bracket(t, t.basis_vector(j), v).to_rationals());
      }
    Subspace next = current.plus(images);
    if (next.rank() == current.rank()) return current;
    current = std::move(next);
  }
}

/// The ideal generated by all squares [x,x], seeded with the polarized
/// squares [b_i,b_i] and [b_i,b_j] + [b_j,b_i].
inline Subspace squares_ideal(const AlgebraTable& t) {
  t.require_constant("squares_ideal");
  std::vector<Element> seeds;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    seeds.push_back(t.product(i, i));
    for (std::size_t j = i + 1; j < t.dim(); ++j) seeds.push_back(t.product(i, j) + t.product(j, i));
  }
  return ideal_closure(t, span(t.dim(), seeds));
}

/// Empty when `j` is a two-sided ideal, otherwise a description of the first
/// product that leaves it.
inline std::optional<std::string> ideal_violation(const AlgebraTable& t, const Subspace& j) {
  const auto elems = j.basis_elements();
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (std::size_t k = 0; k < t.dim(); ++k) {
      const std::string v = elems[r].to_string(t.basis());
      if (!j.contains(bracket(t, elems[r], t.basis_vector(k)).to_rationals()))
        return "[" + v + "," + t.basis()[k] + "] is not in the subspace";
      if (!j.contains(bracket(t, t.basis_vector(k), elems[r]).to_rationals()))
        return "[" + t.basis()[k] + "," + v + "] is not in the subspace";
    }
  return std::nullopt;
}

struct Quotient {
  AlgebraTable table;
  /// Rows = quotient basis, columns = original basis: coordinates of the
  /// image of each original basis vector.
  RationalMatrix projection;
};

/// L/J on the complement spanned by the non-pivot basis vectors of J.
inline Quotient quotient_algebra(const AlgebraTable& t, const Subspace& j) {
  t.require_constant("quotient_algebra");
  if (j.ambient_dim() != t.dim()) throw std::invalid_argument("quotient_algebra: subspace in wrong ambient space");
  if (auto bad = ideal_violation(t, j)) throw std::invalid_argument("not an ideal: " + *bad);

  const auto keep = j.complement_indices();
  std::vector<std::string> names;
  for (auto c : keep) names.push_back(t.basis()[c]);
  auto project = [&](const RationalVector& v) {
    RationalVector red = j.reduce(v);
    Element out(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) out[a] = Polynomial(red[keep[a]]);
    return out;
  };

  Quotient q{AlgebraTable(t.name() + "_mod_ideal", names), {}};
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      q.table.set_product(a, b, project(t.product(keep[a], keep[b]).to_rationals()));

  q.projection.assign(keep.size(), RationalVector(t.dim()));
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Element img = project(t.basis_vector(i).to_rationals());
    for (std::size_t a = 0; a < keep.size(); ++a) q.projection[a][i] = img[a].constant_value();
  }
  return q;
}

/// Smallest subspace containing `seed` and invariant under every operator.
inline Subspace submodule_closure(const std::vector<OperatorMatrix>& ops, const Element& seed) {
  const std::size_t n = seed.size();
  std::vector<RationalMatrix> mats;
  for (const auto& op : ops) {
    if (op.size() != n) throw std::invalid_argument("submodule_closure: operator size mismatch");
    mats.push_back(op.to_rationals());
  }
  Subspace current = span(n, {seed});
  while (true) {
    RationalMatrix images;
    for (const auto& v : current.rows())
      for (const auto& m : mats) {
        RationalVector w(n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (m[r][c] != 0 && v[c] != 0) w[r] += m[r][c] * v[c];
        images.push_back(std::move(w));
      }
    Subspace next = current.plus(images);
    if (next.rank() == current.rank()) return current;
    current = std::move(next);
  }
}

/// Span of all [a,b] with a in `left`, b in `right`.
inline Subspace product_space(const AlgebraTable& t, const Subspace& left, const Subspace& right) {
  std::vector<Element> prods;
  const auto rb = right.basis_elements();
  for (const auto& a : left.basis_elements())
    for (const auto& b : rb) prods.push_back(bracket(t, a, b));
  return span(t.dim(), prods);
}

/// Basis-independent dimension data used to tell algebras apart.
struct InvariantProfile {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;                 // dim [L,L]
  std::vector<std::size_t> derived_series;     // dims of L, L^(1), L^(2), ... until stable
  std::vector<std::size_t> lower_central;      // dims of L^1 = L, L^2, ... until stable
  std::size_t left_center = 0;                 // {z : [z,L] = 0}
  std::size_t right_center = 0;                // {z : [L,z] = 0}
  std::size_t squares_ideal = 0;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;

  /// (name, rendered value) pairs in a fixed order.
  std::vector<std::pair<std::string, std::string>> entries() const {
    auto seq = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    };
    return {{"dim", std::to_string(dim)},
            {"derived_dim", std::to_string(derived_dim)},
            {"derived_series", seq(derived_series)},
            {"lower_central_series", seq(lower_central)},
            {"left_center", std::to_string(left_center)},
            {"right_center", std::to_string(right_center)},
            {"squares_ideal", std::to_string(squares_ideal)}};
  }
};

namespace detail {

// Kernel of z -> ([z,b_1],...,[z,b_n]) (left = true) or ([b_1,z],...).
inline std::size_t center_dim(const AlgebraTable& t, bool left) {
  const std::size_t n = t.dim();
  RationalMatrix a(n * n, RationalVector(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      const Element& img = left ? t.product(p, i) : t.product(i, p);
      for (std::size_t k = 0; k < n; ++k) a[i * n + k][p] = img[k].constant_value();
    }
  return kernel(std::move(a), n).rank();
}

}  // namespace detail

inline InvariantProfile derived_and_centers(const AlgebraTable& t) {
  t.require_constant("derived_and_centers");
  InvariantProfile p;
  const Subspace whole = Subspace::whole(t.dim());
  p.dim = t.dim();
  p.derived_dim = product_space(t, whole, whole).rank();

  Subspace cur = whole;
  p.derived_series.push_back(cur.rank());
  while (true) {
    Subspace next = product_space(t, cur, cur);
    if (next.rank() == cur.rank()) break;
    p.derived_series.push_back(next.rank());
    cur = std::move(next);
  }

  cur = whole;
  p.lower_central.push_back(cur.rank());
  while (true) {
    Subspace next = product_space(t, cur, whole);
    if (next.rank() == cur.rank()) break;
    p.lower_central.push_back(next.rank());
    cur = std::move(next);
  }

  p.left_center = detail::center_dim(t, true);
  p.right_center = detail::center_dim(t, false);
  p.squares_ideal = squares_ideal(t).rank();
  return p;
}

}  // namespace leibniz

#endif  // LEIBNIZ_STRUCTURE_HPP
