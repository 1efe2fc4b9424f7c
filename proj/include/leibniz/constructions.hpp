#ifndef LEIBNIZ_CONSTRUCTIONS_HPP
#define LEIBNIZ_CONSTRUCTIONS_HPP

// Constructors for sl2, r2, the irreducible sl2-modules V(m), the
// Dzhumadil'daev extension, direct sums, and the families built on
// sl2 + V(m) + r2.
//
// Module actions are right actions: the operator for g is v -> [v,g], and an
// operator matrix stores the image of basis vector j in column j. With this
// convention the Leibniz identity on (v, g, g') reads
//   R_[g,g'] = R_g' * R_g - R_g * R_g'
// so for sl2:  H = F*E - E*F,  2E = H*E - E*H,  -2F = H*F - F*H.

#include <leibniz/algebra_table.hpp>
#include <leibniz/linalg.hpp>
#include <leibniz/structure.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Raised when requested parameters violate a family's admissibility
/// condition.
class AdmissibilityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Polynomial constant(long v) { return Polynomial(Rational(v)); }

inline std::vector<std::string> x_names(unsigned m) {
  std::vector<std::string> names;
  for (unsigned k = 0; k <= m; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

inline void add_sl2_products(AlgebraTable& t) {
  t.add_to_product("e", "h", constant(2), "e");
  t.add_to_product("h", "e", constant(-2), "e");
  t.add_to_product("f", "h", constant(-2), "f");
  t.add_to_product("h", "f", constant(2), "f");
  t.add_to_product("e", "f", constant(1), "h");
  t.add_to_product("f", "e", constant(-1), "h");
}

// [x_k,h] = (m-2k) x_k, [x_k,f] = x_{k+1}, [x_k,e] = -k(m+1-k) x_{k-1}.
inline void add_module_action(AlgebraTable& t, unsigned m) {
  const long mm = m;
  for (long k = 0; k <= mm; ++k) {
    const std::string xk = "x" + std::to_string(k);
    t.add_to_product(xk, "h", constant(mm - 2 * k), xk);
    if (k < mm) t.add_to_product(xk, "f", constant(1), "x" + std::to_string(k + 1));
    if (k >= 1) t.add_to_product(xk, "e", constant(-k * (mm + 1 - k)), "x" + std::to_string(k - 1));
  }
}

inline std::vector<std::string> family_basis(unsigned m) {
  std::vector<std::string> basis{"e", "h", "f"};
  for (auto& x : x_names(m)) basis.push_back(x);
  basis.push_back("y1");
  basis.push_back("y2");
  return basis;
}

}  // namespace detail

inline AlgebraTable make_sl2() {
  AlgebraTable t("sl2", {"e", "h", "f"});
  detail::add_sl2_products(t);
  return t;
}

inline AlgebraTable make_r2() {
  AlgebraTable t("r2", {"y1", "y2"});
  t.add_to_product("y1", "y2", detail::constant(1), "y1");
  t.add_to_product("y2", "y1", detail::constant(-1), "y1");
  return t;
}

/// Zero product on `dim` basis vectors z1..zdim.
inline AlgebraTable make_zero_algebra(std::size_t dim, std::string name = "zero") {
  std::vector<std::string> basis;
  for (std::size_t i = 1; i <= dim; ++i) basis.push_back("z" + std::to_string(i));
  return AlgebraTable(std::move(name), std::move(basis));
}

/// A right module: action[i] is the operator of the i-th basis vector of
/// the acting Lie algebra.
struct RightModule {
  std::vector<std::string> basis;
  std::vector<OperatorMatrix> action;
};

/// The irreducible sl2-module V(m) on x0..xm.
struct Sl2Module {
  unsigned weight = 0;
  std::vector<std::string> basis;
  OperatorMatrix E, F, H;

  /// Action in sl2's basis order e, h, f.
  RightModule as_right_module() const { return {basis, {E, H, F}}; }
};

inline Sl2Module make_V_module(unsigned m) {
  Sl2Module v{m, detail::x_names(m), OperatorMatrix(m + 1), OperatorMatrix(m + 1), OperatorMatrix(m + 1)};
  const long mm = m;
  for (long k = 0; k <= mm; ++k) {
    v.H(k, k) = detail::constant(mm - 2 * k);
    if (k < mm) v.F(k + 1, k) = detail::constant(1);
    if (k >= 1) v.E(k - 1, k) = detail::constant(-k * (mm + 1 - k));
  }
  return v;
}

/// First pair (i,j) of Lie basis elements for which the operators fail
/// R_[g_i,g_j] = R_gj R_gi - R_gi R_gj, or empty if the action is a right
/// module.
inline std::optional<std::pair<std::size_t, std::size_t>> right_module_violation(const AlgebraTable& g,
                                                                               const std::vector<OperatorMatrix>& action) {
  if (action.size() != g.dim()) throw std::invalid_argument("module action needs one operator per basis element");
  const std::size_t n = action.empty() ? 0 : action.front().size();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      OperatorMatrix lhs(n);
      const Element& gij = g.product(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!gij[k].is_zero()) lhs = lhs + gij[k] * action[k];
      if (!(lhs == action[j] * action[i] - action[i] * action[j])) return std::pair{i, j};
    }
  return std::nullopt;
}

/// Q = G + M with [x+m, y+n] = [x,y] + [m,y]: M acts on the right through
/// `module` and trivially on the left.
inline AlgebraTable make_dzhumadildaev(const AlgebraTable& g, const RightModule& module, std::string name = {}) {
  if (auto v = check_lie(g); !v.passed())
    throw std::invalid_argument("Dzhumadil'daev construction needs a Lie algebra: " + v.witness()->description);
  if (auto bad = right_module_violation(g, module.action))
    throw std::invalid_argument("action is not a right module: relation fails for [" + g.basis()[bad->first] + "," +
                                g.basis()[bad->second] + "]");
  std::vector<std::string> basis = g.basis();
  basis.insert(basis.end(), module.basis.begin(), module.basis.end());
  AlgebraTable q(name.empty() ? "Q_" + g.name() : std::move(name), basis, g.params());
  const std::size_t n = g.dim(), d = module.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v(n + d);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.product(i, j)[k];
      q.set_product(i, j, std::move(v));
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      Element v(n + d);
      for (std::size_t r = 0; r < d; ++r) v[n + r] = module.action[i](r, a);
      q.set_product(n + a, i, std::move(v));
    }
  return q;
}

/// Block-diagonal sum; clashing names in `b` get a `_2` (then `_3`, ...)
/// suffix.
inline AlgebraTable make_direct_sum(const AlgebraTable& a, const AlgebraTable& b, std::string name = {}) {
  std::vector<std::string> basis = a.basis();
  std::vector<std::string> params = a.params();
  auto taken = [&](const std::string& s) {
    return std::find(basis.begin(), basis.end(), s) != basis.end() ||
           std::find(params.begin(), params.end(), s) != params.end();
  };
  for (const auto& p : b.params())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  for (const auto& s : b.basis()) {
    std::string fresh = s;
    for (int k = 2; taken(fresh); ++k) fresh = s + "_" + std::to_string(k);
    basis.push_back(fresh);
  }
  AlgebraTable t(name.empty() ? a.name() + "_plus_" + b.name() : std::move(name), basis, params);
  const std::size_t na = a.dim(), nb = b.dim();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      Element v(na + nb);
      for (std::size_t k = 0; k < na; ++k) v[k] = a.product(i, j)[k];
      t.set_product(i, j, std::move(v));
    }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Element v(na + nb);
      for (std::size_t k = 0; k < nb; ++k) v[na + k] = b.product(i, j)[k];
      t.set_product(na + i, na + j, std::move(v));
    }
  return t;
}

/// Layout of the parametric family on {e,h,f,x0..xm,y1,y2}. Every free
/// coefficient gets a parameter named `<prefix>_<left>_<right>_<j>`, the
/// coefficient of x_j in [left,right].
struct FamilySpec {
  unsigned m = 0;
  bool include_sl2_defects = false;     // x-terms on every sl2 x sl2 product
  bool include_sl2_R_products = false;  // [e|h|f, y_i] = sum c x_j
  std::string prefix = "a";
};

inline std::string family_parameter(const FamilySpec& spec, const std::string& left, const std::string& right,
                                    unsigned j) {
  return spec.prefix + "_" + left + "_" + right + "_" + std::to_string(j);
}

inline AlgebraTable make_generic_family(const FamilySpec& spec) {
  const unsigned m = spec.m;
  const auto basis = detail::family_basis(m);
  const std::vector<std::string> sl2{"e", "h", "f"}, ys{"y1", "y2"};
  const auto xs = detail::x_names(m);

  // (left, right) slots that carry a free sum of x_j, in parameter order.
  std::vector<std::pair<std::string, std::string>> slots;
  if (spec.include_sl2_defects)
    for (const auto& l : sl2)
      for (const auto& r : sl2) slots.emplace_back(l, r);
  for (const auto& y : ys)
    for (const auto& s : sl2) slots.emplace_back(y, s);
  if (spec.include_sl2_R_products)
    for (const auto& s : sl2)
      for (const auto& y : ys) slots.emplace_back(s, y);
  for (const auto& x : xs)
    for (const auto& y : ys) slots.emplace_back(x, y);
  slots.emplace_back("y1", "y2");
  slots.emplace_back("y1", "y1");
  slots.emplace_back("y2", "y2");

  std::vector<std::string> params;
  for (const auto& [l, r] : slots)
    for (unsigned j = 0; j <= m; ++j) params.push_back(family_parameter(spec, l, r, j));

  AlgebraTable t("generic_m" + std::to_string(m), basis, params);
  detail::add_sl2_products(t);
  detail::add_module_action(t, m);
  t.add_to_product("y1", "y2", detail::constant(1), "y1");
  t.add_to_product("y2", "y1", detail::constant(-1), "y1");
  for (const auto& [l, r] : slots)
    for (unsigned j = 0; j <= m; ++j)
      t.add_to_product(l, r, Polynomial::variable(family_parameter(spec, l, r, j)), xs[j]);
  return t;
}

/// sl2 + V(m) + r2 with [x_k, y2] = a x_k; all other products zero.
inline AlgebraTable make_theorem2_algebra(unsigned m, const Rational& a) {
  AlgebraTable t("theorem2_m" + std::to_string(m), detail::family_basis(m));
  detail::add_sl2_products(t);
  detail::add_module_action(t, m);
  t.add_to_product("y1", "y2", detail::constant(1), "y1");
  t.add_to_product("y2", "y1", detail::constant(-1), "y1");
  for (const auto& x : detail::x_names(m)) t.add_to_product(x, "y2", Polynomial(a), x);
  return t;
}

namespace detail {

// Products shared by the dim I = 3 prefamily and L(l, mu, a).
inline void add_dim3_core(AlgebraTable& t, const Polynomial& l, const Polynomial& mu, const Polynomial& a) {
  add_sl2_products(t);
  add_module_action(t, 2);
  const Polynomial half(Rational(1, 2));
  t.add_to_product("e", "y1", l, "x0");
  t.add_to_product("f", "y1", half * l, "x2");
  t.add_to_product("h", "y1", l, "x1");
  t.add_to_product("e", "y2", mu, "x0");
  t.add_to_product("f", "y2", half * mu, "x2");
  t.add_to_product("h", "y2", mu, "x1");
  t.add_to_product("y1", "y2", constant(1), "y1");
  t.add_to_product("y2", "y1", constant(-1), "y1");
  for (const char* x : {"x0", "x1", "x2"}) t.add_to_product(x, "y2", a, x);
}

}  // namespace detail

/// The dim I = 3 family with parameters l, mu, a, b before the y2 change.
inline AlgebraTable make_L3_prefamily() {
  AlgebraTable t("prefamily", detail::family_basis(2), {"l", "mu", "a", "b"});
  const Polynomial l = Polynomial::variable("l"), mu = Polynomial::variable("mu"), a = Polynomial::variable("a"),
                   b = Polynomial::variable("b");
  detail::add_dim3_core(t, l, mu, a);
  t.add_to_product("y2", "y2", Polynomial(Rational(-1, 2)) * a * b, "x2");
  t.add_to_product("y2", "e", b, "x1");
  t.add_to_product("y2", "h", b, "x2");
  return t;
}

inline std::string family_name(const Rational& l, const Rational& mu, const Rational& a) {
  return "L_" + to_string(l) + "_" + to_string(mu) + "_" + to_string(a);
}

/// L(l, mu, a); requires l(1-a) = 0.
inline AlgebraTable make_L_family(const Rational& l, const Rational& mu, const Rational& a) {
  if (l * (1 - a) != 0)
    throw AdmissibilityError("L(" + to_string(l) + "," + to_string(mu) + "," + to_string(a) +
                             ") violates the admissibility condition λ(1-a)=0");
  AlgebraTable t(family_name(l, mu, a), detail::family_basis(2));
  detail::add_dim3_core(t, Polynomial(l), Polynomial(mu), Polynomial(a));
  return t;
}

}  // namespace leibniz

#endif  // LEIBNIZ_CONSTRUCTIONS_HPP
