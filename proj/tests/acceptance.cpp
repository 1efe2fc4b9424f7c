// Acceptance gate: one PASS/FAIL line per criterion, plus the findings that
// have to be reported rather than assumed. Exit status is nonzero if any
// criterion fails.

#include "suite_tables.hpp"

#include <leibniz/leibniz.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace leibniz;

namespace {

// Runtime limits in seconds.
constexpr double kCanonicalLimit = 1.0;
constexpr double kTheorem2Limit = 5.0;
constexpr double kConstraintLimit = 2.0;
constexpr int kLemmaAssignments = 100;
constexpr int kRoundTripTables = 200;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0) o.require(secs < limit, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit) + " s");
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << secs;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << t.str() << " s]\n";
  for (const auto& n : o.notes) std::cout << "        " << n << "\n";
  if (!o.ok) ++failures;
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return read(std::filesystem::path(LEIBNIZ_FIXTURES) / name); }

std::string rat(const Rational& q) { return to_string(q); }

std::vector<std::string> sl2_r_parameters(const FamilySpec& spec) {
  std::vector<std::string> out;
  for (const char* s : {"e", "h", "f"})
    for (const char* y : {"y1", "y2"})
      for (unsigned j = 0; j <= spec.m; ++j) out.push_back(family_parameter(spec, s, y, j));
  return out;
}

}  // namespace

int main() {
  criterion(1, "sl2, r2 and sl2+r2 pass check_lie", kCanonicalLimit, [](Outcome& o) {
    for (const AlgebraTable& t : {make_sl2(), make_r2(), make_direct_sum(make_sl2(), make_r2())})
      o.require(check_lie(t).passed(), t.name() + " fails check_lie");
  });

  criterion(2, "theorem-2 tables: Leibniz, squares ideal = x-block, quotient = sl2+r2", kTheorem2Limit, [](Outcome& o) {
    const AlgebraTable target = make_direct_sum(make_sl2(), make_r2());
    for (unsigned m : {0u, 1u, 2u, 4u, 5u, 6u})
      for (const Rational& a : {Rational(0), Rational(1), Rational(-2), Rational(7, 3)}) {
        const AlgebraTable t = make_theorem2_algebra(m, a);
        const std::string at = "(m=" + std::to_string(m) + ", a=" + rat(a) + ")";
        if (!check_leibniz(t).passed()) {
          o.require(false, at + " fails check_leibniz");
          continue;
        }
        std::vector<Element> xs;
        for (unsigned k = 0; k <= m; ++k) xs.push_back(t.basis_vector("x" + std::to_string(k)));
        const Subspace sq = squares_ideal(t);
        o.require(sq == span(t.dim(), xs),
                  at + " squares ideal has dim " + std::to_string(sq.rank()) + ", expected span{x0..x" +
                      std::to_string(m) + "}");
        const Quotient q = quotient_algebra(t, sq);
        o.require(q.table.same_structure(target), at + " quotient has dim " + std::to_string(q.table.dim()) +
                                                      " and is not sl2+r2 on (e,h,f,y1,y2)");
      }
  });

  criterion(3, "V(m) operator identities and H = diag(m-2k) for m <= 10", 0, [](Outcome& o) {
    const AlgebraTable sl2 = make_sl2();
    for (unsigned m = 0; m <= 10; ++m) {
      const Sl2Module v = make_V_module(m);
      const std::string at = "m=" + std::to_string(m);
      o.require(v.H == v.F * v.E - v.E * v.F, at + ": H != FE - EF");
      o.require(v.E * v.H - v.H * v.E == Polynomial(Rational(-2)) * v.E, at + ": EH - HE != -2E");
      o.require(v.F * v.H - v.H * v.F == Polynomial(Rational(2)) * v.F, at + ": FH - HF != 2F");
      o.require(!right_module_violation(sl2, v.as_right_module().action), at + ": not a right sl2-module");
      for (unsigned r = 0; r <= m; ++r)
        for (unsigned c = 0; c <= m; ++c) {
          const Rational want = r == c ? Rational(static_cast<long>(m) - 2 * static_cast<long>(r)) : Rational(0);
          o.require(v.H(r, c) == Polynomial(want), at + ": H entry differs");
        }
    }
  });

  criterion(4, "constraints of the prefamily are exactly { l - l*a }", kConstraintLimit, [](Outcome& o) {
    const AlgebraTable pre = make_L3_prefamily();
    const ConstraintSet cs = extract_constraints(pre);
    ConstraintSet want;
    want.insert(Polynomial::variable("l") - Polynomial::variable("l") * Polynomial::variable("a"));
    std::string got;
    for (const auto& p : cs) got += (got.empty() ? "" : ", ") + p.to_string(pre.params());
    o.require(cs == want, "got { " + got + " }");
  });

  criterion(5, "y2' = y2 + b/2 x2 kills [y2',e], [y2',h], [y2',y2'] identically in b", 0, [](Outcome& o) {
    const AlgebraTable pre = make_L3_prefamily();
    const AlgebraTable moved = apply_basis_change(pre, BasisChange(parse_change(fixture("prefamily_y2_shift.change")).rows));
    for (const char* r : {"e", "h", "y2"})
      o.require(moved.product("y2", r).is_zero(),
                std::string("[y2',") + r + "] = " + moved.product("y2", r).to_string(moved.basis(), moved.params()));
  });

  criterion(6, "L-family admissibility and the L(1,0,0) witness", 0, [](Outcome& o) {
    std::vector<AlgebraTable> ok{make_L_family(1, 0, 1)};
    for (int a : {0, 1, -5}) {
      ok.push_back(make_L_family(0, 1, a));
      ok.push_back(make_L_family(0, 0, a));
    }
    for (const auto& t : ok) o.require(check_leibniz(t).passed(), t.name() + " fails check_leibniz");
    bool rejected = false;
    try {
      make_L_family(1, 0, 0);
    } catch (const AdmissibilityError&) {
      rejected = true;
    }
    o.require(rejected, "make_L_family(1,0,0) was not rejected");
    const AlgebraTable raw = parse_algebra(fixture("L_1_0_0.alg"));
    const Verdict v = check_leibniz(raw);
    o.require(v.status() == Status::fail, "raw L(1,0,0) passes check_leibniz");
    if (v.status() == Status::fail) {
      const auto& [i, j, k] = *v.witness()->triple;
      o.require(triple_label(raw, i, j, k) == "(e,y1,y2)", "witness triple " + triple_label(raw, i, j, k));
      Element x0 = raw.basis_vector("x0");
      o.require(*v.witness()->residual == x0, "residual " + v.witness()->residual->to_string(raw.basis()));
    }
  });

  criterion(7, "[sl2,R] probe on the generic family (m = 1, 4 forced; m = 2 admits L(1,0,1))", 0, [](Outcome& o) {
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3), coin(0, 1);
    for (unsigned m : {1u, 4u}) {
      const FamilySpec spec{m, false, true};
      const AlgebraTable g = make_generic_family(spec);
      const ConstraintSet cs = extract_constraints(g);
      const auto targets = sl2_r_parameters(spec);
      std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
      int unviolated = 0;
      for (int trial = 0; trial < kLemmaAssignments; ++trial) {
        Assignment s;
        if (trial % 2 == 0) {
          for (const auto& p : g.params()) s[p] = make_rational(num(rng), den(rng));
        } else {
          // A Leibniz point of the theorem-2 shape, then one [sl2,R] entry switched on.
          for (const auto& p : g.params()) s[p] = 0;
          const Rational a = make_rational(num(rng), den(rng));
          for (unsigned k = 0; k <= m; ++k) s[family_parameter(spec, "x" + std::to_string(k), "y2", k)] = a;
        }
        Rational c = make_rational(num(rng), den(rng));
        if (c == 0) c = 1;
        s[targets[pick(rng)]] = c;
        if (!cs.first_violated(s)) ++unviolated;
      }
      o.require(unviolated == 0, "m=" + std::to_string(m) + ": " + std::to_string(unviolated) +
                                     " assignments with nonzero [sl2,R] satisfy every constraint");
    }
    const FamilySpec spec2{2, false, true};
    const AlgebraTable g2 = make_generic_family(spec2);
    const ConstraintSet cs2 = extract_constraints(g2);
    Assignment l101;
    for (const auto& p : g2.params()) l101[p] = 0;
    l101[family_parameter(spec2, "e", "y1", 0)] = 1;
    l101[family_parameter(spec2, "h", "y1", 1)] = 1;
    l101[family_parameter(spec2, "f", "y1", 2)] = Rational(1, 2);
    for (unsigned k = 0; k <= 2; ++k) l101[family_parameter(spec2, "x" + std::to_string(k), "y2", k)] = 1;
    if (auto bad = cs2.first_violated(l101)) o.require(false, "m=2: L(1,0,1) violates " + bad->to_string());
  });

  criterion(8, "Dzhumadil'daev Q(sl2,V(m)), m = 1..3", 0, [](Outcome& o) {
    for (unsigned m : {1u, 2u, 3u}) {
      const Sl2Module v = make_V_module(m);
      const AlgebraTable q = make_dzhumadildaev(make_sl2(), v.as_right_module());
      const std::string at = "m=" + std::to_string(m) + ": ";
      o.require(check_leibniz(q).passed(), at + "fails check_leibniz");
      std::vector<Element> block;
      for (unsigned k = 0; k <= m; ++k) block.push_back(q.basis_vector(3 + k));
      const Subspace sq = squares_ideal(q);
      o.require(sq == span(q.dim(), block), at + "squares ideal is not the module block");
      o.require(quotient_algebra(q, sq).table.same_structure(make_sl2()), at + "quotient is not sl2");
      for (unsigned k = 0; k <= m; ++k)
        o.require(submodule_closure({v.E, v.F, v.H}, Element::basis_vector(m + 1, k)).rank() == m + 1,
                  at + "x" + std::to_string(k) + " does not generate the module");
      const std::size_t dqq = derived_and_centers(q).derived_dim;
      o.require(dqq != sq.rank(), at + "dim [Q,Q] equals dim I");
    }
  });

  criterion(9, "explicit isomorphisms L(2,3,1) -> L(1,0,1) and L(0,4,a) -> L(0,1,a)", 0, [](Outcome& o) {
    const BasisChange lam(parse_change(fixture("L_2_3_1_to_L_1_0_1.change")).rows);
    auto v = verify_isomorphism(make_L_family(2, 3, 1), make_L_family(1, 0, 1), lam);
    o.require(v.passed(), "L(2,3,1): " + (v.witness() ? v.witness()->description : std::string()));
    const BasisChange scale(parse_change(fixture("scale_I_by_4.change")).rows);
    for (int a : {0, 1, -5}) {
      v = verify_isomorphism(make_L_family(0, 4, a), make_L_family(0, 1, a), scale);
      o.require(v.passed(), "L(0,4," + std::to_string(a) + "): " + (v.witness() ? v.witness()->description : ""));
    }
  });

  criterion(10, "every Leibniz table: [b_i, I] = 0 and L/I is Lie", 0, [](Outcome& o) {
    std::size_t checked = 0;
    for (const auto& t : constant_suite()) {
      if (!check_leibniz(t).passed()) continue;
      ++checked;
      const Subspace sq = squares_ideal(t);
      for (const auto& v : sq.basis_elements())
        for (std::size_t i = 0; i < t.dim(); ++i)
          o.require(bracket(t, t.basis_vector(i), v).is_zero(), t.name() + ": [" + t.basis()[i] + ", I] != 0");
      o.require(check_lie(quotient_algebra(t, sq).table).passed(), t.name() + ": quotient is not Lie");
    }
    o.require(checked > 20, "only " + std::to_string(checked) + " tables checked");
  });

  criterion(11, "parser round trip on fixtures and random tables", 0, [](Outcome& o) {
    for (const auto& entry : std::filesystem::directory_iterator(LEIBNIZ_FIXTURES)) {
      const std::string text = read(entry.path());
      const std::string name = entry.path().filename().string();
      if (entry.path().extension() == ".alg") {
        const AlgebraTable t = parse_algebra(text);
        o.require(parse_algebra(serialize_algebra(t)) == t, name + " does not round trip");
      } else if (entry.path().extension() == ".change") {
        const ChangeDocument d = parse_change(text);
        const ChangeDocument back = parse_change(serialize_change(d));
        o.require(back.rows == d.rows && back.basis == d.basis && back.params == d.params, name + " does not round trip");
      }
    }
    std::mt19937 rng(11);
    const std::vector<std::string> pool{"e", "h", "f", "x0", "x1", "y1", "y2"};
    std::uniform_int_distribution<int> dim_d(1, 5), np(0, 2), coeff(-9, 9), den(1, 5), coin(0, 3), ex(0, 2);
    for (int trial = 0; trial < kRoundTripTables; ++trial) {
      std::vector<std::string> basis = pool;
      std::shuffle(basis.begin(), basis.end(), rng);
      basis.resize(dim_d(rng));
      std::vector<std::string> params{"p", "q"};
      params.resize(np(rng));
      AlgebraTable t("t" + std::to_string(trial), basis, params);
      for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
          Element v(t.dim());
          for (std::size_t k = 0; k < t.dim(); ++k) {
            if (coin(rng)) continue;
            Monomial mono;
            for (const auto& p : params) mono.multiply_by(p, ex(rng));
            v[k].add_term(mono, make_rational(coeff(rng), den(rng)));
          }
          t.set_product(i, j, v);
        }
      if (!(parse_algebra(serialize_algebra(t)) == t)) o.require(false, t.name() + " does not round trip");
    }
  });

  criterion(12, "profile separation reports honestly and never claims isomorphism", 0, [](Outcome& o) {
    for (const AlgebraTable& padded : {make_direct_sum(make_r2(), make_zero_algebra(1)),
                                       make_direct_sum(make_r2(), make_zero_algebra(3))}) {
      const ProfileReport r = compare_profiles(make_sl2(), padded);
      o.require(r.outcome == ProfileOutcome::distinguished, "sl2 vs " + padded.name() + " not distinguished");
    }
    const std::vector<AlgebraTable> reps{make_L_family(1, 0, 1), make_L_family(0, 1, 1), make_L_family(0, 0, 1),
                                         make_L_family(0, 0, 2)};
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        const ProfileReport r = compare_profiles(reps[i], reps[j]);
        const bool consistent = (r.outcome == ProfileOutcome::distinguished) == !r.separating.empty();
        o.require(consistent, reps[i].name() + " vs " + reps[j].name() + ": outcome disagrees with invariants");
        std::string why;
        for (const auto& s : r.separating) why += (why.empty() ? "" : ", ") + s;
        std::cout << "        " << reps[i].name() << " vs " << reps[j].name() << ": " << to_string(r.outcome)
                  << (why.empty() ? "" : " (" + why + ")") << "\n";
      }
  });

  // Which weights force [sl2,R] = 0 through the linear constraints alone.
  std::cout << "\nfinding: [sl2,R] coefficients forced to zero by linear constraints\n";
  for (unsigned m = 1; m <= 4; ++m) {
    const FamilySpec spec{m, false, true};
    const auto targets = sl2_r_parameters(spec);
    const auto forced = parameters_forced_to_zero(extract_constraints(make_generic_family(spec)), targets);
    std::cout << "  m=" << m << ": " << forced.size() << " of " << targets.size() << " forced";
    if (forced.size() != targets.size()) {
      std::cout << "; free:";
      for (const auto& t : targets)
        if (std::find(forced.begin(), forced.end(), t) == forced.end()) std::cout << " " << t;
    }
    std::cout << "\n";
  }

  std::cout << "\n" << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << "\n";
  return failures == 0 ? 0 : 1;
}
