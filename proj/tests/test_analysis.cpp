#include "suite_tables.hpp"

#include <leibniz/analysis.hpp>
#include <leibniz/constructions.hpp>
#include <leibniz/text_format.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace leibniz;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(LEIBNIZ_FIXTURES) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BasisChange random_change(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> small(-2, 2), pick(0, 3);
  const Rational scales[] = {1, 2, -1, Rational(1, 3)};
  OperatorMatrix lower = OperatorMatrix::identity(n), upper = OperatorMatrix::identity(n), diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag(i, i) = Polynomial(scales[pick(rng)]);
    for (std::size_t j = 0; j < i; ++j) {
      if (pick(rng) == 0) lower(i, j) = Polynomial(Rational(small(rng)));
      if (pick(rng) == 0) upper(j, i) = Polynomial(Rational(small(rng)));
    }
  }
  const OperatorMatrix m = diag * lower * upper;
  std::vector<Element> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Element r(n);
    for (std::size_t p = 0; p < n; ++p) r[p] = m(i, p);
    rows.push_back(r);
  }
  return BasisChange(rows);
}

}  // namespace

TEST(Constraints, PrefamilyGivesTheAdmissibilityCondition) {
  const AlgebraTable pre = make_L3_prefamily();
  const ConstraintSet cs = extract_constraints(pre);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs.begin()->to_string(pre.params()), "l - l*a");
  ConstraintSet expected;
  expected.insert(Polynomial::variable("l") * Polynomial::variable("a") * Rational(3) -
                  Polynomial::variable("l") * Rational(3));
  EXPECT_EQ(cs, expected);
}

TEST(Constraints, ConstantTables) {
  EXPECT_TRUE(extract_constraints(make_sl2()).empty());
  const ConstraintSet bad = extract_constraints(parse_algebra(fixture("L_1_0_0.alg")));
  EXPECT_TRUE(bad.contains(Polynomial(Rational(1))));
}

TEST(Constraints, SlTwoRadicalProductsAreForcedToZero) {
  const FamilySpec spec{1, false, true};
  const AlgebraTable g = make_generic_family(spec);
  std::vector<std::string> targets;
  for (const char* s : {"e", "h", "f"})
    for (const char* y : {"y1", "y2"})
      for (unsigned j = 0; j <= 1; ++j) targets.push_back(family_parameter(spec, s, y, j));
  EXPECT_EQ(parameters_forced_to_zero(extract_constraints(g), targets), targets);
}

TEST(Constraints, ForcedToZeroIgnoresUnrelatedMembers) {
  ConstraintSet cs;
  const Polynomial p = Polynomial::variable("p"), q = Polynomial::variable("q"), r = Polynomial::variable("r");
  cs.insert(p - q);
  cs.insert(q * Rational(2));
  cs.insert(p * r);  // nonlinear: ignored
  EXPECT_EQ(parameters_forced_to_zero(cs, {"p", "q", "r"}), (std::vector<std::string>{"p", "q"}));
  EXPECT_TRUE(parameters_forced_to_zero(cs, {"r"}).empty());
}

TEST(Constraints, SoundnessOnRandomAssignments) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> v(-3, 3), coin(0, 1);
  const AlgebraTable pre = make_L3_prefamily();
  const ConstraintSet pre_cs = extract_constraints(pre);
  for (int trial = 0; trial < 60; ++trial) {
    Assignment s{{"l", v(rng)}, {"mu", v(rng)}, {"a", v(rng)}, {"b", v(rng)}};
    if (coin(rng)) s["a"] = 1;  // land on the admissible locus half the time
    EXPECT_EQ(check_leibniz(pre.substitute(s)).passed(), !pre_cs.first_violated(s).has_value());
  }

  const AlgebraTable g = make_generic_family({1, false, false});
  const ConstraintSet g_cs = extract_constraints(g);
  std::uniform_int_distribution<int> sparse(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    Assignment s;
    for (const auto& p : g.params()) s[p] = sparse(rng) == 0 ? Rational(v(rng)) : Rational(0);
    EXPECT_EQ(check_leibniz(g.substitute(s)).passed(), !g_cs.first_violated(s).has_value());
  }
}

TEST(BasisChange, PrefamilyShiftKillsBTerms) {
  const AlgebraTable pre = make_L3_prefamily();
  const ChangeDocument doc = parse_change(fixture("prefamily_y2_shift.change"));
  const AlgebraTable out = apply_basis_change(pre, BasisChange(doc.rows));
  EXPECT_TRUE(out.product("y2", "e").is_zero());
  EXPECT_TRUE(out.product("y2", "h").is_zero());
  EXPECT_TRUE(out.product("y2", "y2").is_zero());
  EXPECT_TRUE(out.product("y2", "f").is_zero());
  // The remaining table is the L family shape with b gone from every entry.
  const AlgebraTable at = out.substitute({{"l", 1}, {"mu", 2}, {"a", 1}, {"b", 7}});
  EXPECT_TRUE(at.same_structure(make_L_family(1, 2, 1)));
}

TEST(BasisChange, IdentityAndBlockScaling) {
  const AlgebraTable pre = make_L3_prefamily();
  EXPECT_EQ(apply_basis_change(pre, BasisChange::identity(pre.dim())), pre);

  const AlgebraTable t = make_theorem2_algebra(0, 5);
  std::vector<Element> rows;
  for (std::size_t i = 0; i < t.dim(); ++i) rows.push_back(Element::basis_vector(t.dim(), i));
  rows[3][3] = Polynomial(Rational(7));
  const AlgebraTable scaled = apply_basis_change(t, BasisChange(rows));
  for (const char* l : {"e", "h", "f"})
    for (const char* r : {"e", "h", "f"}) EXPECT_EQ(scaled.product(l, r), t.product(l, r));
  EXPECT_TRUE(scaled.same_structure(t));
}

TEST(BasisChange, Determinant) {
  EXPECT_EQ(BasisChange(parse_change(fixture("L_2_3_1_to_L_1_0_1.change")).rows).determinant(), Rational(1, 2));
  EXPECT_EQ(BasisChange(parse_change(fixture("prefamily_y2_shift.change")).rows).determinant(), 1);
  const std::vector<Element> singular{Element({Polynomial(Rational(1)), Polynomial(Rational(2))}),
                                      Element({Polynomial(Rational(2)), Polynomial(Rational(4))})};
  EXPECT_THROW(BasisChange{singular}, std::invalid_argument);
  const std::vector<Element> parametric{Element({Polynomial::variable("b"), Polynomial()}),
                                        Element({Polynomial(), Polynomial(Rational(1))})};
  EXPECT_THROW(BasisChange{parametric}, std::invalid_argument);
}

TEST(BasisChange, InverseIsExact) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const BasisChange c = random_change(rng, 1 + trial % 8);
    EXPECT_EQ(c.matrix() * c.inverse(), OperatorMatrix::identity(c.dim()));
  }
}

TEST(BasisChange, CompositionMatchesSequentialApplication) {
  std::mt19937 rng(11);
  for (const auto& t : constant_suite()) {
    const BasisChange c1 = random_change(rng, t.dim()), c2 = random_change(rng, t.dim());
    EXPECT_EQ(apply_basis_change(apply_basis_change(t, c1), c2), apply_basis_change(t, c1.then(c2))) << t.name();
  }
}

TEST(BasisChange, PreservesVerdictsAndProfiles) {
  std::mt19937 rng(13);
  for (const auto& t : constant_suite()) {
    const AlgebraTable moved = apply_basis_change(t, random_change(rng, t.dim()));
    EXPECT_EQ(check_leibniz(moved).passed(), check_leibniz(t).passed()) << t.name();
    EXPECT_EQ(derived_and_centers(moved), derived_and_centers(t)) << t.name();
  }
}

TEST(VerifyIsomorphism, Examples) {
  const BasisChange lam(parse_change(fixture("L_2_3_1_to_L_1_0_1.change")).rows);
  EXPECT_TRUE(verify_isomorphism(make_L_family(2, 3, 1), make_L_family(1, 0, 1), lam).passed());

  const BasisChange scale(parse_change(fixture("scale_I_by_4.change")).rows);
  for (int a : {0, 1, -5})
    EXPECT_TRUE(verify_isomorphism(make_L_family(0, 4, a), make_L_family(0, 1, a), scale).passed()) << a;

  EXPECT_TRUE(verify_isomorphism(make_sl2(), make_sl2(), BasisChange::identity(3)).passed());

  const Verdict v = verify_isomorphism(make_L_family(0, 0, 0), make_L_family(0, 0, 1), BasisChange::identity(8));
  ASSERT_EQ(v.status(), Status::fail);
  EXPECT_NE(v.witness()->description.find("[x0,y2]"), std::string::npos) << v.witness()->description;

  EXPECT_THROW(verify_isomorphism(make_sl2(), make_r2(), BasisChange::identity(3)), std::invalid_argument);
}

TEST(VerifyIsomorphism, IdentityOnEverySuiteTable) {
  for (const auto& t : constant_suite()) EXPECT_TRUE(verify_isomorphism(t, t, BasisChange::identity(t.dim())).passed());
}

TEST(CompareProfiles, Examples) {
  const ProfileReport r = compare_profiles(make_sl2(), make_direct_sum(make_r2(), make_zero_algebra(1)));
  EXPECT_EQ(r.outcome, ProfileOutcome::distinguished);
  EXPECT_NE(std::find(r.separating.begin(), r.separating.end(), "derived_dim"), r.separating.end());
  EXPECT_EQ(r.first.derived_dim, 3u);
  EXPECT_EQ(r.second.derived_dim, 1u);

  EXPECT_EQ(compare_profiles(make_L_family(0, 0, 0), make_L_family(0, 0, 0)).outcome, ProfileOutcome::inconclusive);
}

TEST(CompareProfiles, ThreeDimensionalFamilyPairs) {
  // Frozen from running the suite: dimensions of derived and central series,
  // centers and squares ideal agree on all four representatives.
  const std::vector<AlgebraTable> reps{make_L_family(1, 0, 1), make_L_family(0, 1, 1), make_L_family(0, 0, 1),
                                       make_L_family(0, 0, 2)};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const ProfileReport r = compare_profiles(reps[i], reps[j]);
      EXPECT_EQ(r.outcome, ProfileOutcome::inconclusive) << reps[i].name() << " vs " << reps[j].name();
      EXPECT_TRUE(r.separating.empty());
    }
}
