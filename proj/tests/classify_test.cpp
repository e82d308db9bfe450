#include <gtest/gtest.h>

#include <random>

#include "jordan/catalog/catalog.hpp"
#include "jordan/classify/classify.hpp"
#include "jordan/errors.hpp"
#include "jordan/group/jordan.hpp"

namespace jordan {
namespace {

using T = SubgroupTypeTag;

FieldPredicates preds(const char* field) { return field_predicates(parse_field(field)); }

TEST(BoundAlgebra, Examples) {
  EXPECT_EQ(bound_max(Bound::exact(120), Bound::at_most(72)), Bound::exact(120));
  EXPECT_EQ(bound_max(Bound::exact(120), Bound::at_most(7200)), Bound::at_most(7200));
  EXPECT_EQ(bound_max(Bound::exact(7200), Bound::at_most(7200)), Bound::exact(7200));
  EXPECT_EQ(bound_max({Bound::exact(5), Bound::at_most(7), Bound::exact(8)}), Bound::exact(8));
  EXPECT_EQ(Bound::at_most(60).to_string(), "<= 60");
  EXPECT_EQ(Bound::exact(360).to_string(), "= 360");
}

TEST(BoundAlgebra, Laws) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(1, 12), k(0, 1);
  auto random_bound = [&] { return Bound{k(rng) ? Bound::Kind::Exact : Bound::Kind::AtMost, std::uint64_t(v(rng))}; };
  for (int i = 0; i < 500; ++i) {
    Bound a = random_bound(), b = random_bound(), c = random_bound();
    ASSERT_EQ(bound_max(bound_max(a, b), c), bound_max(a, bound_max(b, c)));
    ASSERT_EQ(bound_max(a, b), bound_max(b, a));
    ASSERT_EQ(bound_max(a, a), a);
    if (a.is_exact() && !b.is_exact() && a.value >= b.value) ASSERT_TRUE(dominates(a, b));
    // Set rule: exact iff the largest value is attained by an exact bound.
    Bound m = bound_max({a, b, c});
    std::uint64_t top = std::max({a.value, b.value, c.value});
    bool exact_top = (a.is_exact() && a.value == top) || (b.is_exact() && b.value == top) ||
                     (c.is_exact() && c.value == top);
    ASSERT_EQ(m, exact_top ? Bound::exact(top) : Bound::at_most(top));
  }
}

TEST(Pgl2, Subgroups) {
  EXPECT_EQ(pgl2_possible_subgroups(preds("R")).size(), 4u);
  EXPECT_EQ(pgl2_possible_subgroups(preds("Q(sqrt(5),omega)")).back(), T::A5);
  EXPECT_EQ(pgl2_possible_subgroups(preds("C")).size(), 5u);
  EXPECT_TRUE(a5_in_pgl2(preds("Q(sqrt(5),sqrt(-7))")));
  EXPECT_FALSE(a5_in_pgl2(preds("Q(sqrt(5))")));
  EXPECT_FALSE(a5_in_pgl2(preds("Q(omega)")));
}

TEST(ConicBundle, Table) {
  EXPECT_EQ(conic_bundle_bound(T::Cyclic, T::Dihedral), 32u);
  EXPECT_EQ(conic_bundle_bound(T::Dihedral, T::S4), 48u);
  EXPECT_EQ(conic_bundle_bound(T::A4, T::Cyclic), 6u);
  EXPECT_EQ(conic_bundle_bound(T::A4, T::Dihedral), 12u);
  EXPECT_EQ(conic_bundle_bound(T::A4, T::S4), 72u);
  EXPECT_EQ(conic_bundle_bound(T::S4, T::A4), 72u);
  EXPECT_EQ(conic_bundle_bound(T::S4, T::S4), 36u);
  EXPECT_THROW(conic_bundle_bound(T::A5, T::Cyclic), UnsupportedPair);
  EXPECT_THROW(conic_bundle_bound(T::Cyclic, T::A5), UnsupportedPair);
  for (T f : {T::Cyclic, T::Dihedral, T::A4, T::S4})
    for (T b : {T::Cyclic, T::Dihedral, T::A4, T::S4}) EXPECT_LE(conic_bundle_bound(f, b), 72u);
}

TEST(ConicBundle, CorpusRespectsTable) {
  for (const auto& e : conic_bundle_instances())
    EXPECT_LE(jordan_constant(e.group).constant, conic_bundle_bound(e.fiber, e.base)) << e.label;
}

TEST(ConicBundle, Cap) {
  EXPECT_EQ(conic_bundle_cap(preds("Q")), Bound::at_most(72));
  EXPECT_EQ(conic_bundle_cap(preds("Q(sqrt(5),sqrt(-7))")), Bound::at_most(7200));
  EXPECT_EQ(conic_bundle_cap(preds("R")), Bound::at_most(72));
}

TEST(DelPezzo, Tables) {
  EXPECT_EQ(jordan_pgl3(preds("Q(sqrt(5),omega)")), Bound::exact(360));
  EXPECT_EQ(jordan_pgl3(preds("Q(sqrt(-7))")), Bound::exact(168));
  EXPECT_EQ(jordan_pgl3(preds("Q")), Bound::at_most(60));
  EXPECT_EQ(jordan_p1xp1(preds("Q(sqrt(5),sqrt(-7))")), Bound::exact(7200));
  EXPECT_EQ(jordan_p1xp1(preds("Q(omega)")), Bound::exact(72));
  EXPECT_EQ(jordan_p1xp1(preds("R")), Bound::exact(8));
}

TEST(DelPezzo, Degrees) {
  const auto q = preds("Q");
  EXPECT_EQ(dp_degree_bound(6, q), Bound::at_most(12));
  EXPECT_EQ(dp_degree_bound(1, q), Bound::at_most(60));
  EXPECT_EQ(dp_degree_bound(5, q), Bound::at_most(120));
  EXPECT_EQ(dp_degree_bound(2, preds("Q(sqrt(-7))")), Bound::exact(168));
  EXPECT_EQ(dp_degree_bound(2, q), Bound::at_most(96));
  EXPECT_EQ(dp_degree_bound(8, preds("C")), Bound::exact(7200));
  EXPECT_EQ(dp_degree_bound(9, q), Bound::at_most(60));
  EXPECT_THROW(dp_degree_bound(0, q), DegreeOutOfRange);
  EXPECT_THROW(dp_degree_bound(10, q), DegreeOutOfRange);
  // No single degree exceeds the combined value.
  for (int d = 1; d <= 9; ++d) EXPECT_LE(dp_degree_bound(d, q).value, 120u);
}

TEST(DelPezzo, JdP) {
  EXPECT_EQ(j_dp(preds("Q(sqrt(5),sqrt(-7))")), Bound::exact(7200));
  EXPECT_EQ(j_dp(preds("Q(sqrt(-7))")), Bound::exact(168));
  EXPECT_EQ(j_dp(preds("Q(sqrt(5))")), Bound::exact(120));
}

TEST(Cr2, FieldTable) {
  const std::pair<const char*, std::uint64_t> rows[] = {
      {"Q(sqrt(5),omega)", 7200}, {"Q(sqrt(5),sqrt(-7))", 7200}, {"Q(sqrt(-7))", 168}, {"Q(omega)", 120},
      {"Q(sqrt(5))", 120},        {"Q", 120},                    {"R", 120},           {"C", 7200}};
  for (const auto& [field, value] : rows) EXPECT_EQ(jordan_cr2(parse_field(field)).value, value) << field;
}

TEST(Cr2, TraceShape) {
  auto c = jordan_cr2(parse_field("Q(sqrt(-7))"));
  ASSERT_FALSE(c.trace.empty());
  EXPECT_EQ(c.trace.front().statement, "field_predicates");
  EXPECT_EQ(c.trace.back().statement, "cr2");
  EXPECT_EQ(c.trace.back().conclusion, "J(Cr2(K)) = 168");
  auto j = trace_to_json(c.trace);
  ASSERT_TRUE(j.is_array());
  for (const auto& r : j) {
    EXPECT_TRUE(r.contains("statement") && r.contains("quote") && r.contains("inputs") && r.contains("conclusion"));
  }
  // The PGL3 "<= 60" regime never prints an exact value.
  auto q = jordan_cr2(parse_field("Q"));
  for (const auto& r : q.trace)
    if (r.statement == "pgl3_table") EXPECT_EQ(r.conclusion, "J(PGL3(K)) <= 60");
}

TEST(Cr2, TotalityOverPredicateVectors) {
  std::size_t realized = 0;
  for (std::uint32_t bits = 0; bits < 32; ++bits) {
    FieldPredicates p = FieldPredicates::from_bits(bits);
    if (!p.consistent()) {
      EXPECT_THROW(jordan_cr2(p), std::invalid_argument);
      continue;
    }
    ++realized;
    auto c = jordan_cr2(p);
    EXPECT_TRUE(c.value == 7200 || c.value == 168 || c.value == 120) << bits;
    // Exactly one of the three cases.
    const bool case1 = p.has_sqrt5 && p.minus_one_sum_two_squares;
    const bool case2 = !case1 && p.has_sqrt_minus7;
    const bool case3 = !case1 && !case2;
    EXPECT_EQ(case1 + case2 + case3, 1);
    EXPECT_EQ(c.value, case1 ? 7200u : case2 ? 168u : 120u) << bits;
    // Dominance of the del Pezzo side over the conic bundle cap.
    if (c.cap == Bound::at_most(72)) EXPECT_TRUE(dominates(c.dp, c.cap));
    else EXPECT_EQ(c.dp, Bound::exact(7200));
  }
  EXPECT_GE(realized, 8u);
}

TEST(Cr2, WitnessGroupsAttainBranchValues) {
  EXPECT_EQ(jordan_constant(build(named(spec::NamedGroup::A5wr2))).constant,
            jordan_p1xp1(preds("Q(sqrt(5),sqrt(-7))")).value);
  EXPECT_EQ(jordan_constant(build(named(spec::NamedGroup::PSL2F7))).constant,
            jordan_pgl3(preds("Q(sqrt(-7))")).value);
  EXPECT_EQ(jordan_constant(build(symmetric(5))).constant, 120u);
}

}  // namespace
}  // namespace jordan
