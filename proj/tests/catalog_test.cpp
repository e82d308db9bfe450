#include <gtest/gtest.h>

#include "jordan/catalog/catalog.hpp"
#include "jordan/errors.hpp"
#include "jordan/group/jordan.hpp"

namespace jordan {
namespace {

TEST(Build, WreathOfA5) {
  auto g = build(wreath_two(alternating(5)));
  EXPECT_EQ(g->order(), 7200u);
  EXPECT_EQ(build(named(spec::NamedGroup::A5wr2))->order(), 7200u);
}

TEST(Build, NamedOrders) {
  EXPECT_EQ(build(named(spec::NamedGroup::WD5))->order(), 1920u);
  EXPECT_EQ(build(named(spec::NamedGroup::FermatCubic648))->order(), 648u);
  EXPECT_EQ(build(named(spec::NamedGroup::PSL2F7))->order(), 168u);
  EXPECT_EQ(build(named(spec::NamedGroup::SL25))->order(), 120u);
  EXPECT_EQ(build(named(spec::NamedGroup::SL23))->order(), 24u);
  EXPECT_EQ(build(named(spec::NamedGroup::Q8))->order(), 8u);
}

TEST(Build, SymbolicOrderMatchesClosure) {
  for (const char* name : {"C1", "C7", "C12", "D4", "D6", "D12", "D20", "S1", "S2", "S3", "S5", "A1",
                           "A2", "A3", "A4", "A5", "A6", "Klein", "S4xC5", "A4xD8xC3", "S3wr2",
                           "Klein wr2", "Q8xC3", "SL23", "SL25"}) {
    std::string text = name;
    std::erase(text, ' ');
    auto s = parse_group_spec(text);
    EXPECT_EQ(build(s)->order(), symbolic_order(*s)) << text;
  }
}

TEST(Build, SymbolicCapCheckedBeforeClosure) {
  EXPECT_THROW(build(symmetric(9)), CapExceeded);
  EXPECT_THROW(build(symmetric(6), 500), CapExceeded);
}

TEST(Build, InvalidParameters) {
  EXPECT_THROW(dihedral(2), InvalidSpec);
  EXPECT_THROW(dihedral(7), InvalidSpec);
  EXPECT_THROW(cyclic(0), InvalidSpec);
}

TEST(Build, Semidirect) {
  // Z/3 by Z/2 acting by inversion is S3.
  auto s3 = build(semidirect({3}, cyclic(2), {{{-1}}}));
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_EQ(s3->kind(), ElementKind::SemidirectPair);
  EXPECT_EQ(jordan_constant(s3).constant, 2u);
  // Z/3 acting on Z/3 by multiplication by 2 is not a homomorphism (2^3 != 1).
  EXPECT_THROW(build(semidirect({3}, cyclic(3), {{{2}}})), InvalidSpec);
}

TEST(Build, Sl25CenterHasOrderTwo) {
  auto g = build(named(spec::NamedGroup::SL25));
  EXPECT_EQ(center(g).order(), 2u);
}

TEST(Build, Q8HasOneInvolution) {
  auto g = build(named(spec::NamedGroup::Q8));
  std::size_t involutions = 0;
  for (ElemIndex i = 0; i < g->order(); ++i) involutions += g->element_order(i) == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_FALSE(is_abelian(g));
}

TEST(Build, FamilyJordanConstants) {
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(jordan_constant(build(cyclic(n))).constant, 1u);
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_LE(jordan_constant(build(dihedral(2 * n))).constant, 2u) << "D" << 2 * n;
}

TEST(Parse, Grammar) {
  EXPECT_EQ(to_string(*parse_group_spec("S4xC5")), "S4xC5");
  EXPECT_EQ(to_string(*parse_group_spec("D12")), "D12");
  EXPECT_EQ(to_string(*parse_group_spec("A5wr2")), "A5wr2");
  EXPECT_EQ(to_string(*parse_group_spec("Fermat648")), "Fermat648");
  EXPECT_EQ(symbolic_order(*parse_group_spec("PSL2F7xC2")), 336u);
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "X3", "D7", "S4x", "C", "Cx", "C-1", "D2"}) {
    EXPECT_THROW(parse_group_spec(bad), ParseError) << bad;
  }
  try {
    parse_group_spec("S4xQ9");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Extension, S4TimesCyclicIsDirect) {
  for (std::size_t m = 1; m <= 10; ++m) {
    auto g = build(direct_product(symmetric(4), cyclic(m)));
    auto r = check_extension_structure(g);
    if (m == 1) {
      // Trivial quotient: falls through to A4 inside S4.
      EXPECT_EQ(r.verdict, ExtensionVerdict::ContainsNormalAnTimesZk);
    } else {
      EXPECT_EQ(r.normal_kind, NormalKind::Symmetric);
      EXPECT_EQ(r.verdict, ExtensionVerdict::DirectProduct) << "m = " << m;
    }
    EXPECT_TRUE(verify_extension_report(r));
  }
}

TEST(Extension, A4TimesOddCyclicIsDirect) {
  for (std::size_t k = 0; k <= 4; ++k) {
    auto g = build(direct_product(alternating(4), cyclic(2 * k + 1)));
    auto r = check_extension_structure(g);
    EXPECT_EQ(r.normal_kind, NormalKind::Alternating);
    EXPECT_EQ(r.n, 4u);
    EXPECT_EQ(r.verdict, ExtensionVerdict::DirectProduct) << "m = " << 2 * k + 1;
    EXPECT_TRUE(verify_extension_report(r));
  }
}

TEST(Extension, S4OverA4) {
  auto r = check_extension_structure(build(symmetric(4)));
  EXPECT_EQ(r.normal_kind, NormalKind::Alternating);
  EXPECT_EQ(r.verdict, ExtensionVerdict::ContainsNormalAnTimesZk);
  EXPECT_EQ(r.k, 1u);
  EXPECT_EQ(r.quotient_invariants, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(verify_extension_report(r));
}

TEST(Extension, S5TimesC3AndA5TimesC4) {
  auto r = check_extension_structure(build(parse_group_spec("S5xC3")));
  EXPECT_EQ(r.normal_kind, NormalKind::Symmetric);
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.verdict, ExtensionVerdict::DirectProduct);
  auto r2 = check_extension_structure(build(parse_group_spec("A5xC4")));
  EXPECT_EQ(r2.verdict, ExtensionVerdict::DirectProduct);
  EXPECT_EQ(r2.quotient_invariants, (std::vector<std::size_t>{4}));
}

TEST(Extension, NoSuitableNormalSubgroup) {
  EXPECT_THROW(check_extension_structure(build(cyclic(6))), NoSuitableNormalSubgroup);
  EXPECT_THROW(check_extension_structure(build(dihedral(8))), NoSuitableNormalSubgroup);
}

TEST(Corpus, RequiredEntries) {
  auto corpus = conic_bundle_instances();
  bool s4s4 = false, a4c6 = false;
  for (const auto& e : corpus) {
    s4s4 |= e.label == "S4xS4" && e.fiber == SubgroupTypeTag::S4 && e.base == SubgroupTypeTag::S4;
    a4c6 |= e.label == "A4xC6" && e.fiber == SubgroupTypeTag::A4 && e.base == SubgroupTypeTag::Cyclic;
  }
  EXPECT_TRUE(s4s4);
  EXPECT_TRUE(a4c6);
}

TEST(Corpus, FiberSubgroupsAreNormalWithRightOrder) {
  for (const auto& e : conic_bundle_instances()) {
    EXPECT_TRUE(is_normal_full(e.fiber_subgroup)) << e.label;
    if (e.fiber == SubgroupTypeTag::A4) EXPECT_EQ(e.fiber_subgroup.order(), 12u) << e.label;
    if (e.fiber == SubgroupTypeTag::S4) EXPECT_EQ(e.fiber_subgroup.order(), 24u) << e.label;
  }
}

}  // namespace
}  // namespace jordan
