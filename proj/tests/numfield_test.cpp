#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "jordan/errors.hpp"
#include "jordan/numfield/field.hpp"
#include "jordan/numfield/mq_element.hpp"

namespace jordan {
namespace {

FieldDescriptor mq(std::vector<std::int64_t> d) { return FieldDescriptor::multiquadratic(d); }

TEST(Squarefree, Examples) {
  EXPECT_EQ(squarefree_part(12), 3);
  EXPECT_EQ(squarefree_part(-28), -7);
  EXPECT_EQ(squarefree_part(5), 5);
  EXPECT_EQ(squarefree_part(1), 1);
  EXPECT_EQ(squarefree_part(-1), -1);
  EXPECT_EQ(squarefree_part(72), 2);
  EXPECT_THROW(squarefree_part(0), ZeroInput);
}

TEST(Descriptor, Normalization) {
  EXPECT_EQ(mq({12}).generators, (std::vector<std::int64_t>{3}));
  EXPECT_EQ(mq({4}).kind, FieldKind::Rationals);
  EXPECT_EQ(mq({4}).warnings.size(), 1u);
  EXPECT_EQ(mq({2, 3, 6}).generators, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(mq({5, -7}).generators, (std::vector<std::int64_t>{-7, 5}));
  EXPECT_EQ(mq({5, 5}).generators, (std::vector<std::int64_t>{5}));
  // Same field, same descriptor.
  EXPECT_EQ(mq({6, 2}), mq({2, 3}));
  EXPECT_EQ(mq({-35, 5}), mq({5, -7}));
}

TEST(Parse, Accepted) {
  EXPECT_EQ(parse_field("Q").kind, FieldKind::Rationals);
  EXPECT_EQ(parse_field("R").kind, FieldKind::RealClosed);
  EXPECT_EQ(parse_field(" C ").kind, FieldKind::AlgebraicallyClosed);
  EXPECT_EQ(parse_field("Q(sqrt(5),sqrt(-7))"), mq({5, -7}));
  EXPECT_EQ(parse_field("Q( sqrt( 5 ) , omega )"), mq({5, -3}));
  EXPECT_EQ(parse_field("Q(w)"), mq({-3}));
  EXPECT_EQ(parse_field("Q(i)"), mq({-1}));
  EXPECT_EQ(parse_field("Q(sqrt(4))").kind, FieldKind::Rationals);
  EXPECT_EQ(parse_field("Q(sqrt(5),sqrt(-7))").to_string(), "Q(sqrt(-7),sqrt(5))");
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "Q(", "Q()", "Q(sqrt(5)", "Q(sqrt())", "Q(sqrt(x))", "Q(sqrt(5)),",
                          "Z", "Q(sqrt(5) sqrt(3))", "Q(5)"}) {
    EXPECT_THROW(parse_field(bad), ParseError) << bad;
  }
  try {
    parse_field("Q(sqrt(0))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7u);
    EXPECT_NE(e.annotated().find("       ^"), std::string::npos);
  }
}

TEST(Parse, Unsupported) {
  for (const char* bad : {"Q(t)", "F7", "GF(9)", "Qp", "Q_2", "C(t)", "Q[x]/(x^3-2)"}) {
    EXPECT_THROW(parse_field(bad), UnsupportedField) << bad;
  }
}

TEST(ContainsSqrt, Examples) {
  EXPECT_TRUE(contains_sqrt(mq({5}), 5));
  EXPECT_FALSE(contains_sqrt(mq({7}), 5));
  EXPECT_TRUE(contains_sqrt(mq({2, 3}), 6));
  EXPECT_TRUE(contains_sqrt(mq({2, 3}), 24));
  EXPECT_TRUE(contains_sqrt(mq({5, -7}), -35));
  EXPECT_FALSE(contains_sqrt(mq({5, -7}), -3));
  EXPECT_TRUE(contains_sqrt(FieldDescriptor::rationals(), 9));
  EXPECT_FALSE(contains_sqrt(FieldDescriptor::rationals(), -1));
  EXPECT_TRUE(contains_sqrt(FieldDescriptor::real_closed(), 5));
  EXPECT_FALSE(contains_sqrt(FieldDescriptor::real_closed(), -7));
  EXPECT_TRUE(contains_sqrt(FieldDescriptor::algebraically_closed(), -7));
  EXPECT_THROW(contains_sqrt(mq({5}), 0), ZeroInput);
}

TEST(ContainsSqrt, CoprimeSquarefreeNeverInQuadraticField) {
  auto squarefree = [](std::int64_t n) { return squarefree_part(n) == n; };
  for (std::int64_t n = 2; n <= 200; ++n) {
    if (!squarefree(n)) continue;
    const FieldDescriptor k = mq({n});
    for (std::int64_t m = 2; m <= 200; ++m)
      if (squarefree(m) && std::gcd(m, n) == 1) ASSERT_FALSE(contains_sqrt(k, m)) << m << " in Q(sqrt " << n << ")";
  }
}

TEST(ContainsSqrt, MembershipIsConstructive) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::int64_t> gens;
    for (int j = 0; j < 3; ++j) {
      int d = pick(rng);
      if (d != 0) gens.push_back(d);
    }
    const FieldDescriptor k = mq(gens);
    for (std::int64_t m = -40; m <= 40; ++m) {
      if (m == 0) continue;
      auto x = sqrt_element(k, m);
      ASSERT_EQ(x.has_value(), contains_sqrt(k, m));
      if (x) ASSERT_EQ(*x * *x, MqElement::rational(*x, m)) << k.to_string() << " m=" << m;
    }
  }
}

TEST(Arithmetic, Examples) {
  const MqElement zero(mq({5}));
  const MqElement s5 = MqElement::generator(zero, 0);
  const MqElement phi = (MqElement::rational(zero, 1) + s5).scaled(Rational(1, 2));
  EXPECT_EQ(phi * phi, (MqElement::rational(zero, 3) + s5).scaled(Rational(1, 2)));
  EXPECT_EQ((phi * phi).to_string(), "3/2 + 1/2*sqrt(5)");

  const MqElement z6(mq({2, 3}));
  const MqElement prod = MqElement::generator(z6, 0) * MqElement::generator(z6, 1);
  EXPECT_EQ(prod * prod, MqElement::rational(z6, 6));

  const MqElement z(mq({5, -7}));
  const MqElement a = MqElement::rational(z, -1) + *sqrt_element(z.ambient(), -35);
  EXPECT_EQ(a * a.inverse(), MqElement::rational(z, 1));
  EXPECT_THROW(zero.inverse(), DivisionByZero);
  EXPECT_THROW(zero + z, AmbientMismatch);
}

MqElement random_element(const MqElement& zero, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  MqElement out = zero;
  for (std::uint32_t s = 0; s < zero.coords().size(); ++s)
    out = out + MqElement::basis(zero, s).scaled(Rational(num(rng), den(rng)));
  return out;
}

TEST(Arithmetic, FieldAxiomsOnRandomInputs) {
  std::mt19937 rng(11);
  for (const auto& gens : std::vector<std::vector<std::int64_t>>{{5}, {-3, 5}, {-7, 5}, {2, 3, -1}}) {
    const MqElement zero(mq(gens));
    const MqElement one = MqElement::rational(zero, 1);
    for (int t = 0; t < 15; ++t) {
      MqElement a = random_element(zero, rng), b = random_element(zero, rng), c = random_element(zero, rng);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a * b, b * a);
      if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), one);
    }
  }
}

TEST(Arithmetic, GaloisInvolutionIsRingAutomorphism) {
  std::mt19937 rng(13);
  const MqElement zero(mq({2, -3, 5}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (int t = 0; t < 10; ++t) {
      MqElement a = random_element(zero, rng), b = random_element(zero, rng);
      ASSERT_EQ((a * b).galois(i), a.galois(i) * b.galois(i));
      ASSERT_EQ((a + b).galois(i), a.galois(i) + b.galois(i));
      ASSERT_EQ(a.galois(i).galois(i), a);
    }
  }
}

TEST(Predicates, FormallyReal) {
  EXPECT_TRUE(is_formally_real(mq({5})));
  EXPECT_FALSE(is_formally_real(mq({-7})));
  EXPECT_TRUE(is_formally_real(mq({2, 3})));
  EXPECT_TRUE(is_formally_real(FieldDescriptor::rationals()));
  EXPECT_FALSE(is_formally_real(FieldDescriptor::algebraically_closed()));
}

TEST(Predicates, TwoAdic) {
  EXPECT_EQ(two_adic_class(-7), (TwoAdicClass{0, 1}));
  EXPECT_TRUE(two_adic_class(-7).is_square());
  EXPECT_EQ(two_adic_class(-3), (TwoAdicClass{0, 5}));
  EXPECT_EQ(two_adic_class(2), (TwoAdicClass{1, 1}));
  EXPECT_EQ(two_adic_class(12), (TwoAdicClass{0, 3}));
  EXPECT_EQ(two_adic_class(-3) * two_adic_class(5), (TwoAdicClass{0, 1}));
  EXPECT_EQ(two_adic_subgroup_order(mq({-7})), 1u);
  EXPECT_EQ(two_adic_subgroup_order(mq({-3})), 2u);
  EXPECT_EQ(two_adic_subgroup_order(mq({2, 5})), 4u);
  EXPECT_EQ(two_adic_subgroup_order(mq({-3, 5})), 2u);  // -15 is a 2-adic square
  EXPECT_EQ(two_adic_subgroup_order(mq({-1, 2, 5})), 8u);
}

TEST(Predicates, SumOfTwoSquares) {
  EXPECT_TRUE(minus_one_sum_two_squares(mq({5, -7})));
  EXPECT_TRUE(minus_one_sum_two_squares(mq({-3})));
  EXPECT_TRUE(minus_one_sum_two_squares(mq({-1})));
  EXPECT_TRUE(minus_one_sum_two_squares(mq({-2})));
  EXPECT_FALSE(minus_one_sum_two_squares(mq({-7})));
  EXPECT_FALSE(minus_one_sum_two_squares(mq({-15})));
  EXPECT_FALSE(minus_one_sum_two_squares(mq({5})));
  EXPECT_FALSE(minus_one_sum_two_squares(FieldDescriptor::rationals()));
  EXPECT_FALSE(minus_one_sum_two_squares(FieldDescriptor::real_closed()));
  EXPECT_TRUE(minus_one_sum_two_squares(FieldDescriptor::algebraically_closed()));
}

TEST(Predicates, Assembled) {
  EXPECT_EQ(field_predicates(mq({5, -3})), (FieldPredicates{true, false, true, true, false}));
  EXPECT_EQ(field_predicates(FieldDescriptor::real_closed()), (FieldPredicates{true, false, false, false, true}));
  EXPECT_EQ(field_predicates(FieldDescriptor::rationals()), (FieldPredicates{false, false, false, false, true}));
  EXPECT_EQ(field_predicates(FieldDescriptor::algebraically_closed()),
            (FieldPredicates{true, true, true, true, false}));
  EXPECT_EQ(field_predicates(mq({-7})), (FieldPredicates{false, true, false, false, false}));
}

TEST(Predicates, ConsistencyFilter) {
  std::size_t consistent = 0;
  for (std::uint32_t bits = 0; bits < 32; ++bits) {
    auto p = FieldPredicates::from_bits(bits);
    EXPECT_EQ(p.bits(), bits);
    consistent += p.consistent();
  }
  EXPECT_GT(consistent, 0u);
  EXPECT_LT(consistent, 32u);
  // Every computed vector passes the filter.
  for (auto gens : std::vector<std::vector<std::int64_t>>{{5}, {-7}, {-3}, {5, -7}, {5, -3}, {-1}, {2, 3}, {-15}})
    EXPECT_TRUE(field_predicates(mq(gens)).consistent());
}

TEST(Witness, ClosedForms) {
  auto wi = witness_search(mq({-1}), 2);
  ASSERT_TRUE(wi);
  EXPECT_EQ(wi->source, "closed-form:i");
  EXPECT_TRUE(wi->b.is_zero());

  auto wo = witness_search(mq({-3}), 2);
  ASSERT_TRUE(wo);
  EXPECT_EQ(wo->source, "closed-form:omega");
  EXPECT_EQ(wo->a.to_string(), "-1/2 + 1/2*sqrt(-3)");
  EXPECT_TRUE(verify_witness(wo->a, wo->b));

  auto w57 = witness_search(mq({5, -7}), 2);
  ASSERT_TRUE(w57);
  EXPECT_EQ(w57->source, "closed-form:sqrt5-sqrt-7");
  EXPECT_TRUE(verify_witness(w57->a, w57->b));
}

TEST(Witness, ExplicitSqrt5SqrtMinus7Pair) {
  const FieldDescriptor k = mq({5, -7});
  const MqElement zero(k);
  const MqElement one = MqElement::rational(zero, 1);
  const MqElement s5 = *sqrt_element(k, 5), s7 = *sqrt_element(k, -7);
  const MqElement den = MqElement::rational(zero, -1) + s5 * s7;
  EXPECT_TRUE(verify_witness((s7 + s5) / den, MqElement::rational(zero, 6) / den));
  EXPECT_FALSE(verify_witness(one, zero));
}

TEST(Witness, HeightSearchAndSoundness) {
  auto w = witness_search(mq({-2}), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->source, "height-search");
  EXPECT_TRUE(verify_witness(w->a, w->b));
  EXPECT_FALSE(witness_search(mq({5}), 3));
  EXPECT_FALSE(witness_search(FieldDescriptor::rationals(), 3));
  EXPECT_FALSE(witness_search(mq({-7}), 3));
  EXPECT_FALSE(witness_search(FieldDescriptor::real_closed(), 3));
  // A witness is never found where the predicate says no.
  for (auto gens : std::vector<std::vector<std::int64_t>>{{5}, {-7}, {-3}, {5, -7}, {-1}, {-2}, {2, 3}, {-15}, {-6}}) {
    const FieldDescriptor k = mq(gens);
    auto found = witness_search(k, 3);
    if (found) EXPECT_TRUE(minus_one_sum_two_squares(k)) << k.to_string();
  }
}

}  // namespace
}  // namespace jordan
