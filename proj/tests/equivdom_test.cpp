#include "ordsum/equivdom.hpp"

#include <gtest/gtest.h>

#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"
#include "test_util.hpp"

namespace ordsum {
namespace {

Game num(const char* text) { return canonical_form(Dyadic::parse(text)); }
Dyadic dy(const char* text) { return Dyadic::parse(text); }
Game brace(std::vector<Game> l, std::vector<Game> r) { return Game::make(std::move(l), std::move(r)); }

TEST(EquivModDominationTest, PinnedCases) {
  const Game zero_bar = brace({num("-1")}, {num("1")});
  EXPECT_TRUE(equal(zero_bar, Game()));
  EXPECT_FALSE(equiv_mod_domination(zero_bar, Game()));

  const Game a = brace({num("0")}, {num("3")});
  const Game b = brace({num("1/2")}, {num("3")});
  EXPECT_TRUE(equal(a, b));
  EXPECT_FALSE(equiv_mod_domination(a, b));
  EXPECT_TRUE(equal(ordinal_sum(a, num("1")), ordinal_sum(b, num("1"))));
  EXPECT_TRUE(equiv_mod_domination(ordinal_sum(a, num("1")), brace({num("1")}, {num("3")})));
  EXPECT_TRUE(equiv_mod_domination(ordinal_sum(b, num("1")), brace({num("1")}, {num("3")})));
}

TEST(EquivModDominationTest, ReflexiveAndSymmetric) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Game g = testing::random_form(rng, 3);
    EXPECT_TRUE(equiv_mod_domination(g, g));
    const Game h = remove_dominated(g);
    EXPECT_EQ(equiv_mod_domination(g, h), equiv_mod_domination(h, g));
  }
}

TEST(EquivModDominationTest, RefinesEquality) {
  const auto forms = testing::forms_to_day2();
  for (std::size_t i = 0; i < forms.size(); i += 3) {
    for (std::size_t j = 0; j < forms.size(); j += 2) {
      if (equiv_mod_domination(forms[i], forms[j])) EXPECT_TRUE(equal(forms[i], forms[j]));
    }
  }
}

TEST(RemoveDominatedTest, Examples) {
  EXPECT_EQ(remove_dominated(brace({num("1")}, {num("3"), num("4")})), brace({num("1")}, {num("3")}));
  EXPECT_EQ(remove_dominated(Game()), Game());
  for (int n = 1; n <= 4; ++n) {
    const Game diff = disjunctive_sum(canonical_form(Dyadic(n)), canonical_form(Dyadic(-n)));
    const Game reduced = remove_dominated(diff);
    EXPECT_EQ(reduced.left().size(), 1u);
    EXPECT_EQ(reduced.right().size(), 1u);
    EXPECT_TRUE(equiv_mod_domination(reduced, brace({num("-1")}, {num("1")})));
  }
}

TEST(RemoveDominatedTest, CollapsesEqualOptionsKeepingOne) {
  const Game alt_one = brace({num("0")}, {num("3")});  // value 1, different form
  const Game g = brace({num("1"), alt_one}, {});
  const Game r = remove_dominated(g);
  EXPECT_EQ(r.left().size(), 1u);
  EXPECT_TRUE(equiv_mod_domination(g, r));
}

TEST(RemoveDominatedTest, PreservesEquivalence) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Game g = testing::random_form(rng, 3);
    EXPECT_TRUE(equiv_mod_domination(remove_dominated(g), g)) << raw_string(g);
  }
}

TEST(ReduceToBallTest, Examples) {
  EXPECT_EQ(reduce_to_ball(brace({num("1")}, {num("3"), num("4")})), Ball::make(dy("2"), dy("-1")));
  EXPECT_EQ(reduce_to_ball(brace({num("-1")}, {num("1")})), Ball::make(dy("0"), dy("-1")));
  EXPECT_EQ(reduce_to_ball(brace({num("1/2")}, {num("1")})), Ball::make(dy("3/4"), dy("-1/4")));
  EXPECT_THROW(reduce_to_ball(num("2")), DomainError);
  EXPECT_THROW(reduce_to_ball(brace({num("1")}, {num("-1")})), DomainError);
}

TEST(ReduceToBallTest, BallIsEquivalentModDomination) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const Game g = testing::random_two_sided_number(rng, 3);
    EXPECT_TRUE(equiv_mod_domination(g, reduce_to_ball(g).literal_form())) << raw_string(g);
  }
}

TEST(BallTest, RejectsNonNegativeRadius) {
  EXPECT_THROW(Ball::make(dy("0"), dy("1")), DomainError);
  EXPECT_THROW(Ball::make(dy("0"), dy("0")), DomainError);
  EXPECT_EQ(Ball::make(dy("3/4"), dy("-1/4")).to_string(), "<3/4; -1/4>");
}

TEST(IsBalancedTest, Examples) {
  EXPECT_TRUE(is_balanced(Ball::make(dy("2"), dy("-1"))));
  EXPECT_TRUE(is_balanced(Ball::make(dy("0"), dy("-1/4"))));
  EXPECT_TRUE(is_balanced(Ball::make(dy("3/4"), dy("-1/4"))));
  EXPECT_TRUE(is_balanced(Ball::make(dy("0"), dy("-1"))));
  EXPECT_FALSE(is_balanced(Ball::make(dy("1/4"), dy("-3/4"))));
  EXPECT_FALSE(is_balanced(Ball::make(dy("1"), dy("-3/2"))));
}

TEST(IsBalancedTest, BalancedMeansValueEqualsMidpointAndRadiusBound) {
  for (int a = -24; a <= 24; ++a) {
    for (std::uint32_t p = 0; p <= 3; ++p) {
      const Dyadic m(BigInt(a), p);
      for (int j = 1; j <= 48; ++j) {
        const Ball b = Ball::make(m, -Dyadic(BigInt(j), 4));
        const bool balanced = is_balanced(b);
        EXPECT_EQ(balanced, number_value(b.literal_form()) == m) << b.to_string();
        if (balanced && !m.is_zero()) {
          EXPECT_GE(b.radius, canonical_radius(m)) << b.to_string();
        }
      }
    }
  }
}

TEST(CanonicalRadiusTest, Examples) {
  EXPECT_EQ(canonical_radius(dy("3")), dy("-1"));
  EXPECT_EQ(canonical_radius(dy("1/2")), dy("-1/2"));
  EXPECT_EQ(canonical_radius(dy("13/16")), dy("-1/16"));
  for (int a = 1; a < 64; a += 2) {
    const Dyadic x(BigInt(a), 5);
    EXPECT_EQ(reduce_to_ball(canonical_form(x)).radius, canonical_radius(x));
  }
}

TEST(SubstitutionTest, EquivalentBasesAndSubordinates) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    const Game g = testing::random_form(rng, 3);
    const Game h = remove_dominated(g);
    const Game k = testing::random_form(rng, 2);
    EXPECT_TRUE(equiv_mod_domination(ordinal_sum(g, k), ordinal_sum(h, k)));
    EXPECT_TRUE(equiv_mod_domination(ordinal_sum(k, g), ordinal_sum(k, h)));
    EXPECT_TRUE(equal(ordinal_sum(g, k), ordinal_sum(h, k)));
  }
}

}  // namespace
}  // namespace ordsum
