#include "ordsum/parser.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"
#include "test_util.hpp"

namespace ordsum {
namespace {

using K = Expr::Kind;

Game num(const char* text) { return canonical_form(Dyadic::parse(text)); }

std::size_t error_offset(const std::string& text) {
  try {
    parse_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for " << text;
  return 0;
}

TEST(ParseExprTest, Examples) {
  const ExprPtr half = parse_expr("{0|1}");
  EXPECT_EQ(half->kind, K::Brace);
  EXPECT_EQ(lower(*half), num("1/2"));

  const ExprPtr worked = parse_expr("{-1/2|1}:{-1|1/2}");
  ASSERT_EQ(worked->kind, K::Ordinal);
  EXPECT_EQ(worked->lhs->kind, K::Brace);
  EXPECT_EQ(worked->rhs->kind, K::Brace);
  EXPECT_EQ(number_value(lower(*worked)), Dyadic(0));

  const ExprPtr tower = parse_expr("T[1/1;1/1;1/1;1/0]");
  ASSERT_EQ(tower->kind, K::Tower);
  EXPECT_EQ(tower->stories.size(), 4u);
  EXPECT_EQ(number_value(canonicalize(lower(*tower))), Dyadic::parse("1/8"));
}

TEST(ParseExprTest, PrecedenceAndAssociativity) {
  const ExprPtr a = parse_expr("1 + 2:3");
  ASSERT_EQ(a->kind, K::Sum);
  EXPECT_EQ(a->rhs->kind, K::Ordinal);

  const ExprPtr b = parse_expr("1:2:3");
  ASSERT_EQ(b->kind, K::Ordinal);
  EXPECT_EQ(b->lhs->kind, K::Number);
  EXPECT_EQ(b->rhs->kind, K::Ordinal);

  const ExprPtr c = parse_expr("1 - 2 - 3");
  ASSERT_EQ(c->kind, K::Difference);
  EXPECT_EQ(c->lhs->kind, K::Difference);

  const ExprPtr d = parse_expr("-1:2");
  ASSERT_EQ(d->kind, K::Ordinal);
  EXPECT_EQ(d->lhs->kind, K::Number);
  EXPECT_EQ(d->lhs->number, Dyadic(-1));

  const ExprPtr e = parse_expr("-{0|1}:2");
  ASSERT_EQ(e->kind, K::Ordinal);
  EXPECT_EQ(e->lhs->kind, K::Negate);

  const ExprPtr f = parse_expr("(1 + 2):3");
  ASSERT_EQ(f->kind, K::Ordinal);
  EXPECT_EQ(f->lhs->kind, K::Sum);
}

TEST(ParseExprTest, LiteralsAndWhitespace) {
  EXPECT_TRUE(structurally_equal(*parse_expr(" { 0 , 1 | } "), *parse_expr("{0,1|}")));
  EXPECT_EQ(parse_expr("3/2^2")->number, Dyadic::parse("3/4"));
  EXPECT_EQ(parse_expr("0.375")->number, Dyadic::parse("3/8"));
  EXPECT_EQ(parse_expr("- 5/8")->number, Dyadic::parse("-5/8"));
  const ExprPtr ball = parse_expr("<3/4; -1/4>");
  ASSERT_EQ(ball->kind, K::Ball);
  EXPECT_EQ(lower(*ball), Game::make({num("1/2")}, {num("1")}));
  EXPECT_EQ(lower(*parse_expr("{|}")), Game());
}

TEST(ParseExprTest, ColonIsRightAssociativeOnForms) {
  EXPECT_EQ(lower(*parse_expr("1:{0|1}:-1")), ordinal_sum(num("1"), ordinal_sum(num("1/2"), num("-1"))));
}

TEST(ParseExprTest, ErrorsCarryOffsets) {
  EXPECT_EQ(error_offset("{0|1"), 4u);
  EXPECT_EQ(error_offset("1 + "), 4u);
  EXPECT_EQ(error_offset("{0|1}}"), 5u);
  EXPECT_EQ(error_offset("<0; 1>"), 4u);
  EXPECT_EQ(error_offset("1/3"), 0u);
  EXPECT_EQ(error_offset("2 + 99999999999"), 4u);
  EXPECT_EQ(error_offset("T[1/1; 0/0]"), 7u);
  EXPECT_EQ(error_offset("  @"), 2u);
  EXPECT_EQ(error_offset("{0 1|}"), 3u);
  EXPECT_EQ(error_offset(""), 0u);
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 2);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<std::uint32_t> exp(0, 3), count(0, 3);
  switch (pick(rng)) {
    case 0:
    case 1:
      return Expr::make_number(Dyadic(BigInt(small(rng)), exp(rng)));
    case 2: {
      std::vector<towers::Story> stories;
      for (int i = 1 + static_cast<int>(rng() % 3); i > 0; --i) stories.push_back({1 + count(rng), count(rng)});
      return Expr::make_tower(towers::Tower(stories));
    }
    case 3: {
      std::vector<ExprPtr> l, r;
      for (int i = static_cast<int>(rng() % 3); i > 0; --i) l.push_back(random_expr(rng, depth - 1));
      for (int i = static_cast<int>(rng() % 3); i > 0; --i) r.push_back(random_expr(rng, depth - 1));
      return Expr::make_brace(l, r);
    }
    case 4:
      return Expr::make_binary(K::Sum, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 5:
      return Expr::make_binary(K::Difference, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6:
      return Expr::make_binary(K::Ordinal, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default:
      if (rng() % 2) return Expr::make_ball(Dyadic(BigInt(small(rng)), exp(rng)), -Dyadic(BigInt(1 + count(rng)), exp(rng)));
      return Expr::make_negate(random_expr(rng, depth - 1));
  }
}

TEST(PrintExprTest, RoundTripCorpus) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const ExprPtr e = random_expr(rng, 3);
    const std::string text = print_expr(*e);
    const ExprPtr back = parse_expr(text);
    EXPECT_TRUE(structurally_equal(*e, *back)) << text << " reprinted as " << print_expr(*back);
    EXPECT_EQ(print_expr(*back), text);
  }
}

TEST(PrintExprTest, Examples) {
  EXPECT_EQ(print_expr(*parse_expr("{ -1/2 | 1 } : { -1 | 1/2 }")), "{-1/2|1}:{-1|1/2}");
  EXPECT_EQ(print_expr(*parse_expr("(1:2):3")), "(1:2):3");
  EXPECT_EQ(print_expr(*parse_expr("-(1)")), "-(1)");
  EXPECT_EQ(print_expr(*parse_expr("1 - (2 + 3)")), "1 - (2 + 3)");
  EXPECT_EQ(print_expr(*parse_expr("T[1/1;1/0]")), "T[1/1; 1/0]");
}

TEST(PrintGameTest, Examples) {
  EXPECT_EQ(print_game(num("2")), "{1|}");
  EXPECT_EQ(print_game(Game()), "{|}");
  EXPECT_EQ(print_game(num("3/4")), "{1/2|1}");
  EXPECT_EQ(print_game(Game::make({Game()}, {Game()})), "{0|0}");
  EXPECT_EQ(print_form(num("-5/8")), "-5/8");
  EXPECT_EQ(print_game(Game::make({Game::make({num("0")}, {num("3")})}, {})), "{{0|3}|}");
}

TEST(PrintGameTest, ReparsesToTheSameForm) {
  for (const Game& g : testing::forms_to_day2()) {
    EXPECT_EQ(lower(*parse_expr(print_game(g))), g) << print_game(g);
  }
  std::mt19937_64 rng(18);
  for (int i = 0; i < 100; ++i) {
    const Game g = testing::random_form(rng, 3);
    EXPECT_EQ(lower(*parse_expr(print_form(g))), g) << print_form(g);
  }
}

}  // namespace
}  // namespace ordsum
