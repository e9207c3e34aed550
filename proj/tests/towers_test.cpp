#include "ordsum/towers.hpp"

#include <gtest/gtest.h>

#include <set>

#include "ordsum/equivdom.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"

namespace ordsum::towers {
namespace {

Dyadic dy(const char* text) { return Dyadic::parse(text); }
Tower tower(std::vector<Story> s) { return Tower(std::move(s)); }

const Tower kOneEighth = Tower({{1, 1}, {1, 1}, {1, 1}, {1, 0}});
const Position kMixed = parse_position("T[1/2; 2/2] + T[2/2; 3/2; 0/1] + T[5/3]");

// Oracle value of any tower position: canonicalize the literal form and match it
// against the canonical form of the claimed value.
bool oracle_value_is(const Position& pos, const Dyadic& v) {
  return canonicalize(position_form(pos)) == canonical_form(v);
}

TEST(TowerTest, RejectsEmptyTowersAndStories) {
  EXPECT_THROW(Tower({}), DomainError);
  EXPECT_THROW(Tower({{1, 0}, {0, 0}}), DomainError);
}

TEST(LegalMovesTest, Examples) {
  EXPECT_TRUE(legal_moves(Position{}, Player::Left).empty());
  const Position single{{tower({{2, 1}})}};
  EXPECT_EQ(legal_moves(single, Player::Left), (std::vector<Move>{{0, 0, Color::Blue}}));
  const auto left = legal_moves(kMixed, Player::Left);
  EXPECT_EQ(left.size(), 5u);  // every story with a blue brick
  for (const Move& m : left) EXPECT_EQ(m.color, Color::Blue);
  EXPECT_EQ(legal_moves(kMixed, Player::Right).size(), 6u);
}

TEST(ApplyMoveTest, Examples) {
  const Position a{{tower({{1, 1}, {1, 0}})}};
  EXPECT_EQ(apply_move(a, {0, 0, Color::Blue}), (Position{{tower({{0, 1}})}}));
  const Position b{{tower({{3, 3}})}};
  EXPECT_EQ(apply_move(b, {0, 0, Color::Red}), (Position{{tower({{3, 2}})}}));
  const Position c{{kOneEighth}};
  EXPECT_EQ(apply_move(c, {0, 2, Color::Blue}), (Position{{tower({{1, 1}, {1, 1}, {0, 1}})}}));
}

TEST(ApplyMoveTest, DropsEmptiedTowersAndStories) {
  const Position p{{tower({{1, 0}}), tower({{0, 2}})}};
  EXPECT_EQ(apply_move(p, {0, 0, Color::Blue}), (Position{{tower({{0, 2}})}}));
  const Position q{{tower({{2, 2}, {1, 0}, {1, 3}})}};
  EXPECT_EQ(apply_move(q, {0, 1, Color::Blue}), (Position{{tower({{2, 2}})}}));
}

TEST(ApplyMoveTest, RejectsIllegalMoves) {
  const Position p{{tower({{1, 0}})}};
  EXPECT_THROW(apply_move(p, {0, 0, Color::Red}), IllegalMove);
  EXPECT_THROW(apply_move(p, {1, 0, Color::Blue}), IllegalMove);
  EXPECT_THROW(apply_move(p, {0, 3, Color::Blue}), IllegalMove);
}

TEST(ApplyMoveTest, MatchesLiteralOptions) {
  for (const Position& pos : {kMixed, Position{{kOneEighth, tower({{2, 3}, {1, 1}})}}}) {
    const Game g = position_form(pos);
    for (Player player : {Player::Left, Player::Right}) {
      std::set<std::uint32_t> via_moves;
      for (const Move& m : legal_moves(pos, player)) via_moves.insert(position_form(apply_move(pos, m)).id());
      std::set<std::uint32_t> literal;
      for (const Game& o : player == Player::Left ? g.left() : g.right()) literal.insert(o.id());
      EXPECT_EQ(via_moves, literal);
    }
  }
}

TEST(StoryReduceTest, Examples) {
  const auto form = [](const char* t) { return canonical_form(Dyadic::parse(t)); };
  EXPECT_EQ(story_reduce({3, 3}), Game::make({form("-1")}, {form("1")}));
  EXPECT_EQ(story_reduce({5, 2}), Game::make({form("2")}, {form("4")}));
  EXPECT_EQ(story_reduce({2, 0}), form("2"));
  EXPECT_EQ(story_reduce({0, 4}), form("-4"));
}

TEST(StoryReduceTest, EquivalentToLiteralStory) {
  for (std::uint32_t b = 0; b <= 5; ++b) {
    for (std::uint32_t r = 0; r <= 5; ++r) {
      EXPECT_TRUE(equiv_mod_domination(story_reduce({b, r}), story_form({b, r}))) << b << "/" << r;
    }
  }
}

TEST(TowerValueTest, Examples) {
  EXPECT_EQ(tower_value(kOneEighth), dy("1/8"));
  EXPECT_TRUE(oracle_value_is(Position{{kOneEighth}}, dy("1/8")));
  for (std::uint32_t b = 0; b <= 6; ++b) {
    for (std::uint32_t r = 0; r <= 6; ++r) {
      if (b + r > 0) EXPECT_EQ(tower_value(tower({{b, r}})), Dyadic(b) - Dyadic(r));
    }
  }
}

TEST(TowerValueTest, FigureTwoPosition) {
  EXPECT_EQ(position_value(kMixed), dy("5/4"));
  EXPECT_TRUE(oracle_value_is(kMixed, dy("5/4")));
}

TEST(TowerValueTest, ZeroTowersHaveOnlyZeroStories) {
  for (std::uint32_t a = 0; a <= 2; ++a) {
    for (std::uint32_t b = 0; b <= 2; ++b) {
      for (std::uint32_t c = 0; c <= 2; ++c) {
        for (std::uint32_t d = 0; d <= 2; ++d) {
          if (a + b == 0 || c + d == 0) continue;
          const Tower t = tower({{a, b}, {c, d}});
          EXPECT_EQ(tower_value(t).is_zero(), a == b && c == d) << to_string(t);
        }
      }
    }
  }
}

// Sign-sequence value of a Blue-Red Hackenbush stalk (+1 blue, -1 red edges, bottom
// first): the run before the first color change counts whole, later edges halve.
Dyadic stalk_value(const std::vector<int>& edges) {
  Dyadic v;
  std::size_t i = 0;
  while (i < edges.size() && edges[i] == edges[0]) v += edges[i++];
  for (long long k = 1; i < edges.size(); ++i, ++k) v += Dyadic(edges[i]).scaled(-k);
  return v;
}

TEST(TowerValueTest, MonochromaticTowersAreHackenbushStalks) {
  for (unsigned mask = 0; mask < (1u << 6); ++mask) {
    for (unsigned len = 1; len <= 3; ++len) {
      std::vector<Story> stories;
      std::vector<int> edges;
      for (unsigned i = 0; i < len; ++i) {
        const std::uint32_t count = 1 + ((mask >> (2 * i)) & 1u);
        const bool blue = (mask >> (2 * i + 1)) & 1u;
        stories.push_back(blue ? Story{count, 0} : Story{0, count});
        for (std::uint32_t c = 0; c < count; ++c) edges.push_back(blue ? 1 : -1);
      }
      const Tower t(stories);
      EXPECT_EQ(tower_value(t), stalk_value(edges)) << to_string(t);
      EXPECT_TRUE(oracle_value_is(Position{{t}}, stalk_value(edges))) << to_string(t);
    }
  }
}

TEST(UnderlineZeroTest, BalancedBallGainsHalfRadius) {
  const Game zero_bar = Game::make({canonical_form(Dyadic(-1))}, {canonical_form(Dyadic(1))});
  for (int a = -8; a <= 8; ++a) {
    for (std::uint32_t e = 0; e <= 3; ++e) {
      for (std::uint32_t p = 0; p <= 3; ++p) {
        const Dyadic m(BigInt(a), e);
        const Ball ball = Ball::make(m, -Dyadic::pow2(-static_cast<long long>(p)));
        if (!is_balanced(ball)) continue;
        const Ball halved = Ball::make(m, ball.radius.half());
        EXPECT_TRUE(equiv_mod_domination(ordinal_sum(ball.literal_form(), zero_bar), halved.literal_form()))
            << ball.to_string();
        EXPECT_TRUE(is_balanced(halved));
      }
    }
  }
}

TEST(PositionValueTest, Examples) {
  EXPECT_EQ(position_value(Position{}), dy("0"));
  EXPECT_EQ(position_value(Position{{tower({{2, 1}}), tower({{1, 2}})}}), dy("0"));
}

TEST(BuildLeaningTowerTest, Examples) {
  EXPECT_EQ(build_leaning_tower(dy("0")), tower({{1, 1}}));
  EXPECT_EQ(build_leaning_tower(dy("3")), tower({{4, 1}}));
  EXPECT_EQ(build_leaning_tower(dy("1/8")), kOneEighth);
  const Tower t = build_leaning_tower(dy("13/16"));
  EXPECT_EQ(t, tower({{1, 1}, {1, 0}, {1, 0}, {1, 1}, {1, 0}}));
  EXPECT_EQ(tower_value(t), dy("13/16"));
  EXPECT_TRUE(oracle_value_is(Position{{t}}, dy("13/16")));
  EXPECT_THROW(build_leaning_tower(dy("-1/2")), DomainError);
}

TEST(BuildLeaningTowerTest, ValueAndNonNegativeStories) {
  for (int a = 0; a <= 64; ++a) {
    const Dyadic x(BigInt(a), 4);
    const Tower t = build_leaning_tower(x);
    EXPECT_EQ(tower_value(t), x);
    for (const Story& s : t.stories()) EXPECT_GE(s.blue, s.red);
  }
}

TEST(BuildCanonicalTowerTest, Examples) {
  EXPECT_EQ(build_canonical_tower(dy("1/2")), tower({{1, 1}, {1, 0}}));
  EXPECT_EQ(build_canonical_tower(dy("1/8")), kOneEighth);
  const Tower five_halves = build_canonical_tower(dy("5/2"));
  EXPECT_EQ(five_halves, tower({{3, 1}, {1, 0}}));
  EXPECT_TRUE(oracle_value_is(Position{{five_halves}}, dy("5/2")));
  // The stack 2-bar : 0-bar : 1 lands on 9/4, not 5/2.
  EXPECT_TRUE(oracle_value_is(Position{{tower({{3, 1}, {1, 1}, {1, 0}})}}, dy("9/4")));
  EXPECT_THROW(build_canonical_tower(dy("2")), DomainError);
}

TEST(BuildCanonicalTowerTest, EquivalentToCanonicalForm) {
  for (const char* x : {"1/2", "3/4", "5/2", "13/16", "-13/16", "-7/4", "11/8", "31/8"}) {
    const Dyadic v = dy(x);
    const Tower t = build_canonical_tower(v);
    EXPECT_TRUE(equiv_mod_domination(tower_form(t), canonical_form(v))) << x;
    EXPECT_EQ(tower_value(t), v);
  }
}

TEST(WinnerTest, Examples) {
  EXPECT_EQ(winner(Position{}, Player::Left), Player::Right);
  const Position one{{tower({{1, 0}})}};
  EXPECT_EQ(winner(one, Player::Left), Player::Left);
  EXPECT_EQ(winner(one, Player::Right), Player::Left);
  const Position zero_bar{{tower({{1, 1}})}};
  EXPECT_EQ(winner(zero_bar, Player::Left), Player::Right);
  EXPECT_EQ(winner(zero_bar, Player::Right), Player::Left);
}

TEST(WinnerTest, AgreesWithOutcomeOfLiteralForm) {
  for (std::uint32_t a = 0; a <= 2; ++a) {
    for (std::uint32_t b = 0; b <= 2; ++b) {
      for (std::uint32_t c = 0; c <= 2; ++c) {
        if (a + b == 0 || c == 0) continue;
        const Position pos{{tower({{a, b}, {c, 1}}), tower({{b + 1, a}})}};
        const Outcome o = outcome(position_form(pos));
        const Player lw = winner(pos, Player::Left);
        const Player rw = winner(pos, Player::Right);
        EXPECT_EQ(lw == Player::Left, o == Outcome::LeftWins || o == Outcome::FirstPlayerWins);
        EXPECT_EQ(rw == Player::Right, o == Outcome::RightWins || o == Outcome::FirstPlayerWins);
      }
    }
  }
}

TEST(BestMoveTest, Examples) {
  const Position zero_bar{{tower({{1, 1}})}};
  EXPECT_EQ(best_move(zero_bar, Player::Left), (Move{0, 0, Color::Blue}));
  EXPECT_EQ(position_value(apply_move(zero_bar, *best_move(zero_bar, Player::Left))), dy("-1"));
  const Position p{{tower({{1, 1}, {1, 0}})}};
  EXPECT_EQ(best_move(p, Player::Right), (Move{0, 0, Color::Red}));
  EXPECT_FALSE(best_move(Position{{tower({{2, 0}})}}, Player::Right).has_value());
}

TEST(BestMoveTest, WinningPlayerStaysWinningOnFigureTwo) {
  for (Player mover : {Player::Left, Player::Right}) {
    if (winner(kMixed, mover) != mover) continue;
    const auto m = best_move(kMixed, mover);
    ASSERT_TRUE(m.has_value());
    const Position next = apply_move(kMixed, *m);
    EXPECT_EQ(winner(next, opponent(mover)), mover);
    const Outcome o = outcome(position_form(next));
    EXPECT_TRUE(mover == Player::Left ? (o == Outcome::LeftWins || o == Outcome::SecondPlayerWins)
                                      : (o == Outcome::RightWins || o == Outcome::SecondPlayerWins));
  }
}

TEST(TowerTextTest, RoundTrip) {
  EXPECT_EQ(to_string(kOneEighth), "T[1/1; 1/1; 1/1; 1/0]");
  std::size_t off = 0;
  EXPECT_EQ(parse_tower("T[1/1;1/1;1/1;1/0]", off), kOneEighth);
  EXPECT_EQ(to_string(kMixed), "T[1/2; 2/2] + T[2/2; 3/2; 0/1] + T[5/3]");
  EXPECT_EQ(parse_position(to_string(kMixed)), kMixed);
  EXPECT_EQ(parse_position("0"), Position{});
  EXPECT_EQ(to_string(Position{}), "0");
}

TEST(TowerTextTest, ErrorsCarryOffsets) {
  try {
    parse_position("T[1/1; 0/0]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
  EXPECT_THROW(parse_position("T[1/1"), ParseError);
  EXPECT_THROW(parse_position("T[1/1] +"), ParseError);
  EXPECT_THROW(parse_position("T[a/1]"), ParseError);
}

}  // namespace
}  // namespace ordsum::towers
