#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsum/dyadic.hpp"
#include "ordsum/game.hpp"

// Teetering Towers: each tower is an ordinal stack of stories, each story a sum
// of a blue (Left) integer and a red (Right) negative integer. Removing a brick
// also removes every story above it.
namespace ordsum::towers {

struct Story {
  std::uint32_t blue = 0;
  std::uint32_t red = 0;

  friend bool operator==(const Story&, const Story&) = default;
};

// Stories bottom to top. Never empty and never holds a (0, 0) story.
class Tower {
 public:
  explicit Tower(std::vector<Story> stories);

  const std::vector<Story>& stories() const noexcept { return stories_; }
  std::size_t height() const noexcept { return stories_.size(); }

  friend bool operator==(const Tower&, const Tower&) = default;

 private:
  std::vector<Story> stories_;
};

// Disjunctive sum of towers. The empty position is the zero game.
struct Position {
  std::vector<Tower> towers;

  friend bool operator==(const Position&, const Position&) = default;
};

enum class Color { Blue, Red };

inline Color color_of(Player p) { return p == Player::Left ? Color::Blue : Color::Red; }
const char* to_string(Color c);

struct Move {
  std::size_t tower = 0;
  std::size_t story = 0;  // 0 = bottom
  Color color = Color::Blue;

  friend bool operator==(const Move&, const Move&) = default;
};

std::vector<Move> legal_moves(const Position& pos, Player player);

// Throws IllegalMove if the move does not reference a brick of its color.
Position apply_move(const Position& pos, const Move& move);

Game story_form(const Story& s);
Game tower_form(const Tower& t);
Game position_form(const Position& pos);

// Small form equivalent modulo domination to the story: 0, +/-n, {-1|1} for
// n - n, and {k-1|k+1} for n - m with k = n - m.
Game story_reduce(const Story& s);

Dyadic tower_value(const Tower& t);
Dyadic position_value(const Position& pos);

// For x >= 0: a tower of value x whose stories all have blue >= red.
Tower build_leaning_tower(const Dyadic& x);
// For non-integer x: a tower equivalent modulo domination to the canonical form
// of x built from {-1|1} and 1 stories over an optional k-bar bottom story.
Tower build_canonical_tower(const Dyadic& x);

// Winner under optimal play with `mover` to move.
Player winner(const Position& pos, Player mover);

// Move optimizing the resulting value for `player`; ties go to the lowest
// (tower, story) index. Empty when the player has no move.
std::optional<Move> best_move(const Position& pos, Player player);

// Text forms: T[1/1; 1/0] for towers, towers joined by " + " for positions,
// and "0" for the empty position.
std::string to_string(const Tower& t);
std::string to_string(const Position& pos);
std::string to_string(const Move& m);

// Parses one tower literal starting at `offset`; advances `offset` past it.
Tower parse_tower(std::string_view text, std::size_t& offset);
Position parse_position(std::string_view text);

}  // namespace ordsum::towers
