#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ordsum {

namespace detail {
struct GameNode;
}

// Immutable, hash-consed literal game form <L(G) | R(G)>.
//
// Structurally identical forms share one node, so equality and hashing are
// pointer operations. Option lists are deduplicated and kept sorted by node id.
class Game {
 public:
  // The empty form {|}.
  Game();

  static Game make(std::vector<Game> left, std::vector<Game> right);

  std::span<const Game> left() const noexcept;
  std::span<const Game> right() const noexcept;

  std::uint32_t id() const noexcept;
  // Length of the longest chain of options (the form's birthday as a literal tree).
  std::uint32_t depth() const noexcept;
  bool is_zero() const noexcept { return left().empty() && right().empty(); }

  friend bool operator==(const Game& a, const Game& b) noexcept { return a.node_ == b.node_; }
  friend bool operator<(const Game& a, const Game& b) noexcept { return a.id() < b.id(); }

 private:
  explicit Game(const detail::GameNode* node) : node_(node) {}
  friend class GameStore;

  const detail::GameNode* node_;
};

struct GameHash {
  std::size_t operator()(const Game& g) const noexcept { return std::hash<std::uint32_t>{}(g.id()); }
};

// Owner of every interned node. Nodes live for the process lifetime.
class GameStore {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  static GameStore& instance();

  Game intern(std::vector<Game> left, std::vector<Game> right);
  Game zero() const noexcept { return Game(zero_); }

  std::size_t size() const;
  std::size_t budget() const;
  // Construction beyond `budget` interned forms raises ResourceError.
  void set_budget(std::size_t budget);

 private:
  GameStore();
  struct Impl;
  Impl* impl_;
  const detail::GameNode* zero_;
};

enum class Player { Left, Right };
enum class Outcome { LeftWins, RightWins, FirstPlayerWins, SecondPlayerWins };
enum class OrderRel { Less, Greater, Equal, Incomparable };

inline Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

const char* to_string(Player p);
const char* to_string(Outcome o);
// One of "<", ">", "=", "||".
const char* to_symbol(OrderRel r);

Game negate(const Game& g);
Game disjunctive_sum(const Game& g, const Game& h);
Game ordinal_sum(const Game& g, const Game& h);

// g >= h in the usual partial order: Left wins g - h when Right moves first.
bool ge(const Game& g, const Game& h);
inline bool le(const Game& g, const Game& h) { return ge(h, g); }
bool equal(const Game& g, const Game& h);
bool less(const Game& g, const Game& h);
OrderRel compare(const Game& g, const Game& h);

Outcome outcome(const Game& g);

// Canonical form via removal of dominated options and bypassing of reversible ones.
Game canonicalize(const Game& g);
// True when some option of g (top level only) is reversible.
bool has_reversible_option(const Game& g);

// Structural form rendered with nested braces, e.g. {{|}|{{|}|}}.
std::string raw_string(const Game& g);

}  // namespace ordsum
