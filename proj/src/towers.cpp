#include "ordsum/towers.hpp"

#include <cctype>
#include <limits>

#include "ordsum/colon.hpp"
#include "ordsum/equivdom.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"

namespace ordsum::towers {

Tower::Tower(std::vector<Story> stories) : stories_(std::move(stories)) {
  if (stories_.empty()) throw DomainError("a tower needs at least one story");
  for (const Story& s : stories_) {
    if (s.blue == 0 && s.red == 0) throw DomainError("a story needs at least one brick");
  }
}

const char* to_string(Color c) { return c == Color::Blue ? "Blue" : "Red"; }

std::vector<Move> legal_moves(const Position& pos, Player player) {
  const Color color = color_of(player);
  std::vector<Move> moves;
  for (std::size_t t = 0; t < pos.towers.size(); ++t) {
    const auto& stories = pos.towers[t].stories();
    for (std::size_t s = 0; s < stories.size(); ++s) {
      const std::uint32_t bricks = color == Color::Blue ? stories[s].blue : stories[s].red;
      if (bricks > 0) moves.push_back(Move{t, s, color});
    }
  }
  return moves;
}

Position apply_move(const Position& pos, const Move& move) {
  if (move.tower >= pos.towers.size()) throw IllegalMove("no tower " + std::to_string(move.tower));
  const auto& stories = pos.towers[move.tower].stories();
  if (move.story >= stories.size()) throw IllegalMove("no story " + std::to_string(move.story));
  Story target = stories[move.story];
  std::uint32_t& bricks = move.color == Color::Blue ? target.blue : target.red;
  if (bricks == 0) throw IllegalMove(std::string("no ") + to_string(move.color) + " brick in that story");
  --bricks;

  std::vector<Story> kept(stories.begin(), stories.begin() + static_cast<std::ptrdiff_t>(move.story));
  if (target.blue > 0 || target.red > 0) kept.push_back(target);

  Position next;
  for (std::size_t t = 0; t < pos.towers.size(); ++t) {
    if (t != move.tower) {
      next.towers.push_back(pos.towers[t]);
    } else if (!kept.empty()) {
      next.towers.emplace_back(std::move(kept));
    }
  }
  return next;
}

Game story_form(const Story& s) {
  return disjunctive_sum(canonical_form(Dyadic(s.blue)), canonical_form(-Dyadic(s.red)));
}

Game tower_form(const Tower& t) {
  Game g;
  for (const Story& s : t.stories()) g = ordinal_sum(g, story_form(s));
  return g;
}

Game position_form(const Position& pos) {
  Game g;
  for (const Tower& t : pos.towers) g = disjunctive_sum(g, tower_form(t));
  return g;
}

Game story_reduce(const Story& s) {
  if (s.red == 0) return canonical_form(Dyadic(s.blue));
  if (s.blue == 0) return canonical_form(-Dyadic(s.red));
  const Dyadic k = Dyadic(s.blue) - Dyadic(s.red);
  return Game::make({canonical_form(k - 1)}, {canonical_form(k + 1)});
}

namespace {

// <lo | hi> with canonical options, equivalent modulo domination to a tower prefix.
struct Interval {
  std::optional<Dyadic> lo;
  std::optional<Dyadic> hi;

  Game form() const {
    std::vector<Game> left, right;
    if (lo) left.push_back(canonical_form(*lo));
    if (hi) right.push_back(canonical_form(*hi));
    return Game::make(std::move(left), std::move(right));
  }
};

// Ball <m; -1/2^p> under a {-1|1} story becomes <m; -1/2^(p+1)> when balanced.
std::optional<Interval> underline_zero_on_top(const Interval& iv) {
  if (!iv.lo || !iv.hi) return std::nullopt;
  const Ball ball = Ball::make((*iv.lo + *iv.hi).half(), (*iv.lo - *iv.hi).half());
  if ((-ball.radius).numerator() != 1 || !is_balanced(ball)) return std::nullopt;
  const Dyadic r = ball.radius.half();
  return Interval{ball.midpoint + r, ball.midpoint - r};
}

// Prefix followed by a one-sided story of integer value k: Q:k is equivalent to
// <Q:(k-1) | R(Q)> for k > 0 and mirrored for k < 0.
std::optional<Interval> integer_on_top(const Interval& iv, long long k) {
  const Game q = iv.form();
  try {
    const int sign = k > 0 ? 1 : -1;
    colon_one(q, sign);  // probes the gap precondition
    const Dyadic inner = (k == sign) ? number_value(q) : colon_integer(q, k - sign);
    if (sign > 0) return Interval{inner, iv.hi};
    return Interval{iv.lo, inner};
  } catch (const PreconditionGap&) {
    return std::nullopt;
  }
}

Interval general_on_top(const Interval& iv, const Game& story) {
  const Game q = iv.form();
  Interval next = iv;
  for (const Game& l : story.left()) {
    Dyadic v = colon_value(q, l);
    if (!next.lo || v > *next.lo) next.lo = std::move(v);
  }
  for (const Game& r : story.right()) {
    Dyadic v = colon_value(q, r);
    if (!next.hi || v < *next.hi) next.hi = std::move(v);
  }
  return next;
}

}  // namespace

Dyadic tower_value(const Tower& t) {
  Interval iv;
  for (const Story& s : t.stories()) {
    std::optional<Interval> next;
    if (s.blue == s.red) {
      next = underline_zero_on_top(iv);
    } else if (s.blue == 0 || s.red == 0) {
      next = integer_on_top(iv, static_cast<long long>(s.blue) - static_cast<long long>(s.red));
    }
    iv = next ? *next : general_on_top(iv, story_reduce(s));
  }
  return simplest_between(iv.lo, iv.hi);
}

Dyadic position_value(const Position& pos) {
  Dyadic v;
  for (const Tower& t : pos.towers) v += tower_value(t);
  return v;
}

Tower build_leaning_tower(const Dyadic& x) {
  if (x.sign() < 0) throw DomainError("build_leaning_tower needs x >= 0, got " + x.to_string());
  if (x.is_integer()) {
    const long long n = x.to_int();
    if (n >= static_cast<long long>(std::numeric_limits<std::uint32_t>::max())) {
      throw ResourceError("integer " + x.to_string() + " too large for a story");
    }
    return Tower({Story{static_cast<std::uint32_t>(n + 1), 1}});
  }
  // x = a/2^p sits on z = x - 2^-p, which has a smaller exponent p'.
  const std::uint32_t p = x.exponent();
  const Dyadic z = x - Dyadic::pow2(-static_cast<long long>(p));
  const std::uint32_t drop = p - z.exponent();
  std::vector<Story> stories = build_leaning_tower(z).stories();
  for (std::uint32_t i = 1; i < drop; ++i) stories.push_back(Story{1, 1});
  stories.push_back(Story{1, 0});
  return Tower(std::move(stories));
}

Tower build_canonical_tower(const Dyadic& x) {
  if (x.is_integer()) throw DomainError("build_canonical_tower needs a non-integer, got " + x.to_string());
  if (x.sign() > 0) return build_leaning_tower(x);
  const Tower leaning = build_leaning_tower(-x);
  std::vector<Story> mirrored;
  for (const Story& s : leaning.stories()) mirrored.push_back(Story{s.red, s.blue});
  return Tower(std::move(mirrored));
}

Player winner(const Position& pos, Player mover) {
  const int s = position_value(pos).sign();
  if (s > 0) return Player::Left;
  if (s < 0) return Player::Right;
  return opponent(mover);
}

std::optional<Move> best_move(const Position& pos, Player player) {
  std::optional<Move> best;
  std::optional<Dyadic> best_value;
  for (const Move& m : legal_moves(pos, player)) {
    Dyadic v = position_value(apply_move(pos, m));
    const bool better = !best_value || (player == Player::Left ? v > *best_value : v < *best_value);
    if (better) {
      best = m;
      best_value = std::move(v);
    }
  }
  return best;
}

std::string to_string(const Tower& t) {
  std::string out = "T[";
  for (std::size_t i = 0; i < t.stories().size(); ++i) {
    if (i > 0) out += "; ";
    out += std::to_string(t.stories()[i].blue) + "/" + std::to_string(t.stories()[i].red);
  }
  return out + "]";
}

std::string to_string(const Position& pos) {
  if (pos.towers.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pos.towers.size(); ++i) {
    if (i > 0) out += " + ";
    out += to_string(pos.towers[i]);
  }
  return out;
}

std::string to_string(const Move& m) {
  return std::to_string(m.tower) + ":" + std::to_string(m.story) + ":" + to_string(m.color);
}

namespace {

void skip_space(std::string_view text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

void expect(std::string_view text, std::size_t& i, char c) {
  skip_space(text, i);
  if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
  ++i;
}

std::uint32_t parse_count(std::string_view text, std::size_t& i) {
  skip_space(text, i);
  const std::size_t start = i;
  std::uint64_t v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
    if (v > std::numeric_limits<std::uint32_t>::max() / 2) throw ParseError("brick count overflow", start);
    ++i;
  }
  if (i == start) throw ParseError("expected a brick count", start);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Tower parse_tower(std::string_view text, std::size_t& offset) {
  std::size_t i = offset;
  expect(text, i, 'T');
  expect(text, i, '[');
  std::vector<Story> stories;
  for (;;) {
    skip_space(text, i);
    const std::size_t story_start = i;
    Story s;
    s.blue = parse_count(text, i);
    expect(text, i, '/');
    s.red = parse_count(text, i);
    if (s.blue == 0 && s.red == 0) throw ParseError("story 0/0 has no bricks", story_start);
    stories.push_back(s);
    skip_space(text, i);
    if (i < text.size() && text[i] == ';') {
      ++i;
      continue;
    }
    expect(text, i, ']');
    break;
  }
  offset = i;
  return Tower(std::move(stories));
}

Position parse_position(std::string_view text) {
  std::size_t i = 0;
  skip_space(text, i);
  Position pos;
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip_space(text, i);
    if (i != text.size()) throw ParseError("unexpected input after empty position", i);
    return pos;
  }
  for (;;) {
    pos.towers.push_back(parse_tower(text, i));
    skip_space(text, i);
    if (i == text.size()) break;
    expect(text, i, '+');
  }
  return pos;
}

}  // namespace ordsum::towers
