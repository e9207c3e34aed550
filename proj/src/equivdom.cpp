#include "ordsum/equivdom.hpp"

#include <algorithm>

#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"

namespace ordsum {

Ball Ball::make(Dyadic midpoint, Dyadic radius) {
  if (radius.sign() >= 0) {
    throw DomainError("ball radius must be negative, got " + radius.to_string());
  }
  return Ball{std::move(midpoint), std::move(radius)};
}

Game Ball::literal_form() const {
  return Game::make({canonical_form(left_value())}, {canonical_form(right_value())});
}

std::string Ball::to_string() const { return "<" + midpoint.to_string() + "; " + radius.to_string() + ">"; }

namespace {

// Every option in `from` is matched by some option in `to` that is at least as good
// for the side's owner. Left owner: from <= to. Right owner: to <= from.
bool answered(std::span<const Game> from, std::span<const Game> to, Player owner) {
  return std::all_of(from.begin(), from.end(), [&](const Game& x) {
    return std::any_of(to.begin(), to.end(), [&](const Game& y) {
      return owner == Player::Left ? le(x, y) : le(y, x);
    });
  });
}

}  // namespace

bool equiv_mod_domination(const Game& g, const Game& h) {
  if (g == h) return true;
  // In g + (-h):
  //   Left to g^L   -> Right answers in -h with -h^L, needs g^L - h^L <= 0.
  //   Left to -h^R  -> Right answers in g with g^R,   needs g^R - h^R <= 0.
  //   Right to g^R  -> Left answers in -h with -h^R,  needs g^R - h^R >= 0.
  //   Right to -h^L -> Left answers in g with g^L,    needs g^L - h^L >= 0.
  return answered(g.left(), h.left(), Player::Left) && answered(h.left(), g.left(), Player::Left) &&
         answered(g.right(), h.right(), Player::Right) && answered(h.right(), g.right(), Player::Right);
}

namespace {

template <class Better>
std::vector<Game> keep_best(std::span<const Game> opts, Better better) {
  std::vector<Game> kept;
  for (std::size_t i = 0; i < opts.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < opts.size() && !drop; ++j) {
      if (i == j) continue;
      const bool j_ge_i = better(opts[j], opts[i]);
      if (!j_ge_i) continue;
      const bool i_ge_j = better(opts[i], opts[j]);
      // Strictly dominated, or equal to an option that comes first.
      drop = !i_ge_j || j < i;
    }
    if (!drop) kept.push_back(opts[i]);
  }
  return kept;
}

}  // namespace

Game remove_dominated(const Game& g) {
  return Game::make(keep_best(g.left(), [](const Game& a, const Game& b) { return ge(a, b); }),
                    keep_best(g.right(), [](const Game& a, const Game& b) { return le(a, b); }));
}

Ball reduce_to_ball(const Game& g) {
  if (!is_number(g)) throw DomainError("reduce_to_ball: " + raw_string(g) + " is not a number");
  if (g.left().empty() || g.right().empty()) {
    throw DomainError("reduce_to_ball: form needs options on both sides");
  }
  const OptionBounds b = option_bounds(g);
  return Ball::make((*b.left + *b.right).half(), (*b.left - *b.right).half());
}

bool is_balanced(const Ball& b) {
  const Game lit = b.literal_form();
  const Game mid = canonical_form(b.midpoint);
  return equal(disjunctive_sum(lit, lit), disjunctive_sum(mid, mid));
}

Dyadic canonical_radius(const Dyadic& x) {
  if (x.is_integer()) return Dyadic(-1);
  return -Dyadic::pow2(-static_cast<long long>(x.exponent()));
}

}  // namespace ordsum
