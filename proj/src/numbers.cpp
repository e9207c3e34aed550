#include "ordsum/numbers.hpp"

#include "ordsum/detail/memo.hpp"
#include "ordsum/errors.hpp"

namespace ordsum {

namespace {

detail::Memo<std::uint32_t, bool>& number_memo() {
  static auto* m = new detail::Memo<std::uint32_t, bool>;
  return *m;
}
detail::Memo<std::uint32_t, Dyadic>& value_memo() {
  static auto* m = new detail::Memo<std::uint32_t, Dyadic>;
  return *m;
}
detail::Memo<Dyadic, Game, DyadicHash>& canonical_number_memo() {
  static auto* m = new detail::Memo<Dyadic, Game, DyadicHash>;
  return *m;
}

}  // namespace

bool is_number(const Game& g) {
  if (g.is_zero()) return true;
  return number_memo().get_or_compute(g.id(), [&] {
    for (const Game& o : g.left()) {
      if (!is_number(o)) return false;
    }
    for (const Game& o : g.right()) {
      if (!is_number(o)) return false;
    }
    // Options are numbers, hence totally ordered: G^L < G^R iff not G^L >= G^R.
    for (const Game& l : g.left()) {
      for (const Game& r : g.right()) {
        if (ge(l, r)) return false;
      }
    }
    return true;
  });
}

OptionBounds option_bounds(const Game& g) {
  OptionBounds b;
  for (const Game& o : g.left()) {
    Dyadic v = number_value(o);
    if (!b.left || v > *b.left) b.left = std::move(v);
  }
  for (const Game& o : g.right()) {
    Dyadic v = number_value(o);
    if (!b.right || v < *b.right) b.right = std::move(v);
  }
  return b;
}

Dyadic number_value(const Game& g) {
  if (g.is_zero()) return Dyadic(0);
  if (auto hit = value_memo().find(g.id())) return *hit;
  if (!is_number(g)) throw DomainError("form " + raw_string(g) + " is not a number");
  const OptionBounds b = option_bounds(g);
  return value_memo().insert(g.id(), simplest_between(b.left, b.right));
}

Game canonical_form(const Dyadic& x) {
  if (x.is_zero()) return Game();
  if (auto hit = canonical_number_memo().find(x)) return *hit;
  Game g;
  if (x.is_integer()) {
    // Built iteratively so long chains do not recurse.
    const long long n = x.to_int();
    const long long step = n > 0 ? 1 : -1;
    for (long long k = step;; k += step) {
      if (auto hit = canonical_number_memo().find(Dyadic(k))) {
        g = *hit;
      } else {
        g = step > 0 ? Game::make({g}, {}) : Game::make({}, {g});
        canonical_number_memo().insert(Dyadic(k), g);
      }
      if (k == n) break;
    }
    return g;
  } else {
    const Dyadic step = Dyadic::pow2(-static_cast<long long>(x.exponent()));
    g = Game::make({canonical_form(x - step)}, {canonical_form(x + step)});
  }
  return canonical_number_memo().insert(x, g);
}

bool is_canonical_number(const Game& g) {
  return is_number(g) && canonical_form(number_value(g)) == g;
}

}  // namespace ordsum
