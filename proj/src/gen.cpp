#include "ordsum/gen.hpp"

#include "ordsum/numbers.hpp"

namespace ordsum::gen {

std::vector<Game> forms_to_day2() {
  const Game zero;
  const Game one = Game::make({zero}, {});
  const Game neg = Game::make({}, {zero});
  const Game star = Game::make({zero}, {zero});
  const std::vector<Game> day1{zero, one, neg, star};
  std::vector<Game> out;
  for (unsigned lm = 0; lm < 16; ++lm) {
    for (unsigned rm = 0; rm < 16; ++rm) {
      std::vector<Game> l, r;
      for (unsigned i = 0; i < 4; ++i) {
        if (lm & (1u << i)) l.push_back(day1[i]);
        if (rm & (1u << i)) r.push_back(day1[i]);
      }
      out.push_back(Game::make(l, r));
    }
  }
  return out;
}

Game random_form(std::mt19937_64& rng, unsigned depth) {
  if (depth == 0) return Game();
  std::uniform_int_distribution<int> count(0, 2);
  std::vector<Game> l, r;
  for (int i = count(rng); i > 0; --i) l.push_back(random_form(rng, depth - 1));
  for (int i = count(rng); i > 0; --i) r.push_back(random_form(rng, depth - 1));
  return Game::make(l, r);
}

Game random_number_form(std::mt19937_64& rng, unsigned depth) {
  std::uniform_int_distribution<int> small(-8, 8);
  std::uniform_int_distribution<int> exp(0, 2);
  if (depth == 0 || rng() % 4 == 0) {
    return canonical_form(Dyadic(small(rng)).scaled(-exp(rng)));
  }
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<Game> opts;
  for (int i = count(rng); i > 0; --i) opts.push_back(random_number_form(rng, depth - 1));
  const Dyadic cut = Dyadic(small(rng)).scaled(-exp(rng) - 1);
  std::vector<Game> l, r;
  for (const Game& o : opts) {
    const Dyadic v = number_value(o);
    if (v < cut) l.push_back(o);
    if (v > cut) r.push_back(o);
  }
  return Game::make(l, r);
}

Game random_two_sided_number(std::mt19937_64& rng, unsigned depth) {
  for (;;) {
    Game g = random_number_form(rng, depth);
    if (!g.left().empty() && !g.right().empty()) return g;
  }
}

}  // namespace ordsum::gen
