#include "ordsum/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ordsum/colon.hpp"
#include "ordsum/equivdom.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/gen.hpp"
#include "ordsum/numbers.hpp"
#include "ordsum/parser.hpp"
#include "ordsum/towers.hpp"

namespace ordsum::verify {
namespace {

using towers::Position;
using towers::Story;
using towers::Tower;

Game num(const Dyadic& x) { return canonical_form(x); }
Dyadic pow2(long long k) { return Dyadic::pow2(k); }

std::string show(const Game& g) { return print_form(g); }
std::string show_bool(bool b) { return b ? "true" : "false"; }

class Recorder {
 public:
  explicit Recorder(Report& r) : r_(r) {}

  void check(bool ok, const std::string& input, const std::string& expected, const std::string& actual) {
    ++r_.cases;
    if (!ok) r_.failures.push_back({input, expected, actual});
  }

  void same(const Dyadic& expected, const Dyadic& actual, const std::string& input) {
    check(expected == actual, input, expected.to_string(), actual.to_string());
  }

  // The oracle: canonicalize the literal form and match it against the
  // canonical form of the claimed value.
  void oracle(const Game& literal, const Dyadic& claimed, const std::string& input) {
    const Game c = canonicalize(literal);
    if (c == num(claimed)) {
      ++r_.cases;
      return;
    }
    check(false, input, claimed.to_string(), is_number(c) ? number_value(c).to_string() : print_game(c));
  }

  // Runs one case body; an exception counts as a failure of that case.
  void guard(const std::string& input, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, input, "no error", std::string("error: ") + e.what());
    }
  }

 private:
  Report& r_;
};

std::vector<Dyadic> dyadic_grid(long long lo_num, long long hi_num, std::uint32_t exp) {
  std::vector<Dyadic> out;
  for (long long j = lo_num; j <= hi_num; ++j) out.emplace_back(BigInt(j), exp);
  return out;
}

// Balanced balls <n; -1/2^p> for n = a/2^e with |n| <= 2, e, p <= 3.
std::vector<Ball> balanced_grid() {
  std::vector<Ball> out;
  for (const Dyadic& m : dyadic_grid(-16, 16, 3)) {
    for (std::uint32_t p = 0; p <= 3; ++p) {
      const Ball b = Ball::make(m, -pow2(-static_cast<long long>(p)));
      if (is_balanced(b)) out.push_back(b);
    }
  }
  return out;
}

// ---------------------------------------------------------------- fixtures

void suite_fixtures(Recorder& rec, const Options&) {
  const auto expr_value = [&](const std::string& text, const Dyadic& v) {
    rec.guard(text, [&] {
      const Game g = lower(*parse_expr(text));
      rec.same(v, number_value(g), text);
      rec.oracle(g, v, text);
    });
  };
  expr_value("{0|}", Dyadic(1));
  expr_value("{0|1}", Dyadic::parse("1/2"));
  for (const char* form : {"{1|3,4}", "{1|5}", "{1|3}", "{1|}"}) expr_value(form, Dyadic(2));

  rec.guard("{-1/2|1}:{-1|1/2}", [&] {
    const ExprPtr e = parse_expr("{-1/2|1}:{-1|1/2}");
    rec.same(Dyadic(0), colon_value(lower(*e->lhs), lower(*e->rhs)), "colon_value {-1/2|1}:{-1|1/2}");
    rec.oracle(lower(*e), Dyadic(0), "{-1/2|1}:{-1|1/2}");
    const Ball b = reduce_to_ball(lower(*e));
    rec.check(b == Ball::make(Dyadic(0), Dyadic::parse("-1/4")), "reduce_to_ball {-1/2|1}:{-1|1/2}", "<0; -1/4>",
              b.to_string());
    rec.check(is_balanced(b), "is_balanced <0; -1/4>", "true", show_bool(is_balanced(b)));
  });

  rec.guard("{0|4}:1", [&] {
    const Game base = Game::make({num(0)}, {num(4)});
    bool gap = false;
    try {
      colon_one(base, 1);
    } catch (const PreconditionGap&) {
      gap = true;
    }
    rec.check(gap, "colon_one {0|4}:1", "PreconditionGap", gap ? "PreconditionGap" : "value");
    rec.same(Dyadic(2), colon_value(base, num(1)), "colon_value {0|4}:1");
    rec.oracle(ordinal_sum(base, num(1)), Dyadic(2), "{0|4}:1");
  });

  rec.guard("T[1/1;1/1;1/1;1/0]", [&] {
    const Tower t = towers::parse_position("T[1/1;1/1;1/1;1/0]").towers.at(0);
    rec.same(Dyadic::parse("1/8"), towers::tower_value(t), "tower_value T[1/1;1/1;1/1;1/0]");
    rec.oracle(towers::tower_form(t), Dyadic::parse("1/8"), "T[1/1;1/1;1/1;1/0]");
  });
  rec.guard("build_canonical_tower 13/16", [&] {
    const Dyadic x = Dyadic::parse("13/16");
    const Tower t = towers::build_canonical_tower(x);
    const Position round = towers::parse_position(towers::to_string(t));
    rec.same(x, towers::position_value(round), "tower_value " + towers::to_string(t));
    rec.oracle(towers::tower_form(t), x, towers::to_string(t));
  });

  // 1/2^p : 1/2^q over the balanced ball of 1/2^p (for p = 0 that is {0|2}).
  for (std::uint32_t p = 0; p <= 4; ++p) {
    for (std::uint32_t q = 0; q <= 4; ++q) {
      const Ball base = Ball::make(pow2(-long(p)), -pow2(-long(p)));
      const Dyadic y = pow2(-long(q));
      const Dyadic want = pow2(-long(p)) + pow2(-long(p + q + 1));
      const std::string input = base.to_string() + ":" + y.to_string();
      rec.guard(input, [&] {
        rec.same(want, colon_value(base.literal_form(), num(y)), "colon_value " + input);
        rec.oracle(ordinal_sum(base.literal_form(), num(y)), want, input);
      });
    }
  }
  // a/2^p : (1 - 1/2^q) over canonical bases.
  for (std::uint32_t p = 1; p <= 4; ++p) {
    for (long long a = 1; a < (1LL << p); a += 2) {
      for (std::uint32_t q = 1; q <= 4; ++q) {
        const Dyadic x(BigInt(a), p);
        const Dyadic y = Dyadic(1) - pow2(-long(q));
        const Dyadic want = x + pow2(-long(p + 1)) - pow2(-long(p + q + 1));
        const std::string input = x.to_string() + ":" + y.to_string();
        rec.guard(input, [&] {
          rec.same(want, canonical_base_colon(x, y), "canonical_base_colon " + input);
          rec.same(want, colon_value(num(x), num(y)), "colon_value " + input);
          rec.oracle(ordinal_sum(num(x), num(y)), want, input);
        });
      }
    }
  }
}

// ---------------------------------------------------------------- thm42

void suite_thm42(Recorder& rec, const Options&) {
  const auto grid = dyadic_grid(-80, 80, 4);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const Dyadic& a = grid[i];
      const Dyadic& b = grid[j];
      const Dyadic g = simplest_between(a, b);
      if (g.abs() > Dyadic(4)) continue;
      const Game base = Game::make({num(a)}, {num(b)});
      for (long long k = -5; k <= 5; ++k) {
        if (k == 0) continue;
        const Dyadic gap = k > 0 ? b - g : g - a;
        if (gap > Dyadic(1)) continue;
        const std::string input = "{" + a.to_string() + "|" + b.to_string() + "}:" + std::to_string(k);
        rec.guard(input, [&] { rec.oracle(ordinal_sum(base, num(Dyadic(k))), colon_integer(base, k), input); });
      }
    }
  }
}

// ---------------------------------------------------------------- thm45

void suite_thm45(Recorder& rec, const Options&) {
  std::vector<Dyadic> mids;
  for (const char* n : {"0", "1/2", "-1/2", "3/4", "-3/4", "1"}) mids.push_back(Dyadic::parse(n));
  for (const Dyadic& n : mids) {
    for (std::uint32_t p = 0; p <= 3; ++p) {
      const Ball ball = Ball::make(n, -pow2(-long(p)));
      if (!is_balanced(ball)) continue;
      const Game base = ball.literal_form();
      for (std::uint32_t m = 0; m <= 2; ++m) {
        for (std::uint32_t q = 0; q <= 3; ++q) {
          std::vector<long long> as;
          if (q == 0) as.push_back(0);
          for (long long a = 1; a < (1LL << q); a += 2) as.push_back(a);
          for (long long a : as) {
            if (m == 0 && a == 0) continue;
            const Dyadic y = Dyadic(static_cast<long long>(m)) + Dyadic(BigInt(a), q);
            const std::string input = ball.to_string() + ":" + y.to_string();
            rec.guard(input, [&] {
              const Dyadic claimed = balanced_colon_number(n, p, m, BigInt(a), q);
              rec.oracle(ordinal_sum(base, num(y)), claimed, input);
              rec.same(claimed, colon_value(base, num(y)), "colon_value " + input);
            });
            const std::string mirrored = ball.to_string() + ":" + (-y).to_string();
            rec.guard(mirrored, [&] { rec.oracle(ordinal_sum(base, num(-y)), balanced_colon(ball, -y), mirrored); });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------- table3

void suite_table3(Recorder& rec, const Options&) {
  std::vector<Dyadic> xs, ys;
  for (long long n = 0; n <= 3; ++n) {
    if (n > 0) xs.emplace_back(n);
    for (std::uint32_t p = 1; p <= 4; ++p) {
      for (long long a = 1; a < (1LL << p); a += 2) xs.push_back(Dyadic(n) + Dyadic(BigInt(a), p));
    }
  }
  for (long long m = 0; m <= 3; ++m) {
    if (m > 0) ys.emplace_back(m);
    for (std::uint32_t q = 1; q <= 4; ++q) {
      for (long long b = 1; b < (1LL << q); b += 2) ys.push_back(Dyadic(m) + Dyadic(BigInt(b), q));
    }
  }
  for (const Dyadic& x0 : xs) {
    for (const Dyadic& x : {x0, -x0}) {
      for (const Dyadic& y0 : ys) {
        for (const Dyadic& y : {y0, -y0}) {
          const std::string input = x.to_string() + ":" + y.to_string();
          rec.guard(input, [&] { rec.oracle(ordinal_sum(num(x), num(y)), canonical_base_colon(x, y), input); });
        }
      }
    }
  }
}

// ---------------------------------------------------------------- towers

// Left and right option ids of the literal form vs. the positions reached by moves.
bool move_graph_matches(const Position& pos) {
  const Game g = towers::position_form(pos);
  for (Player player : {Player::Left, Player::Right}) {
    std::set<std::uint32_t> via_moves, literal;
    for (const auto& mv : towers::legal_moves(pos, player)) {
      via_moves.insert(towers::position_form(towers::apply_move(pos, mv)).id());
    }
    for (const Game& o : player == Player::Left ? g.left() : g.right()) literal.insert(o.id());
    if (via_moves != literal) return false;
  }
  return true;
}

Dyadic stalk_value(const std::vector<int>& edges) {
  Dyadic v;
  std::size_t i = 0;
  while (i < edges.size() && edges[i] == edges[0]) v += edges[i++];
  for (long long k = 1; i < edges.size(); ++i, ++k) v += Dyadic(edges[i]).scaled(-k);
  return v;
}

void suite_towers(Recorder& rec, const Options&) {
  std::vector<Story> stories;
  for (std::uint32_t b = 0; b <= 3; ++b) {
    for (std::uint32_t r = 0; r <= 3; ++r) {
      if (b + r > 0) stories.push_back({b, r});
    }
  }
  std::vector<std::vector<Story>> shapes;
  for (const Story& s1 : stories) {
    shapes.push_back({s1});
    for (const Story& s2 : stories) {
      shapes.push_back({s1, s2});
      for (const Story& s3 : stories) shapes.push_back({s1, s2, s3});
    }
  }
  for (const auto& shape : shapes) {
    const Tower t(shape);
    const std::string input = towers::to_string(t);
    rec.guard(input, [&] {
      const Dyadic v = towers::tower_value(t);
      rec.oracle(towers::tower_form(t), v, input);
      rec.check(move_graph_matches(Position{{t}}), "move graph " + input, "isomorphic", "differs");
      bool all_zero = true, mono = true;
      std::vector<int> edges;
      for (const Story& s : shape) {
        all_zero = all_zero && s.blue == s.red;
        mono = mono && (s.blue == 0 || s.red == 0);
        for (std::uint32_t c = 0; c < s.blue; ++c) edges.push_back(1);
        for (std::uint32_t c = 0; c < s.red; ++c) edges.push_back(-1);
      }
      rec.check(v.is_zero() == all_zero, "zero tower " + input, show_bool(all_zero), show_bool(v.is_zero()));
      if (mono) rec.same(stalk_value(edges), v, "stalk " + input);
    });
  }
  for (std::uint32_t b = 0; b <= 5; ++b) {
    for (std::uint32_t r = 0; r <= 5; ++r) {
      const Story s{b, r};
      const std::string input = "story_reduce " + std::to_string(b) + "/" + std::to_string(r);
      rec.guard(input, [&] {
        const bool ok = equiv_mod_domination(towers::story_reduce(s), towers::story_form(s));
        rec.check(ok, input, "equivalent mod domination", show(towers::story_reduce(s)));
      });
    }
  }
  rec.guard("mixed three-tower position", [&] {
    const Position pos = towers::parse_position("T[1/2; 2/2] + T[2/2; 3/2; 0/1] + T[5/3]");
    rec.oracle(towers::position_form(pos), towers::position_value(pos), towers::to_string(pos));
    rec.check(move_graph_matches(pos), "move graph mixed position", "isomorphic", "differs");
  });
  rec.guard("one-eighth tower", [&] {
    const Tower left = towers::build_leaning_tower(Dyadic::parse("1/8"));
    rec.check(towers::to_string(left) == "T[1/1; 1/1; 1/1; 1/0]", "build_leaning_tower 1/8", "T[1/1; 1/1; 1/1; 1/0]",
              towers::to_string(left));
    rec.same(Dyadic::parse("1/8"), towers::tower_value(left), "tower_value one-eighth tower");
    const Tower right = towers::build_canonical_tower(Dyadic::parse("13/16"));
    rec.same(Dyadic::parse("13/16"), towers::tower_value(right), "tower_value " + towers::to_string(right));
    rec.oracle(towers::tower_form(right), Dyadic::parse("13/16"), towers::to_string(right));
  });
}

// ---------------------------------------------------------------- leaning

void suite_leaning(Recorder& rec, const Options&) {
  for (long long a = 0; a <= 128; ++a) {
    const Dyadic x(BigInt(a), 5);
    const std::string input = x.to_string();
    rec.guard("build_leaning_tower " + input, [&] {
      const Tower t = towers::build_leaning_tower(x);
      rec.same(x, towers::tower_value(t), "tower_value " + towers::to_string(t));
      rec.oracle(towers::tower_form(t), x, towers::to_string(t));
      bool leaning = true;
      for (const Story& s : t.stories()) leaning = leaning && s.blue >= s.red;
      rec.check(leaning, "blue >= red " + towers::to_string(t), "true", "false");
    });
    if (x.is_integer()) continue;
    rec.guard("build_canonical_tower " + input, [&] {
      const Tower t = towers::build_canonical_tower(x);
      const auto& st = t.stories();
      bool alphabet = true;
      for (std::size_t i = 0; i < st.size(); ++i) {
        const bool unit = st[i] == Story{1, 1} || st[i] == Story{1, 0};
        const bool bottom_bar = i == 0 && st[i].red == 1 && st[i].blue >= 2;
        alphabet = alphabet && (unit || bottom_bar);
      }
      rec.check(alphabet, "story alphabet " + towers::to_string(t), "(1,1), (1,0), bottom (k+1,1)", "other stories");
      rec.check(equiv_mod_domination(towers::tower_form(t), num(x)), "canonical tower " + towers::to_string(t),
                "equivalent mod domination to " + input, "not equivalent");
      rec.same(x, towers::tower_value(t), "tower_value " + towers::to_string(t));
    });
  }
}

// ---------------------------------------------------------------- equivdom

void suite_equivdom(Recorder& rec, const Options& opts) {
  std::mt19937_64 rng(opts.seed);
  const std::size_t n = opts.property_cases;

  rec.check(!equiv_mod_domination(lower(*parse_expr("{-1|1}")), Game()), "{-1|1} vs 0", "not equivalent",
            "equivalent");
  rec.check(!equiv_mod_domination(lower(*parse_expr("{0|3}")), lower(*parse_expr("{1/2|3}"))), "{0|3} vs {1/2|3}",
            "not equivalent", "equivalent");
  rec.check(equiv_mod_domination(lower(*parse_expr("{0|3}:1")), lower(*parse_expr("{1|3}"))), "{0|3}:1 vs {1|3}",
            "equivalent", "not equivalent");

  for (std::size_t i = 0; i < n; ++i) {
    // Equivalence refines equality, on pairs that are often equivalent.
    const Game g = gen::random_form(rng, 3);
    const Game h = rng() % 2 ? remove_dominated(g) : gen::random_form(rng, 3);
    const std::string input = show(g) + " vs " + show(h);
    rec.guard(input, [&] {
      const bool eq = equiv_mod_domination(g, h);
      rec.check(!eq || equal(g, h), "equiv implies equal " + input, "equal", "not equal");
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Game g = gen::random_form(rng, 3);
    const std::string input = show(g);
    rec.guard(input, [&] {
      rec.check(equiv_mod_domination(remove_dominated(g), g), "remove_dominated " + input, "equivalent",
                show(remove_dominated(g)));
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Substitution: replace either summand by an equivalent form.
    const Game g = gen::random_number_form(rng, 3);
    const Game h = remove_dominated(g);
    const Game k = gen::random_form(rng, 2);
    const std::string input = show(g) + " ~ " + show(h) + " with " + show(k);
    rec.guard(input, [&] {
      rec.check(equiv_mod_domination(ordinal_sum(g, k), ordinal_sum(h, k)), "G:K vs H:K " + input, "equivalent",
                "not equivalent");
      rec.check(equiv_mod_domination(ordinal_sum(k, g), ordinal_sum(k, h)), "K:G vs K:H " + input, "equivalent",
                "not equivalent");
    });
  }
  std::size_t mckay = 0;
  for (std::size_t tries = 0; mckay < n && tries < 50 * n; ++tries) {
    // Reversible-free number bases can be swapped for their canonical form.
    const Game g = gen::random_number_form(rng, 3);
    if (has_reversible_option(g)) continue;
    ++mckay;
    const Game h = gen::random_form(rng, 2);
    const std::string input = show(g) + ":" + show(h);
    rec.guard(input, [&] {
      rec.check(equal(ordinal_sum(g, h), ordinal_sum(canonicalize(g), h)), "McKay " + input, "equal", "not equal");
    });
  }
  rec.check(mckay == n, "reversible-free samples", std::to_string(n), std::to_string(mckay));
}

// ---------------------------------------------------------------- colon

void suite_colon(Recorder& rec, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 1);
  const std::size_t n = opts.property_cases;

  for (std::size_t i = 0; i < n; ++i) {
    Game g = gen::random_number_form(rng, 2);
    Game h = gen::random_number_form(rng, 2);
    if (less(h, g)) std::swap(g, h);
    const Game k = gen::random_form(rng, 2);
    const std::string input = show(k) + ":" + show(g) + " vs " + show(k) + ":" + show(h);
    rec.guard(input, [&] {
      rec.check(ge(ordinal_sum(k, h), ordinal_sum(k, g)), "Colon Principle " + input, "<=",
                to_symbol(compare(ordinal_sum(k, g), ordinal_sum(k, h))));
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    // Base Left options are strictly dominated once the subordinate has a Left option.
    const Game g = gen::random_number_form(rng, 3);
    Game h = gen::random_form(rng, 2);
    if (h.left().empty()) h = Game::make({Game()}, std::vector<Game>(h.right().begin(), h.right().end()));
    const std::string input = show(g) + ":" + show(h);
    rec.guard(input, [&] {
      bool ok = true;
      for (const Game& gl : g.left()) {
        for (const Game& hl : h.left()) ok = ok && less(gl, ordinal_sum(g, hl));
      }
      rec.check(ok, "strict domination " + input, "every G^L < G:H^L", "violated");
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Game g = gen::random_number_form(rng, 3);
    const std::string input = show(g);
    rec.guard(input, [&] {
      const Game up = Game::make({g}, std::vector<Game>(g.right().begin(), g.right().end()));
      const Game down = Game::make(std::vector<Game>(g.left().begin(), g.left().end()), {g});
      rec.check(equiv_mod_domination(ordinal_sum(g, num(1)), up), input + ":1", "equivalent to {G|R(G)}",
                "not equivalent");
      rec.check(equiv_mod_domination(ordinal_sum(g, num(-1)), down), input + ":-1", "equivalent to {L(G)|G}",
                "not equivalent");
    });
  }
  {
    std::vector<Game> numbers;
    for (const Game& g : gen::forms_to_day2()) {
      if (is_number(g)) numbers.push_back(g);
    }
    while (numbers.size() < 60) numbers.push_back(gen::random_number_form(rng, 2));
    for (const Game& g : numbers) {
      for (const Game& h : numbers) {
        const std::string input = show(g) + ":" + show(h);
        rec.guard(input, [&] {
          const bool zero = equal(ordinal_sum(g, h), Game());
          const bool parts = equal(g, Game()) && equal(h, Game());
          rec.check(zero == parts, "zero sum " + input, show_bool(parts), show_bool(zero));
        });
      }
    }
  }
  for (const Ball& ball : balanced_grid()) {
    const long long p = ball.radius.exponent();
    for (long long m = 0; m <= 3; ++m) {
      const std::string input = ball.to_string() + ":" + std::to_string(m);
      rec.guard(input, [&] {
        const Dyadic r = pow2(-(p + m));
        const Ball want = Ball::make(ball.midpoint + pow2(-p) - r, -r);
        rec.check(equiv_mod_domination(ordinal_sum(ball.literal_form(), num(Dyadic(m))), want.literal_form()), input,
                  want.to_string(), "not equivalent");
      });
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Game g = gen::random_number_form(rng, 3);
    const Game h = gen::random_number_form(rng, 2);
    const std::string input = show(g) + ":" + show(h);
    rec.guard(input, [&] {
      const Dyadic fast = colon_value(g, h);
      rec.same(colon_value_recursive(g, h), fast, "dispatcher vs recursion " + input);
      rec.oracle(ordinal_sum(g, h), fast, input);
    });
  }
}

// ---------------------------------------------------------------- balls

void suite_balls(Recorder& rec, const Options& opts) {
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_int_distribution<long long> mid(-32, 32), rad(1, 40);
  std::uniform_int_distribution<std::uint32_t> exp(0, 4);
  const std::size_t n = opts.property_cases;

  for (std::size_t i = 0; i < n; ++i) {
    const Dyadic m(BigInt(mid(rng)), exp(rng));
    const Ball b = Ball::make(m, -Dyadic(BigInt(rad(rng)), exp(rng) + 1));
    const std::string input = b.to_string();
    rec.guard(input, [&] {
      const bool balanced = is_balanced(b);
      const Dyadic v = number_value(canonicalize(b.literal_form()));
      rec.check(!balanced || v == m, "balanced value " + input, m.to_string(), v.to_string());
      if (balanced && !m.is_zero()) {
        const Dyadic bound = pow2(-static_cast<long long>(m.exponent()));
        rec.check(b.radius >= -bound, "radius bound " + input, ">= " + (-bound).to_string(), b.radius.to_string());
      }
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Game g = gen::random_two_sided_number(rng, 3);
    const std::string input = show(g);
    rec.guard(input, [&] {
      const Ball b = reduce_to_ball(g);
      rec.check(equiv_mod_domination(g, b.literal_form()), "reduce_to_ball " + input, b.to_string(),
                "not equivalent");
    });
  }
  const Game zero_bar = Game::make({num(-1)}, {num(1)});
  for (const Ball& ball : balanced_grid()) {
    const std::string input = ball.to_string() + ":{-1|1}";
    rec.guard(input, [&] {
      const Ball half = Ball::make(ball.midpoint, ball.radius.half());
      rec.check(equiv_mod_domination(ordinal_sum(ball.literal_form(), zero_bar), half.literal_form()), input,
                half.to_string(), "not equivalent");
      rec.check(is_balanced(half), "balanced " + half.to_string(), "true", "false");
    });
  }
}

using SuiteFn = void (*)(Recorder&, const Options&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"fixtures", suite_fixtures}, {"thm42", suite_thm42},     {"thm45", suite_thm45},
      {"table3", suite_table3},     {"towers", suite_towers},   {"leaning", suite_leaning},
      {"equivdom", suite_equivdom}, {"colon", suite_colon},     {"balls", suite_balls},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fixtures", "thm42",    "thm45", "table3", "towers",
                                              "leaning",  "equivdom", "colon", "balls"};
  return names;
}

Report run_suite(std::string_view name, const Options& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  Report report;
  report.suite = std::string(name);
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  it->second(rec, opts);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> run_suites(const std::vector<std::string>& names, const Options& opts) {
  for (const std::string& name : names) {
    if (!registry().contains(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  }
  std::vector<std::future<Report>> jobs;
  for (const std::string& name : names) {
    jobs.push_back(std::async(std::launch::async, [name, opts] { return run_suite(name, opts); }));
  }
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace ordsum::verify
