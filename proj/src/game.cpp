#include "ordsum/game.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "ordsum/detail/memo.hpp"
#include "ordsum/errors.hpp"

namespace ordsum {

namespace detail {

struct GameNode {
  std::uint32_t id;
  std::uint32_t depth;
  std::uint32_t left_count;
  std::vector<Game> options;  // left options then right options
};

}  // namespace detail

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
    std::size_t h = key.size();
    for (std::uint32_t v : key) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void sort_unique(std::vector<Game>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

struct GameStore::Impl {
  std::mutex mutex;
  std::deque<detail::GameNode> nodes;  // push_back keeps element addresses stable
  std::unordered_map<std::vector<std::uint32_t>, const detail::GameNode*, KeyHash> index;
  std::size_t budget = kDefaultBudget;
};

GameStore::GameStore() : impl_(new Impl), zero_(nullptr) {
  auto& node = impl_->nodes.emplace_back(detail::GameNode{0, 0, 0, {}});
  impl_->index.emplace(std::vector<std::uint32_t>{0}, &node);
  zero_ = &node;
}

GameStore& GameStore::instance() {
  static GameStore* store = new GameStore();  // never destroyed: nodes outlive static memo tables
  return *store;
}

Game GameStore::intern(std::vector<Game> left, std::vector<Game> right) {
  sort_unique(left);
  sort_unique(right);
  std::vector<std::uint32_t> key;
  key.reserve(1 + left.size() + right.size());
  key.push_back(static_cast<std::uint32_t>(left.size()));
  std::uint32_t depth = 0;
  for (const Game& g : left) {
    key.push_back(g.id());
    depth = std::max(depth, g.depth() + 1);
  }
  for (const Game& g : right) {
    key.push_back(g.id());
    depth = std::max(depth, g.depth() + 1);
  }

  std::lock_guard lock(impl_->mutex);
  if (auto it = impl_->index.find(key); it != impl_->index.end()) return Game(it->second);
  if (impl_->nodes.size() >= impl_->budget) {
    throw ResourceError("interned form budget of " + std::to_string(impl_->budget) + " exhausted");
  }
  const auto left_count = static_cast<std::uint32_t>(left.size());
  std::vector<Game> options = std::move(left);
  options.insert(options.end(), right.begin(), right.end());
  auto& node = impl_->nodes.emplace_back(
      detail::GameNode{static_cast<std::uint32_t>(impl_->nodes.size()), depth, left_count, std::move(options)});
  impl_->index.emplace(std::move(key), &node);
  return Game(&node);
}

std::size_t GameStore::size() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->nodes.size();
}

std::size_t GameStore::budget() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->budget;
}

void GameStore::set_budget(std::size_t budget) {
  std::lock_guard lock(impl_->mutex);
  impl_->budget = budget;
}

Game::Game() : node_(GameStore::instance().zero().node_) {}

Game Game::make(std::vector<Game> left, std::vector<Game> right) {
  return GameStore::instance().intern(std::move(left), std::move(right));
}

std::span<const Game> Game::left() const noexcept {
  return std::span<const Game>(node_->options.data(), node_->left_count);
}

std::span<const Game> Game::right() const noexcept {
  return std::span<const Game>(node_->options.data() + node_->left_count,
                               node_->options.size() - node_->left_count);
}

std::uint32_t Game::id() const noexcept { return node_->id; }
std::uint32_t Game::depth() const noexcept { return node_->depth; }

const char* to_string(Player p) { return p == Player::Left ? "Left" : "Right"; }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::LeftWins: return "LeftWins";
    case Outcome::RightWins: return "RightWins";
    case Outcome::FirstPlayerWins: return "FirstPlayerWins";
    case Outcome::SecondPlayerWins: return "SecondPlayerWins";
  }
  return "?";
}

const char* to_symbol(OrderRel r) {
  switch (r) {
    case OrderRel::Less: return "<";
    case OrderRel::Greater: return ">";
    case OrderRel::Equal: return "=";
    case OrderRel::Incomparable: return "||";
  }
  return "?";
}

namespace {

detail::Memo<std::uint32_t, Game>& negate_memo() {
  static auto* m = new detail::Memo<std::uint32_t, Game>;
  return *m;
}
detail::Memo<std::uint64_t, Game>& sum_memo() {
  static auto* m = new detail::Memo<std::uint64_t, Game>;
  return *m;
}
detail::Memo<std::uint64_t, Game>& ordinal_memo() {
  static auto* m = new detail::Memo<std::uint64_t, Game>;
  return *m;
}
detail::Memo<std::uint64_t, bool>& ge_memo() {
  static auto* m = new detail::Memo<std::uint64_t, bool>;
  return *m;
}
// bit 0: Left wins moving first, bit 1: Right wins moving first
detail::Memo<std::uint32_t, unsigned>& outcome_memo() {
  static auto* m = new detail::Memo<std::uint32_t, unsigned>;
  return *m;
}
detail::Memo<std::uint32_t, Game>& canonical_memo() {
  static auto* m = new detail::Memo<std::uint32_t, Game>;
  return *m;
}

template <class Fn>
std::vector<Game> map_options(std::span<const Game> opts, Fn&& fn) {
  std::vector<Game> out;
  out.reserve(opts.size());
  for (const Game& o : opts) out.push_back(fn(o));
  return out;
}

}  // namespace

Game negate(const Game& g) {
  if (g.is_zero()) return g;
  if (auto hit = negate_memo().find(g.id())) return *hit;
  Game r = Game::make(map_options(g.right(), [](const Game& o) { return negate(o); }),
                      map_options(g.left(), [](const Game& o) { return negate(o); }));
  negate_memo().insert(g.id(), r);
  negate_memo().insert(r.id(), g);
  return r;
}

Game disjunctive_sum(const Game& g, const Game& h) {
  if (g.is_zero()) return h;
  if (h.is_zero()) return g;
  // Commutative at the literal level, so key on the ordered pair.
  const auto key = g.id() < h.id() ? detail::pair_key(g.id(), h.id()) : detail::pair_key(h.id(), g.id());
  return sum_memo().get_or_compute(key, [&] {
    std::vector<Game> left, right;
    for (const Game& o : g.left()) left.push_back(disjunctive_sum(o, h));
    for (const Game& o : h.left()) left.push_back(disjunctive_sum(g, o));
    for (const Game& o : g.right()) right.push_back(disjunctive_sum(o, h));
    for (const Game& o : h.right()) right.push_back(disjunctive_sum(g, o));
    return Game::make(std::move(left), std::move(right));
  });
}

Game ordinal_sum(const Game& g, const Game& h) {
  if (h.is_zero()) return g;
  if (g.is_zero()) return h;
  return ordinal_memo().get_or_compute(detail::pair_key(g.id(), h.id()), [&] {
    std::vector<Game> left(g.left().begin(), g.left().end());
    std::vector<Game> right(g.right().begin(), g.right().end());
    for (const Game& o : h.left()) left.push_back(ordinal_sum(g, o));
    for (const Game& o : h.right()) right.push_back(ordinal_sum(g, o));
    return Game::make(std::move(left), std::move(right));
  });
}

bool ge(const Game& g, const Game& h) {
  if (g == h) return true;
  return ge_memo().get_or_compute(detail::pair_key(g.id(), h.id()), [&] {
    // g >= h unless some g^R <= h or some h^L >= g.
    for (const Game& gr : g.right()) {
      if (ge(h, gr)) return false;
    }
    for (const Game& hl : h.left()) {
      if (ge(hl, g)) return false;
    }
    return true;
  });
}

bool equal(const Game& g, const Game& h) { return ge(g, h) && ge(h, g); }

bool less(const Game& g, const Game& h) { return ge(h, g) && !ge(g, h); }

OrderRel compare(const Game& g, const Game& h) {
  const bool a = ge(g, h);
  const bool b = ge(h, g);
  if (a && b) return OrderRel::Equal;
  if (a) return OrderRel::Greater;
  if (b) return OrderRel::Less;
  return OrderRel::Incomparable;
}

namespace {

unsigned first_mover_wins(const Game& g) {
  if (auto hit = outcome_memo().find(g.id())) return *hit;
  unsigned bits = 0;
  // A player moving first wins iff some option leaves the opponent, now moving first, losing.
  for (const Game& o : g.left()) {
    if ((first_mover_wins(o) & 2u) == 0) {
      bits |= 1u;
      break;
    }
  }
  for (const Game& o : g.right()) {
    if ((first_mover_wins(o) & 1u) == 0) {
      bits |= 2u;
      break;
    }
  }
  return outcome_memo().insert(g.id(), bits);
}

}  // namespace

Outcome outcome(const Game& g) {
  const unsigned bits = first_mover_wins(g);
  const bool left_first = bits & 1u;
  const bool right_first = bits & 2u;
  if (left_first && right_first) return Outcome::FirstPlayerWins;
  if (left_first) return Outcome::LeftWins;
  if (right_first) return Outcome::RightWins;
  return Outcome::SecondPlayerWins;
}

namespace {

// Keeps options not dominated by another one. `better(x, y)` means x is at least as good as y
// for the owner of the list. Options here are canonical, so equal values are identical forms.
template <class Better>
std::vector<Game> undominated(std::vector<Game> opts, Better better) {
  std::vector<Game> kept;
  for (std::size_t i = 0; i < opts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < opts.size() && !dominated; ++j) {
      if (i != j && better(opts[j], opts[i])) dominated = true;
    }
    if (!dominated) kept.push_back(opts[i]);
  }
  return kept;
}

}  // namespace

Game canonicalize(const Game& g) {
  if (g.is_zero()) return g;
  if (auto hit = canonical_memo().find(g.id())) return *hit;

  std::vector<Game> left = map_options(g.left(), [](const Game& o) { return canonicalize(o); });
  std::vector<Game> right = map_options(g.right(), [](const Game& o) { return canonicalize(o); });
  Game current = Game::make(left, right);

  for (;;) {
    left = undominated(std::vector<Game>(current.left().begin(), current.left().end()),
                       [](const Game& a, const Game& b) { return ge(a, b); });
    right = undominated(std::vector<Game>(current.right().begin(), current.right().end()),
                        [](const Game& a, const Game& b) { return ge(b, a); });
    current = Game::make(left, right);

    // Bypass one reversible option at a time, then re-check domination.
    bool changed = false;
    for (std::size_t i = 0; i < left.size() && !changed; ++i) {
      for (const Game& lr : left[i].right()) {
        if (ge(current, lr)) {
          std::vector<Game> next(left.begin(), left.end());
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          next.insert(next.end(), lr.left().begin(), lr.left().end());
          current = Game::make(std::move(next), right);
          changed = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < right.size() && !changed; ++i) {
      for (const Game& rl : right[i].left()) {
        if (ge(rl, current)) {
          std::vector<Game> next(right.begin(), right.end());
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
          next.insert(next.end(), rl.right().begin(), rl.right().end());
          current = Game::make(left, std::move(next));
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }

  canonical_memo().insert(g.id(), current);
  canonical_memo().insert(current.id(), current);
  return current;
}

bool has_reversible_option(const Game& g) {
  for (const Game& l : g.left()) {
    for (const Game& lr : l.right()) {
      if (ge(g, lr)) return true;
    }
  }
  for (const Game& r : g.right()) {
    for (const Game& rl : r.left()) {
      if (ge(rl, g)) return true;
    }
  }
  return false;
}

std::string raw_string(const Game& g) {
  std::string out = "{";
  bool first = true;
  for (const Game& o : g.left()) {
    if (!first) out += ",";
    out += raw_string(o);
    first = false;
  }
  out += "|";
  first = true;
  for (const Game& o : g.right()) {
    if (!first) out += ",";
    out += raw_string(o);
    first = false;
  }
  return out + "}";
}

}  // namespace ordsum
