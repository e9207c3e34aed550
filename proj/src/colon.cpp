#include "ordsum/colon.hpp"

#include "ordsum/detail/memo.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"

namespace ordsum {

namespace {

Dyadic inv_pow2(std::uint64_t k) { return Dyadic::pow2(-static_cast<long long>(k)); }

void require_number(const Game& g, const char* what) {
  if (!is_number(g)) throw DomainError(std::string(what) + " " + raw_string(g) + " is not a number");
}

// Distance from G to its best option on the side matching `sign`.
Dyadic side_gap(const Game& base, const Dyadic& value, int sign) {
  const OptionBounds b = option_bounds(base);
  if (sign > 0) {
    if (!b.right) throw PreconditionGap("base has no Right option");
    const Dyadic gap = *b.right - value;
    if (gap > Dyadic(1)) throw PreconditionGap("b - G = " + gap.to_string() + " exceeds 1");
    return gap;
  }
  if (!b.left) throw PreconditionGap("base has no Left option");
  const Dyadic gap = value - *b.left;
  if (gap > Dyadic(1)) throw PreconditionGap("G - a = " + gap.to_string() + " exceeds 1");
  return gap;
}

struct Split {
  std::uint32_t whole;
  BigInt odd;  // 0 when the number is an integer
  std::uint32_t exponent;
};

// y >= 0 as whole + odd/2^exponent.
Split split(const Dyadic& y) {
  const BigInt whole = y.floor();
  const Dyadic frac = y - Dyadic(whole, 0);
  if (whole > 1'000'000) throw ResourceError("integer part " + whole.str() + " too large");
  return Split{static_cast<std::uint32_t>(whole), frac.numerator(), frac.exponent()};
}

}  // namespace

Dyadic AlphaSequence::total() const {
  Dyadic s;
  for (std::uint32_t t : terms) s += inv_pow2(t);
  return s;
}

AlphaSequence greedy_alphas(const Dyadic& gap, std::uint32_t count) {
  if (gap.sign() <= 0 || gap > Dyadic(1)) {
    throw DomainError("greedy_alphas needs 0 < gap <= 1, got " + gap.to_string());
  }
  AlphaSequence seq{gap, {}};
  Dyadic remaining = gap;
  std::uint32_t alpha = 1;
  for (std::uint32_t i = 0; i < count; ++i) {
    // alpha never decreases: the remainder shrinks.
    while (inv_pow2(alpha) >= remaining) ++alpha;
    seq.terms.push_back(alpha);
    remaining -= inv_pow2(alpha);
  }
  return seq;
}

Dyadic colon_one(const Game& base, int sign) {
  return colon_integer(base, sign > 0 ? 1 : -1);
}

Dyadic colon_integer(const Game& base, long long k) {
  if (k == 0) throw DomainError("colon_integer needs a nonzero subordinate");
  require_number(base, "base");
  const Dyadic value = number_value(base);
  const int sign = k > 0 ? 1 : -1;
  const Dyadic gap = side_gap(base, value, sign);
  const Dyadic offset = greedy_alphas(gap, static_cast<std::uint32_t>(k > 0 ? k : -k)).total();
  return sign > 0 ? value + offset : value - offset;
}

Dyadic balanced_colon_number(const Dyadic& n, std::uint32_t p, std::uint32_t m, const BigInt& a, std::uint32_t q) {
  if (a < 0 || (a != 0 && (a % 2 == 0 || a >= (BigInt(1) << q)))) {
    throw DomainError("balanced_colon_number needs a = 0 or odd 0 < a < 2^q");
  }
  if (m == 0 && a == 0) throw DomainError("balanced_colon_number needs m + a/2^q > 0");
  const Ball base = Ball::make(n, -inv_pow2(p));
  if (!is_balanced(base)) throw DomainError("base " + base.to_string() + " is not balanced");
  return n + inv_pow2(p) - inv_pow2(std::uint64_t{p} + m) +
         Dyadic(a, 0).scaled(-static_cast<long long>(std::uint64_t{p} + m + q + 1));
}

Dyadic balanced_colon(const Ball& base, const Dyadic& subordinate) {
  const Dyadic magnitude = -base.radius;
  if (magnitude.numerator() != 1) {
    throw DomainError("balanced_colon needs radius -1/2^p, got " + base.radius.to_string());
  }
  if (subordinate.is_zero()) {
    if (!is_balanced(base)) throw DomainError("base " + base.to_string() + " is not balanced");
    return base.midpoint;
  }
  if (subordinate.sign() < 0) {
    return -balanced_colon(Ball::make(-base.midpoint, base.radius), -subordinate);
  }
  const Split s = split(subordinate);
  return balanced_colon_number(base.midpoint, magnitude.exponent(), s.whole, s.odd, s.exponent);
}

Dyadic canonical_base_colon(const Dyadic& x, const Dyadic& y) {
  if (x.is_zero()) throw DomainError("canonical_base_colon needs a nonzero base");
  if (x.sign() < 0) return -canonical_base_colon(-x, -y);

  const BigInt n_big = x.floor();
  const Dyadic n(n_big, 0);
  const bool negative_sub = y.sign() < 0;
  const Split s = split(negative_sub ? -y : y);
  const Dyadic b(s.odd, 0);
  const std::uint64_t m = s.whole;
  const std::uint64_t q = s.exponent;

  if (x.is_integer()) {
    if (!negative_sub) return n + y;
    return n - 1 + inv_pow2(m) - b.scaled(-static_cast<long long>(m + q + 1));
  }
  const Dyadic frac = x - n;
  const Dyadic a(frac.numerator(), 0);
  const std::uint64_t p = frac.exponent();
  if (!negative_sub) {
    return n + (a + 1).scaled(-static_cast<long long>(p)) - inv_pow2(p + m) +
           b.scaled(-static_cast<long long>(p + m + q + 1));
  }
  return n + (a - 1).scaled(-static_cast<long long>(p)) + inv_pow2(p + m) -
         b.scaled(-static_cast<long long>(p + m + q + 1));
}

namespace {

detail::Memo<std::uint64_t, Dyadic>& recursive_memo() {
  static auto* m = new detail::Memo<std::uint64_t, Dyadic>;
  return *m;
}

Dyadic recursive_value(const Game& g, const OptionBounds& base_bounds, const Game& h) {
  if (h.is_zero()) return number_value(g);
  return recursive_memo().get_or_compute(detail::pair_key(g.id(), h.id()), [&] {
    std::optional<Dyadic> lo = base_bounds.left;
    std::optional<Dyadic> hi = base_bounds.right;
    for (const Game& hl : h.left()) {
      Dyadic v = recursive_value(g, base_bounds, hl);
      if (!lo || v > *lo) lo = std::move(v);
    }
    for (const Game& hr : h.right()) {
      Dyadic v = recursive_value(g, base_bounds, hr);
      if (!hi || v < *hi) hi = std::move(v);
    }
    return simplest_between(lo, hi);
  });
}

}  // namespace

Dyadic colon_value_recursive(const Game& g, const Game& h) {
  require_number(g, "base");
  require_number(h, "subordinate");
  return recursive_value(g, option_bounds(g), h);
}

Dyadic colon_value(const Game& g, const Game& h) {
  require_number(g, "base");
  require_number(h, "subordinate");
  const Dyadic y = number_value(h);
  // Colon Principle: only the subordinate's value matters.
  if (y.is_zero()) return number_value(g);
  if (g.is_zero()) return y;

  if (y.is_integer()) {
    try {
      return colon_integer(g, y.to_int());
    } catch (const PreconditionGap&) {
      // fall through to the remaining routes
    }
  }
  if (!g.left().empty() && !g.right().empty()) {
    const Ball ball = reduce_to_ball(g);
    if ((-ball.radius).numerator() == 1 && is_balanced(ball)) return balanced_colon(ball, y);
  }
  if (is_canonical_number(g)) return canonical_base_colon(number_value(g), y);
  return colon_value_recursive(g, canonical_form(y));
}

}  // namespace ordsum
