#pragma once

#include <cstdint>
#include <vector>

#include "ordsum/dyadic.hpp"
#include "ordsum/equivdom.hpp"
#include "ordsum/game.hpp"

// Values of ordinal sums G:H of numbers. Closed forms apply when the base has a
// suitable literal shape; colon_value() picks one and otherwise recurses exactly.
namespace ordsum {

// Greedy dyadic digits of a gap: each term is the least positive integer t with
// 2^-t strictly below what remains of the gap.
struct AlphaSequence {
  Dyadic gap;
  std::vector<std::uint32_t> terms;

  // Sum of 2^-t over the terms.
  Dyadic total() const;
};

// Requires 0 < gap <= 1; throws DomainError otherwise.
AlphaSequence greedy_alphas(const Dyadic& gap, std::uint32_t count);

// G:1 = G + 2^-p (sign > 0) or G:-1 = G - 2^-q (sign < 0) for a number form G whose
// relevant best option lies within distance 1 of G. Throws PreconditionGap when the
// option is missing or farther away; DomainError when base is not a number.
Dyadic colon_one(const Game& base, int sign);

// G:k = G +/- sum of 2^-alpha_i over the greedy sequence of the matching gap.
Dyadic colon_integer(const Game& base, long long k);

// Value of <n; -1/2^p> : (m + a/2^q) for a balanced base:
//   n + 1/2^p - 1/2^(p+m) + a/2^(p+m+q+1).
// Requires a == 0 or a odd with a < 2^q, and m + a/2^q > 0.
Dyadic balanced_colon_number(const Dyadic& n, std::uint32_t p, std::uint32_t m, const BigInt& a, std::uint32_t q);

// Any number subordinate over a balanced ball with radius -1/2^p. Negative subordinates
// go through -(G:H) = (-G):(-H).
Dyadic balanced_colon(const Ball& base, const Dyadic& subordinate);

// x:y where the base is the canonical form of x != 0 and y is any number.
Dyadic canonical_base_colon(const Dyadic& x, const Dyadic& y);

// Exact value of g:h by the simplicity rule over <L(g), g:L(h) | R(g), g:R(h)>.
Dyadic colon_value_recursive(const Game& g, const Game& h);

// Exact value of g:h for number forms, preferring closed forms.
Dyadic colon_value(const Game& g, const Game& h);

}  // namespace ordsum
