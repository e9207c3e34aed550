#pragma once

#include <optional>

#include "ordsum/dyadic.hpp"
#include "ordsum/game.hpp"

namespace ordsum {

// Hereditary number test: every subposition has all Left options < all Right options.
bool is_number(const Game& g);

// Value of a number form via the simplicity rule applied bottom-up.
// Throws DomainError if g is not a number.
Dyadic number_value(const Game& g);

// Canonical form of x: integer chains {n-1|} (mirrored below zero), and
// <x - 2^-p | x + 2^-p> for x = a/2^p with a odd.
Game canonical_form(const Dyadic& x);

// True when g is literally the canonical form of a number.
bool is_canonical_number(const Game& g);

// Best option values of a number form: the largest Left option value and the
// smallest Right option value (absent when that side has no options).
struct OptionBounds {
  std::optional<Dyadic> left;
  std::optional<Dyadic> right;
};
OptionBounds option_bounds(const Game& g);

}  // namespace ordsum
