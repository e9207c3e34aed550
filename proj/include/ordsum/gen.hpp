#pragma once

#include <random>
#include <vector>

#include "ordsum/game.hpp"

// Form generators shared by the verify suites and the unit tests.
namespace ordsum::gen {

// All literal forms born by day 2 (256 of them).
std::vector<Game> forms_to_day2();

// Random literal form, not necessarily a number.
Game random_form(std::mt19937_64& rng, unsigned depth);

// Random number form, usually far from canonical: options drawn from smaller
// random number forms and split around a random threshold.
Game random_number_form(std::mt19937_64& rng, unsigned depth);

// Random number form with options on both sides.
Game random_two_sided_number(std::mt19937_64& rng, unsigned depth);

}  // namespace ordsum::gen
