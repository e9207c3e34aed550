#pragma once

#include <string>

#include "ordsum/dyadic.hpp"
#include "ordsum/game.hpp"

namespace ordsum {

// The form <m + radius | m - radius> with both options canonical. The radius is
// stored signed and is negative for every ball this library builds.
struct Ball {
  Dyadic midpoint;
  Dyadic radius;

  // Throws DomainError unless radius < 0.
  static Ball make(Dyadic midpoint, Dyadic radius);

  Dyadic left_value() const { return midpoint + radius; }
  Dyadic right_value() const { return midpoint - radius; }
  Game literal_form() const;
  // "<m; d>"
  std::string to_string() const;

  friend bool operator==(const Ball&, const Ball&) = default;
};

// G and H are equivalent modulo domination: in G - H every first move has a
// winning answer for the second player in the other summand.
bool equiv_mod_domination(const Game& g, const Game& h);

// Drops every Left option <= another Left option and every Right option >= another
// Right option (top level only). Among equal options the lowest id survives.
Game remove_dominated(const Game& g);

// For a number form with options on both sides, the ball <a | b> built from the
// best option values. The result is equivalent modulo domination to g.
Ball reduce_to_ball(const Game& g);

// b + b = m + m for the ball's literal form.
bool is_balanced(const Ball& b);

// -1 for integers, -1/2^p for a/2^p in lowest terms.
Dyadic canonical_radius(const Dyadic& x);

}  // namespace ordsum
