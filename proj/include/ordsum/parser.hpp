#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordsum/dyadic.hpp"
#include "ordsum/game.hpp"
#include "ordsum/towers.hpp"

namespace ordsum {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Parsed game expression.
//   sum     := ordinal (('+' | '-') ordinal)*
//   ordinal := unary (':' ordinal)?          right-associative, tighter than '+'
//   unary   := '-' unary | primary           '-' directly before a literal folds into it
//   primary := dyadic | '{' list '|' list '}' | '<' dyadic ';' dyadic '>'
//            | 'T[' b/r (';' b/r)* ']' | '(' sum ')'
struct Expr {
  enum class Kind { Number, Brace, Sum, Difference, Ordinal, Negate, Ball, Tower };

  Kind kind = Kind::Number;
  Dyadic number;                  // Number; Ball midpoint
  Dyadic radius;                  // Ball
  std::vector<ExprPtr> left;      // Brace
  std::vector<ExprPtr> right;     // Brace
  ExprPtr lhs, rhs;               // Sum, Difference, Ordinal; Negate uses lhs
  std::vector<towers::Story> stories;  // Tower

  static ExprPtr make_number(Dyadic x);
  static ExprPtr make_brace(std::vector<ExprPtr> left, std::vector<ExprPtr> right);
  static ExprPtr make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr make_negate(ExprPtr operand);
  static ExprPtr make_ball(Dyadic midpoint, Dyadic radius);
  static ExprPtr make_tower(const towers::Tower& t);
};

// Integer parts of literals are capped so lowering cannot build absurd chains.
inline constexpr long long kMaxLiteralMagnitude = 1LL << 20;

// Throws ParseError with the byte offset of the first bad token.
ExprPtr parse_expr(std::string_view text);

// Canonical printing; parse_expr(print_expr(e)) is structurally equal to e.
std::string print_expr(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// Literal form of the expression (no simplification).
Game lower(const Expr& e);

// A form as expression text: braces at the top, options that are canonical
// numbers printed as dyadics. Reparses to the same form.
std::string print_game(const Game& g);

// Like print_game, but a canonical number prints as a dyadic at the top too.
std::string print_form(const Game& g);

}  // namespace ordsum
