#include "ordsum/parser.hpp"

#include <cctype>
#include <stdexcept>

#include "ordsum/equivdom.hpp"
#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"

namespace ordsum {

ExprPtr Expr::make_number(Dyadic x) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = std::move(x);
  return e;
}

ExprPtr Expr::make_brace(std::vector<ExprPtr> left, std::vector<ExprPtr> right) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Brace;
  e->left = std::move(left);
  e->right = std::move(right);
  return e;
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Expr::make_negate(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Negate;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::make_ball(Dyadic midpoint, Dyadic radius) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Ball;
  e->number = std::move(midpoint);
  e->radius = std::move(radius);
  return e;
}

ExprPtr Expr::make_tower(const towers::Tower& t) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Tower;
  e->stories = t.stories();
  return e;
}

namespace {

bool is_literal_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.' || c == '^';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (i_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[i_] + "'", i_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  char peek() {
    skip();
    return i_ < text_.size() ? text_[i_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (i_ == text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", i_);
      throw ParseError(std::string("expected '") + c + "'", i_);
    }
    ++i_;
  }

  ExprPtr sum() {
    ExprPtr e = ordinal();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++i_;
        e = Expr::make_binary(Expr::Kind::Sum, e, ordinal());
      } else if (c == '-') {
        ++i_;
        e = Expr::make_binary(Expr::Kind::Difference, e, ordinal());
      } else {
        return e;
      }
    }
  }

  ExprPtr ordinal() {
    ExprPtr base = unary();
    if (peek() != ':') return base;
    ++i_;
    return Expr::make_binary(Expr::Kind::Ordinal, base, ordinal());
  }

  ExprPtr unary() {
    if (peek() != '-') return primary();
    ++i_;
    skip();
    if (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      return Expr::make_number(-literal());
    }
    return Expr::make_negate(unary());
  }

  Dyadic literal() {
    skip();
    const std::size_t start = i_;
    while (i_ < text_.size() && is_literal_char(text_[i_])) ++i_;
    if (start == i_) throw ParseError("expected a number", start);
    const std::string_view token = text_.substr(start, i_ - start);
    Dyadic x;
    try {
      x = Dyadic::parse(token);
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid dyadic literal '" + std::string(token) + "'", start);
    } catch (const ResourceError&) {
      throw ParseError("literal exponent overflow", start);
    }
    if (x.abs() > Dyadic(kMaxLiteralMagnitude)) throw ParseError("integer literal overflow", start);
    return x;
  }

  Dyadic signed_literal() {
    if (peek() == '-') {
      ++i_;
      return -literal();
    }
    return literal();
  }

  std::vector<ExprPtr> option_list(char end) {
    std::vector<ExprPtr> out;
    if (peek() == end) return out;
    out.push_back(sum());
    while (peek() == ',') {
      ++i_;
      out.push_back(sum());
    }
    return out;
  }

  ExprPtr primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::make_number(literal());
    switch (c) {
      case '{': {
        ++i_;
        auto left = option_list('|');
        expect('|');
        auto right = option_list('}');
        expect('}');
        return Expr::make_brace(std::move(left), std::move(right));
      }
      case '<': {
        ++i_;
        Dyadic m = signed_literal();
        expect(';');
        skip();
        const std::size_t at = i_;
        Dyadic d = signed_literal();
        if (d.sign() >= 0) throw ParseError("ball radius must be negative", at);
        expect('>');
        return Expr::make_ball(std::move(m), std::move(d));
      }
      case 'T':
        return Expr::make_tower(towers::parse_tower(text_, i_));
      case '(': {
        ++i_;
        ExprPtr e = sum();
        expect(')');
        return e;
      }
      case '\0':
        throw ParseError("unexpected end of input", i_);
      default:
        throw ParseError(std::string("unexpected '") + c + "'", i_);
    }
  }
};

bool is_additive(const Expr& e) {
  return e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Difference;
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + print_expr(e) + ")" : print_expr(e);
}

std::string join(const std::vector<ExprPtr>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ",";
    out += print_expr(*items[k]);
  }
  return out;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return e.number.to_string();
    case K::Brace:
      return "{" + join(e.left) + "|" + join(e.right) + "}";
    case K::Sum:
    case K::Difference:
      return print_expr(*e.lhs) + (e.kind == K::Sum ? " + " : " - ") + wrap(*e.rhs, is_additive(*e.rhs));
    case K::Ordinal:
      return wrap(*e.lhs, is_additive(*e.lhs) || e.lhs->kind == K::Ordinal) + ":" +
             wrap(*e.rhs, is_additive(*e.rhs));
    case K::Negate: {
      const K k = e.lhs->kind;
      return "-" + wrap(*e.lhs, k == K::Number || k == K::Ordinal || is_additive(*e.lhs));
    }
    case K::Ball:
      return "<" + e.number.to_string() + "; " + e.radius.to_string() + ">";
    case K::Tower:
      return towers::to_string(towers::Tower(e.stories));
  }
  return {};
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  const auto same_list = [](const std::vector<ExprPtr>& x, const std::vector<ExprPtr>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!structurally_equal(*x[k], *y[k])) return false;
    }
    return true;
  };
  using K = Expr::Kind;
  switch (a.kind) {
    case K::Number:
      return a.number == b.number;
    case K::Brace:
      return same_list(a.left, b.left) && same_list(a.right, b.right);
    case K::Sum:
    case K::Difference:
    case K::Ordinal:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    case K::Negate:
      return structurally_equal(*a.lhs, *b.lhs);
    case K::Ball:
      return a.number == b.number && a.radius == b.radius;
    case K::Tower:
      return a.stories == b.stories;
  }
  return false;
}

Game lower(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return canonical_form(e.number);
    case K::Brace: {
      std::vector<Game> l, r;
      for (const ExprPtr& o : e.left) l.push_back(lower(*o));
      for (const ExprPtr& o : e.right) r.push_back(lower(*o));
      return Game::make(std::move(l), std::move(r));
    }
    case K::Sum:
      return disjunctive_sum(lower(*e.lhs), lower(*e.rhs));
    case K::Difference:
      return disjunctive_sum(lower(*e.lhs), negate(lower(*e.rhs)));
    case K::Ordinal:
      return ordinal_sum(lower(*e.lhs), lower(*e.rhs));
    case K::Negate:
      return negate(lower(*e.lhs));
    case K::Ball:
      return Ball::make(e.number, e.radius).literal_form();
    case K::Tower:
      return towers::tower_form(towers::Tower(e.stories));
  }
  return Game();
}

std::string print_game(const Game& g) {
  std::string out = "{";
  for (std::size_t k = 0; k < g.left().size(); ++k) out += (k ? "," : "") + print_form(g.left()[k]);
  out += "|";
  for (std::size_t k = 0; k < g.right().size(); ++k) out += (k ? "," : "") + print_form(g.right()[k]);
  return out + "}";
}

std::string print_form(const Game& g) {
  if (is_canonical_number(g)) return number_value(g).to_string();
  return print_game(g);
}

}  // namespace ordsum
