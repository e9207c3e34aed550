#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "ordsum/errors.hpp"
#include "ordsum/game.hpp"
#include "ordsum/service.hpp"
#include "ordsum/towers.hpp"
#include "ordsum/verify.hpp"

using ordsum::service::json;
namespace towers = ordsum::towers;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
};

void emit(const Globals& g, const json& body, const std::string& plain) {
  if (g.json) {
    std::cout << body.dump() << "\n";
  } else {
    std::cout << plain << "\n";
  }
}

ordsum::Player parse_side(const std::string& s) {
  return s == "right" || s == "Right" ? ordsum::Player::Right : ordsum::Player::Left;
}

void print_position(const towers::Position& pos, ordsum::Player to_move) {
  std::cout << "position: " << towers::to_string(pos) << "\n"
            << "value:    " << towers::position_value(pos).to_string() << "\n"
            << "to move:  " << ordsum::to_string(to_move) << "\n";
}

void print_hints(const towers::Position& pos, ordsum::Player to_move) {
  for (const auto& m : towers::legal_moves(pos, to_move)) {
    std::cout << "  " << towers::to_string(m) << " -> "
              << towers::position_value(towers::apply_move(pos, m)).to_string() << "\n";
  }
}

// "t s", "t:s" or "t:s:Color"; the color defaults to the human's.
bool read_move(const std::string& line, towers::Color color, towers::Move& out) {
  std::string text = line;
  for (char& c : text) {
    if (c == ':') c = ' ';
  }
  std::istringstream in(text);
  std::size_t t = 0, s = 0;
  if (!(in >> t >> s)) return false;
  std::string col;
  if (in >> col) {
    if (col == "Blue" || col == "blue" || col == "B") color = towers::Color::Blue;
    else if (col == "Red" || col == "red" || col == "R") color = towers::Color::Red;
    else return false;
  }
  out = {t, s, color};
  return true;
}

int play(const std::string& position, ordsum::Player human, ordsum::Player first) {
  towers::Position pos = towers::parse_position(position);
  ordsum::Player to_move = first;
  std::cout << "You play " << ordsum::to_string(human) << " ("
            << towers::to_string(towers::color_of(human)) << "). Enter 'tower story', 'hints' or 'quit'.\n";
  for (;;) {
    print_position(pos, to_move);
    if (towers::legal_moves(pos, to_move).empty()) {
      std::cout << ordsum::to_string(to_move) << " has no move; " << ordsum::to_string(ordsum::opponent(to_move))
                << " wins.\n";
      return 0;
    }
    if (to_move != human) {
      const auto m = towers::best_move(pos, to_move);
      pos = towers::apply_move(pos, *m);
      std::cout << "engine plays " << towers::to_string(*m) << "\n";
      to_move = ordsum::opponent(to_move);
      continue;
    }
    std::cout << "> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line) || line == "quit" || line == "q") return 0;
    if (line == "hints" || line == "h") {
      print_hints(pos, to_move);
      continue;
    }
    towers::Move m;
    if (!read_move(line, towers::color_of(human), m)) {
      std::cout << "could not read a move from '" << line << "'\n";
      continue;
    }
    if (m.color != towers::color_of(human)) {
      std::cout << "you may only remove " << towers::to_string(towers::color_of(human)) << " bricks\n";
      continue;
    }
    try {
      pos = towers::apply_move(pos, m);
    } catch (const ordsum::IllegalMove& e) {
      std::cout << e.what() << "\n";
      continue;
    }
    to_move = ordsum::opponent(to_move);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact values, canonical forms and ordinal sums of short games; Teetering Towers engine."};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for randomized verify suites");
  app.add_option("--budget", g.budget, "Cap on interned game forms");

  std::string expr, other, mode = "canonical", side = "left", first = "left", host = "127.0.0.1";
  std::vector<std::string> suites;
  std::size_t cases = 1000;
  int port = 8080;
  long ttl = 1800;

  auto* eval = app.add_subcommand("eval", "Value and outcome of an expression");
  eval->add_option("expr", expr, "Game expression, e.g. \"{-1/2|1}:{-1|1/2}\"")->required();
  auto* canon = app.add_subcommand("canonical", "Canonical form of an expression");
  canon->add_option("expr", expr)->required();
  auto* cmp = app.add_subcommand("compare", "Order relation between two expressions: <, >, = or ||");
  cmp->add_option("a", expr)->required();
  cmp->add_option("b", other)->required();
  auto* tval = app.add_subcommand("tower-value", "Value of a Teetering Towers position");
  tval->add_option("position", expr, "e.g. \"T[1/1;1/1;1/1;1/0]\"")->required();
  auto* tbuild = app.add_subcommand("tower-build", "Build a tower with the given value");
  tbuild->add_option("value", expr)->required();
  tbuild->add_option("--mode", mode)->check(CLI::IsMember({"leaning", "canonical"}));
  auto* ver = app.add_subcommand("verify", "Run differential and property suites");
  ver->add_option("suites", suites, "Suite names or 'all'");
  ver->add_option("--cases", cases, "Cases per property in randomized suites");
  auto* pl = app.add_subcommand("play", "Play a tower position against the engine");
  pl->add_option("position", expr)->required();
  pl->add_option("--as", side)->check(CLI::IsMember({"left", "right"}));
  pl->add_option("--first", first)->check(CLI::IsMember({"left", "right"}));
  auto* serve = app.add_subcommand("serve", "Serve the JSON API over HTTP");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--ttl", ttl, "Session lifetime in seconds");

  CLI11_PARSE(app, argc, argv);
  if (g.budget > 0) ordsum::GameStore::instance().set_budget(g.budget);

  try {
    if (*eval) {
      const json r = ordsum::service::eval_json(expr);
      const std::string value = r["value"].is_null() ? r["canonical"].get<std::string>() : r["value"].get<std::string>();
      emit(g, r, value + "\noutcome: " + r["outcome"].get<std::string>());
    } else if (*canon) {
      const json r = ordsum::service::canonical_json(expr);
      emit(g, r, r["canonical"].get<std::string>());
    } else if (*cmp) {
      const json r = ordsum::service::compare_json(expr, other);
      emit(g, r, r["relation"].get<std::string>());
    } else if (*tval) {
      const json r = ordsum::service::tower_value_json(expr);
      emit(g, r, r["value"].get<std::string>());
    } else if (*tbuild) {
      const json r = ordsum::service::tower_build_json(expr, mode);
      emit(g, r, r["tower"].get<std::string>());
    } else if (*ver) {
      if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = ordsum::verify::suite_names();
      const auto reports = ordsum::verify::run_suites(suites, {g.seed, cases});
      bool ok = true;
      json all = json::array();
      for (const auto& r : reports) {
        ok = ok && r.ok();
        all.push_back(ordsum::service::report_json(r));
        if (g.json) continue;
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << " cases=" << r.cases
                  << " failures=" << r.failures.size() << " wall_ms=" << static_cast<long long>(r.seconds * 1000)
                  << "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) {
          const auto& f = r.failures[i];
          std::cout << "  " << f.input << ": expected " << f.expected << ", got " << f.actual << "\n";
        }
      }
      if (g.json) std::cout << all.dump() << "\n";
      return ok ? 0 : 1;
    } else if (*pl) {
      return play(expr, parse_side(side), parse_side(first));
    } else if (*serve) {
      httplib::Server server;
      ordsum::service::Service service{std::chrono::seconds(ttl)};
      service.mount(server);
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        throw std::runtime_error("could not listen on " + host + ":" + std::to_string(port));
      }
    }
  } catch (const std::exception& e) {
    if (g.json) {
      std::cout << ordsum::service::error_json(e).dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  return 0;
}
