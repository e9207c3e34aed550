#include "ordsum/service.hpp"

#include <cstdio>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "httplib.h"
#include "ordsum/errors.hpp"
#include "ordsum/numbers.hpp"
#include "ordsum/parser.hpp"
#include "ordsum/towers.hpp"

namespace ordsum::service {
namespace {

using Clock = std::chrono::steady_clock;
using towers::Move;
using towers::Position;

// Request shape problems: missing fields, wrong JSON types, bad enum strings.
class BadRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Conflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json with_schema(json body) {
  body["schema"] = kSchema;
  return body;
}

int status_for(const std::exception& e) {
  if (dynamic_cast<const NotFound*>(&e)) return 404;
  if (dynamic_cast<const Conflict*>(&e) || dynamic_cast<const IllegalMove*>(&e)) return 409;
  if (dynamic_cast<const ResourceError*>(&e)) return 422;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const PreconditionGap*>(&e) || dynamic_cast<const std::invalid_argument*>(&e) ||
      dynamic_cast<const json::exception*>(&e)) {
    return 400;
  }
  return 500;
}

json parse_body(std::string_view body) {
  json j = json::parse(body.empty() ? std::string_view("{}") : body);
  if (!j.is_object()) throw BadRequest("request body must be a JSON object");
  return j;
}

std::string require_string(const json& body, const char* field) {
  const auto it = body.find(field);
  if (it == body.end()) throw BadRequest(std::string("missing field '") + field + "'");
  if (!it->is_string()) throw BadRequest(std::string("field '") + field + "' must be a string");
  return it->get<std::string>();
}

std::string optional_string(const json& body, const char* field, const char* fallback) {
  return body.contains(field) ? require_string(body, field) : fallback;
}

Player parse_player(const std::string& s) {
  if (s == "Left" || s == "left") return Player::Left;
  if (s == "Right" || s == "right") return Player::Right;
  throw BadRequest("player must be \"Left\" or \"Right\", got \"" + s + "\"");
}

towers::Color parse_color(const std::string& s) {
  if (s == "Blue" || s == "blue") return towers::Color::Blue;
  if (s == "Red" || s == "red") return towers::Color::Red;
  throw BadRequest("color must be \"Blue\" or \"Red\", got \"" + s + "\"");
}

std::size_t parse_index(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end() || !it->is_number_integer() || it->get<long long>() < 0) {
    throw BadRequest(std::string("move field '") + field + "' must be a non-negative integer");
  }
  return it->get<std::size_t>();
}

// {"tower":0,"story":2,"color":"Blue"} or "0:2:Blue".
Move parse_move(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto a = s.find(':');
    const auto b = a == std::string::npos ? a : s.find(':', a + 1);
    if (b == std::string::npos) throw BadRequest("move string must look like tower:story:Color");
    try {
      return Move{std::stoul(s.substr(0, a)), std::stoul(s.substr(a + 1, b - a - 1)), parse_color(s.substr(b + 1))};
    } catch (const std::logic_error&) {
      throw BadRequest("move string must look like tower:story:Color");
    }
  }
  if (!j.is_object()) throw BadRequest("move must be an object or a tower:story:Color string");
  const auto color = j.find("color");
  if (color == j.end() || !color->is_string()) throw BadRequest("move field 'color' must be a string");
  return Move{parse_index(j, "tower"), parse_index(j, "story"), parse_color(color->get<std::string>())};
}

json move_json(const Move& m) {
  return {{"tower", m.tower}, {"story", m.story}, {"color", towers::to_string(m.color)}, {"label", towers::to_string(m)}};
}

json towers_json(const Position& pos) {
  json out = json::array();
  for (const auto& t : pos.towers) {
    json stories = json::array();
    for (const auto& s : t.stories()) stories.push_back({{"blue", s.blue}, {"red", s.red}});
    out.push_back(std::move(stories));
  }
  return out;
}

struct Session {
  Position position;
  Player to_move = Player::Left;
  Player human = Player::Left;
  json history = json::array();
  Clock::time_point touched;
};

}  // namespace

json eval_json(std::string_view expr) {
  const ExprPtr e = parse_expr(expr);
  const Game g = lower(*e);
  json out{{"expr", print_expr(*e)}, {"outcome", to_string(outcome(g))}};
  if (is_number(g)) {
    const Dyadic v = number_value(g);
    out["is_number"] = true;
    out["value"] = v.to_string();
    out["canonical"] = print_game(canonical_form(v));
  } else {
    out["is_number"] = false;
    out["value"] = nullptr;
    out["canonical"] = print_game(canonicalize(g));
  }
  return with_schema(std::move(out));
}

json canonical_json(std::string_view expr) {
  const ExprPtr e = parse_expr(expr);
  const Game g = lower(*e);
  const Game c = is_number(g) ? canonical_form(number_value(g)) : canonicalize(g);
  return with_schema({{"expr", print_expr(*e)}, {"canonical", print_game(c)}});
}

json compare_json(std::string_view a, std::string_view b) {
  const Game g = lower(*parse_expr(a));
  const Game h = lower(*parse_expr(b));
  return with_schema({{"relation", to_symbol(compare(g, h))}});
}

json tower_value_json(std::string_view position) {
  const Position pos = towers::parse_position(position);
  json values = json::array();
  for (const auto& t : pos.towers) values.push_back(towers::tower_value(t).to_string());
  return with_schema({{"position", towers::to_string(pos)},
                      {"value", towers::position_value(pos).to_string()},
                      {"tower_values", std::move(values)}});
}

json tower_build_json(std::string_view value, std::string_view mode) {
  Dyadic x;
  try {
    x = Dyadic::parse(value);
  } catch (const std::invalid_argument&) {
    throw BadRequest("value must be a dyadic such as 13/16, got \"" + std::string(value) + "\"");
  }
  towers::Tower t({{1, 1}});
  if (mode == "leaning") {
    t = towers::build_leaning_tower(x);
  } else if (mode == "canonical") {
    t = towers::build_canonical_tower(x);
  } else {
    throw BadRequest("mode must be \"leaning\" or \"canonical\", got \"" + std::string(mode) + "\"");
  }
  return with_schema({{"mode", mode},
                      {"tower", towers::to_string(t)},
                      {"value", towers::tower_value(t).to_string()},
                      {"towers", towers_json(Position{{t}})}});
}

json report_json(const verify::Report& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return with_schema({{"suite", report.suite},
                      {"cases", report.cases},
                      {"ok", report.ok()},
                      {"failures", std::move(failures)},
                      {"wall_ms", static_cast<long long>(report.seconds * 1000)}});
}

json error_json(const std::exception& e) {
  json err{{"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err = {{"kind", "parse"}, {"message", p->message()}, {"offset", p->offset()}};
  } else if (const auto* pe = dynamic_cast<const json::parse_error*>(&e)) {
    err = {{"kind", "json"}, {"message", pe->what()}, {"offset", pe->byte > 0 ? pe->byte - 1 : 0}};
  } else if (const auto* oe = dynamic_cast<const Error*>(&e)) {
    err["kind"] = oe->kind();
  } else if (dynamic_cast<const NotFound*>(&e)) {
    err["kind"] = "not_found";
  } else if (dynamic_cast<const Conflict*>(&e)) {
    err["kind"] = "illegal_move";
  } else if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const json::exception*>(&e)) {
    err["kind"] = "validation";
  } else {
    err["kind"] = "internal";
  }
  return with_schema({{"error", std::move(err)}});
}

struct Service::Impl {
  std::chrono::seconds ttl;
  mutable std::mutex mu;
  std::unordered_map<std::string, Session> sessions;
  std::mt19937_64 rng{std::random_device{}()};

  void evict(Clock::time_point now) {
    std::erase_if(sessions, [&](const auto& kv) { return now - kv.second.touched > ttl; });
  }

  Session& find(const std::string& id) {
    evict(Clock::now());
    const auto it = sessions.find(id);
    if (it == sessions.end()) throw NotFound("unknown game id '" + id + "'");
    it->second.touched = Clock::now();
    return it->second;
  }

  static json state(const std::string& id, const Session& s) {
    const bool over = towers::legal_moves(s.position, s.to_move).empty();
    return {{"game_id", id},
            {"position", towers::to_string(s.position)},
            {"towers", towers_json(s.position)},
            {"to_move", to_string(s.to_move)},
            {"human", to_string(s.human)},
            {"engine", to_string(opponent(s.human))},
            {"value", towers::position_value(s.position).to_string()},
            {"over", over},
            {"winner", over ? json(to_string(opponent(s.to_move))) : json(nullptr)},
            {"history", s.history}};
  }

  static json play(Session& s, const Move& m) {
    s.position = towers::apply_move(s.position, m);
    const json ply{{"player", to_string(s.to_move)},
                   {"move", move_json(m)},
                   {"value", towers::position_value(s.position).to_string()}};
    s.history.push_back(ply);
    s.to_move = opponent(s.to_move);
    return ply;
  }

  // Lets the engine move while it is on turn; returns its move, if any.
  static json engine_turn(Session& s, json& plies) {
    if (s.to_move == s.human) return nullptr;
    const auto m = towers::best_move(s.position, s.to_move);
    if (!m) return nullptr;
    plies.push_back(play(s, *m));
    return move_json(*m);
  }

  json new_game(const json& body) {
    Session s;
    s.position = towers::parse_position(require_string(body, "position"));
    s.human = parse_player(optional_string(body, "human", "Left"));
    s.to_move = parse_player(optional_string(body, "first", "Left"));
    std::lock_guard lock(mu);
    evict(Clock::now());
    std::string id;
    do {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
      id = buf;
    } while (sessions.contains(id));
    json plies = json::array();
    const json reply = engine_turn(s, plies);
    s.touched = Clock::now();
    const auto& stored = sessions.emplace(id, std::move(s)).first->second;
    return {{"game_id", id}, {"state", state(id, stored)}, {"engine_reply", reply}, {"values_per_move", plies}};
  }

  json move(const std::string& id, const json& body) {
    if (!body.contains("move")) throw BadRequest("missing field 'move'");
    const Move m = parse_move(body["move"]);
    std::lock_guard lock(mu);
    Session& s = find(id);
    if (s.to_move != s.human) throw Conflict("it is the engine's turn");
    if (m.color != towers::color_of(s.human)) {
      throw Conflict(std::string("the human plays ") + to_string(s.human) + " and may only remove " +
                     towers::to_string(towers::color_of(s.human)) + " bricks");
    }
    json plies = json::array();
    plies.push_back(play(s, m));
    const json reply = engine_turn(s, plies);
    return {{"state", state(id, s)}, {"engine_reply", reply}, {"values_per_move", plies}};
  }

  json hints(const std::string& id) {
    std::lock_guard lock(mu);
    const Session& s = find(id);
    json out = json::array();
    for (const Move& m : towers::legal_moves(s.position, s.to_move)) {
      out.push_back({{"move", move_json(m)}, {"value", towers::position_value(towers::apply_move(s.position, m)).to_string()}});
    }
    return {{"game_id", id}, {"to_move", to_string(s.to_move)}, {"hints", std::move(out)}};
  }

  json get(const std::string& id) {
    std::lock_guard lock(mu);
    return state(id, find(id));
  }
};

Service::Service(std::chrono::seconds ttl) : impl_(std::make_unique<Impl>()) { impl_->ttl = ttl; }

Service::~Service() = default;

std::size_t Service::session_count() const {
  std::lock_guard lock(impl_->mu);
  return impl_->sessions.size();
}

Response Service::handle(std::string_view method, std::string_view path, std::string_view body) {
  if (const auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < path.size();) {
    const std::size_t j = std::min(path.find('/', i), path.size());
    if (j > i) parts.emplace_back(path.substr(i, j - i));
    i = j + 1;
  }
  const bool get = method == "GET";
  const bool post = method == "POST";
  if (method == "OPTIONS") return {204, json::object()};

  const auto method_not_allowed = [&] {
    return Response{405, with_schema({{"error", {{"kind", "method"}, {"message", std::string(method) + " not allowed"}}}})};
  };
  try {
    const auto route = [&](std::initializer_list<const char*> want) {
      if (parts.size() != want.size()) return false;
      std::size_t k = 0;
      for (const char* w : want) {
        if (*w != '*' && parts[k] != w) return false;
        ++k;
      }
      return true;
    };
    if (route({"health"})) {
      if (!get) return method_not_allowed();
      return {200, with_schema({{"status", "ok"}, {"forms", GameStore::instance().size()}})};
    }
    if (route({"eval"}) || route({"canonical"}) || route({"compare"}) || route({"tower", "value"}) ||
        route({"tower", "build"}) || route({"game", "new"}) || route({"game", "*", "move"})) {
      if (!post) return method_not_allowed();
      const json b = parse_body(body);
      if (route({"eval"})) return {200, eval_json(require_string(b, "expr"))};
      if (route({"canonical"})) return {200, canonical_json(require_string(b, "expr"))};
      if (route({"compare"})) return {200, compare_json(require_string(b, "a"), require_string(b, "b"))};
      if (route({"tower", "value"})) return {200, tower_value_json(require_string(b, "position"))};
      if (route({"tower", "build"})) {
        return {200, tower_build_json(require_string(b, "value"), optional_string(b, "mode", "canonical"))};
      }
      if (route({"game", "new"})) return {200, with_schema(impl_->new_game(b))};
      return {200, with_schema(impl_->move(parts[1], b))};
    }
    if (route({"game", "*"}) || route({"game", "*", "hints"})) {
      if (!get) return method_not_allowed();
      if (parts.size() == 2) return {200, with_schema(impl_->get(parts[1]))};
      return {200, with_schema(impl_->hints(parts[1]))};
    }
    throw NotFound("no route for " + std::string(method) + " " + std::string(path));
  } catch (const std::exception& e) {
    return {status_for(e), error_json(e)};
  }
}

void Service::mount(httplib::Server& server) {
  const auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    if (r.status != 204) res.set_content(r.body.dump(), "application/json");
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
  server.Options(".*", handler);
}

}  // namespace ordsum::service
