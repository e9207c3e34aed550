#pragma once

#include <chrono>
#include <cstddef>
#include <exception>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ordsum/verify.hpp"

namespace httplib {
class Server;
}

namespace ordsum::service {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ordsum/v1";

// Result bodies shared by the CLI (--json) and the HTTP endpoints. Every
// number is an exact dyadic string.
json eval_json(std::string_view expr);
json canonical_json(std::string_view expr);
json compare_json(std::string_view a, std::string_view b);
json tower_value_json(std::string_view position);
json tower_build_json(std::string_view value, std::string_view mode);
json report_json(const verify::Report& report);

// {"schema", "error": {"kind", "message", "offset"?}} for any exception.
json error_json(const std::exception& e);

struct Response {
  int status = 200;
  json body;
};

// JSON API over an in-memory store of game sessions. Sessions untouched for
// longer than the TTL are evicted. Safe to call from many threads.
class Service {
 public:
  explicit Service(std::chrono::seconds ttl = std::chrono::minutes(30));
  ~Service();

  Response handle(std::string_view method, std::string_view path, std::string_view body);

  // Routes every request on the server through handle().
  void mount(httplib::Server& server);

  std::size_t session_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ordsum::service
