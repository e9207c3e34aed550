#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Differential and property suites. Every case compares a fast path or a
// structural claim against the brute-force oracle (canonicalize of the literal
// form), so a clean report means the closed forms agree exactly.
namespace ordsum::verify {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

struct Options {
  std::uint64_t seed = 1;
  std::size_t property_cases = 1000;  // per property, for the randomized suites
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
Report run_suite(std::string_view name, const Options& opts = {});

// Runs the named suites on parallel workers; reports come back in input order.
std::vector<Report> run_suites(const std::vector<std::string>& names, const Options& opts = {});

}  // namespace ordsum::verify
