#pragma once

// Command front end shared by the dunklcas executable and the tests.  Each
// command returns a Report; rendering to text or key-sorted JSON is separate
// so that identical invocations give byte-identical output.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunklcas/relations.hpp"

namespace dunklcas {

enum class OutputFormat { text, json };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
} // namespace exit_code

struct Report {
  std::string command;
  std::optional<std::size_t> dims;
  std::string mu_mode;
  nlohmann::json results = nlohmann::json::array();
  std::string status = "ok";
  /// Human-readable rendering, built alongside the JSON results.
  std::string text;
  int exit = exit_code::ok;

  nlohmann::json json() const;
};

/// Comma-separated rationals, e.g. "1/3,-1/2".
std::vector<Rational> parse_mu_list(const std::string &text);

/// dims defaults to the smallest dimension the expression needs.
Report command_nf(const std::string &expr, std::optional<std::size_t> dims,
                  const std::vector<Rational> &mu);
Report command_verify(const std::string &family, const CheckOptions &options,
                      bool timing = false);
Report command_spectrum(std::size_t dims, const std::vector<Rational> &mu, unsigned levels);
Report command_list_relations();

/// Full command line without the program name.  Writes the report to out and
/// diagnostics to err; returns the process exit code (0 pass, 1 failed
/// verification, 2 usage or parse error).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dunklcas
