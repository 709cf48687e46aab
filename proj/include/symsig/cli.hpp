#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symsig/abelian_rep.hpp"

namespace symsig::cli {

enum class Command { staircase, weights, multiplicity, series, signature, general, verify };
enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

struct JobSpec {
  Command command = Command::signature;
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::vector<std::int64_t> chi;  // empty: trivial character
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> n_max;
  std::vector<std::uint64_t> grid;
  OutputFormat format = OutputFormat::json;
  std::vector<std::int64_t> moduli;          // `general` only
  std::vector<std::vector<std::int64_t>> weights;  // `general` only
};

/// Executes one job. Results go to `out`, diagnostics to `err`. Returns 0 on
/// success, 1 on invalid input and 2 when an internal invariant is violated.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses command-line arguments into a JobSpec and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1,2,3" -> {1, 2, 3}; throws ValidationError on malformed input.
std::vector<std::int64_t> parse_int_list(const std::string& text);
/// "1,0;0,1" -> {{1, 0}, {0, 1}}.
std::vector<std::vector<std::int64_t>> parse_vector_list(const std::string& text);

/// 12-significant-digit decimal rendering of an exact rational (display only).
std::string decimal_display(const Rational& r);

}  // namespace symsig::cli
