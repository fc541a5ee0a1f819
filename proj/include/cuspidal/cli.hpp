#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuspidal/analysis.hpp"

namespace cuspidal {

enum class Command { Analyze, Theorem1, Corollary1, Theorem2, Theorem3, Example1, Genericity };

std::optional<Command> command_from_string(std::string_view name);
std::string_view to_string(Command c);

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

struct OutputTargets {
  std::optional<std::string> json;  // path or "-" for stdout
  std::optional<std::string> csv;
  std::optional<std::string> svg;

  bool any() const { return json || csv || svg; }
};

struct RunConfig {
  Command command = Command::Analyze;
  std::string poly;  // base polynomial f
  std::string g;     // second deformation term (theorem2)
  std::string h;     // deformation term (theorem3)
  std::optional<double> a, b, t, s, radius;
  std::optional<int> n;
  std::optional<std::array<double, 4>> region;  // x0, y0, x1, y1
  std::uint64_t seed = kDefaultSeed;
  bool auto_ab = false;
  std::vector<std::string> tolerances;  // KEY=VAL
  int grid = 512;
  int samples = 256;
  OutputTargets out;
};

// Decimal or 0x-prefixed hexadecimal; throws InvalidInput otherwise.
std::uint64_t parse_seed(std::string_view text);

// --seed wins, then the CUSPIDAL_SEED value (decimal or 0x hex), then the
// default. A malformed environment value throws InvalidInput.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value);

// Applies KEY=VAL overrides: j_rel, h_rel, phi_rel, refine_tol, max_depth.
AnalysisConfig apply_tolerances(const std::vector<std::string>& overrides);

// Executes one command and writes the requested outputs. Diagnostics go to
// err. Returns 0 on success, 1 on a failed verdict, 2 on bad input and 3
// when a numeric procedure gives up.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cuspidal
