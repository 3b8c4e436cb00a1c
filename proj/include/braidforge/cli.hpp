#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "braidforge/garside.hpp"
#include "braidforge/graph.hpp"
#include "braidforge/invariants.hpp"

namespace braidforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

struct Config {
  SignConvention sign_convention = kDefaultSignConvention;
  std::vector<std::string> targets{"S3", "S4"};
  GarsideCaps caps;
  int generator_cap = 0;  // 0: per-target default
  std::size_t max_moves = 2'000'000;
  unsigned threads = 0;
  std::uint64_t seed = 1;
};

// key = value lines; '#' starts a comment. Keys: sign_convention, targets,
// caps.summit_set, caps.cycling, caps.generators, caps.moves, threads, seed.
// Throws Error on unknown keys or bad values.
void apply_config_text(Config& c, const std::string& text);
void apply_config_file(Config& c, const std::string& path);

// Target names are built-in names or paths of multiplication-table files.
std::vector<FiniteTarget> resolve_targets(const std::vector<std::string>& names);

// Runs one command line (args excludes the program name). Reads the
// BRAIDFORGE_CONFIG environment variable for a config file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidforge::cli
