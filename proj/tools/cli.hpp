#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ywalls/rank.hpp"
#include "ywalls/type_a.hpp"

namespace ywalls::cli {

enum class Command { Enumerate, Core, Coords, Series, Verify };
enum class RootType { A, D };
enum class Format { Json, Jsonl, Csv, Text };
enum class Check { Main, Motivic, Specialize, Coords, Confluence, Fibers };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the directory that relative --out paths are
// resolved against.
inline constexpr const char* kOutputDirEnv = "YWALLS_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::Verify;
  RootType type = RootType::D;
  int rank = 4;
  Int maxDegree = 12;
  std::optional<Format> format;  // unset: per-command default
  std::uint64_t seed = 0;
  std::string output;  // empty: standard output
  std::string input;   // "-" for standard input
  std::string kind;    // series kind
  Check check = Check::Main;
  std::string z, m;    // comma-separated coordinates
  int box = 3;
  int orders = 50;
  unsigned threads = 1;
  type_a::Coloring coloring = type_a::Coloring::ColumnMinusRow;
};

/// Runs one command. Returns 0 on success, 1 if a verification failed and 2
/// for invalid configurations or input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments, then runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ywalls::cli
