#pragma once

// segcode command-line front end. The entry point is run(); main() only
// forwards argv, so tests drive the same code path in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "segcode/coding.hpp"
#include "segcode/gf2.hpp"
#include "segcode/graph.hpp"
#include "segcode/graph_props.hpp"
#include "segcode/matroid.hpp"

namespace segcode::cli {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { text, json };

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // well-formed "not isomorphic" verdict
  kUsage = 2,     // usage, parse or input errors
  kCap = 3,       // a configured search cap was exceeded
};

struct RunConfig {
  std::string subcommand;
  std::string action;  // matroid: validate | circuits | graphic | iso
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::text;
  std::optional<std::vector<int>> labeling;
  int canon_cap = kDefaultCanonCap;
  std::size_t gl_cap = kDefaultGLCap;
  std::size_t circuit_cap = kDefaultCircuitCap;
  std::uint64_t seed = 0;
};

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int cmd_encode(const RunConfig& config, std::ostream& out);
int cmd_canon(const RunConfig& config, std::ostream& out);
int cmd_props(const RunConfig& config, std::ostream& out);
int cmd_matroid(const RunConfig& config, std::ostream& out);
int cmd_iso(const RunConfig& config, std::ostream& out);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json coding_sequence_to_json(const CodingSequence& s);
CodingSequence coding_sequence_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const GF2Matrix& m);

}  // namespace segcode::cli
