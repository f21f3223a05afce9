#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "minksurf/revolution.hpp"

namespace minksurf::jobs {

// Config-driven batch front end. Jobs are described by a single JSON
// document (schema version "1"); each run writes one CSV table per
// requested quantity plus one JSON summary that embeds the config, so a
// summary can be re-run verbatim.
//
// Exit codes: 0 success, 1 domain error, 2 config error.

struct PacketConfig {
  double center{0.0}, width{1.0}, momentum{0.0};
};

struct JobConfig {
  std::string schema{"1"};
  std::string job;                 // classify|curvature|potential|spectrum|propagate|box
  // Target families: (family,param) pairs; classify may list several.
  std::vector<std::pair<std::string, double>> targets;
  std::vector<double> ell{0.0};
  bool has_grid{false};
  double grid_L{0.0};
  int grid_n{0};
  int max_states{8};
  bool has_window{false};
  double window_lo{0.0}, window_hi{0.0};
  int points{50};                  // sample points for classify/curvature
  double dt{1e-4};
  int steps{1000};
  PacketConfig packet;
  double box_a{1.0}, box_b{1.0}, box_c{1.0};
  int box_n_max{3};
  std::string out_prefix;          // defaults to the job kind
};

using Cell = std::variant<double, std::int64_t, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Always carries "tool", "version", "units" and "config" (config hash).
  std::map<std::string, std::string> metadata;
};

// Numbers are rendered with the shortest round-trip decimal representation;
// strings follow RFC-4180 quoting. The first line is the metadata header
//   # <tool> <version>, units: <units>, config: <hash>
// Writes are atomic (write to .tmp, then rename).
void write_csv(const ResultTable& table, const std::string& path);
std::string csv_to_string(const ResultTable& table);

// FNV-1a 64-bit hash of the canonical (sorted-key) config serialization,
// as 16 hex digits.
std::string config_hash(const std::string& canonical_json);

// Parse + semantic validation. Returns diagnostics; empty means valid.
// Accepts either a config document or a previously written summary (the
// embedded "config" object is then used). Throws ConfigParse only for
// unreadable files / malformed JSON.
std::vector<std::string> validate_config(const std::string& config_path);

// Potential decomposition table for one family and ell: columns
// (q2, V_eff, V_S, centripetal, curve). V_eff = centripetal + curve exactly;
// V_S is the surface geometric potential sampled along the profile.
ResultTable emit_potential_profile(const RevolutionFamily& fam, double ell,
                                   const GridSpec& grid);

// Executes the configured pipeline, writing outputs into out_dir.
// Returns the process exit status (0/1/2); diagnostics go to stderr unless
// quiet, in which case only the final error line is printed.
int run_job(const std::string& config_path, const std::string& out_dir,
            bool quiet = false);

}  // namespace minksurf::jobs
