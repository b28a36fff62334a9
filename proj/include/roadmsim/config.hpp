#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "roadmsim/network.hpp"

namespace roadmsim {

/// One row of the add/drop-ratio grid: a (WSS size, degree count, channel
/// count) parameterization evaluated over the configured client counts.
struct AddDropRow {
  std::string label;
  int wss_ports = 0;
  int degrees = 0;
  int channels_per_degree = 0;
};

struct SweepConfig {
  int scenario_id = 1;
  double start_dbm = 0.0;
  double stop_dbm = 5.0;
  double step_db = 1.0;
  double range_min_dbm = -40.0;
  double range_max_dbm = 10.0;
};

struct RouteRequest {
  TransceiverId src;
  TransceiverId dst;
  std::string signal_name;
  std::string band_name;
};

/// Fully resolved run description: named device libraries, the demo
/// topology, the test-network scenario setup, and report parameters.
struct RunConfig {
  uint64_t seed = 1;
  std::map<std::string, Band> bands;
  std::map<std::string, SignalClass> signals;
  std::map<std::string, WssSpec> wss;
  std::map<std::string, McsSpec> mcs;
  std::map<std::string, EdfaSpec> edfas;
  std::map<std::string, CouplerSpec> couplers;
  std::map<std::string, TransceiverSpec> transceivers;

  std::vector<NodeConfig> nodes;
  std::vector<LinkConfig> links;
  std::vector<std::pair<TransceiverId, std::string>> attachments;  // site -> spec name
  std::vector<RouteRequest> routes;

  ScenarioConfig scenario;

  std::vector<AddDropRow> adddrop_rows;
  std::vector<int> adddrop_clients;
  int reference_node_count = 10;

  std::vector<std::string> plan_bands;
  std::vector<std::string> plan_signals;

  SweepConfig sweep;
  std::string output_dir;
};

/// Built-in defaults; an empty configuration file loads to exactly this.
RunConfig default_run_config();

/// Parses and validates a configuration document (JSON, comments allowed),
/// overlaying the built-in defaults field by field.
RunConfig parse_config(const std::string& text, const std::string& origin);

RunConfig load_config(const std::string& path);

/// Applies a command-line seed override everywhere a seed is consumed.
void apply_seed(RunConfig& config, uint64_t seed);

/// Demo topology assembled from the config's nodes, links, and attachments.
Topology build_topology(const RunConfig& config);

}  // namespace roadmsim
