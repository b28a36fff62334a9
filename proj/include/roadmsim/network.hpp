#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "roadmsim/impairment.hpp"
#include "roadmsim/node.hpp"

namespace roadmsim {

/// One link endpoint: a named node and one of its degrees.
struct LinkEnd {
  std::string node;
  int degree = 0;
};

/// An emulated span: fixed attenuation standing in for fiber, one EDFA per
/// supported band, and a WDM coupler pair when more than one band rides it.
struct LinkConfig {
  std::string name;
  LinkEnd a;
  LinkEnd b;
  double attenuation_db = 20.0;
  std::vector<std::string> band_names;
  std::map<std::string, EdfaSpec> edfas;  // band name -> amplifier
  CouplerSpec coupler;

  bool supports_band(const std::string& band_name) const;
  bool multiband() const { return band_names.size() > 1; }
  void validate() const;
};

/// Link plus its live spectrum occupancy, keyed per channel plan.
struct Link {
  LinkConfig config;
  std::map<std::string, std::set<int>> occupied;  // plan key -> occupied slots
};

/// Address of an attached transceiver: node, MCS bank, client port.
struct TransceiverId {
  std::string node;
  int bank = 0;
  int client = 0;

  friend bool operator==(const TransceiverId& x, const TransceiverId& y) {
    return x.node == y.node && x.bank == y.bank && x.client == y.client;
  }
  std::string label() const;
};

struct RouteElement {
  enum class Kind { transceiver, leveler, mcs, wss, coupler, attenuator, edfa, amplifier };
  Kind kind;
  std::string label;
  std::string node;        // mcs / wss / leveler site
  std::string link;        // coupler / attenuator / edfa site
  int chain = 0;            // wss chain on `node`
  int port = -1;            // wss service or mesh port
  int bank = -1;            // mcs bank on `node`
  std::string setpoint;     // leveler target: "A", "B", or "C"
  double delta_db = 0.0;    // fixed gain/loss for coupler/attenuator/amplifier
};

/// One traversed span: a link crossed from `from` toward `to`.
struct Hop {
  std::string link;
  LinkEnd from;
  LinkEnd to;
};

struct Lightpath {
  int id = 0;
  SignalClass signal;
  std::string band_name;
  int slot = 0;
  int channel_id = 0;  // band-unique WSS channel key (slot center in GHz)
  std::vector<double> subcarrier_centers_thz;
  TransceiverId src;
  TransceiverId dst;
  std::vector<Hop> hops;
  std::vector<RouteElement> route;

  int span_count() const { return static_cast<int>(hops.size()); }
  std::vector<std::string> link_names() const;
};

/// Mutable network state: nodes, links, spectrum occupancy, active paths.
class Topology {
 public:
  void add_band(const Band& band);
  void add_node(const NodeConfig& config);
  void add_link(const LinkConfig& config);
  void attach_transceiver(const TransceiverId& id, const TransceiverSpec& spec);

  /// Shortest route by hop count over links carrying the band, lowest free
  /// slot first, the addressed client ports on each end.
  Lightpath provision_lightpath(const TransceiverId& src, const TransceiverId& dst,
                                const SignalClass& signal, const std::string& band_name);

  /// Same admission rules over a prescribed link sequence. When a target
  /// frequency is given the slot nearest to it is used instead of first-fit.
  Lightpath provision_via(const TransceiverId& src, const TransceiverId& dst,
                          const SignalClass& signal, const std::string& band_name,
                          const std::vector<std::string>& link_sequence,
                          std::optional<double> target_freq_thz = std::nullopt);

  void release_lightpath(int id);

  const Band& band(const std::string& name) const;
  const std::map<std::string, Band>& bands() const { return bands_; }
  Node& node(const std::string& name);
  const Node& node(const std::string& name) const;
  const std::map<std::string, Link>& links() const { return links_; }
  const Link& link(const std::string& name) const;
  const std::map<int, Lightpath>& lightpaths() const { return lightpaths_; }
  const TransceiverSpec& transceiver(const TransceiverId& id) const;

  const ChannelPlan& plan(const std::string& band_name, double spacing_ghz);
  static std::string plan_key(const std::string& band_name, double spacing_ghz);

 private:
  std::vector<Hop> shortest_route(const std::string& src_node, const std::string& dst_node,
                                  const std::string& band_name) const;
  std::vector<Hop> named_route(const std::string& src_node,
                               const std::vector<std::string>& link_sequence,
                               const std::string& band_name) const;
  Lightpath admit(const TransceiverId& src, const TransceiverId& dst,
                  const SignalClass& signal, const std::string& band_name,
                  const std::vector<Hop>& hops, std::optional<double> target_freq_thz);
  bool slot_free(const std::vector<Hop>& hops, const std::string& key, int slot) const;

  std::map<std::string, Band> bands_;
  std::map<std::string, Node> nodes_;
  std::map<std::string, Link> links_;
  std::map<std::string, ChannelPlan> plans_;
  std::map<std::string, std::map<std::pair<int, int>, TransceiverSpec>> attached_;
  std::map<int, Lightpath> lightpaths_;
  int next_id_ = 1;
};

/// Power setpoints along a path, dBm per subchannel: A at node input, B ahead
/// of the add-side MCS, C at link launch.
struct PowerSetpoints {
  double a_dbm = 5.0;
  double b_dbm = 2.0;
  double c_dbm = 5.0;
};

struct TraceOptions {
  PowerSetpoints setpoints;
  double tx_launch_dbm = 2.0;
  double power_floor_dbm = -60.0;
  uint64_t seed = 1;
  /// Hypothetical amplifier between the terminating drop WSS and MCS.
  double inline_amp_gain_db = 0.0;
};

/// Per-subcarrier loss/gain ledger for a provisioned path. Levelers and EDFA
/// clamping are resolved against the running power in element order.
std::vector<LedgerStep> lightpath_ledger(const Topology& topology, const Lightpath& path,
                                         int subcarrier, const TraceOptions& options);

/// Cumulative-isolation entries contributed by the switching stages.
std::vector<double> lightpath_isolations(const Topology& topology, const Lightpath& path,
                                         int subcarrier);

/// Trace plus calibrated margin for one subcarrier of a provisioned path.
QReport evaluate_subcarrier(const Topology& topology, const Lightpath& path, int subcarrier,
                            const TraceOptions& options, const PenaltyModel& model);

/// Per-band prescribed link sequences for one test-network routing pattern.
struct Scenario {
  int id = 0;
  std::map<std::string, std::vector<std::string>> band_routes;
};

/// One test super-channel: band and the two subchannel wavelengths.
struct TestSignal {
  std::string label;
  std::string band_name;
  std::vector<double> subchannel_nm;
};

/// Everything needed to assemble and exercise the two-link test network.
struct ScenarioConfig {
  Band band_c;
  Band band_l;
  WssSpec wss;
  McsSpec mcs;
  EdfaSpec edfa_c;
  EdfaSpec edfa_l;
  CouplerSpec coupler;
  TransceiverSpec transceiver_c;
  TransceiverSpec transceiver_l;
  SignalClass signal;
  std::vector<TestSignal> test_signals;
  PowerSetpoints setpoints;
  PenaltyModel penalty;
  double tx_launch_dbm = 2.0;
  double link_attenuation_db = 20.0;
  uint64_t seed = 1;
};

/// Built-in defaults for the test network: 1x9 multiband WSS, 16x8 MCS,
/// 20-dB spans with gain-matched EDFAs, six dual-carrier test signals.
ScenarioConfig default_scenario_config();

/// Trace evaluation knobs drawn from a scenario config.
TraceOptions trace_options(const ScenarioConfig& config);

/// The probe super-channel of the power analyses: the C-band test signal
/// with the median target frequency (mid-band).
const TestSignal& probe_signal(const ScenarioConfig& config);

/// Full power trace of the probe subchannel on a scenario network.
PowerTrace probe_trace(int scenario_id, const ScenarioConfig& config);

struct ScenarioSetup {
  Scenario scenario;
  Topology topology;
};

/// Two nodes (west, east) joined by a multiband link on degree 0 and a
/// C-band-only link on degree 1; routing prescription per scenario id.
ScenarioSetup build_scenario(int id, const ScenarioConfig& config);

struct SignalResult {
  TestSignal signal;
  int lightpath_id = 0;
  int span_count = 0;
  std::vector<QReport> subchannels;  // wavelength order: sc1, sc2, ...
};

struct ScenarioRun {
  int scenario_id = 0;
  std::vector<SignalResult> results;
};

/// Provisions every test signal over the scenario's prescribed routes and
/// evaluates each subchannel.
ScenarioRun run_scenario(ScenarioSetup& setup, const ScenarioConfig& config,
                         const TraceOptions& options);

struct SweepPoint {
  double power_dbm = 0.0;
  double margin_db = 0.0;
};

/// Margin of the probe subchannel (subchannel 2 of the mid-C super-channel)
/// as the point-A setpoint varies.
std::vector<SweepPoint> input_power_sweep(int scenario_id, const ScenarioConfig& config,
                                          const std::vector<double>& point_a_powers_dbm,
                                          double range_min_dbm = -40.0,
                                          double range_max_dbm = 10.0);

/// Margin gain from a hypothetical amplifier between the terminating drop
/// WSS and MCS, evaluated on the probe subchannel.
double inline_amp_benefit(int scenario_id, const ScenarioConfig& config, double gain_db);

}  // namespace roadmsim
