#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "roadmsim/network.hpp"

using namespace roadmsim;

namespace {

const Band kBandC{"C", 191.30, 196.10};
const Band kBandL{"L", 186.05, 190.85};

const SignalClass k200{"200G", 200, "DP-16QAM", 32.0, 50.0, 1, 0.0};
const SignalClass k400{"400G", 400, "DP-16QAM", 64.0, 75.0, 1, 0.0};
const SignalClass k800{"800G", 800, "DP-16QAM", 130.0, 150.0, 1, 0.0};

const TransceiverSpec kTxCl{"tx-cl", {"C", "L"}, 0.0, 4.0, -20.0, 5.0};
const TransceiverSpec kTxC{"tx-c", {"C"}, 0.0, 4.0, -20.0, 5.0};
const TransceiverSpec kTxL{"tx-l", {"L"}, 0.0, 4.0, -20.0, 5.0};

NodeConfig multiband_node(const std::string& name, int degrees) {
  NodeConfig config;
  config.name = name;
  config.architecture = NodeArchitecture::cl_multiband;
  config.degrees = degrees;
  config.wss = {"wss-1x9-cl", 9, {kBandC, kBandL}, 5.1, 6.7, 5.5, 6.1};
  config.mcs = {"mcs-16x8", 16, 8, 2.5, 45.0, 0.0, {kBandC, kBandL}};
  return config;
}

LinkConfig span(const std::string& name, const LinkEnd& a, const LinkEnd& b,
                std::vector<std::string> bands) {
  LinkConfig link;
  link.name = name;
  link.a = a;
  link.b = b;
  link.attenuation_db = 20.0;
  link.band_names = std::move(bands);
  for (const std::string& band : link.band_names) {
    link.edfas[band] = {"edfa-" + band, band, 20.0, 23.0};
  }
  link.coupler = {"coupler", CouplerSpec::Kind::band_mux, 0.5};
  return link;
}

/// Two multiband nodes, a C+L link on degree 0 and a C-only link on degree 1,
/// a tx-cl on every bank/client of both nodes.
Topology two_node_topology() {
  Topology topology;
  topology.add_band(kBandC);
  topology.add_band(kBandL);
  topology.add_node(multiband_node("west", 2));
  topology.add_node(multiband_node("east", 2));
  topology.add_link(span("link-c", {"west", 1}, {"east", 1}, {"C"}));
  topology.add_link(span("link-cl", {"west", 0}, {"east", 0}, {"C", "L"}));
  for (const char* node : {"west", "east"}) {
    for (int bank = 0; bank < 8; ++bank) {
      for (int client = 0; client < 8; ++client) {
        topology.attach_transceiver({node, bank, client}, kTxCl);
      }
    }
  }
  return topology;
}

ErrorCode code_of(const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

/// Independent record of one active path, for the brute-force recount.
struct ModelPath {
  std::string key;
  int slot = 0;
  int channel_id = 0;
  std::vector<std::string> links;
  TransceiverId src;
  TransceiverId dst;
  int src_degree = 0;
  int dst_degree = 0;
};

void check_against_model(const Topology& topology, const std::map<int, ModelPath>& model) {
  REQUIRE(topology.lightpaths().size() == model.size());

  std::map<std::string, std::map<std::string, std::set<int>>> occupancy;
  std::map<std::string, std::set<std::pair<int, int>>> add_busy;
  std::map<std::string, std::set<std::pair<int, int>>> drop_busy;
  std::map<std::pair<std::string, int>, std::set<int>> add_routes;
  std::map<std::pair<std::string, int>, std::set<int>> drop_routes;
  for (const auto& [id, path] : model) {
    for (const std::string& link : path.links) occupancy[link][path.key].insert(path.slot);
    add_busy[path.src.node].insert({path.src.bank, path.src.client});
    drop_busy[path.dst.node].insert({path.dst.bank, path.dst.client});
    add_routes[{path.src.node, path.src_degree}].insert(path.channel_id);
    drop_routes[{path.dst.node, path.dst_degree}].insert(path.channel_id);
  }

  for (const auto& [name, link] : topology.links()) {
    const auto& expected = occupancy[name];
    for (const auto& [key, slots] : link.occupied) {
      auto it = expected.find(key);
      if (it == expected.end()) {
        CHECK(slots.empty());
      } else {
        CHECK(slots == it->second);
      }
    }
    for (const auto& [key, slots] : expected) {
      auto it = link.occupied.find(key);
      REQUIRE(it != link.occupied.end());
      CHECK(it->second == slots);
    }
  }

  for (const char* name : {"west", "east"}) {
    const Node& node = topology.node(name);
    std::set<std::pair<int, int>> adds;
    std::set<std::pair<int, int>> drops;
    for (int bank = 0; bank < node.bank_count(); ++bank) {
      for (const auto& [client, degree] : node.bank(bank).add.connections()) {
        (void)degree;
        adds.insert({bank, client});
      }
      for (const auto& [client, degree] : node.bank(bank).drop.connections()) {
        (void)degree;
        drops.insert({bank, client});
      }
    }
    CHECK(adds == add_busy[name]);
    CHECK(drops == drop_busy[name]);
    for (int degree = 0; degree < node.degrees(); ++degree) {
      std::set<int> routed_add;
      for (const auto& [channel, port] : node.add_wss(degree).routes()) {
        (void)port;
        routed_add.insert(channel);
      }
      std::set<int> routed_drop;
      for (const auto& [channel, port] : node.drop_wss(degree).routes()) {
        (void)port;
        routed_drop.insert(channel);
      }
      CHECK(routed_add == add_routes[{name, degree}]);
      CHECK(routed_drop == drop_routes[{name, degree}]);
    }
  }
}

}  // namespace

TEST_CASE("first-fit assigns the lowest free slot") {
  Topology topology = two_node_topology();
  const Lightpath first =
      topology.provision_lightpath({"west", 0, 0}, {"east", 0, 0}, k400, "C");
  CHECK(first.slot == 0);
  CHECK(first.span_count() == 1);
  CHECK(first.link_names() == std::vector<std::string>{"link-c"});
  CHECK(first.subcarrier_centers_thz.size() == 1);
  CHECK(first.subcarrier_centers_thz[0] == doctest::Approx(191.3375).epsilon(1e-12));

  const Lightpath second =
      topology.provision_lightpath({"west", 0, 1}, {"east", 0, 1}, k400, "C");
  CHECK(second.slot == 1);
  CHECK(second.link_names() == std::vector<std::string>{"link-c"});

  // L rides the multiband link; its plan starts fresh.
  const Lightpath third =
      topology.provision_lightpath({"west", 1, 0}, {"east", 1, 0}, k400, "L");
  CHECK(third.slot == 0);
  CHECK(third.link_names() == std::vector<std::string>{"link-cl"});

  // Releasing the first path frees its slot for the next request.
  topology.release_lightpath(first.id);
  const Lightpath fourth =
      topology.provision_lightpath({"west", 0, 2}, {"east", 0, 2}, k400, "C");
  CHECK(fourth.slot == 0);
}

TEST_CASE("admission rejections carry the expected codes") {
  Topology topology = two_node_topology();
  const Lightpath path =
      topology.provision_lightpath({"west", 0, 0}, {"east", 0, 0}, k400, "C");

  // Both clients of an active path stay blocked until release.
  CHECK(code_of([&] {
          topology.provision_lightpath({"west", 0, 0}, {"east", 1, 0}, k400, "C");
        }) == ErrorCode::port_blocked);
  CHECK(code_of([&] {
          topology.provision_lightpath({"west", 1, 0}, {"east", 0, 0}, k400, "C");
        }) == ErrorCode::port_blocked);

  CHECK(code_of([&] {
          topology.provision_lightpath({"west", 0, 1}, {"west", 0, 2}, k400, "C");
        }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { topology.release_lightpath(9999); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] {
          topology.provision_lightpath({"west", 0, 1}, {"east", 9, 0}, k400, "C");
        }) == ErrorCode::invalid_argument);

  topology.release_lightpath(path.id);
  CHECK_NOTHROW(topology.provision_lightpath({"west", 0, 0}, {"east", 0, 0}, k400, "C"));
}

TEST_CASE("band admission: L only crosses links that carry it") {
  Topology topology;
  topology.add_band(kBandC);
  topology.add_band(kBandL);
  topology.add_node(multiband_node("west", 1));
  topology.add_node(multiband_node("east", 1));
  topology.add_link(span("only-c", {"west", 0}, {"east", 0}, {"C"}));
  topology.attach_transceiver({"west", 0, 0}, kTxCl);
  topology.attach_transceiver({"east", 0, 0}, kTxCl);

  CHECK_NOTHROW(topology.provision_lightpath({"west", 0, 0}, {"east", 0, 0}, k400, "C"));
  CHECK(code_of([&] {
          topology.provision_lightpath({"west", 0, 1}, {"east", 0, 1}, k400, "L");
        }) == ErrorCode::band_blocked);
  // A route exists for C, but an L-only transceiver cannot terminate it.
  topology.attach_transceiver({"west", 0, 2}, kTxL);
  topology.attach_transceiver({"east", 0, 2}, kTxL);
  CHECK(code_of([&] {
          topology.provision_lightpath({"west", 0, 2}, {"east", 0, 2}, k400, "C");
        }) == ErrorCode::mis_plug);
}

TEST_CASE("a 50-GHz plan holds exactly 96 channels per band and link") {
  // Plenty of client ports: 8 banks of 16 clients on the single degree.
  NodeConfig big_west = multiband_node("west", 1);
  big_west.architecture = NodeArchitecture::c_only;
  big_west.wss = {"wss-1x9-c", 9, {kBandC}, 5.1, 6.7, 5.5, 6.1};
  big_west.mcs = {"mcs-16x16", 16, 16, 2.5, 45.0, 0.0, {kBandC}};
  NodeConfig big_east = big_west;
  big_east.name = "east";

  Topology full;
  full.add_band(kBandC);
  full.add_node(big_west);
  full.add_node(big_east);
  full.add_link(span("only-c", {"west", 0}, {"east", 0}, {"C"}));
  for (const char* node : {"west", "east"}) {
    for (int bank = 0; bank < 8; ++bank) {
      for (int client = 0; client < 16; ++client) {
        full.attach_transceiver({node, bank, client}, kTxC);
      }
    }
  }

  std::vector<int> ids;
  for (int i = 0; i < 96; ++i) {
    const Lightpath path = full.provision_lightpath(
        {"west", i / 16, i % 16}, {"east", i / 16, i % 16}, k200, "C");
    CHECK(path.slot == i);
    ids.push_back(path.id);
  }
  CHECK(code_of([&] {
          full.provision_lightpath({"west", 6, 0}, {"east", 6, 0}, k200, "C");
        }) == ErrorCode::spectrum_blocked);
  // Every 150-GHz center coincides with an occupied 50-GHz center, so the
  // degree WSS blocks the wider plan as well.
  CHECK(code_of([&] {
          full.provision_lightpath({"west", 6, 1}, {"east", 6, 1}, k800, "C");
        }) == ErrorCode::spectrum_blocked);
  // Freeing the colliding 50-GHz channel admits the first 150-GHz slot.
  full.release_lightpath(ids[1]);
  CHECK(full.provision_lightpath({"west", 6, 1}, {"east", 6, 1}, k800, "C").slot == 0);
}

TEST_CASE("prescribed routes and targeted slots") {
  Topology topology = two_node_topology();
  const Lightpath direct = topology.provision_via({"west", 0, 0}, {"east", 0, 0}, k400, "C",
                                                  {"link-cl"});
  CHECK(direct.link_names() == std::vector<std::string>{"link-cl"});

  // Loopback through both spans terminates back on the source node.
  const Lightpath loop = topology.provision_via({"west", 0, 1}, {"west", 0, 2}, k400, "C",
                                                {"link-cl", "link-c"});
  CHECK(loop.span_count() == 2);
  CHECK(loop.hops.back().to.node == "west");

  CHECK(code_of([&] {
          topology.provision_via({"west", 0, 3}, {"west", 0, 4}, k400, "C",
                                 {"link-cl", "link-cl"});
        }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] {
          topology.provision_via({"west", 0, 3}, {"east", 0, 4}, k400, "C",
                                 {"link-cl", "link-c"});
        }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] {
          topology.provision_via({"west", 0, 3}, {"east", 0, 4}, k400, "L", {"link-c"});
        }) == ErrorCode::band_blocked);

  // Slot targeting lands on the nearest plan center.
  const ChannelPlan& plan = topology.plan("C", 75.0);
  const Lightpath aimed = topology.provision_via({"west", 1, 0}, {"east", 1, 0}, k400, "C",
                                                 {"link-cl"}, plan.center(40));
  CHECK(aimed.slot == 40);
  CHECK(code_of([&] {
          topology.provision_via({"west", 1, 1}, {"east", 1, 1}, k400, "C", {"link-cl"},
                                 plan.center(40));
        }) == ErrorCode::spectrum_blocked);
}

TEST_CASE("contentionless banks share a slot across degrees") {
  Topology topology = two_node_topology();
  const ChannelPlan& plan = topology.plan("C", 75.0);
  const Lightpath a = topology.provision_via({"west", 0, 0}, {"east", 0, 0}, k400, "C",
                                             {"link-cl"}, plan.center(7));
  const Lightpath b = topology.provision_via({"west", 0, 1}, {"east", 0, 1}, k400, "C",
                                             {"link-c"}, plan.center(7));
  CHECK(a.slot == 7);
  CHECK(b.slot == 7);
  CHECK(a.channel_id == b.channel_id);
}

TEST_CASE("route elements follow the drop chain, couplers only on multiband spans") {
  Topology topology = two_node_topology();
  const Lightpath multi = topology.provision_lightpath({"west", 0, 0}, {"east", 0, 0},
                                                       k400, "L");
  std::vector<std::string> labels;
  for (const RouteElement& el : multi.route) labels.push_back(el.label);
  const std::vector<std::string> expected = {
      "tx:west/bank0/client0", "level-B@west",      "mcs-add@west/bank0",
      "wss-add@west/deg0",     "level-C@west/deg0", "coupler-in@link-cl",
      "att@link-cl",           "edfa-L@link-cl",    "coupler-out@link-cl",
      "level-A@east/deg0",     "wss-drop@east/deg0", "mcs-drop@east/bank0",
      "rx:east/bank0/client0"};
  CHECK(labels == expected);

  const Lightpath single = topology.provision_lightpath({"west", 0, 1}, {"east", 0, 1},
                                                        k400, "C");
  for (const RouteElement& el : single.route) {
    CHECK(el.kind != RouteElement::Kind::coupler);
  }
}

TEST_CASE("random provision/release agrees with a brute-force recount") {
  Topology topology = two_node_topology();
  std::map<int, ModelPath> model;
  std::mt19937_64 rng(2024);

  const std::vector<const SignalClass*> signals = {&k200, &k400, &k800};
  const std::vector<std::string> bands = {"C", "L"};
  int provisions = 0;
  int blocked = 0;
  for (int op = 0; op < 20000; ++op) {
    const bool add = model.empty() || (rng() % 10) < 6;
    if (add) {
      const SignalClass& signal = *signals[rng() % signals.size()];
      const std::string& band = bands[rng() % bands.size()];
      const bool eastbound = (rng() % 2) == 0;
      const TransceiverId src{eastbound ? "west" : "east",
                              static_cast<int>(rng() % 8), static_cast<int>(rng() % 8)};
      const TransceiverId dst{eastbound ? "east" : "west",
                              static_cast<int>(rng() % 8), static_cast<int>(rng() % 8)};
      try {
        const Lightpath path = topology.provision_lightpath(src, dst, signal, band);
        ModelPath entry;
        entry.key = Topology::plan_key(band, signal.channel_spacing_ghz);
        entry.slot = path.slot;
        entry.channel_id = path.channel_id;
        entry.links = path.link_names();
        entry.src = src;
        entry.dst = dst;
        entry.src_degree = path.hops.front().from.degree;
        entry.dst_degree = path.hops.back().to.degree;
        model.emplace(path.id, entry);
        ++provisions;
        // Continuity: every hop carries the slot it was granted.
        for (const Hop& hop : path.hops) {
          CHECK(topology.link(hop.link).occupied.at(entry.key).count(path.slot) == 1);
        }
      } catch (const Error& err) {
        CHECK(err.is_blocking());
        ++blocked;
      }
    } else {
      auto it = model.begin();
      std::advance(it, static_cast<long>(rng() % model.size()));
      CHECK_NOTHROW(topology.release_lightpath(it->first));
      model.erase(it);
    }
    if (op % 250 == 0) check_against_model(topology, model);
  }
  check_against_model(topology, model);
  CHECK(provisions >= 5000);
  CHECK(blocked > 0);

  // Releasing the remainder restores a pristine network.
  while (!model.empty()) {
    topology.release_lightpath(model.begin()->first);
    model.erase(model.begin());
  }
  check_against_model(topology, model);
  for (const auto& [name, link] : topology.links()) {
    (void)name;
    for (const auto& [key, slots] : link.occupied) {
      (void)key;
      CHECK(slots.empty());
    }
  }
  CHECK(topology.provision_lightpath({"west", 0, 0}, {"east", 0, 0}, k400, "C").slot == 0);
}

TEST_CASE("scenario span counts and routing prescriptions") {
  const ScenarioConfig config = default_scenario_config();
  const std::map<int, std::pair<int, int>> expected_spans = {
      {1, {1, 1}}, {2, {2, 1}}, {3, {2, 1}}};
  for (const auto& [id, spans] : expected_spans) {
    ScenarioSetup setup = build_scenario(id, config);
    CHECK(setup.scenario.id == id);
    CHECK(setup.scenario.band_routes.at("L") == std::vector<std::string>{"link-cl"});
    ScenarioRun run = run_scenario(setup, config, trace_options(config));
    REQUIRE(run.results.size() == 6);
    for (const SignalResult& result : run.results) {
      REQUIRE(result.subchannels.size() == 2);
      const int want = result.signal.band_name == "C" ? spans.first : spans.second;
      CHECK(result.span_count == want);
      for (const QReport& report : result.subchannels) {
        CHECK(report.span_count == want);
      }
    }
  }
  CHECK(build_scenario(2, config).scenario.band_routes.at("C") ==
        std::vector<std::string>{"link-cl", "link-c"});
  CHECK(build_scenario(3, config).scenario.band_routes.at("C") ==
        std::vector<std::string>{"link-c", "link-cl"});
  CHECK(code_of([&] { build_scenario(4, config); }) == ErrorCode::unknown_scenario);
  CHECK(code_of([&] { build_scenario(0, config); }) == ErrorCode::unknown_scenario);
}

TEST_CASE("scenario margins: second span costs the C band exactly one dB") {
  const ScenarioConfig config = default_scenario_config();
  std::map<int, ScenarioRun> runs;
  for (int id : {1, 2, 3}) {
    ScenarioSetup setup = build_scenario(id, config);
    runs.emplace(id, run_scenario(setup, config, trace_options(config)));
  }
  for (size_t sig = 0; sig < runs.at(1).results.size(); ++sig) {
    const SignalResult& base = runs.at(1).results[sig];
    for (size_t sub = 0; sub < base.subchannels.size(); ++sub) {
      const QReport& s1 = base.subchannels[sub];
      const QReport& s2 = runs.at(2).results[sig].subchannels[sub];
      const QReport& s3 = runs.at(3).results[sig].subchannels[sub];
      CHECK(s1.error_free);
      CHECK(s2.error_free);
      CHECK(s3.error_free);
      CHECK(s1.crosstalk_penalty_db == doctest::Approx(0.0696).epsilon(5e-3));
      if (base.signal.band_name == "C") {
        CHECK(s1.margin_db == doctest::Approx(2.4304).epsilon(1e-3));
        CHECK(std::abs(s1.margin_db - 1.0 - s2.margin_db) < 1e-9);
        CHECK(std::abs(s2.margin_db - s3.margin_db) < 1e-9);
      } else {
        CHECK(s1.margin_db == doctest::Approx(2.4304).epsilon(1e-3));
        CHECK(std::abs(s1.margin_db - s2.margin_db) < 1e-9);
        CHECK(std::abs(s1.margin_db - s3.margin_db) < 1e-9);
      }
      // Receiver power sits inside the sensitivity window on every run.
      CHECK(s1.power_penalty_db == 0.0);
      CHECK(s2.power_penalty_db == 0.0);
      CHECK(s3.power_penalty_db == 0.0);
    }
  }
}

TEST_CASE("probe trace reproduces the drop-chain budget") {
  const ScenarioConfig config = default_scenario_config();
  CHECK(probe_signal(config).label == "C-middle");

  const PowerTrace trace = probe_trace(1, config);
  CHECK(trace.launch_dbm == config.tx_launch_dbm);
  CHECK(trace.output_dbm() == doctest::Approx(-12.59).epsilon(5e-3));
  double running = trace.launch_dbm;
  for (const PowerTraceEntry& entry : trace.entries) {
    CHECK(entry.power_in_dbm == doctest::Approx(running).epsilon(1e-12));
    CHECK(entry.power_out_dbm ==
          doctest::Approx(entry.power_in_dbm + entry.delta_db).epsilon(1e-12));
    running = entry.power_out_dbm;
    if (entry.label.rfind("level-C", 0) == 0 || entry.label.rfind("level-A", 0) == 0) {
      CHECK(entry.power_out_dbm == doctest::Approx(5.0).epsilon(1e-12));
    }
    if (entry.label.rfind("level-B", 0) == 0) {
      CHECK(entry.power_out_dbm == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
  // The drop chain is the published loss budget: WSS then MCS into the receiver.
  REQUIRE(trace.entries.size() >= 4);
  CHECK(trace.entries.front().label.rfind("tx:", 0) == 0);
  CHECK(trace.entries.back().label.rfind("rx:", 0) == 0);
  CHECK(trace.entries.back().delta_db == 0.0);
  const PowerTraceEntry& mcs_drop = trace.entries[trace.entries.size() - 2];
  const PowerTraceEntry& wss_drop = trace.entries[trace.entries.size() - 3];
  CHECK(wss_drop.label.rfind("wss-drop", 0) == 0);
  CHECK(mcs_drop.label.rfind("mcs-drop", 0) == 0);
  CHECK(mcs_drop.delta_db == doctest::Approx(-11.53).epsilon(5e-3));
}

TEST_CASE("input power sweep is flat inside the window, falls off below it") {
  const ScenarioConfig config = default_scenario_config();
  const std::vector<double> window = {-2.0, 0.0, 2.0, 5.0, 8.0, 10.0};
  const std::vector<SweepPoint> flat = input_power_sweep(1, config, window);
  REQUIRE(flat.size() == window.size());
  for (size_t i = 0; i < flat.size(); ++i) {
    CHECK(flat[i].power_dbm == window[i]);
    CHECK(std::abs(flat[i].margin_db - flat[0].margin_db) < 1e-9);
  }

  const std::vector<double> low = {-40.0, -36.0, -32.0, -28.0, -25.0};
  const std::vector<SweepPoint> falling = input_power_sweep(1, config, low);
  for (size_t i = 1; i < falling.size(); ++i) {
    CHECK(falling[i].margin_db > falling[i - 1].margin_db);
  }
  CHECK(falling.front().margin_db < 0.0);

  CHECK(code_of([&] { input_power_sweep(1, config, {-45.0}); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([&] { input_power_sweep(1, config, {12.0}); }) ==
        ErrorCode::invalid_argument);
  CHECK(input_power_sweep(1, config, {}).empty());
}

TEST_CASE("an inline drop-stage amplifier buys nothing") {
  const ScenarioConfig config = default_scenario_config();
  CHECK(inline_amp_benefit(1, config, 0.0) == 0.0);
  CHECK(std::abs(inline_amp_benefit(1, config, 5.0)) < 0.2);
  for (double gain = 1.0; gain <= 15.0; gain += 1.0) {
    CHECK(inline_amp_benefit(1, config, gain) <= 1e-12);
  }
  // Enough gain pushes the receiver past its window and hurts.
  CHECK(inline_amp_benefit(1, config, 25.0) < 0.0);
  CHECK(code_of([&] { inline_amp_benefit(1, config, -1.0); }) ==
        ErrorCode::invalid_argument);
}
