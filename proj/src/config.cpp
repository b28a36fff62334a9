#include "roadmsim/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "roadmsim/error.hpp"

namespace roadmsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail_invalid(const std::string& origin, const std::string& message) {
  throw Error(ErrorCode::config_invalid, origin + ": " + message);
}

const json& member(const json& j, const char* key, const std::string& origin) {
  auto it = j.find(key);
  if (it == j.end()) {
    fail_invalid(origin, std::string("missing required key '") + key + "'");
  }
  return *it;
}

template <typename T>
void read_into(const json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it != j.end()) it->get_to(out);
}

std::vector<Band> resolve_bands(const std::vector<std::string>& names,
                                const std::map<std::string, Band>& bands,
                                const std::string& origin) {
  std::vector<Band> out;
  out.reserve(names.size());
  for (const auto& name : names) {
    auto it = bands.find(name);
    if (it == bands.end()) {
      throw Error(ErrorCode::unresolved_reference,
                  origin + " references undefined band '" + name + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

template <typename T>
const T& resolve(const std::map<std::string, T>& library, const std::string& name,
                 const std::string& kind, const std::string& origin) {
  auto it = library.find(name);
  if (it == library.end()) {
    throw Error(ErrorCode::unresolved_reference,
                origin + " references undefined " + kind + " '" + name + "'");
  }
  return it->second;
}

TransceiverId parse_site(const json& j, const std::string& origin) {
  TransceiverId id;
  id.node = member(j, "node", origin).get<std::string>();
  id.bank = member(j, "bank", origin).get<int>();
  id.client = member(j, "client", origin).get<int>();
  return id;
}

void parse_bands(const json& j, RunConfig& config) {
  for (const auto& [name, body] : j.items()) {
    Band band;
    band.name = name;
    band.low_edge_thz = member(body, "low_thz", "band " + name).get<double>();
    band.high_edge_thz = member(body, "high_thz", "band " + name).get<double>();
    config.bands.insert_or_assign(name, band);
  }
}

void parse_signals(const json& j, RunConfig& config) {
  for (const auto& [name, body] : j.items()) {
    SignalClass sig;
    sig.name = name;
    const std::string origin = "signal " + name;
    sig.bit_rate_gbps = member(body, "bit_rate_gbps", origin).get<double>();
    sig.channel_spacing_ghz = member(body, "channel_spacing_ghz", origin).get<double>();
    sig.baud_rate_gbaud = member(body, "baud_rate_gbaud", origin).get<double>();
    read_into(body, "modulation", sig.modulation);
    read_into(body, "subcarriers", sig.subcarrier_count);
    read_into(body, "subcarrier_spacing_ghz", sig.subcarrier_spacing_ghz);
    config.signals.insert_or_assign(name, sig);
  }
}

void parse_devices(const json& j, RunConfig& config) {
  if (auto it = j.find("wss"); it != j.end()) {
    for (const auto& [name, body] : it->items()) {
      const std::string origin = "wss " + name;
      WssSpec spec;
      spec.name = name;
      spec.port_count = member(body, "ports", origin).get<int>();
      std::vector<std::string> band_names =
          member(body, "bands", origin).get<std::vector<std::string>>();
      spec.bands = resolve_bands(band_names, config.bands, origin);
      spec.loss_min_db = member(body, "loss_min_db", origin).get<double>();
      spec.loss_max_db = member(body, "loss_max_db", origin).get<double>();
      spec.loss_avg_low_db = member(body, "loss_avg_low_db", origin).get<double>();
      spec.loss_avg_high_db = member(body, "loss_avg_high_db", origin).get<double>();
      config.wss.insert_or_assign(name, spec);
    }
  }
  if (auto it = j.find("mcs"); it != j.end()) {
    for (const auto& [name, body] : it->items()) {
      const std::string origin = "mcs " + name;
      McsSpec spec;
      spec.name = name;
      spec.degree_ports = member(body, "degree_ports", origin).get<int>();
      spec.client_ports = member(body, "client_ports", origin).get<int>();
      read_into(body, "excess_loss_db", spec.excess_loss_db);
      read_into(body, "min_cumulative_isolation_db", spec.min_cumulative_isolation_db);
      read_into(body, "isolation_ripple_db", spec.isolation_ripple_db);
      std::vector<std::string> band_names =
          member(body, "bands", origin).get<std::vector<std::string>>();
      spec.bands = resolve_bands(band_names, config.bands, origin);
      config.mcs.insert_or_assign(name, spec);
    }
  }
  if (auto it = j.find("edfa"); it != j.end()) {
    for (const auto& [name, body] : it->items()) {
      const std::string origin = "edfa " + name;
      EdfaSpec spec;
      spec.name = name;
      spec.band_name = member(body, "band", origin).get<std::string>();
      if (config.bands.count(spec.band_name) == 0) {
        throw Error(ErrorCode::unresolved_reference,
                    origin + " references undefined band '" + spec.band_name + "'");
      }
      spec.gain_db = member(body, "gain_db", origin).get<double>();
      read_into(body, "max_output_power_dbm", spec.max_output_power_dbm);
      config.edfas.insert_or_assign(name, spec);
    }
  }
  if (auto it = j.find("coupler"); it != j.end()) {
    for (const auto& [name, body] : it->items()) {
      CouplerSpec spec;
      spec.name = name;
      std::string kind = "band_mux";
      read_into(body, "kind", kind);
      if (kind == "band_mux") {
        spec.kind = CouplerSpec::Kind::band_mux;
      } else if (kind == "band_demux") {
        spec.kind = CouplerSpec::Kind::band_demux;
      } else {
        fail_invalid("coupler " + name, "unknown kind '" + kind + "'");
      }
      read_into(body, "loss_per_pass_db", spec.loss_per_pass_db);
      config.couplers.insert_or_assign(name, spec);
    }
  }
  if (auto it = j.find("transceiver"); it != j.end()) {
    for (const auto& [name, body] : it->items()) {
      const std::string origin = "transceiver " + name;
      TransceiverSpec spec;
      spec.name = name;
      spec.band_names = member(body, "bands", origin).get<std::vector<std::string>>();
      for (const auto& band : spec.band_names) {
        if (config.bands.count(band) == 0) {
          throw Error(ErrorCode::unresolved_reference,
                      origin + " references undefined band '" + band + "'");
        }
      }
      read_into(body, "fec_threshold_q_db", spec.fec_threshold_q_db);
      read_into(body, "loopback_margin_db", spec.loopback_margin_db);
      read_into(body, "sensitivity_min_dbm", spec.sensitivity_min_dbm);
      read_into(body, "sensitivity_max_dbm", spec.sensitivity_max_dbm);
      config.transceivers.insert_or_assign(name, spec);
    }
  }
}

void parse_nodes(const json& j, RunConfig& config) {
  config.nodes.clear();
  for (const auto& [name, body] : j.items()) {
    const std::string origin = "node " + name;
    NodeConfig node;
    node.name = name;
    std::string arch = "cl_multiband";
    read_into(body, "architecture", arch);
    node.architecture = architecture_from_string(arch);
    node.degrees = member(body, "degrees", origin).get<int>();
    node.wss = resolve(config.wss, member(body, "wss", origin).get<std::string>(), "wss",
                       origin);
    node.mcs = resolve(config.mcs, member(body, "mcs", origin).get<std::string>(), "mcs",
                       origin);
    if (auto it = body.find("wss_l"); it != body.end()) {
      node.wss_l = resolve(config.wss, it->get<std::string>(), "wss", origin);
    }
    if (auto it = body.find("mcs_l"); it != body.end()) {
      node.mcs_l = resolve(config.mcs, it->get<std::string>(), "mcs", origin);
    }
    read_into(body, "channels_per_degree", node.channels_per_degree);
    if (auto it = body.find("mcs_count_override"); it != body.end() && !it->is_null()) {
      node.mcs_count_override = it->get<int>();
    }
    std::string stage = "wss";
    read_into(body, "drop_stage", stage);
    if (stage == "wss") {
      node.drop_stage = DropStage::wss;
    } else if (stage == "splitter") {
      node.drop_stage = DropStage::splitter;
    } else {
      fail_invalid(origin, "unknown drop_stage '" + stage + "'");
    }
    config.nodes.push_back(std::move(node));
  }
}

void parse_links(const json& j, RunConfig& config) {
  config.links.clear();
  for (const auto& [name, body] : j.items()) {
    const std::string origin = "link " + name;
    LinkConfig link;
    link.name = name;
    link.a.node = member(member(body, "a", origin), "node", origin).get<std::string>();
    link.a.degree = member(member(body, "a", origin), "degree", origin).get<int>();
    link.b.node = member(member(body, "b", origin), "node", origin).get<std::string>();
    link.b.degree = member(member(body, "b", origin), "degree", origin).get<int>();
    read_into(body, "attenuation_db", link.attenuation_db);
    link.band_names = member(body, "bands", origin).get<std::vector<std::string>>();
    const json& amps = member(body, "edfas", origin);
    for (const auto& [band, amp_name] : amps.items()) {
      link.edfas.insert_or_assign(
          band, resolve(config.edfas, amp_name.get<std::string>(), "edfa", origin));
    }
    if (auto it = body.find("coupler"); it != body.end()) {
      link.coupler = resolve(config.couplers, it->get<std::string>(), "coupler", origin);
    }
    config.links.push_back(std::move(link));
  }
}

void parse_scenario(const json& j, RunConfig& config) {
  ScenarioConfig& s = config.scenario;
  const std::string origin = "scenario";
  if (auto it = j.find("wss"); it != j.end()) {
    s.wss = resolve(config.wss, it->get<std::string>(), "wss", origin);
  }
  if (auto it = j.find("mcs"); it != j.end()) {
    s.mcs = resolve(config.mcs, it->get<std::string>(), "mcs", origin);
  }
  if (auto it = j.find("edfa_c"); it != j.end()) {
    s.edfa_c = resolve(config.edfas, it->get<std::string>(), "edfa", origin);
  }
  if (auto it = j.find("edfa_l"); it != j.end()) {
    s.edfa_l = resolve(config.edfas, it->get<std::string>(), "edfa", origin);
  }
  if (auto it = j.find("coupler"); it != j.end()) {
    s.coupler = resolve(config.couplers, it->get<std::string>(), "coupler", origin);
  }
  if (auto it = j.find("transceiver_c"); it != j.end()) {
    s.transceiver_c = resolve(config.transceivers, it->get<std::string>(), "transceiver",
                              origin);
  }
  if (auto it = j.find("transceiver_l"); it != j.end()) {
    s.transceiver_l = resolve(config.transceivers, it->get<std::string>(), "transceiver",
                              origin);
  }
  if (auto it = j.find("signal"); it != j.end()) {
    s.signal = resolve(config.signals, it->get<std::string>(), "signal", origin);
  }
  read_into(j, "link_attenuation_db", s.link_attenuation_db);
  if (auto it = j.find("test_signals"); it != j.end()) {
    s.test_signals.clear();
    for (const auto& body : *it) {
      TestSignal signal;
      signal.label = member(body, "label", origin).get<std::string>();
      signal.band_name = member(body, "band", origin).get<std::string>();
      signal.subchannel_nm =
          member(body, "subchannels_nm", origin).get<std::vector<double>>();
      if (config.bands.count(signal.band_name) == 0) {
        throw Error(ErrorCode::unresolved_reference,
                    origin + " test signal '" + signal.label +
                        "' references undefined band '" + signal.band_name + "'");
      }
      s.test_signals.push_back(std::move(signal));
    }
  }
}

void validate_config(const RunConfig& config) {
  for (const auto& [name, band] : config.bands) band.validate();
  if (config.bands.count("C") != 0 && config.bands.count("L") != 0) {
    validate_band_pair(config.bands.at("C"), config.bands.at("L"));
  }
  for (const auto& [name, sig] : config.signals) sig.validate();
  for (const auto& [name, spec] : config.wss) spec.validate();
  for (const auto& [name, spec] : config.mcs) spec.validate();
  for (const auto& [name, spec] : config.couplers) spec.validate();
  for (const auto& [name, spec] : config.transceivers) spec.validate();
  for (const auto& node : config.nodes) node.validate();  // surfaces W < D at load
  for (const auto& link : config.links) link.validate();
  for (const auto& row : config.adddrop_rows) {
    max_mcs_count(row.wss_ports, row.degrees);
    if (row.channels_per_degree < 1) {
      fail_invalid("adddrop row " + row.label, "channels_per_degree must be positive");
    }
  }
  for (const auto& client : config.adddrop_clients) {
    if (client < 0) fail_invalid("adddrop", "client counts must be non-negative");
  }
  for (const auto& name : config.plan_bands) {
    if (config.bands.count(name) == 0) {
      throw Error(ErrorCode::unresolved_reference,
                  "plan references undefined band '" + name + "'");
    }
  }
  for (const auto& name : config.plan_signals) {
    if (config.signals.count(name) == 0) {
      throw Error(ErrorCode::unresolved_reference,
                  "plan references undefined signal '" + name + "'");
    }
  }
  for (const auto& [site, spec_name] : config.attachments) {
    if (config.transceivers.count(spec_name) == 0) {
      throw Error(ErrorCode::unresolved_reference,
                  "attachment at " + site.label() + " references undefined transceiver '" +
                      spec_name + "'");
    }
  }
  for (const auto& route : config.routes) {
    if (config.signals.count(route.signal_name) == 0) {
      throw Error(ErrorCode::unresolved_reference,
                  "route references undefined signal '" + route.signal_name + "'");
    }
    if (config.bands.count(route.band_name) == 0) {
      throw Error(ErrorCode::unresolved_reference,
                  "route references undefined band '" + route.band_name + "'");
    }
  }
  if (config.sweep.step_db <= 0.0) fail_invalid("sweep", "step_db must be positive");
  if (config.sweep.stop_dbm < config.sweep.start_dbm) {
    fail_invalid("sweep", "stop_dbm must not be below start_dbm");
  }
  if (config.sweep.start_dbm < config.sweep.range_min_dbm ||
      config.sweep.stop_dbm > config.sweep.range_max_dbm) {
    fail_invalid("sweep", "start/stop must lie inside [range_min_dbm, range_max_dbm]");
  }
  config.scenario.signal.validate();
  if (config.scenario.test_signals.empty()) {
    fail_invalid("scenario", "at least one test signal is required");
  }
}

}  // namespace

RunConfig default_run_config() {
  RunConfig config;
  config.seed = 1;

  const ScenarioConfig scenario = default_scenario_config();
  config.scenario = scenario;
  config.bands = {{"C", scenario.band_c}, {"L", scenario.band_l}};

  auto make_signal = [](const char* name, double gbps, double baud, double spacing,
                        int subcarriers, double sub_spacing) {
    SignalClass sig;
    sig.name = name;
    sig.bit_rate_gbps = gbps;
    sig.modulation = "DP-16QAM";
    sig.baud_rate_gbaud = baud;
    sig.channel_spacing_ghz = spacing;
    sig.subcarrier_count = subcarriers;
    sig.subcarrier_spacing_ghz = sub_spacing;
    return sig;
  };
  config.signals = {
      {"200G", make_signal("200G", 200.0, 32.0, 50.0, 1, 0.0)},
      {"400G", make_signal("400G", 400.0, 64.0, 75.0, 1, 0.0)},
      {"400G-87.5", make_signal("400G-87.5", 400.0, 64.0, 87.5, 1, 0.0)},
      {"800G", make_signal("800G", 800.0, 130.0, 150.0, 1, 0.0)},
      {"1T-dual", scenario.signal},
  };

  WssSpec wss20 = scenario.wss;
  wss20.name = "wss-1x20-c";
  wss20.port_count = 20;
  wss20.bands = {scenario.band_c};
  WssSpec wss32 = scenario.wss;
  wss32.name = "wss-1x32-cl";
  wss32.port_count = 32;
  config.wss = {{scenario.wss.name, scenario.wss},
                {wss20.name, wss20},
                {wss32.name, wss32}};
  config.mcs = {{scenario.mcs.name, scenario.mcs}};
  config.edfas = {{scenario.edfa_c.name, scenario.edfa_c},
                  {scenario.edfa_l.name, scenario.edfa_l}};
  config.couplers = {{scenario.coupler.name, scenario.coupler}};
  TransceiverSpec tx_cl = scenario.transceiver_c;
  tx_cl.name = "tx-cl";
  tx_cl.band_names = {"C", "L"};
  config.transceivers = {{scenario.transceiver_c.name, scenario.transceiver_c},
                         {scenario.transceiver_l.name, scenario.transceiver_l},
                         {tx_cl.name, tx_cl}};

  for (const char* name : {"west", "east"}) {
    NodeConfig node;
    node.name = name;
    node.architecture = NodeArchitecture::cl_multiband;
    node.degrees = 2;
    node.wss = scenario.wss;
    node.mcs = scenario.mcs;
    config.nodes.push_back(node);
  }
  LinkConfig cl;
  cl.name = "link-cl";
  cl.a = {"west", 0};
  cl.b = {"east", 0};
  cl.band_names = {"C", "L"};
  cl.edfas = {{"C", scenario.edfa_c}, {"L", scenario.edfa_l}};
  cl.coupler = scenario.coupler;
  LinkConfig c_only;
  c_only.name = "link-c";
  c_only.a = {"west", 1};
  c_only.b = {"east", 1};
  c_only.band_names = {"C"};
  c_only.edfas = {{"C", scenario.edfa_c}};
  config.links = {cl, c_only};

  config.attachments = {
      {{"west", 0, 0}, "tx-c"},
      {{"east", 0, 0}, "tx-c"},
      {{"west", 0, 1}, "tx-l"},
      {{"east", 0, 1}, "tx-l"},
  };
  config.routes = {
      {{"west", 0, 0}, {"east", 0, 0}, "800G", "C"},
      {{"west", 0, 1}, {"east", 0, 1}, "1T-dual", "L"},
  };

  config.adddrop_rows = {
      {"C band (1x20 WSS)", 20, 8, 96},
      {"C+L band (1x32 WSS)", 32, 8, 96},
  };
  config.adddrop_clients = {4, 8, 12, 16, 24};
  config.reference_node_count = 10;

  config.plan_bands = {"C", "L"};
  config.plan_signals = {"200G", "400G", "400G-87.5", "800G", "1T-dual"};
  return config;
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::config_parse, origin + ": " + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::config_parse, origin + ": top level must be an object");
  }

  RunConfig config = default_run_config();
  try {
    read_into(j, "seed", config.seed);
    if (auto it = j.find("bands"); it != j.end()) parse_bands(*it, config);
    if (auto it = j.find("signals"); it != j.end()) parse_signals(*it, config);
    if (auto it = j.find("devices"); it != j.end()) parse_devices(*it, config);
    if (auto it = j.find("nodes"); it != j.end()) parse_nodes(*it, config);
    if (auto it = j.find("links"); it != j.end()) parse_links(*it, config);
    if (auto it = j.find("transceivers"); it != j.end()) {
      config.attachments.clear();
      for (const auto& body : *it) {
        TransceiverId site = parse_site(member(body, "at", "transceivers"), "transceivers");
        config.attachments.push_back(
            {site, member(body, "spec", "transceivers").get<std::string>()});
      }
    }
    if (auto it = j.find("routes"); it != j.end()) {
      config.routes.clear();
      for (const auto& body : *it) {
        RouteRequest route;
        route.src = parse_site(member(body, "src", "routes"), "routes");
        route.dst = parse_site(member(body, "dst", "routes"), "routes");
        route.signal_name = member(body, "signal", "routes").get<std::string>();
        route.band_name = member(body, "band", "routes").get<std::string>();
        config.routes.push_back(std::move(route));
      }
    }
    if (auto it = j.find("scenario"); it != j.end()) parse_scenario(*it, config);
    if (auto it = j.find("setpoints"); it != j.end()) {
      read_into(*it, "a_dbm", config.scenario.setpoints.a_dbm);
      read_into(*it, "b_dbm", config.scenario.setpoints.b_dbm);
      read_into(*it, "c_dbm", config.scenario.setpoints.c_dbm);
    }
    if (auto it = j.find("penalty"); it != j.end()) {
      read_into(*it, "first_span_db", config.scenario.penalty.first_span_penalty_db);
      read_into(*it, "extra_span_db", config.scenario.penalty.extra_span_penalty_db);
      read_into(*it, "crosstalk_coefficient", config.scenario.penalty.crosstalk_coefficient);
      read_into(*it, "power_floor_dbm", config.scenario.penalty.power_floor_dbm);
      read_into(*it, "rolloff_db_per_db2", config.scenario.penalty.rolloff_db_per_db2);
    }
    read_into(j, "tx_launch_dbm", config.scenario.tx_launch_dbm);
    if (auto it = j.find("adddrop"); it != j.end()) {
      if (auto rows = it->find("rows"); rows != it->end()) {
        config.adddrop_rows.clear();
        for (const auto& body : *rows) {
          AddDropRow row;
          row.label = member(body, "label", "adddrop").get<std::string>();
          row.wss_ports = member(body, "wss_ports", "adddrop").get<int>();
          row.degrees = member(body, "degrees", "adddrop").get<int>();
          row.channels_per_degree =
              member(body, "channels_per_degree", "adddrop").get<int>();
          config.adddrop_rows.push_back(std::move(row));
        }
      }
      read_into(*it, "clients", config.adddrop_clients);
      read_into(*it, "reference_node_count", config.reference_node_count);
    }
    if (auto it = j.find("plan"); it != j.end()) {
      read_into(*it, "bands", config.plan_bands);
      read_into(*it, "signals", config.plan_signals);
    }
    if (auto it = j.find("sweep"); it != j.end()) {
      read_into(*it, "scenario_id", config.sweep.scenario_id);
      read_into(*it, "start_dbm", config.sweep.start_dbm);
      read_into(*it, "stop_dbm", config.sweep.stop_dbm);
      read_into(*it, "step_db", config.sweep.step_db);
      read_into(*it, "range_min_dbm", config.sweep.range_min_dbm);
      read_into(*it, "range_max_dbm", config.sweep.range_max_dbm);
    }
    read_into(j, "output_dir", config.output_dir);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::config_invalid, origin + ": " + e.what());
  }

  config.scenario.seed = config.seed;
  validate_config(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::config_parse, "cannot open configuration file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

void apply_seed(RunConfig& config, uint64_t seed) {
  config.seed = seed;
  config.scenario.seed = seed;
}

Topology build_topology(const RunConfig& config) {
  Topology topology;
  for (const auto& [name, band] : config.bands) topology.add_band(band);
  for (const auto& node : config.nodes) topology.add_node(node);
  for (const auto& link : config.links) topology.add_link(link);
  for (const auto& [site, spec_name] : config.attachments) {
    topology.attach_transceiver(
        site, resolve(config.transceivers, spec_name, "transceiver", "attachment"));
  }
  return topology;
}

}  // namespace roadmsim
