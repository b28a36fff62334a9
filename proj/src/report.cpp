#include "roadmsim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "roadmsim/error.hpp"

namespace roadmsim {

namespace {

/// Folds negative zero into positive zero so formatting is sign-stable.
double canon(double value) { return value == 0.0 ? 0.0 : value; }

std::string text(const char* fmt, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, canon(value));
  return buffer;
}

std::string fixed3(double value) { return text("%.3f", value); }

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char c : cell) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string join_cells(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_cell(cells[i]);
  }
  return line;
}

std::string spans_cell(int spans) {
  return format_count(spans, spans == 1 ? "span" : "spans");
}

std::string subchannel_name(size_t index) { return "sc" + std::to_string(index + 1); }

}  // namespace

void ReportTable::validate() const {
  if (title.empty()) throw Error(ErrorCode::invalid_argument, "report table needs a title");
  if (note.empty()) {
    throw Error(ErrorCode::invalid_argument, title + ": report table needs a provenance note");
  }
  if (columns.empty()) {
    throw Error(ErrorCode::invalid_argument, title + ": report table needs columns");
  }
  for (const std::vector<std::string>& row : rows) {
    if (row.size() != columns.size()) {
      throw Error(ErrorCode::invalid_argument, title + ": ragged report row");
    }
  }
}

std::string format_db(double value) { return text("%.2f dB", value); }

std::string format_dbm(double value) { return text("%.2f dBm", value); }

std::string format_percent(double value) { return text("%.1f %%", value); }

std::string format_ghz(double value) { return text("%g GHz", value); }

std::string format_thz(double value) { return text("%.4f THz", value); }

std::string format_count(long long count, const std::string& unit) {
  std::string cell = std::to_string(count);
  if (!unit.empty()) cell += " " + unit;
  return cell;
}

std::string render_csv(const ReportTable& table) {
  table.validate();
  std::string out = "# " + table.title + "\n";
  out += "# note: " + table.note + "\n";
  out += join_cells(table.columns) + "\n";
  for (const std::vector<std::string>& row : table.rows) {
    out += join_cells(row) + "\n";
  }
  return out;
}

std::string render_output(const CommandOutput& output) {
  std::string out;
  for (const ReportTable& table : output.tables) {
    if (!out.empty()) out += "\n";
    out += render_csv(table);
  }
  if (!output.records.empty()) {
    if (!out.empty()) out += "\n";
    for (const std::string& record : output.records) {
      out += record;
      out += "\n";
    }
  }
  return out;
}

void write_output(const CommandOutput& output, std::ostream& os) {
  os << render_output(output);
}

CommandOutput cmd_plan(const RunConfig& config) {
  ReportTable table;
  table.title = "channel plan";
  table.note =
      "published relationship between signal baud rate, slot width, and the "
      "number of WDM channels per 4.8-THz band";
  table.columns = {"band",         "signal",      "spacing", "channels",
                   "first center", "last center", "capacity"};
  for (const std::string& band_name : config.plan_bands) {
    const Band& band = config.bands.at(band_name);
    for (const std::string& signal_name : config.plan_signals) {
      const SignalClass& signal = config.signals.at(signal_name);
      std::vector<std::string> row = {band.name, signal.name,
                                      format_ghz(signal.channel_spacing_ghz)};
      try {
        const ChannelPlan plan = build_channel_plan(band, signal.channel_spacing_ghz);
        row.push_back(format_count(plan.count(), "ch"));
        row.push_back(format_thz(plan.centers_thz.front()));
        row.push_back(format_thz(plan.centers_thz.back()));
        row.push_back(text("%.1f Tbps", plan.count() * signal.bit_rate_gbps / 1000.0));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::empty_plan) throw;
        row.insert(row.end(), {format_count(0, "ch"), "", "", text("%.1f Tbps", 0.0)});
      }
      table.rows.push_back(std::move(row));
    }
  }
  CommandOutput output;
  output.tables.push_back(std::move(table));
  return output;
}

CommandOutput cmd_adddrop(const RunConfig& config, const std::vector<int>& clients) {
  ReportTable table;
  table.title = "add/drop ratio";
  table.note =
      "published add/drop-ratio grid: (WSS ports - degrees + 1) MCS banks, "
      "ratio = banks x clients / (degrees x channels per degree); each row "
      "keeps its published per-degree channel count, so the C+L row divides "
      "by one band's 96 channels (counting both bands would halve it); the "
      "final row is the published mean requirement for the reference network";
  table.columns = {"configuration", "banks"};
  for (int count : clients) {
    table.columns.push_back(format_count(count, count == 1 ? "port" : "ports"));
  }
  for (const AddDropRow& spec : config.adddrop_rows) {
    const int banks = max_mcs_count(spec.wss_ports, spec.degrees);
    std::vector<std::string> row = {spec.label, format_count(banks, "banks")};
    for (int count : clients) {
      const double ratio =
          add_drop_ratio(spec.wss_ports, spec.degrees, count, spec.channels_per_degree);
      row.push_back(format_percent(100.0 * ratio));
    }
    table.rows.push_back(std::move(row));
  }
  std::vector<std::string> reference = {
      "required (" + std::to_string(config.reference_node_count) + "-node average)", ""};
  const double required = 100.0 * required_add_drop_ratio(1, config.reference_node_count);
  for (size_t i = 0; i < clients.size(); ++i) reference.push_back(format_percent(required));
  table.rows.push_back(std::move(reference));
  CommandOutput output;
  output.tables.push_back(std::move(table));
  return output;
}

namespace {

const PowerTraceEntry* last_with_prefix(const PowerTrace& trace, const std::string& prefix) {
  const PowerTraceEntry* found = nullptr;
  for (const PowerTraceEntry& entry : trace.entries) {
    if (entry.label.rfind(prefix, 0) == 0) found = &entry;
  }
  return found;
}

}  // namespace

CommandOutput cmd_budget(const RunConfig& config) {
  const ScenarioConfig& scenario = config.scenario;
  const TestSignal& probe = probe_signal(scenario);
  const PowerTrace trace = probe_trace(1, scenario);

  ReportTable ledger;
  ledger.title = "power budget (scenario 1 probe)";
  ledger.note =
      "per-subchannel dB ledger of the " + probe.label +
      " super-channel over the single C+L span; levelers hold the published "
      "A/B/C setpoints";
  ledger.columns = {"element", "input", "delta", "output"};
  for (const PowerTraceEntry& entry : trace.entries) {
    ledger.rows.push_back({entry.label, format_dbm(entry.power_in_dbm),
                           format_db(entry.delta_db), format_dbm(entry.power_out_dbm)});
  }

  const PowerTraceEntry* wss_drop = last_with_prefix(trace, "wss-drop@");
  const PowerTraceEntry* mcs_drop = last_with_prefix(trace, "mcs-drop@");
  if (wss_drop == nullptr || mcs_drop == nullptr) {
    throw Error(ErrorCode::invalid_argument, "probe trace lacks a drop stage");
  }
  const TransceiverSpec& receiver =
      probe.band_name == "L" ? scenario.transceiver_l : scenario.transceiver_c;
  const double receiver_dbm = trace.output_dbm();
  const double gain_db = 5.0;
  const double benefit = inline_amp_benefit(1, scenario, gain_db);

  ReportTable summary;
  summary.title = "amplifier-less drop path";
  summary.note =
      "receiver power is the node-input setpoint minus the drop WSS and MCS "
      "losses alone; the flat published power margins are reproduced by a "
      "model calibrated to them (a consistency check, not an independent "
      "validation)";
  summary.columns = {"quantity", "value"};
  summary.rows = {
      {"probe subchannel", probe.label + "/" + subchannel_name(
                               static_cast<size_t>(scenario.signal.subcarrier_count) - 1)},
      {"node input setpoint (A)", format_dbm(scenario.setpoints.a_dbm)},
      {"drop WSS loss", format_db(-wss_drop->delta_db)},
      {"drop MCS loss", format_db(-mcs_drop->delta_db)},
      {"receiver power", format_dbm(receiver_dbm)},
      {"sensitivity window",
       format_dbm(receiver.sensitivity_min_dbm) + " to " + format_dbm(receiver.sensitivity_max_dbm)},
      {"headroom above window floor", format_db(receiver_dbm - receiver.sensitivity_min_dbm)},
      {"headroom below window ceiling", format_db(receiver.sensitivity_max_dbm - receiver_dbm)},
      {"inline amp benefit at " + format_db(gain_db), format_db(benefit)},
  };

  CommandOutput output;
  output.tables.push_back(std::move(ledger));
  output.tables.push_back(std::move(summary));
  return output;
}

namespace {

bool reportable_outcome(const Error& err) {
  switch (err.code()) {
    case ErrorCode::no_route:
    case ErrorCode::mis_plug:
    case ErrorCode::client_busy:
    case ErrorCode::insufficient_ports:
    case ErrorCode::over_subscription:
      return true;
    default:
      return err.is_blocking();
  }
}

std::string join_links(const std::vector<std::string>& names) {
  std::string joined;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) joined += " then ";
    joined += names[i];
  }
  return joined;
}

}  // namespace

CommandOutput cmd_route(const RunConfig& config) {
  Topology topology = build_topology(config);
  CommandOutput output;
  ReportTable table;
  table.title = "route outcomes";
  table.note =
      "configured demands provisioned in order, shortest route and lowest "
      "free slot first; a blocked demand is a reported outcome, not a "
      "process failure";
  table.columns = {"src",  "dst",    "signal", "band",  "outcome",
                   "slot", "center", "spans",  "links", "detail"};
  for (const RouteRequest& request : config.routes) {
    const auto signal_it = config.signals.find(request.signal_name);
    if (signal_it == config.signals.end()) {
      throw Error(ErrorCode::unresolved_reference,
                  "route demand names unknown signal class " + request.signal_name);
    }
    const SignalClass& signal = signal_it->second;
    std::vector<std::string> row = {request.src.label(), request.dst.label(),
                                    request.signal_name, request.band_name};
    try {
      const Lightpath path =
          topology.provision_lightpath(request.src, request.dst, signal, request.band_name);
      const double center =
          topology.plan(path.band_name, signal.channel_spacing_ghz).center(path.slot);
      row.insert(row.end(),
                 {"provisioned", "slot " + std::to_string(path.slot), format_thz(center),
                  spans_cell(path.span_count()), join_links(path.link_names()), ""});
      std::string record = "route id=" + std::to_string(path.id) +
                           " src=" + path.src.label() + " dst=" + path.dst.label() +
                           " band=" + path.band_name + " signal=" + request.signal_name +
                           " slot=" + std::to_string(path.slot) +
                           " center_thz=" + text("%.4f", center) +
                           " spans=" + std::to_string(path.span_count());
      output.records.push_back(std::move(record));
      for (size_t i = 0; i < path.route.size(); ++i) {
        output.records.push_back("element id=" + std::to_string(path.id) +
                                 " step=" + std::to_string(i) +
                                 " label=" + path.route[i].label);
      }
    } catch (const Error& err) {
      if (!reportable_outcome(err)) throw;
      row.insert(row.end(), {to_string(err.code()), "", "", "", "", err.what()});
    }
    table.rows.push_back(std::move(row));
  }
  output.tables.insert(output.tables.begin(), std::move(table));
  return output;
}

namespace {

std::string routing_description(const Scenario& scenario) {
  std::string routing;
  for (const auto& [band, links] : scenario.band_routes) {
    if (!routing.empty()) routing += "; ";
    routing += band + " via " + join_links(links);
  }
  return routing;
}

void append_result_records(std::vector<std::string>& records, int scenario_id,
                           const SignalResult& result, bool include_traces) {
  for (const QReport& report : result.subchannels) {
    records.push_back("result scenario=" + std::to_string(scenario_id) +
                      " path=" + report.label +
                      " lightpath=" + std::to_string(result.lightpath_id) +
                      " spans=" + std::to_string(report.span_count) +
                      " span_db=" + fixed3(report.span_penalty_db) +
                      " xtalk_db=" + fixed3(report.crosstalk_penalty_db) +
                      " power_db=" + fixed3(report.power_penalty_db) +
                      " margin_db=" + fixed3(report.margin_db) +
                      " verdict=" + (report.error_free ? "error-free" : "errored"));
    if (!include_traces) continue;
    for (size_t step = 0; step < report.trace.entries.size(); ++step) {
      const PowerTraceEntry& entry = report.trace.entries[step];
      records.push_back("trace scenario=" + std::to_string(scenario_id) +
                        " path=" + report.label + " step=" + std::to_string(step) +
                        " label=" + entry.label + " in_dbm=" + fixed3(entry.power_in_dbm) +
                        " delta_db=" + fixed3(entry.delta_db) +
                        " out_dbm=" + fixed3(entry.power_out_dbm));
    }
  }
}

}  // namespace

CommandOutput cmd_scenario(const RunConfig& config, const std::string& selector,
                           bool include_traces) {
  std::vector<int> ids;
  if (selector == "all") {
    ids = {1, 2, 3};
  } else {
    try {
      size_t parsed = 0;
      const int id = std::stoi(selector, &parsed);
      if (parsed != selector.size()) throw std::invalid_argument(selector);
      ids = {id};
    } catch (const std::exception&) {
      throw Error(ErrorCode::unknown_scenario,
                  "unknown scenario '" + selector + "' (use 1, 2, 3, or all)");
    }
  }

  const ScenarioConfig& scenario_config = config.scenario;
  const TraceOptions options = trace_options(scenario_config);
  CommandOutput output;
  std::vector<ScenarioRun> runs;
  for (int id : ids) {
    ScenarioSetup setup = build_scenario(id, scenario_config);
    ScenarioRun run = run_scenario(setup, scenario_config, options);

    ReportTable table;
    table.title = "scenario " + std::to_string(id) + " margins";
    table.note = "published per-subchannel transmission margins; routing: " +
                 routing_description(setup.scenario);
    table.columns = {"signal",           "subchannel",    "spans",  "span penalty",
                     "crosstalk penalty", "power penalty", "margin", "verdict"};
    for (const SignalResult& result : run.results) {
      for (size_t i = 0; i < result.subchannels.size(); ++i) {
        const QReport& report = result.subchannels[i];
        table.rows.push_back({result.signal.label, subchannel_name(i),
                              spans_cell(report.span_count),
                              format_db(report.span_penalty_db),
                              format_db(report.crosstalk_penalty_db),
                              format_db(report.power_penalty_db), format_db(report.margin_db),
                              report.error_free ? "error-free" : "errored"});
      }
      append_result_records(output.records, id, result, include_traces);
    }
    output.tables.push_back(std::move(table));
    runs.push_back(std::move(run));
  }

  if (ids.size() > 1 && !runs.empty()) {
    ReportTable summary;
    summary.title = "margin summary";
    summary.note =
        "per-subchannel margins side by side; the loopback column is the "
        "configured back-to-back calibration the published deltas hang off";
    summary.columns = {"signal", "subchannel", "loopback"};
    for (size_t r = 0; r < runs.size(); ++r) {
      summary.columns.push_back("scenario " + std::to_string(runs[r].scenario_id));
    }
    const ScenarioRun& first = runs.front();
    for (size_t s = 0; s < first.results.size(); ++s) {
      const SignalResult& result = first.results[s];
      const TransceiverSpec& transceiver = result.signal.band_name == "L"
                                               ? scenario_config.transceiver_l
                                               : scenario_config.transceiver_c;
      for (size_t i = 0; i < result.subchannels.size(); ++i) {
        std::vector<std::string> row = {result.signal.label, subchannel_name(i),
                                        format_db(transceiver.loopback_margin_db)};
        for (const ScenarioRun& run : runs) {
          row.push_back(format_db(run.results.at(s).subchannels.at(i).margin_db));
        }
        summary.rows.push_back(std::move(row));
      }
    }
    output.tables.push_back(std::move(summary));
  }
  return output;
}

std::vector<double> sweep_powers(const SweepConfig& sweep) {
  if (sweep.step_db <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "sweep step must be positive");
  }
  std::vector<double> powers;
  for (int i = 0;; ++i) {
    const double power = sweep.start_dbm + i * sweep.step_db;
    if (power > sweep.stop_dbm + 1e-9) break;
    powers.push_back(power);
    if (powers.size() > 100000) {
      throw Error(ErrorCode::invalid_argument, "sweep resolves to too many points");
    }
  }
  return powers;
}

CommandOutput cmd_sweep(const RunConfig& config) {
  const ScenarioConfig& scenario = config.scenario;
  const std::vector<double> powers = sweep_powers(config.sweep);
  const std::vector<SweepPoint> points =
      input_power_sweep(config.sweep.scenario_id, scenario, powers,
                        config.sweep.range_min_dbm, config.sweep.range_max_dbm);
  const TestSignal& probe = probe_signal(scenario);
  const std::string subchannel =
      subchannel_name(static_cast<size_t>(scenario.signal.subcarrier_count) - 1);

  ReportTable table;
  table.title = "input power sweep (scenario " + std::to_string(config.sweep.scenario_id) + ")";
  table.note =
      "published dependence of after-transmission quality on node input "
      "power: flat while the receiver stays inside its sensitivity window; "
      "reproduced by a model calibrated to that result (a consistency "
      "check, not an independent validation)";
  table.columns = {"input power (A)", "margin"};
  double low = 0.0;
  double high = 0.0;
  CommandOutput output;
  for (size_t i = 0; i < points.size(); ++i) {
    const SweepPoint& point = points[i];
    table.rows.push_back({format_dbm(point.power_dbm), format_db(point.margin_db)});
    low = i == 0 ? point.margin_db : std::min(low, point.margin_db);
    high = i == 0 ? point.margin_db : std::max(high, point.margin_db);
    output.records.push_back("sweep scenario=" + std::to_string(config.sweep.scenario_id) +
                             " signal=" + probe.label + " subchannel=" + subchannel +
                             " power_dbm=" + fixed3(point.power_dbm) +
                             " margin_db=" + fixed3(point.margin_db));
  }
  table.rows.push_back({"flatness (max - min)", format_db(high - low)});
  output.tables.insert(output.tables.begin(), std::move(table));
  return output;
}

}  // namespace roadmsim
