#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "roadmsim/config.hpp"

namespace roadmsim {

/// Rectangular table of formatted cells; every numeric cell carries its
/// unit suffix and every table names the published result it mirrors.
struct ReportTable {
  std::string title;
  std::string note;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void validate() const;
};

/// What a command emits: tables rendered as CSV and a line-delimited
/// key=value record stream (traces, per-path results).
struct CommandOutput {
  std::vector<ReportTable> tables;
  std::vector<std::string> records;
};

std::string format_db(double value);
std::string format_dbm(double value);
std::string format_percent(double value);
std::string format_ghz(double value);
std::string format_thz(double value);
std::string format_count(long long count, const std::string& unit);

/// CSV rendering: "# <title>" and "# note: <note>" comment lines, a header
/// row, then one line per row. Cells holding commas are double-quoted.
std::string render_csv(const ReportTable& table);

/// Tables as CSV separated by blank lines, then the records verbatim.
std::string render_output(const CommandOutput& output);

void write_output(const CommandOutput& output, std::ostream& os);

/// Channel-count grid over the configured (band, signal class) pairs.
CommandOutput cmd_plan(const RunConfig& config);

/// Add/drop-ratio grid over the configured rows and client counts, with
/// the reference-network requirement appended.
CommandOutput cmd_adddrop(const RunConfig& config, const std::vector<int>& clients);

/// Element-by-element power budget of the probe subchannel plus the
/// amplifier-less drop-path summary and the inline-amplifier check.
CommandOutput cmd_budget(const RunConfig& config);

/// Provisions the configured demand list over the demo topology; blocked
/// demands become reported outcomes, not failures.
CommandOutput cmd_route(const RunConfig& config);

/// Margin tables for one routing scenario or all three, with power-trace
/// and result records per evaluated subchannel.
CommandOutput cmd_scenario(const RunConfig& config, const std::string& selector,
                           bool include_traces = true);

/// Node-input-power sweep of the probe subchannel, flatness appended.
CommandOutput cmd_sweep(const RunConfig& config);

/// The sweep points start, start+step, ... up to stop (inclusive).
std::vector<double> sweep_powers(const SweepConfig& sweep);

}  // namespace roadmsim
