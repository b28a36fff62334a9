#pragma once

#include <string>
#include <vector>

#include "roadmsim/devices.hpp"

namespace roadmsim {

/// One labelled power change along a path; all powers in dBm/subchannel.
struct LedgerStep {
  std::string label;
  double delta_db = 0.0;
};

struct PowerTraceEntry {
  std::string label;
  double power_in_dbm = 0.0;
  double delta_db = 0.0;
  double power_out_dbm = 0.0;
};

/// Exact dB ledger: every entry satisfies out == in + delta and entries chain.
struct PowerTrace {
  double launch_dbm = 0.0;
  std::vector<PowerTraceEntry> entries;

  double output_dbm() const {
    return entries.empty() ? launch_dbm : entries.back().power_out_dbm;
  }
  /// Sum of deltas in trace order.
  double total_delta_db() const;
};

struct PenaltyModel {
  double first_span_penalty_db = 1.5;
  double extra_span_penalty_db = 1.0;
  double crosstalk_coefficient = 2.0;  // interferometric field-amplitude factor
  double power_floor_dbm = -60.0;
  double rolloff_db_per_db2 = 0.5;  // receiver penalty outside the sensitivity window
};

struct QReport {
  std::string label;
  PowerTrace trace;
  int span_count = 0;
  double span_penalty_db = 0.0;
  double crosstalk_penalty_db = 0.0;
  double power_penalty_db = 0.0;
  double margin_db = 0.0;
  bool error_free = false;  // margin > 0
};

/// Applies the steps in order, starting from the launch power. Errors when
/// the running power crosses the floor at any point.
PowerTrace propagate_power(const std::vector<LedgerStep>& steps, double launch_dbm,
                           double floor_dbm = -60.0);

/// Coherent in-band crosstalk penalty from the per-stage isolations:
/// eps = sum(10^(-X/10)), penalty = -10*log10(1 - k*sqrt(eps)), floored at 0.
/// Errors once k*sqrt(eps) reaches 1 (the formula saturates).
double crosstalk_penalty(const std::vector<double>& isolations_db, double k = 2.0);

/// 0 dB inside the sensitivity window; quadratic roll-off outside.
double receiver_power_penalty(double power_dbm, const TransceiverSpec& transceiver,
                              double rolloff_db_per_db2);

/// Penalty-ledger margin: loopback margin minus the first-span and per-extra-
/// span penalties, crosstalk, and any receiver power penalty.
QReport q_margin(const std::string& label, const PowerTrace& trace, int span_count,
                 const std::vector<double>& isolations_db, const PenaltyModel& model,
                 const TransceiverSpec& transceiver);

}  // namespace roadmsim
