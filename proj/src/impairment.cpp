#include "roadmsim/impairment.hpp"

#include <cmath>

#include "roadmsim/error.hpp"

namespace roadmsim {

double PowerTrace::total_delta_db() const {
  double sum = 0.0;
  for (const auto& e : entries) sum += e.delta_db;
  return sum;
}

PowerTrace propagate_power(const std::vector<LedgerStep>& steps, double launch_dbm,
                           double floor_dbm) {
  if (launch_dbm <= floor_dbm) {
    throw Error(ErrorCode::signal_lost, "launch power already at or below the floor");
  }
  PowerTrace trace;
  trace.launch_dbm = launch_dbm;
  double power = launch_dbm;
  for (const auto& step : steps) {
    PowerTraceEntry entry;
    entry.label = step.label;
    entry.power_in_dbm = power;
    entry.delta_db = step.delta_db;
    entry.power_out_dbm = power + step.delta_db;
    power = entry.power_out_dbm;
    trace.entries.push_back(entry);
    if (power <= floor_dbm) {
      throw Error(ErrorCode::signal_lost,
                  "power fell to the floor after step '" + step.label + "'");
    }
  }
  return trace;
}

double crosstalk_penalty(const std::vector<double>& isolations_db, double k) {
  if (k <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "crosstalk coefficient must be positive");
  }
  double eps = 0.0;
  for (double iso : isolations_db) {
    if (iso <= 0.0) {
      throw Error(ErrorCode::invalid_argument, "isolation must be positive dB");
    }
    eps += std::pow(10.0, -iso / 10.0);
  }
  if (eps == 0.0) return 0.0;
  const double arg = 1.0 - k * std::sqrt(eps);
  if (arg <= 0.0) {
    throw Error(ErrorCode::saturated_penalty,
                "aggregate crosstalk saturates the penalty formula");
  }
  const double penalty = -10.0 * std::log10(arg);
  return penalty < 0.0 ? 0.0 : penalty;
}

double receiver_power_penalty(double power_dbm, const TransceiverSpec& transceiver,
                              double rolloff_db_per_db2) {
  if (rolloff_db_per_db2 < 0.0) {
    throw Error(ErrorCode::invalid_argument, "roll-off must be non-negative");
  }
  double excursion = 0.0;
  if (power_dbm < transceiver.sensitivity_min_dbm) {
    excursion = transceiver.sensitivity_min_dbm - power_dbm;
  } else if (power_dbm > transceiver.sensitivity_max_dbm) {
    excursion = power_dbm - transceiver.sensitivity_max_dbm;
  }
  return rolloff_db_per_db2 * excursion * excursion;
}

QReport q_margin(const std::string& label, const PowerTrace& trace, int span_count,
                 const std::vector<double>& isolations_db, const PenaltyModel& model,
                 const TransceiverSpec& transceiver) {
  if (span_count < 0) {
    throw Error(ErrorCode::invalid_argument, "span count must be non-negative");
  }
  QReport report;
  report.label = label;
  report.trace = trace;
  report.span_count = span_count;
  if (span_count >= 1) {
    report.span_penalty_db = model.first_span_penalty_db +
                             (span_count - 1) * model.extra_span_penalty_db;
  }
  report.crosstalk_penalty_db =
      crosstalk_penalty(isolations_db, model.crosstalk_coefficient);
  report.power_penalty_db = receiver_power_penalty(trace.output_dbm(), transceiver,
                                                   model.rolloff_db_per_db2);
  report.margin_db = transceiver.loopback_margin_db - report.span_penalty_db -
                     report.crosstalk_penalty_db - report.power_penalty_db;
  report.error_free = report.margin_db > 0.0;
  return report;
}

}  // namespace roadmsim
