#include "roadmsim/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace roadmsim {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unsupported_signal: return "unsupported-signal";
    case ErrorCode::empty_plan: return "empty-plan";
    case ErrorCode::slot_overflow: return "slot-overflow";
    case ErrorCode::band_unsupported: return "band-unsupported";
    case ErrorCode::contention: return "contention";
    case ErrorCode::client_busy: return "client-busy";
    case ErrorCode::insufficient_ports: return "insufficient-ports";
    case ErrorCode::over_subscription: return "over-subscription";
    case ErrorCode::mis_plug: return "mis-plug";
    case ErrorCode::spectrum_blocked: return "spectrum-blocked";
    case ErrorCode::port_blocked: return "port-blocked";
    case ErrorCode::band_blocked: return "band-blocked";
    case ErrorCode::no_route: return "no-route";
    case ErrorCode::signal_lost: return "signal-lost";
    case ErrorCode::saturated_penalty: return "saturated-penalty";
    case ErrorCode::config_parse: return "config-parse";
    case ErrorCode::unresolved_reference: return "unresolved-reference";
    case ErrorCode::config_invalid: return "config-invalid";
    case ErrorCode::unknown_scenario: return "unknown-scenario";
  }
  return "unknown-error";
}

void Band::validate() const {
  if (name.empty()) {
    throw Error(ErrorCode::invalid_argument, "band has no name");
  }
  if (!(high_edge_thz > low_edge_thz)) {
    throw Error(ErrorCode::invalid_argument,
                "band " + name + " high edge must exceed low edge");
  }
}

void validate_band_pair(const Band& c_band, const Band& l_band) {
  c_band.validate();
  l_band.validate();
  if (c_band.low_edge_thz <= l_band.high_edge_thz) {
    throw Error(ErrorCode::invalid_argument,
                "C and L bands must be disjoint with C above L in frequency");
  }
}

void SignalClass::validate() const {
  if (subcarrier_count < 1) {
    throw Error(ErrorCode::invalid_argument, name + ": subcarrier count must be >= 1");
  }
  if (baud_rate_gbaud <= 0.0 || channel_spacing_ghz <= 0.0 || bit_rate_gbps <= 0.0) {
    throw Error(ErrorCode::invalid_argument, name + ": rates and spacing must be positive");
  }
  if (channel_spacing_ghz < baud_rate_gbaud * subcarrier_count) {
    throw Error(ErrorCode::invalid_argument,
                name + ": signal does not fit its slot (spacing < baud * subcarriers)");
  }
  if (subcarrier_count > 1 && subcarrier_spacing_ghz <= 0.0) {
    throw Error(ErrorCode::invalid_argument,
                name + ": multi-carrier class needs a positive subcarrier spacing");
  }
}

double ChannelPlan::center(int slot) const {
  if (slot < 0 || slot >= count()) {
    throw Error(ErrorCode::invalid_argument,
                "slot " + std::to_string(slot) + " outside plan of " +
                    std::to_string(count()) + " channels");
  }
  return centers_thz[static_cast<size_t>(slot)];
}

int ChannelPlan::nearest_slot(double freq_thz) const {
  if (centers_thz.empty()) {
    throw Error(ErrorCode::empty_plan, "plan has no channels");
  }
  int best = 0;
  double best_dist = std::abs(centers_thz[0] - freq_thz);
  for (int i = 1; i < count(); ++i) {
    double d = std::abs(centers_thz[static_cast<size_t>(i)] - freq_thz);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

int channels_in_band(double band_width_ghz, double spacing_ghz) {
  if (band_width_ghz <= 0.0 || spacing_ghz <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "band width and spacing must be positive");
  }
  // Tiny slack so an exact multiple is not lost to floating-point division.
  return static_cast<int>(std::floor(band_width_ghz / spacing_ghz + 1e-9));
}

double spacing_for_signal(double bit_rate_gbps, Spacing400 variant) {
  if (bit_rate_gbps == 200.0) return 50.0;
  if (bit_rate_gbps == 400.0) return variant == Spacing400::ghz_75 ? 75.0 : 87.5;
  if (bit_rate_gbps == 800.0) return 150.0;
  throw Error(ErrorCode::unsupported_signal,
              "no standard spacing for " + std::to_string(bit_rate_gbps) + " Gbps");
}

ChannelPlan build_channel_plan(const Band& band, double spacing_ghz) {
  band.validate();
  if (spacing_ghz <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "spacing must be positive");
  }
  if (spacing_ghz > band.width_ghz() + 1e-9) {
    throw Error(ErrorCode::empty_plan,
                "spacing " + std::to_string(spacing_ghz) + " GHz exceeds band " +
                    band.name + " width");
  }
  ChannelPlan plan;
  plan.band = band;
  plan.spacing_ghz = spacing_ghz;
  const int n = channels_in_band(band.width_ghz(), spacing_ghz);
  const double spacing_thz = spacing_ghz / kGhzPerThz;
  plan.centers_thz.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    plan.centers_thz.push_back(band.low_edge_thz + (i + 0.5) * spacing_thz);
  }
  return plan;
}

double wavelength_to_frequency(double lambda_nm) {
  if (lambda_nm <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "wavelength must be positive");
  }
  return kSpeedOfLightNmThz / lambda_nm;
}

double frequency_to_wavelength(double freq_thz) {
  if (freq_thz <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "frequency must be positive");
  }
  return kSpeedOfLightNmThz / freq_thz;
}

std::vector<double> superchannel_centers(double slot_center_thz, int subcarriers,
                                         double sub_spacing_ghz, double slot_width_ghz) {
  if (subcarriers < 1) {
    throw Error(ErrorCode::invalid_argument, "subcarrier count must be >= 1");
  }
  if (subcarriers > 1 && sub_spacing_ghz <= 0.0) {
    throw Error(ErrorCode::invalid_argument, "subcarrier spacing must be positive");
  }
  const double span_ghz = (subcarriers - 1) * sub_spacing_ghz;
  if (span_ghz > slot_width_ghz + 1e-9) {
    throw Error(ErrorCode::slot_overflow,
                "subcarrier span " + std::to_string(span_ghz) + " GHz exceeds slot of " +
                    std::to_string(slot_width_ghz) + " GHz");
  }
  std::vector<double> centers;
  centers.reserve(static_cast<size_t>(subcarriers));
  const double half_span_thz = 0.5 * span_ghz / kGhzPerThz;
  for (int i = 0; i < subcarriers; ++i) {
    centers.push_back(slot_center_thz - half_span_thz + i * sub_spacing_ghz / kGhzPerThz);
  }
  return centers;
}

}  // namespace roadmsim
