#include "roadmsim/devices.hpp"

#include <algorithm>
#include <cmath>

namespace roadmsim {

namespace {

bool any_band_contains(const std::vector<Band>& bands, double freq_thz) {
  return std::any_of(bands.begin(), bands.end(),
                     [freq_thz](const Band& b) { return b.contains(freq_thz); });
}

bool has_band_name(const std::vector<Band>& bands, const std::string& name) {
  return std::any_of(bands.begin(), bands.end(),
                     [&name](const Band& b) { return b.name == name; });
}

const Band* band_containing(const std::vector<Band>& bands, double freq_thz) {
  for (const Band& b : bands) {
    if (b.contains(freq_thz)) return &b;
  }
  return nullptr;
}

// splitmix64 finalizer; the basis of all seeded sampling so results are
// bit-identical across platforms.
uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_uniform(uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace

bool WssSpec::supports(double freq_thz) const { return any_band_contains(bands, freq_thz); }
bool WssSpec::supports_band(const std::string& band_name) const {
  return has_band_name(bands, band_name);
}

void WssSpec::validate() const {
  if (port_count < 2) {
    throw Error(ErrorCode::invalid_argument, name + ": WSS needs at least 2 service ports");
  }
  if (bands.empty()) {
    throw Error(ErrorCode::invalid_argument, name + ": WSS supports no bands");
  }
  if (!(loss_min_db <= loss_avg_low_db && loss_avg_low_db <= loss_avg_high_db &&
        loss_avg_high_db <= loss_max_db)) {
    throw Error(ErrorCode::invalid_argument,
                name + ": loss figures must be ordered min <= avg_low <= avg_high <= max");
  }
}

double McsSpec::intrinsic_loss_db() const {
  return 10.0 * std::log10(static_cast<double>(client_ports));
}

bool McsSpec::supports(double freq_thz) const { return any_band_contains(bands, freq_thz); }
bool McsSpec::supports_band(const std::string& band_name) const {
  return has_band_name(bands, band_name);
}

void McsSpec::validate() const {
  if (client_ports < 1 || degree_ports < 1) {
    throw Error(ErrorCode::invalid_argument, name + ": MCS port counts must be positive");
  }
  if (excess_loss_db < 0.0 || isolation_ripple_db < 0.0) {
    throw Error(ErrorCode::invalid_argument, name + ": losses and ripple must be >= 0");
  }
  if (min_cumulative_isolation_db <= 0.0) {
    throw Error(ErrorCode::invalid_argument, name + ": cumulative isolation must be positive");
  }
  if (bands.empty()) {
    throw Error(ErrorCode::invalid_argument, name + ": MCS supports no bands");
  }
}

void CouplerSpec::validate() const {
  if (loss_per_pass_db < 0.0) {
    throw Error(ErrorCode::invalid_argument, name + ": coupler loss must be >= 0");
  }
}

bool TransceiverSpec::supports_band(const std::string& band_name) const {
  return std::find(band_names.begin(), band_names.end(), band_name) != band_names.end();
}

void TransceiverSpec::validate() const {
  if (band_names.empty()) {
    throw Error(ErrorCode::invalid_argument, name + ": transceiver supports no bands");
  }
  if (!(sensitivity_min_dbm < sensitivity_max_dbm)) {
    throw Error(ErrorCode::invalid_argument,
                name + ": sensitivity window must have min < max");
  }
}

double wss_insertion_loss(const WssSpec& spec, int port, double freq_thz, uint64_t seed) {
  if (port < 0 || port >= spec.port_count) {
    throw Error(ErrorCode::invalid_argument,
                spec.name + ": service port " + std::to_string(port) + " out of range");
  }
  if (!spec.supports(freq_thz)) {
    throw Error(ErrorCode::band_unsupported,
                spec.name + ": frequency " + std::to_string(freq_thz) + " THz not in a supported band");
  }
  // Quantize the frequency to 1 MHz so the hash input is stable.
  const auto freq_mhz = static_cast<uint64_t>(std::llround(freq_thz * 1e6));
  uint64_t h = mix64(seed);
  h = mix64(h ^ static_cast<uint64_t>(port));
  h = mix64(h ^ freq_mhz);
  const double u = unit_uniform(h);

  // Triangular distribution over [min, max] with the mode at the midpoint of
  // the reported average range; honors both the range and the mean figure.
  const double a = spec.loss_min_db;
  const double b = spec.loss_max_db;
  const double c = 0.5 * (spec.loss_avg_low_db + spec.loss_avg_high_db);
  if (b <= a) return a;
  const double fc = (c - a) / (b - a);
  double x;
  if (u < fc) {
    x = a + std::sqrt(u * (b - a) * (c - a));
  } else {
    x = b - std::sqrt((1.0 - u) * (b - a) * (b - c));
  }
  return std::clamp(x, a, b);
}

double mcs_insertion_loss(const McsSpec& spec) {
  return spec.intrinsic_loss_db() + spec.excess_loss_db;
}

double mcs_cumulative_isolation(const McsSpec& spec, double freq_thz) {
  const Band* band = band_containing(spec.bands, freq_thz);
  if (band == nullptr) {
    throw Error(ErrorCode::band_unsupported,
                spec.name + ": frequency " + std::to_string(freq_thz) + " THz not in a supported band");
  }
  if (spec.isolation_ripple_db == 0.0) {
    return spec.min_cumulative_isolation_db;
  }
  // Flat floor with a cosine bump peaking at band center; stays >= the floor
  // and varies by at most the configured ripple across the band.
  const double width_thz = band->high_edge_thz - band->low_edge_thz;
  const double phase = 2.0 * M_PI * (freq_thz - band->center_thz()) / width_thz;
  return spec.min_cumulative_isolation_db +
         spec.isolation_ripple_db * 0.5 * (1.0 + std::cos(phase));
}

double edfa_apply(const EdfaSpec& spec, double power_in_dbm, const std::string& band_name) {
  if (band_name != spec.band_name) {
    throw Error(ErrorCode::band_unsupported,
                spec.name + ": cannot amplify " + band_name + "-band signal (device is " +
                    spec.band_name + "-band only)");
  }
  if (!std::isfinite(power_in_dbm)) {
    throw Error(ErrorCode::invalid_argument, spec.name + ": input power must be finite");
  }
  return std::min(power_in_dbm + spec.gain_db, spec.max_output_power_dbm);
}

void WssState::route(int service_port, int channel, RoutePolicy policy) {
  if (service_port < 0 || service_port >= port_count_) {
    throw Error(ErrorCode::invalid_argument,
                "service port " + std::to_string(service_port) + " out of range");
  }
  if (channel < 0) {
    throw Error(ErrorCode::invalid_argument, "negative channel index");
  }
  auto it = routes_.find(channel);
  if (it != routes_.end() && it->second != service_port) {
    if (policy == RoutePolicy::strict) {
      throw Error(ErrorCode::contention,
                  "channel " + std::to_string(channel) + " already routed to port " +
                      std::to_string(it->second));
    }
    it->second = service_port;
    return;
  }
  routes_[channel] = service_port;
}

void WssState::unroute(int channel) { routes_.erase(channel); }

std::optional<int> WssState::port_for(int channel) const {
  auto it = routes_.find(channel);
  if (it == routes_.end()) return std::nullopt;
  return it->second;
}

void McsState::connect(int client, int degree) {
  if (client < 0 || client >= client_ports_) {
    throw Error(ErrorCode::invalid_argument,
                "client port " + std::to_string(client) + " out of range");
  }
  if (degree < 0 || degree >= degree_ports_) {
    throw Error(ErrorCode::invalid_argument,
                "degree port " + std::to_string(degree) + " out of range");
  }
  if (connections_.count(client) != 0) {
    throw Error(ErrorCode::client_busy,
                "client " + std::to_string(client) + " already connected to degree " +
                    std::to_string(connections_.at(client)));
  }
  connections_[client] = degree;
}

void McsState::disconnect(int client) { connections_.erase(client); }

std::optional<int> McsState::degree_for(int client) const {
  auto it = connections_.find(client);
  if (it == connections_.end()) return std::nullopt;
  return it->second;
}

}  // namespace roadmsim
