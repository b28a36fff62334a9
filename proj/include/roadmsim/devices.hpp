#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roadmsim/spectrum.hpp"

namespace roadmsim {

/// Wavelength selective switch: one common port, port_count service ports.
/// Insertion loss is characterized by its measured range and average band.
struct WssSpec {
  std::string name;
  int port_count = 0;
  std::vector<Band> bands;
  double loss_min_db = 0.0;
  double loss_max_db = 0.0;
  double loss_avg_low_db = 0.0;
  double loss_avg_high_db = 0.0;

  bool supports(double freq_thz) const;
  bool supports_band(const std::string& band_name) const;
  void validate() const;
};

/// Multicast switch: degree_ports x client_ports splitter/switch fabric.
/// Intrinsic loss comes from the client-side split; excess loss is measured.
struct McsSpec {
  std::string name;
  int degree_ports = 0;
  int client_ports = 0;
  double excess_loss_db = 0.0;
  double min_cumulative_isolation_db = 45.0;
  double isolation_ripple_db = 0.0;
  std::vector<Band> bands;

  double intrinsic_loss_db() const;  // 10*log10(client_ports)
  bool supports(double freq_thz) const;
  bool supports_band(const std::string& band_name) const;
  void validate() const;
};

/// Single-band amplifier. No multiband EDFA exists; the band field is the
/// only band the device will accept.
struct EdfaSpec {
  std::string name;
  std::string band_name;
  double gain_db = 0.0;
  double max_output_power_dbm = 23.0;
};

struct CouplerSpec {
  enum class Kind { band_mux, band_demux };
  std::string name;
  Kind kind = Kind::band_mux;
  double loss_per_pass_db = 0.5;

  void validate() const;
};

struct TransceiverSpec {
  std::string name;
  std::vector<std::string> band_names;
  double fec_threshold_q_db = 0.0;
  double loopback_margin_db = 4.0;
  double sensitivity_min_dbm = -20.0;
  double sensitivity_max_dbm = 5.0;

  bool supports_band(const std::string& band_name) const;
  void validate() const;
};

/// Deterministic sampled insertion loss for one (service port, frequency)
/// query. Same (spec, port, freq, seed) always yields the same value inside
/// [loss_min, loss_max]; the population mean falls in [avg_low, avg_high].
double wss_insertion_loss(const WssSpec& spec, int port, double freq_thz, uint64_t seed);

/// Total insertion loss: client-split intrinsic loss plus excess loss.
double mcs_insertion_loss(const McsSpec& spec);

/// Modeled cumulative port isolation at a frequency: never below the spec
/// minimum, raised by at most the configured ripple toward band center.
double mcs_cumulative_isolation(const McsSpec& spec, double freq_thz);

/// Gain application with output power clamp; rejects out-of-band signals.
double edfa_apply(const EdfaSpec& spec, double power_in_dbm, const std::string& band_name);

enum class RoutePolicy { strict, replace };

/// Per-WSS switching state: each channel routes between the common port and
/// at most one service port.
class WssState {
 public:
  WssState() = default;
  explicit WssState(int port_count) : port_count_(port_count) {}

  /// Maps a channel to a service port. Under the strict policy, remapping a
  /// channel already routed to a different port is a contention error.
  void route(int service_port, int channel, RoutePolicy policy = RoutePolicy::strict);
  void unroute(int channel);

  std::optional<int> port_for(int channel) const;
  bool channel_free(int channel) const { return !port_for(channel).has_value(); }
  int routed_count() const { return static_cast<int>(routes_.size()); }
  int port_count() const { return port_count_; }
  const std::map<int, int>& routes() const { return routes_; }

 private:
  int port_count_ = 0;
  std::map<int, int> routes_;  // channel -> service port
};

/// Per-MCS switching state: a client port participates in at most one
/// connection; several clients may face the same degree.
class McsState {
 public:
  McsState() = default;
  McsState(int client_ports, int degree_ports)
      : client_ports_(client_ports), degree_ports_(degree_ports) {}

  void connect(int client, int degree);
  void disconnect(int client);

  std::optional<int> degree_for(int client) const;
  bool client_free(int client) const { return !degree_for(client).has_value(); }
  int connection_count() const { return static_cast<int>(connections_.size()); }
  int client_ports() const { return client_ports_; }
  int degree_ports() const { return degree_ports_; }
  const std::map<int, int>& connections() const { return connections_; }

 private:
  int client_ports_ = 0;
  int degree_ports_ = 0;
  std::map<int, int> connections_;  // client -> degree
};

}  // namespace roadmsim
