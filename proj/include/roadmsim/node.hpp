#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "roadmsim/devices.hpp"

namespace roadmsim {

enum class NodeArchitecture { c_only, cl_separate, cl_multiband };

const char* to_string(NodeArchitecture arch);
NodeArchitecture architecture_from_string(const std::string& s);

/// Per-degree drop stage: a WSS mirror of the add side, or a passive splitter
/// broadcasting into the banks.
enum class DropStage { wss, splitter };

struct NodeConfig {
  std::string name;
  NodeArchitecture architecture = NodeArchitecture::cl_multiband;
  int degrees = 1;
  WssSpec wss;   // integrated chain, or the C chain of cl_separate
  McsSpec mcs;
  std::optional<WssSpec> wss_l;  // L-chain devices for cl_separate; defaults to wss
  std::optional<McsSpec> mcs_l;
  int channels_per_degree = 96;
  std::optional<int> mcs_count_override;  // banks per chain, if fewer than the maximum
  DropStage drop_stage = DropStage::wss;

  void validate() const;
};

/// Device counts for one node, per the architecture's topology. Each
/// add/drop bank pairs one add-side and one drop-side MCS.
struct NodeInventory {
  int wss = 0;
  int mcs = 0;
  int edfa_c = 0;
  int edfa_l = 0;
  int coupler = 0;
};

/// WSS service ports left for add/drop banks once (degrees - 1) ports are
/// spent on the inter-degree mesh.
int max_mcs_count(int wss_ports, int degrees);

/// Fraction of a node's wavelength capacity that can terminate locally.
double add_drop_ratio(int wss_ports, int degrees, int clients, int channels_per_degree);

/// Average per-node share of the system's wavelengths: 1 / node_count.
double required_add_drop_ratio(long total_wavelengths, int node_count);

NodeInventory inventory(const NodeConfig& config);

/// One add/drop bank: an add MCS and a drop MCS sharing a service port index
/// on every degree's WSS pair of its chain.
struct AddDropBank {
  int chain = 0;
  std::optional<std::string> band_lock;  // set for single-band chains
  int service_port = 0;
  McsState add;
  McsState drop;
};

struct TransceiverPort {
  TransceiverSpec spec;
  int bank = -1;
  int client = -1;
};

/// An assembled node. Service-port layout on every WSS: ports 0..D-2 carry
/// the inter-degree mesh, port D-1+b carries bank b of the chain.
class Node {
 public:
  explicit Node(NodeConfig config);

  const NodeConfig& config() const { return config_; }
  const std::string& name() const { return config_.name; }
  int degrees() const { return config_.degrees; }

  /// 1 for c_only and cl_multiband, 2 for cl_separate (chain 0 = C, 1 = L).
  int chain_count() const { return chain_count_; }
  int chain_for_band(const std::string& band_name) const;
  const WssSpec& wss_spec(int chain) const;
  const McsSpec& mcs_spec(int chain) const;
  std::vector<std::string> supported_band_names() const;

  int bank_count() const { return static_cast<int>(banks_.size()); }
  int add_drop_port_count() const;
  AddDropBank& bank(int index);
  const AddDropBank& bank(int index) const;

  WssState& add_wss(int degree, int chain = 0);
  WssState& drop_wss(int degree, int chain = 0);
  const WssState& add_wss(int degree, int chain = 0) const;
  const WssState& drop_wss(int degree, int chain = 0) const;

  /// Service port on `degree`'s WSS pair that faces `other_degree`.
  int interconnect_port(int degree, int other_degree) const;
  /// Service ports a fully wired WSS of this chain consumes:
  /// (degrees - 1) mesh ports plus one per attached bank.
  int used_service_ports(int chain) const;

  int attach_transceiver(const TransceiverSpec& spec, int bank, int client);
  const std::vector<TransceiverPort>& transceivers() const { return transceivers_; }

  /// Contentionless registry: a (slot, degree) pairing may be active at most
  /// once per bank; the same slot toward distinct degrees always fits.
  void check_contention(int slot, int bank, int degree) const;
  void record_slot_use(int slot, int bank, int degree);
  void release_slot_use(int slot, int bank, int degree);

 private:
  NodeConfig config_;
  int chain_count_ = 1;
  std::vector<WssState> add_wss_;   // [chain * degrees + degree]
  std::vector<WssState> drop_wss_;
  std::vector<AddDropBank> banks_;
  std::vector<TransceiverPort> transceivers_;
  std::vector<std::set<std::pair<int, int>>> active_slots_;  // per bank: (slot, degree)
};

Node build_node(const NodeConfig& config);

/// Checks that a transceiver may be plugged into the given bank and client
/// port. Multiband banks accept any in-band transceiver; single-band banks
/// reject a band mismatch as a mis-plug.
void validate_transponder(const Node& node, const TransceiverSpec& transceiver, int mcs_bank,
                          int client);

}  // namespace roadmsim
