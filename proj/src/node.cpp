#include "roadmsim/node.hpp"

#include <algorithm>

namespace roadmsim {

const char* to_string(NodeArchitecture arch) {
  switch (arch) {
    case NodeArchitecture::c_only: return "c_only";
    case NodeArchitecture::cl_separate: return "cl_separate";
    case NodeArchitecture::cl_multiband: return "cl_multiband";
  }
  return "?";
}

NodeArchitecture architecture_from_string(const std::string& s) {
  if (s == "c_only") return NodeArchitecture::c_only;
  if (s == "cl_separate") return NodeArchitecture::cl_separate;
  if (s == "cl_multiband") return NodeArchitecture::cl_multiband;
  throw Error(ErrorCode::invalid_argument, "unknown node architecture: " + s);
}

int max_mcs_count(int wss_ports, int degrees) {
  if (degrees < 1) {
    throw Error(ErrorCode::invalid_argument, "node needs at least one degree");
  }
  if (wss_ports < degrees) {
    throw Error(ErrorCode::insufficient_ports,
                std::to_string(wss_ports) + "-port WSS cannot interconnect " +
                    std::to_string(degrees) + " degrees");
  }
  return wss_ports - (degrees - 1);
}

double add_drop_ratio(int wss_ports, int degrees, int clients, int channels_per_degree) {
  if (clients < 0 || channels_per_degree < 1) {
    throw Error(ErrorCode::invalid_argument, "clients must be >= 0 and channel count positive");
  }
  const int banks = max_mcs_count(wss_ports, degrees);
  return static_cast<double>(banks) * clients /
         (static_cast<double>(degrees) * channels_per_degree);
}

double required_add_drop_ratio(long total_wavelengths, int node_count) {
  if (node_count < 1) {
    throw Error(ErrorCode::invalid_argument, "node count must be >= 1");
  }
  if (total_wavelengths < 1) {
    throw Error(ErrorCode::invalid_argument, "total wavelengths must be >= 1");
  }
  // Each node's average share of the system's wavelengths.
  return 1.0 / static_cast<double>(node_count);
}

void NodeConfig::validate() const {
  if (degrees < 1) {
    throw Error(ErrorCode::invalid_argument, name + ": node needs at least one degree");
  }
  wss.validate();
  mcs.validate();
  if (wss_l) wss_l->validate();
  if (mcs_l) mcs_l->validate();
  max_mcs_count(wss.port_count, degrees);  // throws insufficient-ports when W < D
  if (channels_per_degree < 1) {
    throw Error(ErrorCode::invalid_argument, name + ": channels per degree must be positive");
  }
  if (degrees > mcs.degree_ports) {
    throw Error(ErrorCode::insufficient_ports,
                name + ": MCS has only " + std::to_string(mcs.degree_ports) +
                    " degree ports for " + std::to_string(degrees) + " degrees");
  }
  const auto require_band = [this](const auto& spec, const std::string& band) {
    if (!spec.supports_band(band)) {
      throw Error(ErrorCode::band_unsupported,
                  name + ": device " + spec.name + " does not cover the " + band + " band");
    }
  };
  switch (architecture) {
    case NodeArchitecture::c_only:
      require_band(wss, "C");
      require_band(mcs, "C");
      break;
    case NodeArchitecture::cl_multiband:
      require_band(wss, "C");
      require_band(wss, "L");
      require_band(mcs, "C");
      require_band(mcs, "L");
      break;
    case NodeArchitecture::cl_separate:
      require_band(wss, "C");
      require_band(mcs, "C");
      require_band(wss_l ? *wss_l : wss, "L");
      require_band(mcs_l ? *mcs_l : mcs, "L");
      break;
  }
  if (mcs_count_override) {
    const int max_banks = max_mcs_count(wss.port_count, degrees);
    if (*mcs_count_override < 0 || *mcs_count_override > max_banks) {
      throw Error(ErrorCode::over_subscription,
                  name + ": " + std::to_string(*mcs_count_override) +
                      " banks exceed the " + std::to_string(max_banks) + " free service ports");
    }
  }
}

NodeInventory inventory(const NodeConfig& config) {
  config.validate();
  const int d = config.degrees;
  const int banks =
      config.mcs_count_override.value_or(max_mcs_count(config.wss.port_count, d));
  NodeInventory inv;
  switch (config.architecture) {
    case NodeArchitecture::c_only:
      inv.wss = 2 * d;          // add + drop per degree
      inv.mcs = 2 * banks;      // add + drop per bank
      inv.edfa_c = d;           // line amplification per degree
      break;
    case NodeArchitecture::cl_multiband:
      inv.wss = 2 * d;
      inv.mcs = 2 * banks;
      inv.edfa_c = d;
      inv.edfa_l = d;
      inv.coupler = 2 * d;      // band split/merge around the per-degree EDFA pair
      break;
    case NodeArchitecture::cl_separate:
      inv.wss = 4 * d;          // parallel C and L chains
      inv.mcs = 4 * banks;
      inv.edfa_c = d;
      inv.edfa_l = d;
      inv.coupler = 4 * d;      // amplifier sandwich plus chain split/merge
      break;
  }
  return inv;
}

Node::Node(NodeConfig config) : config_(std::move(config)) {
  config_.validate();
  chain_count_ = config_.architecture == NodeArchitecture::cl_separate ? 2 : 1;
  const int d = config_.degrees;
  const int banks_per_chain =
      config_.mcs_count_override.value_or(max_mcs_count(config_.wss.port_count, d));

  add_wss_.reserve(static_cast<size_t>(chain_count_ * d));
  drop_wss_.reserve(static_cast<size_t>(chain_count_ * d));
  for (int chain = 0; chain < chain_count_; ++chain) {
    const WssSpec& spec = wss_spec(chain);
    for (int degree = 0; degree < d; ++degree) {
      add_wss_.emplace_back(spec.port_count);
      drop_wss_.emplace_back(spec.port_count);
    }
  }

  for (int chain = 0; chain < chain_count_; ++chain) {
    const McsSpec& spec = mcs_spec(chain);
    for (int b = 0; b < banks_per_chain; ++b) {
      AddDropBank bank;
      bank.chain = chain;
      bank.service_port = (d - 1) + b;
      if (config_.architecture == NodeArchitecture::c_only) {
        bank.band_lock = "C";
      } else if (config_.architecture == NodeArchitecture::cl_separate) {
        bank.band_lock = chain == 0 ? "C" : "L";
      }
      bank.add = McsState(spec.client_ports, spec.degree_ports);
      bank.drop = McsState(spec.client_ports, spec.degree_ports);
      banks_.push_back(std::move(bank));
    }
  }
  active_slots_.resize(banks_.size());
}

Node build_node(const NodeConfig& config) { return Node(config); }

int Node::chain_for_band(const std::string& band_name) const {
  if (chain_count_ == 1) {
    if (config_.architecture == NodeArchitecture::c_only && band_name != "C") {
      throw Error(ErrorCode::band_unsupported,
                  name() + ": C-band-only node cannot carry the " + band_name + " band");
    }
    return 0;
  }
  if (band_name == "C") return 0;
  if (band_name == "L") return 1;
  throw Error(ErrorCode::band_unsupported, name() + ": no chain for band " + band_name);
}

const WssSpec& Node::wss_spec(int chain) const {
  if (chain == 1 && config_.wss_l) return *config_.wss_l;
  return config_.wss;
}

const McsSpec& Node::mcs_spec(int chain) const {
  if (chain == 1 && config_.mcs_l) return *config_.mcs_l;
  return config_.mcs;
}

std::vector<std::string> Node::supported_band_names() const {
  if (config_.architecture == NodeArchitecture::c_only) return {"C"};
  return {"C", "L"};
}

int Node::add_drop_port_count() const {
  int total = 0;
  for (const AddDropBank& b : banks_) {
    total += b.add.client_ports();
  }
  return total;
}

AddDropBank& Node::bank(int index) {
  return const_cast<AddDropBank&>(std::as_const(*this).bank(index));
}

const AddDropBank& Node::bank(int index) const {
  if (index < 0 || index >= bank_count()) {
    throw Error(ErrorCode::invalid_argument,
                name() + ": bank " + std::to_string(index) + " out of range");
  }
  return banks_[static_cast<size_t>(index)];
}

WssState& Node::add_wss(int degree, int chain) {
  return const_cast<WssState&>(std::as_const(*this).add_wss(degree, chain));
}

WssState& Node::drop_wss(int degree, int chain) {
  return const_cast<WssState&>(std::as_const(*this).drop_wss(degree, chain));
}

const WssState& Node::add_wss(int degree, int chain) const {
  if (degree < 0 || degree >= degrees() || chain < 0 || chain >= chain_count_) {
    throw Error(ErrorCode::invalid_argument, name() + ": degree/chain out of range");
  }
  return add_wss_[static_cast<size_t>(chain * degrees() + degree)];
}

const WssState& Node::drop_wss(int degree, int chain) const {
  if (degree < 0 || degree >= degrees() || chain < 0 || chain >= chain_count_) {
    throw Error(ErrorCode::invalid_argument, name() + ": degree/chain out of range");
  }
  return drop_wss_[static_cast<size_t>(chain * degrees() + degree)];
}

int Node::interconnect_port(int degree, int other_degree) const {
  if (degree == other_degree || degree < 0 || other_degree < 0 || degree >= degrees() ||
      other_degree >= degrees()) {
    throw Error(ErrorCode::invalid_argument, name() + ": bad interconnect degree pair");
  }
  return other_degree < degree ? other_degree : other_degree - 1;
}

int Node::used_service_ports(int chain) const {
  int banks_on_chain = 0;
  for (const AddDropBank& b : banks_) {
    if (b.chain == chain) ++banks_on_chain;
  }
  return (degrees() - 1) + banks_on_chain;
}

int Node::attach_transceiver(const TransceiverSpec& spec, int bank_index, int client) {
  validate_transponder(*this, spec, bank_index, client);
  for (const TransceiverPort& port : transceivers_) {
    if (port.bank == bank_index && port.client == client) {
      throw Error(ErrorCode::client_busy,
                  name() + ": bank " + std::to_string(bank_index) + " client " +
                      std::to_string(client) + " already holds a transceiver");
    }
  }
  transceivers_.push_back(TransceiverPort{spec, bank_index, client});
  return static_cast<int>(transceivers_.size()) - 1;
}

void Node::check_contention(int slot, int bank_index, int degree) const {
  bank(bank_index);
  if (degree < 0 || degree >= degrees()) {
    throw Error(ErrorCode::invalid_argument, name() + ": degree out of range");
  }
  const auto& active = active_slots_[static_cast<size_t>(bank_index)];
  if (active.count({slot, degree}) != 0) {
    throw Error(ErrorCode::contention,
                name() + ": slot " + std::to_string(slot) + " already active on bank " +
                    std::to_string(bank_index) + " toward degree " + std::to_string(degree));
  }
}

void Node::record_slot_use(int slot, int bank_index, int degree) {
  check_contention(slot, bank_index, degree);
  active_slots_[static_cast<size_t>(bank_index)].insert({slot, degree});
}

void Node::release_slot_use(int slot, int bank_index, int degree) {
  bank(bank_index);
  active_slots_[static_cast<size_t>(bank_index)].erase({slot, degree});
}

void validate_transponder(const Node& node, const TransceiverSpec& transceiver, int mcs_bank,
                          int client) {
  transceiver.validate();
  const AddDropBank& bank = node.bank(mcs_bank);
  if (client < 0 || client >= bank.add.client_ports()) {
    throw Error(ErrorCode::invalid_argument,
                node.name() + ": client " + std::to_string(client) + " out of range");
  }
  std::vector<std::string> bank_bands;
  if (bank.band_lock) {
    bank_bands = {*bank.band_lock};
  } else {
    bank_bands = node.supported_band_names();
  }
  const bool usable = std::any_of(bank_bands.begin(), bank_bands.end(),
                                  [&](const std::string& b) { return transceiver.supports_band(b); });
  if (!usable) {
    std::string wanted;
    for (const std::string& b : transceiver.band_names) wanted += b;
    std::string offered;
    for (const std::string& b : bank_bands) offered += b;
    throw Error(ErrorCode::mis_plug,
                node.name() + ": " + wanted + "-band transceiver does not match bank " +
                    std::to_string(mcs_bank) + " (" + offered + " band)");
  }
}

}  // namespace roadmsim
