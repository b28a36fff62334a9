#include "roadmsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <tuple>
#include <utility>

#include "roadmsim/error.hpp"

namespace roadmsim {

namespace {

std::string degree_label(const std::string& node, int degree) {
  return node + "/deg" + std::to_string(degree);
}

int channel_id_for(double center_thz) {
  return static_cast<int>(std::llround(center_thz * kGhzPerThz));
}

}  // namespace

bool LinkConfig::supports_band(const std::string& band_name) const {
  return std::find(band_names.begin(), band_names.end(), band_name) != band_names.end();
}

void LinkConfig::validate() const {
  if (name.empty()) {
    throw Error(ErrorCode::invalid_argument, "link has no name");
  }
  if (a.node.empty() || b.node.empty() || a.node == b.node) {
    throw Error(ErrorCode::invalid_argument, name + ": endpoints must be two distinct nodes");
  }
  if (a.degree < 0 || b.degree < 0) {
    throw Error(ErrorCode::invalid_argument, name + ": degrees must be non-negative");
  }
  if (attenuation_db < 0.0) {
    throw Error(ErrorCode::invalid_argument, name + ": attenuation must be non-negative");
  }
  if (band_names.empty()) {
    throw Error(ErrorCode::invalid_argument, name + ": link must carry at least one band");
  }
  for (const auto& band : band_names) {
    auto it = edfas.find(band);
    if (it == edfas.end()) {
      throw Error(ErrorCode::unresolved_reference,
                  name + ": no amplifier configured for band " + band);
    }
    if (it->second.band_name != band) {
      throw Error(ErrorCode::band_unsupported,
                  name + ": amplifier " + it->second.name + " is a " +
                      it->second.band_name + " band device, wired into the " + band +
                      " band stage");
    }
  }
}

std::string TransceiverId::label() const {
  return node + "/bank" + std::to_string(bank) + "/client" + std::to_string(client);
}

std::vector<std::string> Lightpath::link_names() const {
  std::vector<std::string> names;
  names.reserve(hops.size());
  for (const auto& hop : hops) names.push_back(hop.link);
  return names;
}

void Topology::add_band(const Band& band) {
  band.validate();
  bands_.insert_or_assign(band.name, band);
}

void Topology::add_node(const NodeConfig& config) {
  if (nodes_.count(config.name) != 0) {
    throw Error(ErrorCode::invalid_argument, "duplicate node name " + config.name);
  }
  nodes_.emplace(config.name, Node(config));
}

void Topology::add_link(const LinkConfig& config) {
  config.validate();
  if (links_.count(config.name) != 0) {
    throw Error(ErrorCode::invalid_argument, "duplicate link name " + config.name);
  }
  for (const auto* end : {&config.a, &config.b}) {
    auto it = nodes_.find(end->node);
    if (it == nodes_.end()) {
      throw Error(ErrorCode::unresolved_reference,
                  config.name + ": unknown node " + end->node);
    }
    if (end->degree >= it->second.degrees()) {
      throw Error(ErrorCode::invalid_argument,
                  config.name + ": node " + end->node + " has no degree " +
                      std::to_string(end->degree));
    }
  }
  for (const auto& band : config.band_names) {
    if (bands_.count(band) == 0) {
      throw Error(ErrorCode::unresolved_reference, config.name + ": unknown band " + band);
    }
  }
  links_.emplace(config.name, Link{config, {}});
}

void Topology::attach_transceiver(const TransceiverId& id, const TransceiverSpec& spec) {
  Node& n = node(id.node);
  n.attach_transceiver(spec, id.bank, id.client);
  attached_[id.node].insert_or_assign({id.bank, id.client}, spec);
}

const Band& Topology::band(const std::string& name) const {
  auto it = bands_.find(name);
  if (it == bands_.end()) {
    throw Error(ErrorCode::unresolved_reference, "unknown band " + name);
  }
  return it->second;
}

Node& Topology::node(const std::string& name) {
  auto it = nodes_.find(name);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::unresolved_reference, "unknown node " + name);
  }
  return it->second;
}

const Node& Topology::node(const std::string& name) const {
  auto it = nodes_.find(name);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::unresolved_reference, "unknown node " + name);
  }
  return it->second;
}

const Link& Topology::link(const std::string& name) const {
  auto it = links_.find(name);
  if (it == links_.end()) {
    throw Error(ErrorCode::unresolved_reference, "unknown link " + name);
  }
  return it->second;
}

const TransceiverSpec& Topology::transceiver(const TransceiverId& id) const {
  auto node_it = attached_.find(id.node);
  if (node_it != attached_.end()) {
    auto it = node_it->second.find({id.bank, id.client});
    if (it != node_it->second.end()) return it->second;
  }
  throw Error(ErrorCode::invalid_argument, "no transceiver attached at " + id.label());
}

std::string Topology::plan_key(const std::string& band_name, double spacing_ghz) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s@%g", band_name.c_str(), spacing_ghz);
  return buf;
}

const ChannelPlan& Topology::plan(const std::string& band_name, double spacing_ghz) {
  const std::string key = plan_key(band_name, spacing_ghz);
  auto it = plans_.find(key);
  if (it == plans_.end()) {
    it = plans_.emplace(key, build_channel_plan(band(band_name), spacing_ghz)).first;
  }
  return it->second;
}

std::vector<Hop> Topology::shortest_route(const std::string& src_node,
                                          const std::string& dst_node,
                                          const std::string& band_name) const {
  struct Arrival {
    std::string prev_node;
    std::string via_link;
  };
  std::map<std::string, Arrival> seen;
  std::deque<std::string> queue;
  seen[src_node] = {};
  queue.push_back(src_node);
  bool band_limited = false;
  while (!queue.empty() && seen.count(dst_node) == 0) {
    const std::string here = queue.front();
    queue.pop_front();
    for (const auto& [name, link] : links_) {
      const LinkConfig& cfg = link.config;
      std::string other;
      if (cfg.a.node == here) {
        other = cfg.b.node;
      } else if (cfg.b.node == here) {
        other = cfg.a.node;
      } else {
        continue;
      }
      if (!cfg.supports_band(band_name)) {
        band_limited = true;
        continue;
      }
      if (seen.count(other) != 0) continue;
      seen[other] = {here, name};
      queue.push_back(other);
    }
  }
  if (seen.count(dst_node) == 0) {
    if (band_limited) {
      throw Error(ErrorCode::band_blocked,
                  "no route carries band " + band_name + " from " + src_node + " to " +
                      dst_node);
    }
    throw Error(ErrorCode::no_route, "no route from " + src_node + " to " + dst_node);
  }
  std::vector<Hop> hops;
  for (std::string here = dst_node; here != src_node;) {
    const Arrival& arr = seen.at(here);
    const LinkConfig& cfg = links_.at(arr.via_link).config;
    const LinkEnd& from = cfg.a.node == arr.prev_node ? cfg.a : cfg.b;
    const LinkEnd& to = cfg.a.node == arr.prev_node ? cfg.b : cfg.a;
    hops.push_back({arr.via_link, from, to});
    here = arr.prev_node;
  }
  std::reverse(hops.begin(), hops.end());
  return hops;
}

std::vector<Hop> Topology::named_route(const std::string& src_node,
                                       const std::vector<std::string>& link_sequence,
                                       const std::string& band_name) const {
  if (link_sequence.empty()) {
    throw Error(ErrorCode::invalid_argument, "route needs at least one link");
  }
  std::set<std::string> used;
  std::vector<Hop> hops;
  std::string here = src_node;
  for (const auto& name : link_sequence) {
    if (!used.insert(name).second) {
      throw Error(ErrorCode::invalid_argument, "route traverses link " + name + " twice");
    }
    const LinkConfig& cfg = link(name).config;
    if (!cfg.supports_band(band_name)) {
      throw Error(ErrorCode::band_blocked,
                  "link " + name + " does not carry band " + band_name);
    }
    if (cfg.a.node == here) {
      hops.push_back({name, cfg.a, cfg.b});
      here = cfg.b.node;
    } else if (cfg.b.node == here) {
      hops.push_back({name, cfg.b, cfg.a});
      here = cfg.a.node;
    } else {
      throw Error(ErrorCode::invalid_argument,
                  "link " + name + " does not touch node " + here);
    }
  }
  return hops;
}

bool Topology::slot_free(const std::vector<Hop>& hops, const std::string& key,
                         int slot) const {
  for (const auto& hop : hops) {
    const auto& occupied = links_.at(hop.link).occupied;
    auto it = occupied.find(key);
    if (it != occupied.end() && it->second.count(slot) != 0) return false;
  }
  return true;
}

Lightpath Topology::provision_lightpath(const TransceiverId& src, const TransceiverId& dst,
                                        const SignalClass& signal,
                                        const std::string& band_name) {
  if (src.node == dst.node) {
    throw Error(ErrorCode::invalid_argument,
                "source and destination are the same node; nothing to route");
  }
  return admit(src, dst, signal, band_name, shortest_route(src.node, dst.node, band_name),
               std::nullopt);
}

Lightpath Topology::provision_via(const TransceiverId& src, const TransceiverId& dst,
                                  const SignalClass& signal, const std::string& band_name,
                                  const std::vector<std::string>& link_sequence,
                                  std::optional<double> target_freq_thz) {
  std::vector<Hop> hops = named_route(src.node, link_sequence, band_name);
  if (hops.back().to.node != dst.node) {
    throw Error(ErrorCode::invalid_argument,
                "route ends at " + hops.back().to.node + ", not at " + dst.node);
  }
  return admit(src, dst, signal, band_name, hops, target_freq_thz);
}

Lightpath Topology::admit(const TransceiverId& src, const TransceiverId& dst,
                          const SignalClass& signal, const std::string& band_name,
                          const std::vector<Hop>& hops,
                          std::optional<double> target_freq_thz) {
  signal.validate();
  const TransceiverSpec& src_spec = transceiver(src);
  const TransceiverSpec& dst_spec = transceiver(dst);
  for (const auto* spec : {&src_spec, &dst_spec}) {
    if (!spec->supports_band(band_name)) {
      throw Error(ErrorCode::mis_plug,
                  "transceiver " + spec->name + " cannot terminate a " + band_name +
                      " band signal");
    }
  }

  Node& src_node = node(src.node);
  Node& dst_node = node(dst.node);
  const int src_degree = hops.front().from.degree;
  const int dst_degree = hops.back().to.degree;
  if (hops.front().from.node != src.node || hops.back().to.node != dst.node) {
    throw Error(ErrorCode::invalid_argument, "route endpoints do not match the transceivers");
  }

  // Every switching site must carry the band.
  for (const auto& hop : hops) {
    for (const auto* end : {&hop.from, &hop.to}) {
      const Node& n = node(end->node);
      auto names = n.supported_band_names();
      if (std::find(names.begin(), names.end(), band_name) == names.end()) {
        throw Error(ErrorCode::band_blocked,
                    "node " + end->node + " cannot switch band " + band_name);
      }
    }
  }

  AddDropBank& src_bank = src_node.bank(src.bank);
  AddDropBank& dst_bank = dst_node.bank(dst.bank);
  for (const auto* bank : {&src_bank, &dst_bank}) {
    if (bank->band_lock.has_value() && *bank->band_lock != band_name) {
      throw Error(ErrorCode::band_blocked,
                  "bank is locked to band " + *bank->band_lock);
    }
  }
  if (!src_bank.add.client_free(src.client)) {
    throw Error(ErrorCode::port_blocked,
                "add client " + src.label() + " already carries a lightpath");
  }
  if (!dst_bank.drop.client_free(dst.client)) {
    throw Error(ErrorCode::port_blocked,
                "drop client " + dst.label() + " already carries a lightpath");
  }
  for (const auto& [n, bank, degree] :
       {std::tuple<Node*, int, int>{&src_node, src.bank, src_degree},
        std::tuple<Node*, int, int>{&dst_node, dst.bank, dst_degree}}) {
    if (degree >= n->mcs_spec(n->bank(bank).chain).degree_ports) {
      throw Error(ErrorCode::insufficient_ports,
                  "MCS of node " + n->name() + " has no degree port " +
                      std::to_string(degree));
    }
  }

  const ChannelPlan& band_plan = plan(band_name, signal.channel_spacing_ghz);
  const std::string key = plan_key(band_name, signal.channel_spacing_ghz);
  int slot = -1;
  if (target_freq_thz.has_value()) {
    const int candidate = band_plan.nearest_slot(*target_freq_thz);
    if (!slot_free(hops, key, candidate)) {
      throw Error(ErrorCode::spectrum_blocked,
                  "slot " + std::to_string(candidate) + " of plan " + key +
                      " is occupied on the route");
    }
    slot = candidate;
  } else {
    for (int candidate = 0; candidate < band_plan.count(); ++candidate) {
      if (slot_free(hops, key, candidate)) {
        slot = candidate;
        break;
      }
    }
    if (slot < 0) {
      throw Error(ErrorCode::spectrum_blocked,
                  "no free slot in plan " + key + " along the route");
    }
  }
  const int chan = channel_id_for(band_plan.center(slot));
  src_node.check_contention(chan, src.bank, src_degree);
  dst_node.check_contention(chan, dst.bank, dst_degree);

  // WSS filters key channels by center frequency, so a slot of another plan
  // landing on the same center conflicts even though its occupancy set is
  // separate. Reject before any state below is touched.
  const int src_chain = src_node.chain_for_band(band_name);
  const int dst_chain = dst_node.chain_for_band(band_name);
  const auto require_unrouted = [chan](const WssState& wss, const std::string& where) {
    if (wss.routes().count(chan) != 0) {
      throw Error(ErrorCode::spectrum_blocked,
                  "channel center " + std::to_string(chan) + " GHz is already configured on " +
                      where);
    }
  };
  require_unrouted(src_node.add_wss(src_degree, src_chain),
                   "add WSS " + degree_label(src.node, src_degree));
  for (size_t i = 0; i + 1 < hops.size(); ++i) {
    const Node& mid = node(hops[i].to.node);
    const int chain = mid.chain_for_band(band_name);
    require_unrouted(mid.drop_wss(hops[i].to.degree, chain),
                     "drop WSS " + degree_label(hops[i].to.node, hops[i].to.degree));
    require_unrouted(mid.add_wss(hops[i + 1].from.degree, chain),
                     "add WSS " + degree_label(hops[i + 1].from.node, hops[i + 1].from.degree));
  }
  require_unrouted(dst_node.drop_wss(dst_degree, dst_chain),
                   "drop WSS " + degree_label(dst.node, dst_degree));

  Lightpath path;
  path.id = next_id_++;
  path.signal = signal;
  path.band_name = band_name;
  path.slot = slot;
  path.channel_id = chan;
  path.subcarrier_centers_thz =
      superchannel_centers(band_plan.center(slot), signal.subcarrier_count,
                           signal.subcarrier_spacing_ghz, signal.channel_spacing_ghz);
  path.src = src;
  path.dst = dst;
  path.hops = hops;

  // Admission checks passed; mutate switch, registry, and spectrum state.
  src_bank.add.connect(src.client, src_degree);
  src_node.add_wss(src_degree, src_chain).route(src_bank.service_port, chan);
  src_node.record_slot_use(chan, src.bank, src_degree);
  for (size_t i = 0; i + 1 < hops.size(); ++i) {
    Node& mid = node(hops[i].to.node);
    const int chain = mid.chain_for_band(band_name);
    const int in_deg = hops[i].to.degree;
    const int out_deg = hops[i + 1].from.degree;
    mid.drop_wss(in_deg, chain).route(mid.interconnect_port(in_deg, out_deg), chan);
    mid.add_wss(out_deg, chain).route(mid.interconnect_port(out_deg, in_deg), chan);
  }
  dst_node.drop_wss(dst_degree, dst_chain).route(dst_bank.service_port, chan);
  dst_bank.drop.connect(dst.client, dst_degree);
  dst_node.record_slot_use(chan, dst.bank, dst_degree);
  for (const auto& hop : hops) {
    links_.at(hop.link).occupied[key].insert(slot);
  }

  // Traversal list, transceiver to transceiver.
  auto& route = path.route;
  using Kind = RouteElement::Kind;
  RouteElement el;
  el.kind = Kind::transceiver;
  el.label = "tx:" + src.label();
  el.node = src.node;
  route.push_back(el);
  route.push_back({Kind::leveler, "level-B@" + src.node, src.node, "", 0, -1, -1, "B", 0.0});
  route.push_back({Kind::mcs, "mcs-add@" + src.node + "/bank" + std::to_string(src.bank),
                   src.node, "", src_chain, -1, src.bank, "", 0.0});
  route.push_back({Kind::wss, "wss-add@" + degree_label(src.node, src_degree), src.node, "",
                   src_chain, src_bank.service_port, -1, "", 0.0});
  route.push_back({Kind::leveler, "level-C@" + degree_label(src.node, src_degree), src.node,
                   "", 0, -1, -1, "C", 0.0});
  for (size_t i = 0; i < hops.size(); ++i) {
    const Hop& hop = hops[i];
    const LinkConfig& cfg = links_.at(hop.link).config;
    if (cfg.multiband()) {
      route.push_back({Kind::coupler, "coupler-in@" + hop.link, "", hop.link, 0, -1, -1, "",
                       -cfg.coupler.loss_per_pass_db});
    }
    route.push_back({Kind::attenuator, "att@" + hop.link, "", hop.link, 0, -1, -1, "",
                     -cfg.attenuation_db});
    route.push_back({Kind::edfa, "edfa-" + band_name + "@" + hop.link, "", hop.link, 0, -1,
                     -1, "", 0.0});
    if (cfg.multiband()) {
      route.push_back({Kind::coupler, "coupler-out@" + hop.link, "", hop.link, 0, -1, -1, "",
                       -cfg.coupler.loss_per_pass_db});
    }
    route.push_back({Kind::leveler, "level-A@" + degree_label(hop.to.node, hop.to.degree),
                     hop.to.node, "", 0, -1, -1, "A", 0.0});
    if (i + 1 < hops.size()) {
      Node& mid = node(hop.to.node);
      const int chain = mid.chain_for_band(band_name);
      const int in_deg = hop.to.degree;
      const int out_deg = hops[i + 1].from.degree;
      route.push_back({Kind::wss, "wss-drop@" + degree_label(hop.to.node, in_deg),
                       hop.to.node, "", chain, mid.interconnect_port(in_deg, out_deg), -1,
                       "", 0.0});
      route.push_back({Kind::wss, "wss-add@" + degree_label(hop.to.node, out_deg),
                       hop.to.node, "", chain, mid.interconnect_port(out_deg, in_deg), -1,
                       "", 0.0});
      route.push_back({Kind::leveler, "level-C@" + degree_label(hop.to.node, out_deg),
                       hop.to.node, "", 0, -1, -1, "C", 0.0});
    }
  }
  route.push_back({Kind::wss, "wss-drop@" + degree_label(dst.node, dst_degree), dst.node,
                   "", dst_chain, dst_bank.service_port, -1, "", 0.0});
  route.push_back({Kind::mcs, "mcs-drop@" + dst.node + "/bank" + std::to_string(dst.bank),
                   dst.node, "", dst_chain, -1, dst.bank, "", 0.0});
  el.kind = Kind::transceiver;
  el.label = "rx:" + dst.label();
  el.node = dst.node;
  route.push_back(el);

  auto [it, inserted] = lightpaths_.emplace(path.id, std::move(path));
  (void)inserted;
  return it->second;
}

void Topology::release_lightpath(int id) {
  auto it = lightpaths_.find(id);
  if (it == lightpaths_.end()) {
    throw Error(ErrorCode::invalid_argument, "no lightpath " + std::to_string(id));
  }
  const Lightpath& path = it->second;
  const int chan = path.channel_id;
  const std::string key = plan_key(path.band_name, path.signal.channel_spacing_ghz);

  Node& src_node = node(path.src.node);
  Node& dst_node = node(path.dst.node);
  const int src_degree = path.hops.front().from.degree;
  const int dst_degree = path.hops.back().to.degree;
  const int src_chain = src_node.chain_for_band(path.band_name);
  const int dst_chain = dst_node.chain_for_band(path.band_name);

  src_node.add_wss(src_degree, src_chain).unroute(chan);
  src_node.bank(path.src.bank).add.disconnect(path.src.client);
  src_node.release_slot_use(chan, path.src.bank, src_degree);
  for (size_t i = 0; i + 1 < path.hops.size(); ++i) {
    Node& mid = node(path.hops[i].to.node);
    const int chain = mid.chain_for_band(path.band_name);
    mid.drop_wss(path.hops[i].to.degree, chain).unroute(chan);
    mid.add_wss(path.hops[i + 1].from.degree, chain).unroute(chan);
  }
  dst_node.drop_wss(dst_degree, dst_chain).unroute(chan);
  dst_node.bank(path.dst.bank).drop.disconnect(path.dst.client);
  dst_node.release_slot_use(chan, path.dst.bank, dst_degree);
  for (const auto& hop : path.hops) {
    auto& occupied = links_.at(hop.link).occupied;
    auto slot_it = occupied.find(key);
    if (slot_it != occupied.end()) {
      slot_it->second.erase(path.slot);
      if (slot_it->second.empty()) occupied.erase(slot_it);
    }
  }
  lightpaths_.erase(it);
}

std::vector<LedgerStep> lightpath_ledger(const Topology& topology, const Lightpath& path,
                                         int subcarrier, const TraceOptions& options) {
  if (subcarrier < 0 ||
      subcarrier >= static_cast<int>(path.subcarrier_centers_thz.size())) {
    throw Error(ErrorCode::invalid_argument,
                "no subcarrier " + std::to_string(subcarrier) + " on this lightpath");
  }
  const double freq = path.subcarrier_centers_thz[static_cast<size_t>(subcarrier)];
  std::vector<LedgerStep> steps;
  steps.reserve(path.route.size() + 1);
  double running = options.tx_launch_dbm;
  using Kind = RouteElement::Kind;
  size_t last_wss = path.route.size();
  for (size_t i = 0; i < path.route.size(); ++i) {
    if (path.route[i].kind == Kind::wss) last_wss = i;
  }
  for (size_t i = 0; i < path.route.size(); ++i) {
    const RouteElement& el = path.route[i];
    double delta = 0.0;
    switch (el.kind) {
      case Kind::transceiver:
        delta = 0.0;
        break;
      case Kind::leveler: {
        double target = options.setpoints.b_dbm;
        if (el.setpoint == "A") target = options.setpoints.a_dbm;
        if (el.setpoint == "C") target = options.setpoints.c_dbm;
        delta = target - running;
        break;
      }
      case Kind::mcs:
        delta = -mcs_insertion_loss(topology.node(el.node).mcs_spec(el.chain));
        break;
      case Kind::wss:
        delta = -wss_insertion_loss(topology.node(el.node).wss_spec(el.chain), el.port, freq,
                                    options.seed);
        break;
      case Kind::coupler:
      case Kind::attenuator:
      case Kind::amplifier:
        delta = el.delta_db;
        break;
      case Kind::edfa: {
        const LinkConfig& cfg = topology.link(el.link).config;
        const EdfaSpec& spec = cfg.edfas.at(path.band_name);
        delta = edfa_apply(spec, running, path.band_name) - running;
        break;
      }
    }
    steps.push_back({el.label, delta});
    running += delta;
    if (i == last_wss && options.inline_amp_gain_db != 0.0) {
      steps.push_back({"amp-inline@" + el.node, options.inline_amp_gain_db});
      running += options.inline_amp_gain_db;
    }
  }
  return steps;
}

std::vector<double> lightpath_isolations(const Topology& topology, const Lightpath& path,
                                         int subcarrier) {
  if (subcarrier < 0 ||
      subcarrier >= static_cast<int>(path.subcarrier_centers_thz.size())) {
    throw Error(ErrorCode::invalid_argument,
                "no subcarrier " + std::to_string(subcarrier) + " on this lightpath");
  }
  const double freq = path.subcarrier_centers_thz[static_cast<size_t>(subcarrier)];
  std::vector<double> isolations;
  for (const auto& el : path.route) {
    if (el.kind != RouteElement::Kind::mcs) continue;
    isolations.push_back(
        mcs_cumulative_isolation(topology.node(el.node).mcs_spec(el.chain), freq));
  }
  return isolations;
}

QReport evaluate_subcarrier(const Topology& topology, const Lightpath& path, int subcarrier,
                            const TraceOptions& options, const PenaltyModel& model) {
  const std::vector<LedgerStep> steps = lightpath_ledger(topology, path, subcarrier, options);
  const PowerTrace trace =
      propagate_power(steps, options.tx_launch_dbm, options.power_floor_dbm);
  const std::vector<double> isolations = lightpath_isolations(topology, path, subcarrier);
  const int sc_number = path.signal.subcarrier_count - subcarrier;
  const std::string label =
      "lp" + std::to_string(path.id) + "/sc" + std::to_string(sc_number);
  return q_margin(label, trace, path.span_count(), isolations, model,
                  topology.transceiver(path.dst));
}

ScenarioConfig default_scenario_config() {
  ScenarioConfig cfg;
  cfg.band_c = {"C", 191.30, 196.10};
  cfg.band_l = {"L", 186.05, 190.85};
  cfg.wss = {"wss-1x9-cl", 9, {cfg.band_c, cfg.band_l}, 5.1, 6.7, 5.5, 6.1};
  cfg.mcs = {"mcs-16x8-cl", 16, 8, 2.5, 45.0, 0.0, {cfg.band_c, cfg.band_l}};
  cfg.edfa_c = {"edfa-c", "C", 20.0, 23.0};
  cfg.edfa_l = {"edfa-l", "L", 20.0, 23.0};
  cfg.coupler = {"wdm", CouplerSpec::Kind::band_mux, 0.5};
  cfg.transceiver_c = {"tx-c", {"C"}, 0.0, 4.0, -20.0, 5.0};
  cfg.transceiver_l = {"tx-l", {"L"}, 0.0, 4.0, -20.0, 5.0};
  cfg.signal = {"1T-dual", 1000.0, "DP-16QAM", 64.0, 150.0, 2, 75.0};
  cfg.test_signals = {
      {"C-short", "C", {1532.68, 1533.27}},  {"C-middle", "C", {1546.32, 1546.92}},
      {"C-long", "C", {1563.86, 1564.47}},   {"L-short", "L", {1572.48, 1573.09}},
      {"L-middle", "L", {1588.09, 1588.73}}, {"L-long", "L", {1606.61, 1607.25}},
  };
  return cfg;
}

namespace {

/// Node reached by walking the link sequence from `start`.
std::string route_end(const Topology& topology, const std::string& start,
                      const std::vector<std::string>& link_sequence) {
  std::string here = start;
  for (const auto& name : link_sequence) {
    const LinkConfig& cfg = topology.link(name).config;
    here = cfg.a.node == here ? cfg.b.node : cfg.a.node;
  }
  return here;
}

TransceiverId scenario_src(int index) { return {"west", 0, index}; }

TransceiverId scenario_dst(const Topology& topology, const Scenario& scenario,
                           const std::string& band_name, int index) {
  const std::string end =
      route_end(topology, "west", scenario.band_routes.at(band_name));
  return {end, 0, index};
}

}  // namespace

ScenarioSetup build_scenario(int id, const ScenarioConfig& config) {
  Scenario scenario;
  scenario.id = id;
  switch (id) {
    case 1:
      scenario.band_routes = {{"C", {"link-cl"}}, {"L", {"link-cl"}}};
      break;
    case 2:
      scenario.band_routes = {{"C", {"link-cl", "link-c"}}, {"L", {"link-cl"}}};
      break;
    case 3:
      scenario.band_routes = {{"C", {"link-c", "link-cl"}}, {"L", {"link-cl"}}};
      break;
    default:
      throw Error(ErrorCode::unknown_scenario, "no scenario " + std::to_string(id));
  }

  validate_band_pair(config.band_c, config.band_l);
  Topology topology;
  topology.add_band(config.band_c);
  topology.add_band(config.band_l);
  for (const char* name : {"west", "east"}) {
    NodeConfig node;
    node.name = name;
    node.architecture = NodeArchitecture::cl_multiband;
    node.degrees = 2;
    node.wss = config.wss;
    node.mcs = config.mcs;
    topology.add_node(node);
  }
  LinkConfig cl;
  cl.name = "link-cl";
  cl.a = {"west", 0};
  cl.b = {"east", 0};
  cl.attenuation_db = config.link_attenuation_db;
  cl.band_names = {"C", "L"};
  cl.edfas = {{"C", config.edfa_c}, {"L", config.edfa_l}};
  cl.coupler = config.coupler;
  topology.add_link(cl);
  LinkConfig c_only;
  c_only.name = "link-c";
  c_only.a = {"west", 1};
  c_only.b = {"east", 1};
  c_only.attenuation_db = config.link_attenuation_db;
  c_only.band_names = {"C"};
  c_only.edfas = {{"C", config.edfa_c}};
  topology.add_link(c_only);

  for (size_t i = 0; i < config.test_signals.size(); ++i) {
    const TestSignal& signal = config.test_signals[i];
    const TransceiverSpec& spec =
        signal.band_name == "C" ? config.transceiver_c : config.transceiver_l;
    const TransceiverId src = scenario_src(static_cast<int>(i));
    topology.attach_transceiver(src, spec);
    const TransceiverId dst =
        scenario_dst(topology, scenario, signal.band_name, static_cast<int>(i));
    if (!(dst == src)) {
      topology.attach_transceiver(dst, spec);
    }
  }
  return {std::move(scenario), std::move(topology)};
}

ScenarioRun run_scenario(ScenarioSetup& setup, const ScenarioConfig& config,
                         const TraceOptions& options) {
  ScenarioRun run;
  run.scenario_id = setup.scenario.id;
  for (size_t i = 0; i < config.test_signals.size(); ++i) {
    const TestSignal& signal = config.test_signals[i];
    if (signal.subchannel_nm.empty()) {
      throw Error(ErrorCode::invalid_argument,
                  signal.label + ": test signal needs subchannel wavelengths");
    }
    double sum = 0.0;
    for (double nm : signal.subchannel_nm) sum += wavelength_to_frequency(nm);
    const double target = sum / static_cast<double>(signal.subchannel_nm.size());
    const TransceiverId src = scenario_src(static_cast<int>(i));
    const TransceiverId dst =
        scenario_dst(setup.topology, setup.scenario, signal.band_name, static_cast<int>(i));
    const Lightpath path = setup.topology.provision_via(
        src, dst, config.signal, signal.band_name,
        setup.scenario.band_routes.at(signal.band_name), target);

    SignalResult result;
    result.signal = signal;
    result.lightpath_id = path.id;
    result.span_count = path.span_count();
    for (int sc = path.signal.subcarrier_count - 1; sc >= 0; --sc) {
      QReport report =
          evaluate_subcarrier(setup.topology, path, sc, options, config.penalty);
      report.label = signal.label + "/sc" +
                     std::to_string(path.signal.subcarrier_count - sc);
      result.subchannels.push_back(std::move(report));
    }
    run.results.push_back(std::move(result));
  }
  return run;
}

TraceOptions trace_options(const ScenarioConfig& config) {
  TraceOptions options;
  options.setpoints = config.setpoints;
  options.tx_launch_dbm = config.tx_launch_dbm;
  options.power_floor_dbm = config.penalty.power_floor_dbm;
  options.seed = config.seed;
  return options;
}

namespace {

double target_frequency(const TestSignal& signal) {
  if (signal.subchannel_nm.empty()) {
    throw Error(ErrorCode::invalid_argument,
                signal.label + ": test signal needs subchannel wavelengths");
  }
  double sum = 0.0;
  for (double nm : signal.subchannel_nm) sum += wavelength_to_frequency(nm);
  return sum / static_cast<double>(signal.subchannel_nm.size());
}

}  // namespace

const TestSignal& probe_signal(const ScenarioConfig& config) {
  std::vector<std::pair<double, size_t>> c_signals;
  for (size_t i = 0; i < config.test_signals.size(); ++i) {
    const TestSignal& signal = config.test_signals[i];
    if (signal.band_name != "C") continue;
    c_signals.push_back({target_frequency(signal), i});
  }
  if (c_signals.empty()) {
    throw Error(ErrorCode::invalid_argument, "no C band test signal to probe");
  }
  std::sort(c_signals.begin(), c_signals.end());
  return config.test_signals[c_signals[c_signals.size() / 2].second];
}

namespace {

/// The probe lightpath provisioned on a fresh copy of the test network.
struct Probe {
  ScenarioSetup setup;
  Lightpath path;
};

Probe build_probe(int scenario_id, const ScenarioConfig& config) {
  ScenarioSetup setup = build_scenario(scenario_id, config);
  const TestSignal& signal = probe_signal(config);
  const size_t index =
      static_cast<size_t>(&signal - config.test_signals.data());
  const TransceiverId src = scenario_src(static_cast<int>(index));
  const TransceiverId dst =
      scenario_dst(setup.topology, setup.scenario, signal.band_name, static_cast<int>(index));
  Lightpath path = setup.topology.provision_via(
      src, dst, config.signal, signal.band_name,
      setup.scenario.band_routes.at(signal.band_name), target_frequency(signal));
  return {std::move(setup), std::move(path)};
}

}  // namespace

PowerTrace probe_trace(int scenario_id, const ScenarioConfig& config) {
  Probe probe = build_probe(scenario_id, config);
  const TraceOptions options = trace_options(config);
  const std::vector<LedgerStep> steps =
      lightpath_ledger(probe.setup.topology, probe.path, 0, options);
  return propagate_power(steps, options.tx_launch_dbm, options.power_floor_dbm);
}

std::vector<SweepPoint> input_power_sweep(int scenario_id, const ScenarioConfig& config,
                                          const std::vector<double>& point_a_powers_dbm,
                                          double range_min_dbm, double range_max_dbm) {
  for (double p : point_a_powers_dbm) {
    if (p < range_min_dbm || p > range_max_dbm) {
      throw Error(ErrorCode::invalid_argument,
                  "sweep power outside the configured range");
    }
  }
  Probe probe = build_probe(scenario_id, config);
  std::vector<SweepPoint> points;
  points.reserve(point_a_powers_dbm.size());
  for (double p : point_a_powers_dbm) {
    TraceOptions options = trace_options(config);
    options.setpoints.a_dbm = p;
    // Subcarrier 0 is the lowest frequency, i.e. subchannel 2 of a pair.
    const QReport report =
        evaluate_subcarrier(probe.setup.topology, probe.path, 0, options, config.penalty);
    points.push_back({p, report.margin_db});
  }
  return points;
}

double inline_amp_benefit(int scenario_id, const ScenarioConfig& config, double gain_db) {
  if (gain_db < 0.0) {
    throw Error(ErrorCode::invalid_argument, "amplifier gain must be non-negative");
  }
  Probe probe = build_probe(scenario_id, config);
  TraceOptions base = trace_options(config);
  TraceOptions with_amp = base;
  with_amp.inline_amp_gain_db = gain_db;
  const QReport without =
      evaluate_subcarrier(probe.setup.topology, probe.path, 0, base, config.penalty);
  const QReport with =
      evaluate_subcarrier(probe.setup.topology, probe.path, 0, with_amp, config.penalty);
  return with.margin_db - without.margin_db;
}

}  // namespace roadmsim
