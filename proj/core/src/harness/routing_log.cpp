#include "oblivis/harness/routing_log.hpp"

#include <algorithm>

#include <json.hpp>

namespace oblivis::harness {

RoutingLog::RoutingLog(const RoutingLog& other) : entries_(other.entries()) {}

RoutingLog& RoutingLog::operator=(const RoutingLog& other) {
  if (this != &other) {
    auto copy = other.entries();
    std::lock_guard lock(mu_);
    entries_ = std::move(copy);
  }
  return *this;
}

void RoutingLog::append(PartyEnvelope envelope) {
  std::lock_guard lock(mu_);
  const auto pos = std::upper_bound(
      entries_.begin(), entries_.end(), envelope.seq,
      [](std::uint64_t seq, const PartyEnvelope& e) { return seq < e.seq; });
  entries_.insert(pos, std::move(envelope));
}

std::vector<PartyEnvelope> RoutingLog::entries() const {
  std::lock_guard lock(mu_);
  return entries_;
}

std::size_t RoutingLog::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::string RoutingLog::export_ndjson() const {
  std::string out;
  for (const auto& e : entries()) {
    nlohmann::ordered_json record;
    record["session"] = to_hex(e.session);
    record["seq"] = e.seq;
    record["from"] = role_name(e.from);
    record["to"] = role_name(e.to);
    record["kind"] = kind_name(e.kind);
    record["payload"] = to_hex(e.payload);
    out += record.dump();
    out += '\n';
  }
  return out;
}

std::vector<PartyEnvelope> RoutingLog::between(Role from, Role to) const {
  std::vector<PartyEnvelope> out;
  for (auto& e : entries()) {
    if (e.from == from && e.to == to) out.push_back(std::move(e));
  }
  return out;
}

std::vector<PartyEnvelope> RoutingLog::of_kind(Kind kind) const {
  std::vector<PartyEnvelope> out;
  for (auto& e : entries()) {
    if (e.kind == kind) out.push_back(std::move(e));
  }
  return out;
}

std::size_t bytes_to_role(const RoutingLog& log, Role role) {
  std::size_t total = 0;
  for (const auto& e : log.entries()) {
    if (e.to == role) total += e.wire_size();
  }
  return total;
}

void assert_sender_push(const RoutingLog& log) {
  const auto pushed = log.between(Role::R, Role::S);
  if (!pushed.empty()) {
    throw ConformanceError("receiver sent " + std::to_string(pushed.size()) +
                           " envelope(s) to the sender, first of kind " +
                           std::string(kind_name(pushed.front().kind)));
  }
}

}  // namespace oblivis::harness
