// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <set>
#include <vector>

#include "sos/core/ids.hpp"
#include "sos/util/bytes.hpp"

namespace sos::harness {

using core::Timestamp;
using core::UserId;

/// Kind values double as the deterministic tie-break for events sharing a
/// timestamp: contacts tear down before new ones come up, so a contact split
/// at time t into [s,t) and [t,e) replays cleanly.
enum class TraceEventKind {
  ContactDown = 0,
  ContactUp = 1,
  Publish = 2,
  Follow = 3,
  Unfollow = 4,
  CloudSync = 5,
  Revoke = 6,
};

const char* to_string(TraceEventKind kind);

struct TraceEvent {
  Timestamp at = 0;
  TraceEventKind kind = TraceEventKind::ContactUp;
  UserId a;                        // author / follower / node / user
  UserId b;                        // peer / followee (contact + follow kinds)
  std::uint64_t bandwidth = 0;     // ContactUp only
  Bytes payload;                   // Publish only

  /// (at, kind, a, b) — the canonical trace order.
  friend bool operator<(const TraceEvent& x, const TraceEvent& y) {
    return std::tie(x.at, x.kind, x.a, x.b) < std::tie(y.at, y.kind, y.a, y.b);
  }
};

class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t index, const std::string& what)
      : std::runtime_error("trace event " + std::to_string(index) + ": " + what),
        index(index) {}

  std::size_t index;
};

/// Line format, one event per line, fields space-separated:
///   <at> contact-up <a> <b> <bandwidth>
///   <at> contact-down <a> <b>
///   <at> publish <author> <payload-hex|->
///   <at> follow <follower> <followee>
///   <at> unfollow <follower> <followee>
///   <at> cloud-sync <node>
///   <at> revoke <user>
/// Blank lines and lines starting with '#' are ignored on input.
std::vector<TraceEvent> parse_trace(std::istream& in);
std::string format_trace_event(const TraceEvent& event);
void write_trace(std::ostream& out, std::span<const TraceEvent> events);

/// Enforces the trace invariants: canonical sort order, known users,
/// non-negative times, matched contact up/down pairs, positive bandwidth,
/// payload bounds. Throws TraceError naming the offending event index.
void validate_trace(std::span<const TraceEvent> events,
                    const std::set<UserId>& known_users);

}  // namespace sos::harness
