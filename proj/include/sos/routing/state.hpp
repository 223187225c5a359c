// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <set>

#include "sos/core/advertisement.hpp"
#include "sos/core/message.hpp"
#include "sos/security/certificate.hpp"

namespace sos::routing {

using core::Advertisement;
using core::Message;
using core::MessageCopy;
using core::MessageId;
using core::MessageNumber;
using core::Timestamp;
using core::UserId;

enum class RoutingSchemeKind { Epidemic, InterestBased };

const char* to_string(RoutingSchemeKind kind);
RoutingSchemeKind parse_scheme_kind(std::string_view name);  // "epidemic" | "ib"

/// Per-node routing state. `latest` holds contiguous high-water marks: the
/// largest n such that messages 1..n of that author are all stored. A node
/// always forwards for itself; schemes decide which other authors join
/// forwarding_for.
struct RoutingState {
  UserId owner;
  std::map<MessageId, MessageCopy> store;
  std::map<UserId, MessageNumber> latest;
  std::set<UserId> following;
  std::set<UserId> forwarding_for;
  // Certificates learned alongside received messages (plus the node's own),
  // re-forwarded so downstream receivers can verify offline.
  std::map<UserId, security::Certificate> author_certs;
  // Last tick each author's high-water mark advanced; drives the
  // advertisement's most-recently-updated eviction.
  std::map<UserId, Timestamp> last_advance;
};

RoutingState make_routing_state(const UserId& owner);

/// Recomputes latest[author] from the store and stamps last_advance when the
/// mark moves. Returns the new mark.
MessageNumber recompute_latest(RoutingState& state, const UserId& author,
                               Timestamp now);

}  // namespace sos::routing
