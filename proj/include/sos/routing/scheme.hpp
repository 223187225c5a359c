// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sos/routing/state.hpp"
#include "sos/security/verify.hpp"

namespace sos::routing {

/// Messages a browsing node wants after seeing a peer advertisement, as full
/// contiguous ranges in (author, number) order.
struct InterestDecision {
  std::vector<MessageId> wanted;

  bool empty() const { return wanted.empty(); }
};

/// A message in transit: the sender's stored copy (carrying the sender's hop
/// count) plus the author's certificate.
struct ForwardedCopy {
  MessageCopy copy;
  security::Certificate author_cert;
};

/// What messages_to_offer hands to the session layer for one wanted id.
using OfferItem = ForwardedCopy;

/// Everything a receiver needs to verify a forwarded message.
struct VerifyContext {
  const Bytes* root_public_key = nullptr;
  Timestamp now = 0;
  const std::set<UserId>* crl = nullptr;
  const security::SignatureScheme* scheme = nullptr;
};

struct ReceiveOutcome {
  MessageId id;
  bool accepted = false;
  bool duplicate = false;
  std::optional<security::ForwardFailure> reject_reason;
};

/// A requested id was not in the store: the advertisement and the store
/// disagree, which is a protocol error, not a routine miss.
class MissingMessageError : public std::runtime_error {
 public:
  explicit MissingMessageError(const MessageId& id)
      : std::runtime_error("message not held: " + id.str()), id(id) {}

  MessageId id;
};

/// A routing scheme is exactly these four operations; epidemic and
/// interest-based differ only in which authors they care about, so the base
/// class carries the shared mechanics and schemes override interested_in().
class RoutingScheme {
 public:
  virtual ~RoutingScheme() = default;

  virtual RoutingSchemeKind kind() const = 0;

  /// One entry per forwarded author whose contiguous high-water mark is at
  /// least 1, evicting least-recently-advanced authors beyond the
  /// advertisement capacity.
  virtual Advertisement advertised_entries(const RoutingState& state) const;

  /// Pure interest decision: every (author, k) with local latest < k <=
  /// advertised, restricted to authors this scheme wants. Never mutates
  /// state.
  virtual InterestDecision on_peer_advertisement(const RoutingState& state,
                                                 const Advertisement& adv) const;

  /// Verifies and stores incoming copies. Rejections are per-message records;
  /// the batch never aborts. Accepted authors join forwarding_for when the
  /// scheme wants them.
  virtual std::vector<ReceiveOutcome> on_messages_received(
      RoutingState& state, std::span<const ForwardedCopy> copies,
      const VerifyContext& ctx) const;

  /// Copies for the peer's wanted list in (author, number) order, each
  /// bundled with the author's certificate. Throws MissingMessageError if a
  /// wanted id is not held.
  virtual std::vector<OfferItem> messages_to_offer(
      const RoutingState& state, const InterestDecision& wanted) const;

 protected:
  /// Whether this scheme requests, stores and re-advertises this author.
  virtual bool interested_in(const RoutingState& state,
                             const UserId& author) const = 0;
};

/// Replicates everything to everyone.
class EpidemicRouting final : public RoutingScheme {
 public:
  RoutingSchemeKind kind() const override { return RoutingSchemeKind::Epidemic; }

 protected:
  bool interested_in(const RoutingState&, const UserId&) const override {
    return true;
  }
};

/// Replicates only authors the owner is subscribed to, so relays are
/// themselves subscribers.
class InterestBasedRouting final : public RoutingScheme {
 public:
  RoutingSchemeKind kind() const override {
    return RoutingSchemeKind::InterestBased;
  }

 protected:
  bool interested_in(const RoutingState& state,
                     const UserId& author) const override {
    return state.following.contains(author);
  }
};

std::unique_ptr<RoutingScheme> make_scheme(RoutingSchemeKind kind);

}  // namespace sos::routing
