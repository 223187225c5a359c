// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <vector>

#include "sos/core/action.hpp"
#include "sos/routing/scheme.hpp"
#include "sos/security/ca.hpp"

namespace sos {

/// One device: routing state, credentials from the one-time signup, the
/// cached CRL, and the append-only action log. All methods are driven by the
/// single-threaded event loop.
class Node {
 public:
  Node(const core::UserId& id, routing::RoutingSchemeKind scheme_kind,
       security::SignupResult credentials,
       const security::SignatureScheme& sig_scheme);

  const core::UserId& id() const { return routing_.owner; }
  routing::RoutingSchemeKind scheme_kind() const { return scheme_->kind(); }
  const routing::RoutingState& routing() const { return routing_; }
  routing::RoutingState& routing() { return routing_; }
  const routing::RoutingScheme& scheme() const { return *scheme_; }
  const security::Certificate& certificate() const { return credentials_.certificate; }
  const std::set<core::UserId>& crl_cache() const { return crl_cache_; }
  const std::vector<core::Action>& actions() const { return actions_; }
  core::MessageNumber next_publish_number() const { return next_number_; }

  // ---- application layer ----------------------------------------------

  /// Creates, signs and stores the next numbered message. Returns the stored
  /// copy (hop_count 0).
  const core::MessageCopy& publish(const Bytes& payload, core::Timestamp now);
  void follow(const core::UserId& followee, core::Timestamp now);
  void unfollow(const core::UserId& followee, core::Timestamp now);

  /// Cloud-sync event: refreshes the CRL cache and marks pending actions
  /// synced. Returns how many actions were newly synced.
  std::size_t cloud_sync(const std::set<core::UserId>& crl, core::Timestamp now);

  // ---- session-facing ---------------------------------------------------

  core::Advertisement advertisement() const;
  routing::InterestDecision decide(const core::Advertisement& adv) const;
  std::optional<security::CertFailure> validate_peer_certificate(
      const security::Certificate& cert, core::Timestamp now) const;
  std::vector<routing::OfferItem> offer(const routing::InterestDecision& wanted) const;
  routing::ReceiveOutcome receive(const routing::ForwardedCopy& incoming,
                                  core::Timestamp now);

  /// Invoked for every newly accepted non-duplicate copy; the harness hangs
  /// its delivery recorder here.
  using DeliverySink = std::function<void(const Node&, const core::MessageCopy&)>;
  void set_delivery_sink(DeliverySink sink) { delivery_sink_ = std::move(sink); }

 private:
  routing::RoutingState routing_;
  std::unique_ptr<routing::RoutingScheme> scheme_;
  security::SignupResult credentials_;
  const security::SignatureScheme& sig_scheme_;
  std::set<core::UserId> crl_cache_;
  std::vector<core::Action> actions_;
  core::MessageNumber next_number_ = 1;
  DeliverySink delivery_sink_;
};

}  // namespace sos
