// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/node.hpp"

namespace sos {

Node::Node(const core::UserId& id, routing::RoutingSchemeKind scheme_kind,
           security::SignupResult credentials,
           const security::SignatureScheme& sig_scheme)
    : routing_(routing::make_routing_state(id)),
      scheme_(routing::make_scheme(scheme_kind)),
      credentials_(std::move(credentials)),
      sig_scheme_(sig_scheme) {
  routing_.author_certs.emplace(id, credentials_.certificate);
}

const core::MessageCopy& Node::publish(const Bytes& payload, core::Timestamp now) {
  core::Message msg;
  msg.id = core::MessageId{id(), next_number_};
  msg.created_at = now;
  msg.payload = payload;
  security::sign_message(msg, credentials_.device_keys, sig_scheme_);

  core::MessageCopy copy;
  copy.message = std::move(msg);
  copy.hop_count = 0;
  copy.received_at = now;
  auto [it, inserted] = routing_.store.emplace(copy.message.id, std::move(copy));
  ++next_number_;
  routing::recompute_latest(routing_, id(), now);
  actions_.push_back(
      core::Action{now, id(), core::PublishAction{it->first}, false});
  return it->second;
}

void Node::follow(const core::UserId& followee, core::Timestamp now) {
  if (followee == id()) {
    return;
  }
  routing_.following.insert(followee);
  actions_.push_back(core::Action{now, id(), core::FollowAction{followee}, false});
}

void Node::unfollow(const core::UserId& followee, core::Timestamp now) {
  // Already stored copies are retained; the author just stops being
  // interesting for future requests. Under IB the author also stops being
  // re-advertised.
  routing_.following.erase(followee);
  if (scheme_->kind() == routing::RoutingSchemeKind::InterestBased &&
      followee != id()) {
    routing_.forwarding_for.erase(followee);
  }
  actions_.push_back(core::Action{now, id(), core::UnfollowAction{followee}, false});
}

std::size_t Node::cloud_sync(const std::set<core::UserId>& crl,
                             core::Timestamp now) {
  (void)now;
  crl_cache_ = crl;
  std::size_t newly_synced = 0;
  for (auto& action : actions_) {
    if (!action.synced) {
      action.synced = true;
      ++newly_synced;
    }
  }
  return newly_synced;
}

core::Advertisement Node::advertisement() const {
  return scheme_->advertised_entries(routing_);
}

routing::InterestDecision Node::decide(const core::Advertisement& adv) const {
  return scheme_->on_peer_advertisement(routing_, adv);
}

std::optional<security::CertFailure> Node::validate_peer_certificate(
    const security::Certificate& cert, core::Timestamp now) const {
  return security::validate_certificate(cert, credentials_.root_public_key, now,
                                        crl_cache_, sig_scheme_);
}

std::vector<routing::OfferItem> Node::offer(
    const routing::InterestDecision& wanted) const {
  return scheme_->messages_to_offer(routing_, wanted);
}

routing::ReceiveOutcome Node::receive(const routing::ForwardedCopy& incoming,
                                      core::Timestamp now) {
  routing::VerifyContext ctx;
  ctx.root_public_key = &credentials_.root_public_key;
  ctx.now = now;
  ctx.crl = &crl_cache_;
  ctx.scheme = &sig_scheme_;
  auto outcomes =
      scheme_->on_messages_received(routing_, std::span(&incoming, 1), ctx);
  routing::ReceiveOutcome outcome = outcomes.front();
  if (outcome.accepted && delivery_sink_) {
    delivery_sink_(*this, routing_.store.at(outcome.id));
  }
  return outcome;
}

}  // namespace sos
