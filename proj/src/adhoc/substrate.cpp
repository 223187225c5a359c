// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/adhoc/substrate.hpp"

namespace sos::adhoc {

void AdhocSubstrate::contact_up(const UserId& a, const UserId& b,
                                std::uint64_t bandwidth_bytes_per_s) {
  if (a == b) {
    throw LinkError("contact endpoints must differ: " + a.str());
  }
  if (bandwidth_bytes_per_s == 0) {
    throw LinkError("contact bandwidth must be positive");
  }
  auto [it, inserted] =
      links_.emplace(PairKey::of(a, b), Link{bandwidth_bytes_per_s});
  (void)it;
  if (!inserted) {
    throw LinkError("contact already active: " + a.str() + " / " + b.str());
  }
}

void AdhocSubstrate::contact_down(const UserId& a, const UserId& b) {
  PairKey key = PairKey::of(a, b);
  auto link = links_.find(key);
  if (link == links_.end()) {
    throw LinkError("contact not active: " + a.str() + " / " + b.str());
  }
  links_.erase(link);
  auto session = sessions_.find(key);
  if (session != sessions_.end()) {
    session->second->on_link_lost(session_observer_);
    sessions_.erase(session);
  }
}

bool AdhocSubstrate::link_active(const UserId& a, const UserId& b) const {
  return links_.contains(PairKey::of(a, b));
}

AdhocSubstrate::TickActivity AdhocSubstrate::tick(
    Timestamp now, std::map<UserId, Node>& nodes, Timestamp tick_seconds) {
  TickActivity activity;
  // Discovery phase: every node's advertisement reaches every in-contact
  // peer, then each side decides whether the peer's content is worth a
  // connection. One session per pair at a time.
  for (const auto& [pair, link] : links_) {
    (void)link;
    Node& na = nodes.at(pair.first);
    Node& nb = nodes.at(pair.second);
    Advertisement adv_a = na.advertisement();
    Advertisement adv_b = nb.advertisement();
    if (adv_observer_) {
      adv_observer_(now, pair.first, pair.second, adv_a);
      adv_observer_(now, pair.second, pair.first, adv_b);
    }
    if (sessions_.contains(pair)) {
      continue;
    }
    auto request_a = session::on_peer_found(na, nb.id(), adv_b);
    auto request_b = session::on_peer_found(nb, na.id(), adv_a);
    if (!request_a && !request_b) {
      continue;
    }
    // When both sides want data the lower UserId requests; pair.first is the
    // lower by construction.
    Node* requester = &na;
    Node* responder = &nb;
    routing::InterestDecision by_requester;
    routing::InterestDecision by_responder;
    if (request_a) {
      by_requester = std::move(request_a->wanted);
      if (request_b) {
        by_responder = std::move(request_b->wanted);
      }
    } else {
      requester = &nb;
      responder = &na;
      by_requester = std::move(request_b->wanted);
    }
    auto [slot, inserted] =
        sessions_.emplace(pair, std::make_unique<session::Session>(
                                    next_session_id_++, *requester, *responder,
                                    std::move(by_requester), std::move(by_responder)));
    (void)inserted;
    ++activity.sessions_created;
    if (session_observer_) {
      session_observer_->on_opened(*slot->second);
    }
  }

  // Transfer phase: each pair's session gets this tick's byte budget.
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    const PairKey& pair = it->first;
    std::uint64_t budget = links_.at(pair).bandwidth_bytes_per_s *
                           static_cast<std::uint64_t>(tick_seconds);
    activity.bytes_moved += it->second->pump(now, budget, session_observer_);
    if (it->second->closed()) {
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
  return activity;
}

}  // namespace sos::adhoc
