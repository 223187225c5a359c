// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/routing/scheme.hpp"

#include <algorithm>

namespace sos::routing {

const char* to_string(RoutingSchemeKind kind) {
  switch (kind) {
    case RoutingSchemeKind::Epidemic: return "epidemic";
    case RoutingSchemeKind::InterestBased: return "ib";
  }
  return "unknown";
}

RoutingSchemeKind parse_scheme_kind(std::string_view name) {
  if (name == "epidemic") return RoutingSchemeKind::Epidemic;
  if (name == "ib") return RoutingSchemeKind::InterestBased;
  throw std::invalid_argument("unknown routing scheme: \"" + std::string(name) +
                              "\" (expected \"epidemic\" or \"ib\")");
}

RoutingState make_routing_state(const UserId& owner) {
  RoutingState state;
  state.owner = owner;
  state.forwarding_for.insert(owner);
  return state;
}

MessageNumber recompute_latest(RoutingState& state, const UserId& author,
                               Timestamp now) {
  MessageNumber mark = 0;
  // Walk the contiguous run 1, 2, ... stopping at the first gap.
  for (auto it = state.store.lower_bound(MessageId{author, 1});
       it != state.store.end() && it->first.author == author; ++it) {
    if (it->first.number != mark + 1) {
      break;
    }
    mark = it->first.number;
  }
  auto& current = state.latest[author];
  if (mark > current) {
    current = mark;
    state.last_advance[author] = now;
  }
  return current;
}

Advertisement RoutingScheme::advertised_entries(const RoutingState& state) const {
  std::vector<UserId> candidates;
  for (const UserId& author : state.forwarding_for) {
    auto mark = state.latest.find(author);
    if (mark != state.latest.end() && mark->second >= 1) {
      candidates.push_back(author);
    }
  }
  if (candidates.size() > core::kMaxAdvertisementEntries) {
    // Keep the most recently advanced authors; ties break on UserId so the
    // result is identical on every run.
    std::sort(candidates.begin(), candidates.end(),
              [&state](const UserId& a, const UserId& b) {
                Timestamp ta = state.last_advance.count(a) ? state.last_advance.at(a) : 0;
                Timestamp tb = state.last_advance.count(b) ? state.last_advance.at(b) : 0;
                if (ta != tb) return ta > tb;
                return a < b;
              });
    candidates.resize(core::kMaxAdvertisementEntries);
  }
  Advertisement adv;
  adv.advertiser = state.owner;
  for (const UserId& author : candidates) {
    adv.entries.emplace(author, state.latest.at(author));
  }
  return adv;
}

InterestDecision RoutingScheme::on_peer_advertisement(
    const RoutingState& state, const Advertisement& adv) const {
  InterestDecision decision;
  for (const auto& [author, advertised] : adv.entries) {
    if (author == state.owner) {
      continue;  // nobody else can hold our unpublished numbers
    }
    if (!interested_in(state, author)) {
      continue;
    }
    auto it = state.latest.find(author);
    MessageNumber have = it == state.latest.end() ? 0 : it->second;
    for (MessageNumber k = have + 1; k <= advertised; ++k) {
      decision.wanted.push_back(MessageId{author, k});
    }
  }
  return decision;
}

std::vector<ReceiveOutcome> RoutingScheme::on_messages_received(
    RoutingState& state, std::span<const ForwardedCopy> copies,
    const VerifyContext& ctx) const {
  std::vector<ReceiveOutcome> outcomes;
  outcomes.reserve(copies.size());
  for (const ForwardedCopy& incoming : copies) {
    ReceiveOutcome outcome;
    outcome.id = incoming.copy.message.id;
    if (state.store.contains(outcome.id)) {
      outcome.duplicate = true;
      outcomes.push_back(outcome);
      continue;
    }
    auto failure = security::verify_forwarded(
        incoming.copy.message, incoming.author_cert, *ctx.root_public_key,
        ctx.now, *ctx.crl, *ctx.scheme);
    if (failure) {
      outcome.reject_reason = failure;
      outcomes.push_back(outcome);
      continue;
    }
    MessageCopy stored;
    stored.message = incoming.copy.message;
    stored.hop_count = incoming.copy.hop_count + 1;
    stored.received_at = ctx.now;
    const UserId& author = outcome.id.author;
    state.store.emplace(outcome.id, std::move(stored));
    state.author_certs.emplace(author, incoming.author_cert);
    recompute_latest(state, author, ctx.now);
    if (interested_in(state, author)) {
      state.forwarding_for.insert(author);
    }
    outcome.accepted = true;
    outcomes.push_back(outcome);
  }
  return outcomes;
}

std::vector<OfferItem> RoutingScheme::messages_to_offer(
    const RoutingState& state, const InterestDecision& wanted) const {
  std::vector<OfferItem> items;
  items.reserve(wanted.wanted.size());
  for (const MessageId& id : wanted.wanted) {
    auto stored = state.store.find(id);
    if (stored == state.store.end()) {
      throw MissingMessageError(id);
    }
    auto cert = state.author_certs.find(id.author);
    if (cert == state.author_certs.end()) {
      throw MissingMessageError(id);
    }
    items.push_back(OfferItem{stored->second, cert->second});
  }
  std::sort(items.begin(), items.end(),
            [](const OfferItem& a, const OfferItem& b) {
              return a.copy.message.id < b.copy.message.id;
            });
  return items;
}

std::unique_ptr<RoutingScheme> make_scheme(RoutingSchemeKind kind) {
  switch (kind) {
    case RoutingSchemeKind::Epidemic:
      return std::make_unique<EpidemicRouting>();
    case RoutingSchemeKind::InterestBased:
      return std::make_unique<InterestBasedRouting>();
  }
  throw std::invalid_argument("unknown routing scheme kind");
}

}  // namespace sos::routing
