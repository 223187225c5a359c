// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/session/session.hpp"

#include <algorithm>

namespace sos::session {

namespace {

// Large wanted lists are chunked so no single Request frame can hit the
// frame size cap.
constexpr std::size_t kMaxRequestIdsPerFrame = 3000;

}  // namespace

const char* to_string(SessionPhase phase) {
  switch (phase) {
    case SessionPhase::Handshaking: return "handshaking";
    case SessionPhase::Established: return "established";
    case SessionPhase::Transferring: return "transferring";
    case SessionPhase::Closed: return "closed";
  }
  return "unknown";
}

std::optional<ConnectionRequest> on_peer_found(const Node& node,
                                               const UserId& peer,
                                               const Advertisement& peer_adv) {
  routing::InterestDecision decision = node.decide(peer_adv);
  if (decision.empty()) {
    return std::nullopt;
  }
  return ConnectionRequest{node.id(), peer, std::move(decision)};
}

Session::Session(std::uint64_t id, Node& requester, Node& responder,
                 routing::InterestDecision wanted_by_requester,
                 routing::InterestDecision wanted_by_responder)
    : id_(id), requester_node_(&requester), responder_node_(&responder) {
  dir_to_requester_.server = responder.id();
  dir_to_requester_.receiver = requester.id();
  dir_to_requester_.requested = std::move(wanted_by_requester.wanted);
  dir_to_responder_.server = requester.id();
  dir_to_responder_.receiver = responder.id();
  dir_to_responder_.requested = std::move(wanted_by_responder.wanted);
  // Handshake opens with the requester's certificate.
  enqueue(requester.id(), make_cert_exchange_frame(requester.certificate()));
}

const UserId& Session::requester() const { return requester_node_->id(); }
const UserId& Session::responder() const { return responder_node_->id(); }

std::size_t Session::transferred_total() const {
  return dir_to_requester_.transferred.size() +
         dir_to_responder_.transferred.size();
}

std::size_t Session::untransferred_total() const {
  return dir_to_requester_.untransferred() + dir_to_responder_.untransferred();
}

Node& Session::node(const UserId& id) const {
  return id == requester_node_->id() ? *requester_node_ : *responder_node_;
}

Node& Session::peer_of(const UserId& id) const {
  return id == requester_node_->id() ? *responder_node_ : *requester_node_;
}

void Session::enqueue(const UserId& from, WireFrame frame) {
  queue_.push_back(Outgoing{from, std::move(frame), 0});
}

std::uint64_t Session::pump(Timestamp now, std::uint64_t budget,
                            SessionObserver* obs) {
  std::uint64_t consumed = 0;
  while (budget > 0 && !queue_.empty() && phase_ != SessionPhase::Closed) {
    Outgoing& head = queue_.front();
    std::size_t total = frame_wire_size(head.frame);
    if (total > kMaxFrameBytes) {
      close_with_error("frame exceeds link maximum", obs);
      break;
    }
    std::uint64_t chunk =
        std::min<std::uint64_t>(budget, total - head.sent_bytes);
    head.sent_bytes += chunk;
    consumed += chunk;
    budget -= chunk;
    if (head.sent_bytes < total) {
      break;  // frame still in flight; rest of it next tick
    }
    UserId from = head.from;
    WireFrame frame = std::move(head.frame);
    queue_.pop_front();
    deliver(from, frame, now, obs);
  }
  return consumed;
}

void Session::deliver(const UserId& from, const WireFrame& frame, Timestamp now,
                      SessionObserver* obs) {
  if (obs) obs->on_frame_delivered(*this, from, frame);
  Node& receiver = peer_of(from);
  try {
    switch (frame.kind) {
      case FrameKind::CertExchange: {
        security::Certificate cert = parse_cert_exchange(frame);
        if (auto failure = receiver.validate_peer_certificate(cert, now)) {
          if (obs) obs->on_refused(*this, receiver.id(), *failure);
          phase_ = SessionPhase::Closed;
          queue_.clear();
          if (obs) obs->on_closed(*this, false);
          return;
        }
        if (receiver.id() == responder()) {
          // Requester's certificate checked out; answer with ours.
          enqueue(responder(), make_cert_exchange_frame(
                                   responder_node_->certificate()));
        } else {
          // Mutual validation done; the channel is now authenticated and
          // treated as encrypted.
          authenticated_encrypted_ = true;
          phase_ = SessionPhase::Established;
          if (obs) obs->on_established(*this);
          start_pending_direction(obs);
        }
        break;
      }
      case FrameKind::Request: {
        handle_request(receiver.id(), parse_request(frame), obs);
        break;
      }
      case FrameKind::MessageData: {
        routing::ForwardedCopy item = parse_message_data(frame);
        routing::ReceiveOutcome outcome = receiver.receive(item, now);
        if (obs) obs->on_receive(*this, receiver.id(), outcome);
        // Receipt ack either way: the bytes made it across, and acceptance
        // is the receiver's own business.
        enqueue(receiver.id(), make_ack_frame(outcome.id));
        break;
      }
      case FrameKind::Ack: {
        MessageId id = parse_ack(frame);
        DirectionState& dir = receiver.id() == dir_to_requester_.server
                                  ? dir_to_requester_
                                  : dir_to_responder_;
        dir.transferred.insert(id);
        start_pending_direction(obs);
        break;
      }
      case FrameKind::Close: {
        phase_ = SessionPhase::Closed;
        queue_.clear();
        if (obs) obs->on_closed(*this, false);
        break;
      }
    }
  } catch (const routing::MissingMessageError& e) {
    close_with_error(e.what(), obs);
  } catch (const CodecError& e) {
    close_with_error(e.what(), obs);
  }
}

void Session::start_pending_direction(SessionObserver* obs) {
  (void)obs;
  if (phase_ != SessionPhase::Established &&
      phase_ != SessionPhase::Transferring) {
    return;
  }
  auto start = [this](DirectionState& dir) {
    dir.started = true;
    for (std::size_t begin = 0; begin < dir.requested.size();
         begin += kMaxRequestIdsPerFrame) {
      std::size_t count =
          std::min(kMaxRequestIdsPerFrame, dir.requested.size() - begin);
      enqueue(dir.receiver,
              make_request_frame(std::span(dir.requested).subspan(begin, count)));
    }
  };
  if (!dir_to_requester_.started) {
    start(dir_to_requester_);
  }
  if (dir_to_requester_.complete() && !dir_to_responder_.started) {
    start(dir_to_responder_);
  }
  if (dir_to_requester_.complete() && dir_to_responder_.complete() &&
      !close_enqueued_) {
    close_enqueued_ = true;
    enqueue(requester(), make_close_frame());
  }
}

void Session::handle_request(const UserId& server,
                             std::span<const MessageId> wanted,
                             SessionObserver* obs) {
  (void)obs;
  phase_ = SessionPhase::Transferring;
  routing::InterestDecision decision;
  decision.wanted.assign(wanted.begin(), wanted.end());
  std::vector<routing::OfferItem> items = node(server).offer(decision);
  for (routing::OfferItem& item : items) {
    enqueue(server, make_message_data_frame(item));
  }
}

void Session::close_with_error(const std::string& what, SessionObserver* obs) {
  if (obs) obs->on_protocol_error(*this, what);
  phase_ = SessionPhase::Closed;
  queue_.clear();
  if (obs) obs->on_closed(*this, false);
}

void Session::on_link_lost(SessionObserver* obs) {
  if (phase_ == SessionPhase::Closed) {
    return;
  }
  interrupted_ = true;
  phase_ = SessionPhase::Closed;
  queue_.clear();
  if (obs) obs->on_closed(*this, true);
}

}  // namespace sos::session
