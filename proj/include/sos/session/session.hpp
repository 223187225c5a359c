// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <deque>

#include "sos/node.hpp"
#include "sos/session/wire.hpp"

namespace sos::session {

using core::Advertisement;
using core::Timestamp;
using core::UserId;

enum class SessionPhase { Handshaking, Established, Transferring, Closed };

const char* to_string(SessionPhase phase);

class Session;

/// Hook points for logging and metrics; every callback fires from inside
/// pump() or on_link_lost() on the event-loop thread.
class SessionObserver {
 public:
  virtual ~SessionObserver() = default;

  virtual void on_opened(const Session&) {}
  virtual void on_established(const Session&) {}
  virtual void on_refused(const Session&, const UserId& /*validator*/,
                          security::CertFailure /*reason*/) {}
  virtual void on_receive(const Session&, const UserId& /*receiver*/,
                          const routing::ReceiveOutcome&) {}
  virtual void on_closed(const Session&, bool /*interrupted*/) {}
  virtual void on_protocol_error(const Session&, const std::string& /*what*/) {}
  virtual void on_frame_delivered(const Session&, const UserId& /*from*/,
                                  const WireFrame&) {}
};

/// Result of mm::on_peer_found: issue a connection only when the interest
/// decision is non-empty, so bandwidth is never spent on an empty want set.
struct ConnectionRequest {
  UserId requester;
  UserId responder;
  routing::InterestDecision wanted;
};

std::optional<ConnectionRequest> on_peer_found(const Node& node,
                                               const UserId& peer,
                                               const Advertisement& peer_adv);

/// One transfer direction inside a session: `receiver` asked `server` for
/// `requested`; ids move to `transferred` as acks come back.
struct DirectionState {
  UserId server;
  UserId receiver;
  std::vector<MessageId> requested;
  std::set<MessageId> transferred;
  bool started = false;

  bool complete() const {
    return requested.empty() || transferred.size() == requested.size();
  }
  std::size_t untransferred() const {
    return requested.size() - transferred.size();
  }
};

/// A single session between two nodes sharing a link. Frames from both
/// directions share one FIFO: the link is half duplex, and a frame only
/// reaches the peer once all its bytes have been pumped. Bytes of a frame
/// still in flight when the link drops are lost.
///
/// Lifecycle: the requester opens with its certificate; each side validates
/// the other's certificate before anything else flows; then the requester's
/// wants are served, then the responder's (back-to-back directional
/// transfers), then the session closes.
class Session {
 public:
  Session(std::uint64_t id, Node& requester, Node& responder,
          routing::InterestDecision wanted_by_requester,
          routing::InterestDecision wanted_by_responder);

  std::uint64_t session_id() const { return id_; }
  const UserId& requester() const;
  const UserId& responder() const;
  SessionPhase phase() const { return phase_; }
  bool closed() const { return phase_ == SessionPhase::Closed; }
  bool interrupted() const { return interrupted_; }
  bool authenticated_encrypted() const { return authenticated_encrypted_; }
  const DirectionState& to_requester() const { return dir_to_requester_; }
  const DirectionState& to_responder() const { return dir_to_responder_; }
  std::size_t pending_frames() const { return queue_.size(); }
  std::size_t transferred_total() const;
  std::size_t untransferred_total() const;

  /// Moves up to `budget` bytes of queued frames across the link, delivering
  /// and reacting to every frame that completes. Returns bytes consumed.
  std::uint64_t pump(Timestamp now, std::uint64_t budget, SessionObserver* obs);

  /// The link dropped: whatever was in flight is gone and the session ends.
  /// Fully received messages stay stored; nothing partial ever was.
  void on_link_lost(SessionObserver* obs);

 private:
  struct Outgoing {
    UserId from;
    WireFrame frame;
    std::size_t sent_bytes = 0;
  };

  Node& node(const UserId& id) const;
  Node& peer_of(const UserId& id) const;
  void enqueue(const UserId& from, WireFrame frame);
  void deliver(const UserId& from, const WireFrame& frame, Timestamp now,
               SessionObserver* obs);
  void start_pending_direction(SessionObserver* obs);
  void handle_request(const UserId& server, std::span<const MessageId> wanted,
                      SessionObserver* obs);
  void close_with_error(const std::string& what, SessionObserver* obs);

  std::uint64_t id_;
  Node* requester_node_;
  Node* responder_node_;
  DirectionState dir_to_requester_;  // responder serves requester's wants
  DirectionState dir_to_responder_;  // requester serves responder's wants
  SessionPhase phase_ = SessionPhase::Handshaking;
  bool interrupted_ = false;
  bool authenticated_encrypted_ = false;
  bool close_enqueued_ = false;
  std::deque<Outgoing> queue_;
};

}  // namespace sos::session
