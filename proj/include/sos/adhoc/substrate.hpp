// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <map>
#include <memory>

#include "sos/session/session.hpp"

namespace sos::adhoc {

using core::Advertisement;
using core::Timestamp;
using core::UserId;

/// One opportunistic encounter: the unordered pair can exchange bytes at
/// `bandwidth` during [start, end).
struct Contact {
  UserId a;
  UserId b;
  Timestamp start = 0;
  Timestamp end = 0;
  std::uint64_t bandwidth_bytes_per_s = 0;
};

/// Canonical unordered node pair (smaller id first).
struct PairKey {
  UserId first;
  UserId second;

  static PairKey of(const UserId& x, const UserId& y) {
    return x < y ? PairKey{x, y} : PairKey{y, x};
  }

  auto operator<=>(const PairKey&) const = default;
};

class LinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The simulated radio substrate: tracks which pairs are in contact, makes
/// every node's advertisement visible to in-contact peers each tick, forms
/// sessions from non-empty interest decisions, and moves session bytes under
/// the per-pair bandwidth budget. Links are reliable and in-order while up;
/// the only loss mode is contact termination.
///
/// A real transport backend would present these same seams: advertise,
/// peer found, peer lost, session established, frame delivered.
class AdhocSubstrate {
 public:
  /// Streams every plaintext advertisement delivery, which is exactly what a
  /// nearby observer would see.
  using AdvertisementObserver = std::function<void(
      Timestamp, const UserId& from, const UserId& to, const Advertisement&)>;

  void set_advertisement_observer(AdvertisementObserver obs) {
    adv_observer_ = std::move(obs);
  }
  void set_session_observer(session::SessionObserver* obs) {
    session_observer_ = obs;
  }

  /// Throws LinkError if the pair is already in contact.
  void contact_up(const UserId& a, const UserId& b,
                  std::uint64_t bandwidth_bytes_per_s);

  /// Tears down the link and any session on it (frames in flight are lost).
  /// Throws LinkError if the pair is not in contact.
  void contact_down(const UserId& a, const UserId& b);

  bool link_active(const UserId& a, const UserId& b) const;
  std::size_t active_links() const { return links_.size(); }
  std::size_t active_sessions() const { return sessions_.size(); }

  struct TickActivity {
    std::size_t sessions_created = 0;
    std::uint64_t bytes_moved = 0;
  };

  /// One simulation tick: broadcast advertisements, form sessions from
  /// non-empty decisions (lower UserId requests on a simultaneous want),
  /// then pump every session with bandwidth * tick_seconds bytes. The
  /// returned activity lets the event loop detect quiescence.
  TickActivity tick(Timestamp now, std::map<UserId, Node>& nodes,
                    Timestamp tick_seconds);

 private:
  struct Link {
    std::uint64_t bandwidth_bytes_per_s = 0;
  };

  std::map<PairKey, Link> links_;
  std::map<PairKey, std::unique_ptr<session::Session>> sessions_;
  std::uint64_t next_session_id_ = 1;
  AdvertisementObserver adv_observer_;
  session::SessionObserver* session_observer_ = nullptr;
};

}  // namespace sos::adhoc
