// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/harness/trace.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sos/adhoc/substrate.hpp"
#include "sos/core/message.hpp"

namespace sos::harness {

const char* to_string(TraceEventKind kind) {
  switch (kind) {
    case TraceEventKind::ContactDown: return "contact-down";
    case TraceEventKind::ContactUp: return "contact-up";
    case TraceEventKind::Publish: return "publish";
    case TraceEventKind::Follow: return "follow";
    case TraceEventKind::Unfollow: return "unfollow";
    case TraceEventKind::CloudSync: return "cloud-sync";
    case TraceEventKind::Revoke: return "revoke";
  }
  return "unknown";
}

namespace {

std::optional<TraceEventKind> parse_kind(std::string_view word) {
  if (word == "contact-down") return TraceEventKind::ContactDown;
  if (word == "contact-up") return TraceEventKind::ContactUp;
  if (word == "publish") return TraceEventKind::Publish;
  if (word == "follow") return TraceEventKind::Follow;
  if (word == "unfollow") return TraceEventKind::Unfollow;
  if (word == "cloud-sync") return TraceEventKind::CloudSync;
  if (word == "revoke") return TraceEventKind::Revoke;
  return std::nullopt;
}

UserId parse_user(std::size_t index, const std::string& word) {
  auto id = UserId::try_from_string(word);
  if (!id) {
    throw TraceError(index, "invalid user id \"" + word + "\"");
  }
  return *id;
}

}  // namespace

std::vector<TraceEvent> parse_trace(std::istream& in) {
  std::vector<TraceEvent> events;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    TraceEvent event;
    std::string kind_word;
    if (!(fields >> event.at >> kind_word)) {
      throw TraceError(index, "expected \"<at> <kind> ...\", got \"" + line + "\"");
    }
    auto kind = parse_kind(kind_word);
    if (!kind) {
      throw TraceError(index, "unknown event kind \"" + kind_word + "\"");
    }
    event.kind = *kind;
    std::string first, second;
    switch (event.kind) {
      case TraceEventKind::ContactUp:
        if (!(fields >> first >> second >> event.bandwidth)) {
          throw TraceError(index, "contact-up needs <a> <b> <bandwidth>");
        }
        event.a = parse_user(index, first);
        event.b = parse_user(index, second);
        break;
      case TraceEventKind::ContactDown:
      case TraceEventKind::Follow:
      case TraceEventKind::Unfollow:
        if (!(fields >> first >> second)) {
          throw TraceError(index, std::string(to_string(event.kind)) +
                                      " needs two user ids");
        }
        event.a = parse_user(index, first);
        event.b = parse_user(index, second);
        break;
      case TraceEventKind::Publish: {
        if (!(fields >> first >> second)) {
          throw TraceError(index, "publish needs <author> <payload-hex|->");
        }
        event.a = parse_user(index, first);
        event.b = event.a;
        if (second != "-") {
          try {
            event.payload = from_hex(second);
          } catch (const CodecError& e) {
            throw TraceError(index, std::string("bad payload hex: ") + e.what());
          }
        }
        break;
      }
      case TraceEventKind::CloudSync:
      case TraceEventKind::Revoke:
        if (!(fields >> first)) {
          throw TraceError(index, std::string(to_string(event.kind)) +
                                      " needs one user id");
        }
        event.a = parse_user(index, first);
        event.b = event.a;
        break;
    }
    std::string extra;
    if (fields >> extra) {
      throw TraceError(index, "trailing field \"" + extra + "\"");
    }
    events.push_back(std::move(event));
    ++index;
  }
  return events;
}

std::string format_trace_event(const TraceEvent& event) {
  std::ostringstream out;
  out << event.at << ' ' << to_string(event.kind);
  switch (event.kind) {
    case TraceEventKind::ContactUp:
      out << ' ' << event.a.str() << ' ' << event.b.str() << ' ' << event.bandwidth;
      break;
    case TraceEventKind::ContactDown:
    case TraceEventKind::Follow:
    case TraceEventKind::Unfollow:
      out << ' ' << event.a.str() << ' ' << event.b.str();
      break;
    case TraceEventKind::Publish:
      out << ' ' << event.a.str() << ' '
          << (event.payload.empty() ? std::string("-") : to_hex(event.payload));
      break;
    case TraceEventKind::CloudSync:
    case TraceEventKind::Revoke:
      out << ' ' << event.a.str();
      break;
  }
  return out.str();
}

void write_trace(std::ostream& out, std::span<const TraceEvent> events) {
  for (const TraceEvent& event : events) {
    out << format_trace_event(event) << '\n';
  }
}

void validate_trace(std::span<const TraceEvent> events,
                    const std::set<UserId>& known_users) {
  std::map<adhoc::PairKey, std::size_t> open_contacts;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TraceEvent& e = events[i];
    if (e.at < 0) {
      throw TraceError(i, "negative timestamp");
    }
    if (i > 0 && e < events[i - 1]) {
      throw TraceError(i, "events not in canonical (at, kind, ids) order");
    }
    if (!known_users.contains(e.a)) {
      throw TraceError(i, "unknown user " + e.a.str());
    }
    switch (e.kind) {
      case TraceEventKind::ContactUp: {
        if (!known_users.contains(e.b)) {
          throw TraceError(i, "unknown user " + e.b.str());
        }
        if (e.a == e.b) {
          throw TraceError(i, "contact endpoints must differ");
        }
        if (e.bandwidth == 0) {
          throw TraceError(i, "contact bandwidth must be positive");
        }
        auto [it, inserted] =
            open_contacts.emplace(adhoc::PairKey::of(e.a, e.b), i);
        (void)it;
        if (!inserted) {
          throw TraceError(i, "contact already up for this pair");
        }
        break;
      }
      case TraceEventKind::ContactDown: {
        if (!known_users.contains(e.b)) {
          throw TraceError(i, "unknown user " + e.b.str());
        }
        if (open_contacts.erase(adhoc::PairKey::of(e.a, e.b)) == 0) {
          throw TraceError(i, "contact-down without a matching contact-up");
        }
        break;
      }
      case TraceEventKind::Follow:
      case TraceEventKind::Unfollow:
        if (!known_users.contains(e.b)) {
          throw TraceError(i, "unknown user " + e.b.str());
        }
        if (e.a == e.b) {
          throw TraceError(i, "follower and followee must differ");
        }
        break;
      case TraceEventKind::Publish:
        if (e.payload.size() > core::kMaxPayloadBytes) {
          throw TraceError(i, "payload exceeds " +
                                  std::to_string(core::kMaxPayloadBytes) +
                                  " bytes");
        }
        break;
      case TraceEventKind::CloudSync:
      case TraceEventKind::Revoke:
        break;
    }
  }
}

}  // namespace sos::harness
