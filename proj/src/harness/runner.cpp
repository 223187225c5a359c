// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/harness/runner.hpp"

#include <json.hpp>

#include <sstream>

#include "sos/adhoc/substrate.hpp"
#include "sos/node.hpp"
#include "sos/security/ca.hpp"

namespace sos::harness {

namespace {

using nlohmann::json;

routing::RoutingSchemeKind scheme_from_json(const json& j, const std::string& where) {
  try {
    return routing::parse_scheme_kind(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

UserId user_from_json(const json& j, const std::string& where) {
  auto id = UserId::try_from_string(j.get<std::string>());
  if (!id) {
    throw ValidationError(where + ": invalid user id \"" +
                          j.get<std::string>() + "\"");
  }
  return *id;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig config;
  if (!j.contains("users") || !j["users"].is_array()) {
    throw ValidationError("config: \"users\" array is required");
  }
  if (!j.contains("seed") || !j["seed"].is_number_unsigned()) {
    throw ValidationError("config: unsigned \"seed\" is required");
  }
  config.seed = j["seed"].get<std::uint64_t>();
  for (std::size_t i = 0; i < j["users"].size(); ++i) {
    const json& u = j["users"][i];
    const std::string where = "config users[" + std::to_string(i) + "]";
    if (!u.contains("user_id")) {
      throw ValidationError(where + ": \"user_id\" is required");
    }
    RunConfig::User user;
    user.id = user_from_json(u["user_id"], where);
    if (u.contains("scheme")) {
      user.scheme = scheme_from_json(u["scheme"], where);
    }
    config.users.push_back(user);
  }
  if (j.contains("follow_edges")) {
    for (std::size_t i = 0; i < j["follow_edges"].size(); ++i) {
      const json& e = j["follow_edges"][i];
      const std::string where = "config follow_edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError(where + ": expected [follower, followee]");
      }
      config.follow_edges.emplace_back(user_from_json(e[0], where),
                                       user_from_json(e[1], where));
    }
  }
  if (j.contains("tick_seconds")) {
    config.tick_seconds = j["tick_seconds"].get<Timestamp>();
  }
  if (j.contains("cert_lifetime_days")) {
    config.cert_lifetime_days = j["cert_lifetime_days"].get<std::int64_t>();
  }
  if (j.contains("ratio_denominator_mode")) {
    try {
      config.ratio_mode =
          parse_ratio_mode(j["ratio_denominator_mode"].get<std::string>());
    } catch (const std::exception& e) {
      throw ValidationError(std::string("config ratio_denominator_mode: ") +
                            e.what());
    }
  }
  return config;
}

std::string config_to_json(const RunConfig& config) {
  json users = json::array();
  for (const auto& user : config.users) {
    users.push_back({{"user_id", user.id.str()},
                     {"scheme", routing::to_string(user.scheme)}});
  }
  json edges = json::array();
  for (const auto& [follower, followee] : config.follow_edges) {
    edges.push_back({follower.str(), followee.str()});
  }
  json j{{"users", users},
         {"follow_edges", edges},
         {"seed", config.seed},
         {"tick_seconds", config.tick_seconds},
         {"cert_lifetime_days", config.cert_lifetime_days},
         {"ratio_denominator_mode", to_string(config.ratio_mode)}};
  return j.dump(2) + "\n";
}

namespace {

void validate_config(const RunConfig& config) {
  std::set<UserId> seen;
  for (const auto& user : config.users) {
    if (!seen.insert(user.id).second) {
      throw ValidationError("config: duplicate user id " + user.id.str());
    }
  }
  for (const auto& [follower, followee] : config.follow_edges) {
    if (follower == followee) {
      throw ValidationError("config: follow edge with equal endpoints " +
                            follower.str());
    }
    if (!seen.contains(follower) || !seen.contains(followee)) {
      throw ValidationError("config: follow edge references unknown user");
    }
  }
  if (config.tick_seconds < 1) {
    throw ValidationError("config: tick_seconds must be >= 1");
  }
  if (config.cert_lifetime_days < 1) {
    throw ValidationError("config: cert_lifetime_days must be >= 1");
  }
}

/// Logging glue between the substrate/session machinery and the event log.
class RunObserver final : public session::SessionObserver {
 public:
  RunObserver(EventLog& log, const Timestamp& now, std::uint64_t& protocol_errors)
      : log_(log), now_(now), protocol_errors_(protocol_errors) {}

  void on_opened(const session::Session& s) override {
    std::ostringstream line;
    line << "t=" << now_ << " SESSION_OPEN id=" << s.session_id()
         << " requester=" << s.requester().str()
         << " responder=" << s.responder().str()
         << " wanted=" << s.to_requester().requested.size()
         << "+" << s.to_responder().requested.size();
    log_.normal(line.str());
  }

  void on_established(const session::Session& s) override {
    std::ostringstream line;
    line << "t=" << now_ << " SESSION_ESTABLISHED id=" << s.session_id()
         << " encrypted=1";
    log_.normal(line.str());
  }

  void on_refused(const session::Session& s, const UserId& validator,
                  security::CertFailure reason) override {
    std::ostringstream line;
    line << "t=" << now_ << " SESSION_REFUSED id=" << s.session_id()
         << " validator=" << validator.str()
         << " reason=" << security::to_string(reason);
    log_.normal(line.str());
  }

  void on_receive(const session::Session& s, const UserId& receiver,
                  const routing::ReceiveOutcome& outcome) override {
    if (outcome.accepted) {
      return;  // the delivery sink logs acceptances
    }
    if (outcome.duplicate) {
      std::ostringstream line;
      line << "t=" << now_ << " DUPLICATE msg=" << outcome.id.str()
           << " at=" << receiver.str();
      log_.detail(line.str());
      return;
    }
    std::ostringstream line;
    line << "t=" << now_ << " DROP msg=" << outcome.id.str()
         << " at=" << receiver.str() << " reason="
         << (outcome.reject_reason ? security::to_string(*outcome.reject_reason)
                                   : "unknown");
    log_.normal(line.str());
    (void)s;
  }

  void on_closed(const session::Session& s, bool interrupted) override {
    std::ostringstream line;
    line << "t=" << now_ << " SESSION_CLOSED id=" << s.session_id()
         << " transferred=" << s.transferred_total()
         << " untransferred=" << s.untransferred_total()
         << " interrupted=" << (interrupted ? 1 : 0);
    log_.normal(line.str());
  }

  void on_protocol_error(const session::Session& s,
                         const std::string& what) override {
    ++protocol_errors_;
    std::ostringstream line;
    line << "t=" << now_ << " PROTOCOL_ERROR id=" << s.session_id()
         << " what=" << what;
    log_.normal(line.str());
  }

  void on_frame_delivered(const session::Session& s, const UserId& from,
                          const session::WireFrame& frame) override {
    if (!log_.verbose()) {
      return;
    }
    std::ostringstream line;
    line << "t=" << now_ << " FRAME id=" << s.session_id()
         << " from=" << from.str() << " kind=" << to_string(frame.kind)
         << " bytes=" << session::frame_wire_size(frame);
    log_.detail(line.str());
  }

 private:
  EventLog& log_;
  const Timestamp& now_;
  std::uint64_t& protocol_errors_;
};

}  // namespace

RunResult run(const RunConfig& config, std::span<const TraceEvent> trace,
              EventLog::Level log_level) {
  validate_config(config);

  std::set<UserId> known_users;
  for (const auto& user : config.users) {
    known_users.insert(user.id);
  }
  validate_trace(trace, known_users);
  if (config.tick_seconds > 1) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if ((trace[i].kind == TraceEventKind::ContactUp ||
           trace[i].kind == TraceEventKind::ContactDown) &&
          trace[i].at % config.tick_seconds != 0) {
        throw TraceError(i, "contact timestamps must be multiples of tick_seconds");
      }
    }
  }

  RunResult result{MetricsReport{}, EventLog(log_level)};
  EventLog& log = result.log;

  auto sig_scheme =
      security::make_signature_scheme(config.signature_scheme, config.seed);
  security::CertificateAuthority ca(
      *sig_scheme, config.cert_lifetime_days * core::kSecondsPerDay);

  Timestamp now = 0;
  std::uint64_t protocol_errors = 0;
  std::vector<DeliveryRecord> deliveries;
  std::vector<Publication> publications;
  std::map<std::pair<UserId, UserId>, Timestamp> subscriptions_ever;
  std::set<std::pair<UserId, UserId>> follow_edges_live;

  // One-time infrastructure step: every configured user signs up while the
  // Internet is still reachable, before any trace event fires.
  std::map<UserId, Node> nodes;
  for (const auto& user : config.users) {
    auto credentials = ca.signup(user.id, user.id, now);
    nodes.emplace(user.id,
                  Node(user.id, user.scheme, std::move(credentials), *sig_scheme));
    log.normal("t=0 SIGNUP user=" + user.id.str() +
               " scheme=" + routing::to_string(user.scheme));
  }
  for (auto& [id, node] : nodes) {
    // The store accepts each message id at most once per node, so one record
    // per (message, receiver) holds without extra bookkeeping here.
    node.set_delivery_sink([&](const Node& receiver, const core::MessageCopy& copy) {
      DeliveryRecord record;
      record.message = copy.message.id;
      record.receiver = receiver.id();
      record.created_at = copy.message.created_at;
      record.delivered_at = now;
      record.hops = copy.hop_count;
      deliveries.push_back(record);
      std::ostringstream line;
      line << "t=" << now << " DELIVER msg=" << record.message.str()
           << " to=" << record.receiver.str() << " hops=" << record.hops
           << " delay=" << (record.delivered_at - record.created_at);
      log.normal(line.str());
    });
  }

  for (const auto& [follower, followee] : config.follow_edges) {
    nodes.at(follower).follow(followee, now);
    subscriptions_ever.emplace(std::make_pair(follower, followee), now);
    follow_edges_live.emplace(follower, followee);
    log.normal("t=0 FOLLOW follower=" + follower.str() +
               " followee=" + followee.str());
  }

  adhoc::AdhocSubstrate substrate;
  RunObserver observer(log, now, protocol_errors);
  substrate.set_session_observer(&observer);
  substrate.set_advertisement_observer(
      [&](Timestamp t, const UserId& from, const UserId& to,
          const core::Advertisement& adv) {
        if (!log.verbose()) {
          return;
        }
        std::ostringstream line;
        line << "t=" << t << " ADVERT from=" << from.str() << " to=" << to.str()
             << " entries=" << adv.entries.size();
        log.detail(line.str());
      });

  auto apply_event = [&](const TraceEvent& event) {
    switch (event.kind) {
      case TraceEventKind::ContactUp:
        substrate.contact_up(event.a, event.b, event.bandwidth);
        log.normal("t=" + std::to_string(now) + " CONTACT_UP a=" + event.a.str() +
                   " b=" + event.b.str() + " bw=" + std::to_string(event.bandwidth));
        break;
      case TraceEventKind::ContactDown:
        substrate.contact_down(event.a, event.b);
        log.normal("t=" + std::to_string(now) + " CONTACT_DOWN a=" +
                   event.a.str() + " b=" + event.b.str());
        break;
      case TraceEventKind::Publish: {
        const core::MessageCopy& copy = nodes.at(event.a).publish(event.payload, now);
        publications.push_back(Publication{copy.message.id, now});
        std::ostringstream line;
        line << "t=" << now << " PUBLISH msg=" << copy.message.id.str()
             << " bytes=" << copy.message.payload.size();
        log.normal(line.str());
        break;
      }
      case TraceEventKind::Follow:
        nodes.at(event.a).follow(event.b, now);
        subscriptions_ever.emplace(std::make_pair(event.a, event.b), now);
        follow_edges_live.emplace(event.a, event.b);
        log.normal("t=" + std::to_string(now) + " FOLLOW follower=" +
                   event.a.str() + " followee=" + event.b.str());
        break;
      case TraceEventKind::Unfollow:
        nodes.at(event.a).unfollow(event.b, now);
        follow_edges_live.erase({event.a, event.b});
        log.normal("t=" + std::to_string(now) + " UNFOLLOW follower=" +
                   event.a.str() + " followee=" + event.b.str());
        break;
      case TraceEventKind::CloudSync: {
        std::size_t synced = nodes.at(event.a).cloud_sync(ca.fetch_crl(), now);
        std::ostringstream line;
        line << "t=" << now << " CLOUD_SYNC node=" << event.a.str()
             << " crl=" << ca.fetch_crl().size() << " actions_synced=" << synced;
        log.normal(line.str());
        break;
      }
      case TraceEventKind::Revoke:
        ca.revoke(event.a);
        log.normal("t=" + std::to_string(now) + " REVOKE user=" + event.a.str());
        break;
    }
  };

  // Main loop. Ticks advance one tick_seconds step at a time while anything
  // can still happen; dead air between events is skipped outright.
  std::size_t next_event = 0;
  const Timestamp tick = config.tick_seconds;
  const Timestamp last_event_at = trace.empty() ? 0 : trace.back().at;
  // Traces normally close every contact; if one is left open, transfers may
  // drain for at most this long past the final event.
  const Timestamp drain_deadline = last_event_at + 3600 * tick;
  while (next_event < trace.size() || substrate.active_sessions() > 0 ||
         substrate.active_links() > 0) {
    if (substrate.active_links() == 0 && substrate.active_sessions() == 0) {
      if (next_event >= trace.size()) {
        break;
      }
      // Jump ahead to the tick covering the next event.
      Timestamp target = trace[next_event].at;
      if (target > now) {
        now = (target + tick - 1) / tick * tick;
      }
    }
    while (next_event < trace.size() && trace[next_event].at <= now) {
      apply_event(trace[next_event]);
      ++next_event;
    }
    auto activity = substrate.tick(now, nodes, tick);
    if (next_event >= trace.size()) {
      if (substrate.active_sessions() == 0 && activity.sessions_created == 0 &&
          activity.bytes_moved == 0) {
        // Nothing moved and nothing new can: advertisements are static from
        // here on, so every future decision would come out empty too.
        break;
      }
      if (now >= drain_deadline) {
        log.normal("t=" + std::to_string(now) +
                   " DRAIN_LIMIT open contacts at trace end");
        break;
      }
    }
    now += tick;
  }

  std::vector<SubscriptionRecord> subscriptions;
  for (const auto& [pair, since] : subscriptions_ever) {
    subscriptions.push_back(SubscriptionRecord{pair.first, pair.second, since});
  }

  result.report = build_report(std::move(deliveries), subscriptions, publications,
                               config.ratio_mode);
  result.report.protocol_errors = protocol_errors;
  for (const UserId& revoked : ca.fetch_crl()) {
    result.report.crl.push_back(revoked);
  }
  if (config.users.size() >= 2) {
    graph::SocialDigraph social;
    for (const auto& user : config.users) {
      social.add_node(user.id);
    }
    for (const auto& [follower, followee] : follow_edges_live) {
      social.add_edge(follower, followee);
    }
    result.report.social_graph = graph::analyze(social);
  }
  return result;
}

}  // namespace sos::harness
