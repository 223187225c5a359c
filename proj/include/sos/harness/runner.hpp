// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "sos/harness/log.hpp"
#include "sos/harness/metrics.hpp"
#include "sos/harness/trace.hpp"
#include "sos/routing/scheme.hpp"
#include "sos/security/signature.hpp"

namespace sos::harness {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  struct User {
    UserId id;
    routing::RoutingSchemeKind scheme = routing::RoutingSchemeKind::Epidemic;
  };

  std::vector<User> users;
  std::vector<std::pair<UserId, UserId>> follow_edges;
  std::uint64_t seed = 0;
  Timestamp tick_seconds = 1;
  std::int64_t cert_lifetime_days = 365;
  RatioDenominatorMode ratio_mode = RatioDenominatorMode::ExcludePreFollow;
  // Not part of the config file: tests swap in the keyed-hash double where
  // signature cost would dominate and crypto is not what is being tested.
  security::SignatureSchemeKind signature_scheme =
      security::SignatureSchemeKind::Ed25519;
};

/// Parses the JSON config file. `users` and `seed` are required; everything
/// else has defaults. Throws ValidationError with a field path on problems.
RunConfig parse_config(const std::string& json_text);
std::string config_to_json(const RunConfig& config);

struct RunResult {
  MetricsReport report;
  EventLog log;
};

/// Plays the trace through the full stack: signup at t=0, then per tick
/// advertisements -> interest decisions -> handshakes -> transfers, with
/// application and cloud events applied at their timestamps. Deliveries are
/// recorded the moment a verified message is stored at a non-author node.
/// Identical inputs produce byte-identical logs and reports.
RunResult run(const RunConfig& config, std::span<const TraceEvent> trace,
              EventLog::Level log_level = EventLog::Level::Normal);

}  // namespace sos::harness
