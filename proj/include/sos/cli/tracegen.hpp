// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "sos/harness/runner.hpp"

namespace sos::cli {

using core::Timestamp;
using core::UserId;

struct TraceGenParams {
  std::size_t n_nodes = 10;
  Timestamp duration_seconds = 7 * core::kSecondsPerDay;
  double mean_contacts_per_pair_per_day = 2.0;
  Timestamp contact_duration_min = 30;
  Timestamp contact_duration_max = 120;
  std::uint64_t bandwidth_bytes_per_s = 50000;
  double publish_rate_per_node_per_day = 1.0;
  double follow_density = 0.64;
  std::size_t payload_bytes = 240;
  Timestamp sync_every_seconds = 0;  // 0 disables cloud-sync events
  // Appends a forward+reverse chain sweep of generous contacts after the
  // last publish, guaranteeing a time-respecting path between every pair.
  bool ensure_flood = false;
  routing::RoutingSchemeKind scheme = routing::RoutingSchemeKind::InterestBased;
};

/// Throws harness::ValidationError on infeasible parameters.
void validate_params(const TraceGenParams& params);

/// "U" + zero-padded index, 10 characters each.
std::vector<UserId> make_user_ids(std::size_t n);

struct GeneratedScenario {
  harness::RunConfig config;
  std::vector<harness::TraceEvent> trace;
};

/// Synthesizes a config + trace pair: Poisson pairwise contacts with uniform
/// durations, Poisson per-node publishes, and a follow digraph with exactly
/// round(density * n(n-1)) edges. Deterministic under (params, seed); the
/// output always passes validate_trace.
GeneratedScenario generate_scenario(const TraceGenParams& params,
                                    std::uint64_t seed);

}  // namespace sos::cli
