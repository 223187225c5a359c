// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/cli/tracegen.hpp"

#include <algorithm>
#include <cmath>

#include "sos/util/rng.hpp"

namespace sos::cli {

using harness::TraceEvent;
using harness::TraceEventKind;
using harness::ValidationError;

void validate_params(const TraceGenParams& params) {
  if (params.n_nodes < 2) {
    throw ValidationError("gen-trace: need at least 2 nodes");
  }
  if (params.n_nodes > 999'999'999) {
    throw ValidationError("gen-trace: node count exceeds the id space");
  }
  if (params.duration_seconds <= 0) {
    throw ValidationError("gen-trace: duration must be positive");
  }
  if (params.contact_duration_min < 1 ||
      params.contact_duration_max < params.contact_duration_min) {
    throw ValidationError("gen-trace: bad contact duration range");
  }
  if (params.contact_duration_max > core::kSecondsPerDay) {
    throw ValidationError("gen-trace: contact duration exceeds a day");
  }
  if (params.bandwidth_bytes_per_s == 0) {
    throw ValidationError("gen-trace: bandwidth must be positive");
  }
  if (params.mean_contacts_per_pair_per_day <= 0) {
    throw ValidationError("gen-trace: contact rate must be positive");
  }
  if (params.publish_rate_per_node_per_day < 0) {
    throw ValidationError("gen-trace: publish rate must be non-negative");
  }
  if (!(params.follow_density > 0.0) || params.follow_density > 1.0) {
    throw ValidationError("gen-trace: follow density must be in (0, 1]");
  }
  if (params.payload_bytes > core::kMaxPayloadBytes) {
    throw ValidationError("gen-trace: payload exceeds the message bound");
  }
  if (params.sync_every_seconds < 0) {
    throw ValidationError("gen-trace: sync interval must be non-negative");
  }
}

std::vector<UserId> make_user_ids(std::size_t n) {
  std::vector<UserId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U%09zu", i);
    ids.push_back(UserId::from_string(buf));
  }
  return ids;
}

GeneratedScenario generate_scenario(const TraceGenParams& params,
                                    std::uint64_t seed) {
  validate_params(params);
  Rng rng(seed);
  Rng follow_rng = rng.fork();
  Rng contact_rng = rng.fork();
  Rng publish_rng = rng.fork();

  GeneratedScenario scenario;
  std::vector<UserId> users = make_user_ids(params.n_nodes);

  scenario.config.seed = seed;
  scenario.config.tick_seconds = 1;
  for (const UserId& id : users) {
    scenario.config.users.push_back({id, params.scheme});
  }

  // Follow digraph with an exact edge count, so the realized density always
  // lands within rounding of the requested one.
  std::vector<std::pair<UserId, UserId>> all_pairs;
  for (const UserId& a : users) {
    for (const UserId& b : users) {
      if (a != b) {
        all_pairs.emplace_back(a, b);
      }
    }
  }
  const auto edge_target = static_cast<std::size_t>(
      std::llround(params.follow_density * static_cast<double>(all_pairs.size())));
  for (std::size_t i = 0; i < edge_target; ++i) {
    std::size_t j = i + static_cast<std::size_t>(
                            follow_rng.below(all_pairs.size() - i));
    std::swap(all_pairs[i], all_pairs[j]);
    scenario.config.follow_edges.push_back(all_pairs[i]);
  }
  std::sort(scenario.config.follow_edges.begin(),
            scenario.config.follow_edges.end());

  std::vector<TraceEvent>& trace = scenario.trace;

  // Pairwise contacts: Poisson arrivals, uniform durations, never
  // overlapping within a pair.
  const double mean_gap_seconds =
      core::kSecondsPerDay / params.mean_contacts_per_pair_per_day;
  Timestamp last_publish_at = 0;
  for (std::size_t i = 0; i < users.size(); ++i) {
    for (std::size_t j = i + 1; j < users.size(); ++j) {
      Timestamp t = 0;
      for (;;) {
        auto gap = static_cast<Timestamp>(
            std::llround(contact_rng.exponential(mean_gap_seconds)));
        t += std::max<Timestamp>(gap, 1);
        Timestamp duration = contact_rng.range(params.contact_duration_min,
                                               params.contact_duration_max);
        if (t + duration > params.duration_seconds) {
          break;
        }
        trace.push_back(TraceEvent{t, TraceEventKind::ContactUp, users[i],
                                   users[j], params.bandwidth_bytes_per_s,
                                   {}});
        trace.push_back(TraceEvent{t + duration, TraceEventKind::ContactDown,
                                   users[i], users[j], 0, {}});
        t += duration + 1;
      }
    }
  }

  // Publishes: per-node Poisson process with deterministic payload bytes.
  for (const UserId& author : users) {
    const double rate = params.publish_rate_per_node_per_day;
    if (rate <= 0) {
      continue;
    }
    const double mean_interval = core::kSecondsPerDay / rate;
    Timestamp t = 0;
    for (;;) {
      auto gap = static_cast<Timestamp>(
          std::llround(publish_rng.exponential(mean_interval)));
      t += std::max<Timestamp>(gap, 1);
      if (t >= params.duration_seconds) {
        break;
      }
      TraceEvent event{t, TraceEventKind::Publish, author, author, 0,
                       publish_rng.bytes(params.payload_bytes)};
      trace.push_back(std::move(event));
      last_publish_at = std::max(last_publish_at, t);
    }
  }

  if (params.sync_every_seconds > 0) {
    for (Timestamp t = params.sync_every_seconds; t <= params.duration_seconds;
         t += params.sync_every_seconds) {
      for (const UserId& node : users) {
        trace.push_back(TraceEvent{t, TraceEventKind::CloudSync, node, node, 0,
                                   {}});
      }
    }
  }

  if (params.ensure_flood) {
    // Forward then reverse chain sweep after everything else: every node's
    // store reaches the end of the chain and comes back, so each publish has
    // a time-respecting path to every node.
    const Timestamp sweep_contact = 120;
    Timestamp t = std::max(params.duration_seconds, last_publish_at) + 10;
    auto sweep = [&](std::size_t a, std::size_t b) {
      trace.push_back(TraceEvent{t, TraceEventKind::ContactUp, users[a],
                                 users[b], params.bandwidth_bytes_per_s,
                                 {}});
      trace.push_back(TraceEvent{t + sweep_contact, TraceEventKind::ContactDown,
                                 users[a], users[b], 0, {}});
      t += sweep_contact + 1;
    };
    for (std::size_t i = 0; i + 1 < users.size(); ++i) {
      sweep(i, i + 1);
    }
    for (std::size_t i = users.size() - 1; i-- > 0;) {
      sweep(i, i + 1);
    }
  }

  std::sort(trace.begin(), trace.end());
  harness::validate_trace(trace, {users.begin(), users.end()});
  return scenario;
}

}  // namespace sos::cli
