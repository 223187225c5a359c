// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <span>
#include <vector>

#include "sos/core/ids.hpp"
#include "sos/graph/metrics.hpp"

namespace sos::harness {

using core::MessageId;
using core::Timestamp;
using core::UserId;

/// One verified receipt at a node other than the author. At most one record
/// exists per (message, receiver).
struct DeliveryRecord {
  MessageId message;
  UserId receiver;
  Timestamp created_at = 0;
  Timestamp delivered_at = 0;
  std::uint32_t hops = 0;

  bool operator==(const DeliveryRecord&) const = default;
};

enum class HopFilter { All, OneHop };

struct CdfPoint {
  Timestamp delay = 0;
  double fraction = 0.0;

  bool operator==(const CdfPoint&) const = default;
};

/// Empirical CDF of delivery delay (delivered_at - created_at) over records
/// passing the filter, evaluated at every distinct delay. Non-decreasing and
/// ends at 1.0 whenever any record passes.
std::vector<CdfPoint> compute_delay_cdf(std::span<const DeliveryRecord> deliveries,
                                        HopFilter filter);

/// Fraction of filtered deliveries with delay <= threshold.
double cdf_value_at(std::span<const DeliveryRecord> deliveries, HopFilter filter,
                    Timestamp threshold);

struct SubscriptionRecord {
  UserId follower;
  UserId followee;
  Timestamp since = 0;

  auto operator<=>(const SubscriptionRecord&) const = default;
};

struct Publication {
  MessageId message;
  Timestamp created_at = 0;
};

enum class RatioDenominatorMode {
  ExcludePreFollow,  // only messages published at/after `since` count
  IncludeAll,
};

const char* to_string(RatioDenominatorMode mode);
RatioDenominatorMode parse_ratio_mode(std::string_view name);

struct SubscriptionRatio {
  UserId follower;
  UserId followee;
  Timestamp since = 0;
  std::uint64_t eligible = 0;
  std::uint64_t delivered_all = 0;
  std::uint64_t delivered_one_hop = 0;
  double ratio_all = 0.0;
  double ratio_one_hop = 0.0;
};

/// Share of counted subscriptions whose delivery ratio strictly exceeds each
/// threshold. Pairs with zero eligible publications are excluded.
struct RatioSummary {
  std::uint64_t counted_subscriptions = 0;
  std::uint64_t skipped_no_publications = 0;
  double above_070_all = 0.0;
  double above_080_all = 0.0;
  double above_070_one_hop = 0.0;
  double above_080_one_hop = 0.0;
};

struct DeliveryRatios {
  std::vector<SubscriptionRatio> per_subscription;  // (follower, followee) order
  RatioSummary summary;
};

DeliveryRatios compute_delivery_ratios(std::span<const DeliveryRecord> deliveries,
                                       std::span<const SubscriptionRecord> subscriptions,
                                       std::span<const Publication> publications,
                                       RatioDenominatorMode mode);

struct Totals {
  std::uint64_t unique_messages = 0;           // Publish events
  std::uint64_t disseminated_copies = 0;       // accepted non-author receipts
  std::uint64_t unique_messages_delivered = 0; // messages reaching >= 1 receiver
  std::uint64_t subscriptions = 0;             // distinct pairs ever followed
};

/// Report thresholds from the evaluation write-up.
inline constexpr Timestamp kDelayThresholdShort = 24 * core::kSecondsPerHour;
inline constexpr Timestamp kDelayThresholdLong = 94 * core::kSecondsPerHour;

struct MetricsReport {
  std::vector<DeliveryRecord> deliveries;
  std::vector<CdfPoint> delay_cdf_all;
  std::vector<CdfPoint> delay_cdf_1hop;
  DeliveryRatios ratios;
  double one_hop_fraction = 0.0;
  Totals totals;
  std::optional<graph::GraphStats> social_graph;  // follow digraph at trace end
  std::vector<UserId> crl;                        // sorted
  std::uint64_t protocol_errors = 0;
};

/// Assembles the derived tables from the raw records.
MetricsReport build_report(std::vector<DeliveryRecord> deliveries,
                           std::span<const SubscriptionRecord> subscriptions,
                           std::span<const Publication> publications,
                           RatioDenominatorMode mode);

}  // namespace sos::harness
