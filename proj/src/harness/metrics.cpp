// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/harness/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sos::harness {

namespace {

bool passes(const DeliveryRecord& r, HopFilter filter) {
  return filter == HopFilter::All || r.hops == 1;
}

}  // namespace

std::vector<CdfPoint> compute_delay_cdf(std::span<const DeliveryRecord> deliveries,
                                        HopFilter filter) {
  std::vector<Timestamp> delays;
  for (const DeliveryRecord& r : deliveries) {
    if (passes(r, filter)) {
      delays.push_back(r.delivered_at - r.created_at);
    }
  }
  std::sort(delays.begin(), delays.end());

  std::vector<CdfPoint> cdf;
  const double total = static_cast<double>(delays.size());
  for (std::size_t i = 0; i < delays.size(); ++i) {
    // Emit one point per distinct delay, at the last occurrence.
    if (i + 1 < delays.size() && delays[i + 1] == delays[i]) {
      continue;
    }
    cdf.push_back(CdfPoint{delays[i], static_cast<double>(i + 1) / total});
  }
  return cdf;
}

double cdf_value_at(std::span<const DeliveryRecord> deliveries, HopFilter filter,
                    Timestamp threshold) {
  std::uint64_t total = 0;
  std::uint64_t within = 0;
  for (const DeliveryRecord& r : deliveries) {
    if (!passes(r, filter)) {
      continue;
    }
    ++total;
    if (r.delivered_at - r.created_at <= threshold) {
      ++within;
    }
  }
  if (total == 0) {
    return 0.0;
  }
  return static_cast<double>(within) / static_cast<double>(total);
}

const char* to_string(RatioDenominatorMode mode) {
  switch (mode) {
    case RatioDenominatorMode::ExcludePreFollow: return "exclude-pre-follow";
    case RatioDenominatorMode::IncludeAll: return "include-all";
  }
  return "unknown";
}

RatioDenominatorMode parse_ratio_mode(std::string_view name) {
  if (name == "exclude-pre-follow" || name.empty()) {
    return RatioDenominatorMode::ExcludePreFollow;
  }
  if (name == "include-all") {
    return RatioDenominatorMode::IncludeAll;
  }
  throw std::invalid_argument("unknown ratio denominator mode \"" +
                              std::string(name) + "\"");
}

DeliveryRatios compute_delivery_ratios(
    std::span<const DeliveryRecord> deliveries,
    std::span<const SubscriptionRecord> subscriptions,
    std::span<const Publication> publications, RatioDenominatorMode mode) {
  // Receipts indexed by (receiver, message id); hop count kept for the
  // 1-hop variant.
  std::map<std::pair<UserId, MessageId>, std::uint32_t> received;
  for (const DeliveryRecord& r : deliveries) {
    auto key = std::make_pair(r.receiver, r.message);
    auto it = received.find(key);
    if (it == received.end()) {
      received.emplace(key, r.hops);
    } else {
      it->second = std::min(it->second, r.hops);
    }
  }

  DeliveryRatios out;
  std::uint64_t above_070_all = 0, above_080_all = 0;
  std::uint64_t above_070_one_hop = 0, above_080_one_hop = 0;

  for (const SubscriptionRecord& sub : subscriptions) {
    SubscriptionRatio ratio;
    ratio.follower = sub.follower;
    ratio.followee = sub.followee;
    ratio.since = sub.since;
    for (const Publication& pub : publications) {
      if (pub.message.author != sub.followee) {
        continue;
      }
      if (mode == RatioDenominatorMode::ExcludePreFollow &&
          pub.created_at < sub.since) {
        continue;
      }
      ++ratio.eligible;
      auto it = received.find(std::make_pair(sub.follower, pub.message));
      if (it != received.end()) {
        ++ratio.delivered_all;
        if (it->second == 1) {
          ++ratio.delivered_one_hop;
        }
      }
    }
    if (ratio.eligible == 0) {
      ++out.summary.skipped_no_publications;
      continue;
    }
    ratio.ratio_all = static_cast<double>(ratio.delivered_all) /
                      static_cast<double>(ratio.eligible);
    ratio.ratio_one_hop = static_cast<double>(ratio.delivered_one_hop) /
                          static_cast<double>(ratio.eligible);
    if (ratio.ratio_all > 0.70) ++above_070_all;
    if (ratio.ratio_all > 0.80) ++above_080_all;
    if (ratio.ratio_one_hop > 0.70) ++above_070_one_hop;
    if (ratio.ratio_one_hop > 0.80) ++above_080_one_hop;
    out.per_subscription.push_back(ratio);
  }

  std::sort(out.per_subscription.begin(), out.per_subscription.end(),
            [](const SubscriptionRatio& a, const SubscriptionRatio& b) {
              return std::tie(a.follower, a.followee) <
                     std::tie(b.follower, b.followee);
            });

  out.summary.counted_subscriptions = out.per_subscription.size();
  if (out.summary.counted_subscriptions > 0) {
    const double n = static_cast<double>(out.summary.counted_subscriptions);
    out.summary.above_070_all = static_cast<double>(above_070_all) / n;
    out.summary.above_080_all = static_cast<double>(above_080_all) / n;
    out.summary.above_070_one_hop = static_cast<double>(above_070_one_hop) / n;
    out.summary.above_080_one_hop = static_cast<double>(above_080_one_hop) / n;
  }
  return out;
}

MetricsReport build_report(std::vector<DeliveryRecord> deliveries,
                           std::span<const SubscriptionRecord> subscriptions,
                           std::span<const Publication> publications,
                           RatioDenominatorMode mode) {
  MetricsReport report;
  report.delay_cdf_all = compute_delay_cdf(deliveries, HopFilter::All);
  report.delay_cdf_1hop = compute_delay_cdf(deliveries, HopFilter::OneHop);
  report.ratios =
      compute_delivery_ratios(deliveries, subscriptions, publications, mode);

  std::set<MessageId> delivered_ids;
  std::uint64_t one_hop = 0;
  for (const DeliveryRecord& r : deliveries) {
    delivered_ids.insert(r.message);
    if (r.hops == 1) {
      ++one_hop;
    }
  }
  report.totals.unique_messages = publications.size();
  report.totals.disseminated_copies = deliveries.size();
  report.totals.unique_messages_delivered = delivered_ids.size();
  report.totals.subscriptions = subscriptions.size();
  if (!deliveries.empty()) {
    report.one_hop_fraction =
        static_cast<double>(one_hop) / static_cast<double>(deliveries.size());
  }
  report.deliveries = std::move(deliveries);
  return report;
}

}  // namespace sos::harness
