// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>

#include "sos/harness/metrics.hpp"

namespace sos::harness {

/// Plot-ready CSV tables plus a key=value summary block. All numbers print
/// in fixed formats so identical reports are byte-identical.

void write_deliveries_csv(std::ostream& out,
                          std::span<const DeliveryRecord> deliveries);
std::vector<DeliveryRecord> read_deliveries_csv(std::istream& in);

void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf);

void write_ratios_csv(std::ostream& out,
                      std::span<const SubscriptionRatio> ratios);

void write_subscriptions_csv(std::ostream& out,
                             std::span<const SubscriptionRecord> subscriptions);
std::vector<SubscriptionRecord> read_subscriptions_csv(std::istream& in);

void write_publications_csv(std::ostream& out,
                            std::span<const Publication> publications);
std::vector<Publication> read_publications_csv(std::istream& in);

void write_summary(std::ostream& out, const MetricsReport& report);

/// Writes every table into `directory` (deliveries.csv, cdf_all.csv,
/// cdf_1hop.csv, ratios.csv, summary.txt).
void write_report_files(const std::string& directory, const MetricsReport& report);

}  // namespace sos::harness
