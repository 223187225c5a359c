// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/harness/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sos::harness {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

UserId parse_user_field(const std::string& field, std::size_t line_no) {
  auto id = UserId::try_from_string(field);
  if (!id) {
    throw CsvError("line " + std::to_string(line_no) + ": invalid user id \"" +
                   field + "\"");
  }
  return *id;
}

std::int64_t parse_int_field(const std::string& field, std::size_t line_no) {
  try {
    return std::stoll(field);
  } catch (const std::exception&) {
    throw CsvError("line " + std::to_string(line_no) + ": invalid integer \"" +
                   field + "\"");
  }
}

}  // namespace

void write_deliveries_csv(std::ostream& out,
                          std::span<const DeliveryRecord> deliveries) {
  out << "author,number,receiver,created_at,delivered_at,hops\n";
  for (const DeliveryRecord& r : deliveries) {
    out << r.message.author.str() << ',' << r.message.number << ','
        << r.receiver.str() << ',' << r.created_at << ',' << r.delivered_at
        << ',' << r.hops << '\n';
  }
}

std::vector<DeliveryRecord> read_deliveries_csv(std::istream& in) {
  std::vector<DeliveryRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line.rfind("author,", 0) == 0)) {
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != 6) {
      throw CsvError("line " + std::to_string(line_no) +
                     ": expected 6 fields, got " + std::to_string(fields.size()));
    }
    DeliveryRecord r;
    r.message.author = parse_user_field(fields[0], line_no);
    r.message.number =
        static_cast<core::MessageNumber>(parse_int_field(fields[1], line_no));
    r.receiver = parse_user_field(fields[2], line_no);
    r.created_at = parse_int_field(fields[3], line_no);
    r.delivered_at = parse_int_field(fields[4], line_no);
    r.hops = static_cast<std::uint32_t>(parse_int_field(fields[5], line_no));
    records.push_back(r);
  }
  return records;
}

void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf) {
  out << "delay_seconds,fraction\n";
  for (const CdfPoint& point : cdf) {
    out << point.delay << ',' << fixed6(point.fraction) << '\n';
  }
}

void write_ratios_csv(std::ostream& out,
                      std::span<const SubscriptionRatio> ratios) {
  out << "follower,followee,since,eligible,delivered_all,ratio_all,"
         "delivered_1hop,ratio_1hop\n";
  for (const SubscriptionRatio& r : ratios) {
    out << r.follower.str() << ',' << r.followee.str() << ',' << r.since << ','
        << r.eligible << ',' << r.delivered_all << ',' << fixed6(r.ratio_all)
        << ',' << r.delivered_one_hop << ',' << fixed6(r.ratio_one_hop) << '\n';
  }
}

void write_subscriptions_csv(std::ostream& out,
                             std::span<const SubscriptionRecord> subscriptions) {
  out << "follower,followee,since\n";
  for (const SubscriptionRecord& s : subscriptions) {
    out << s.follower.str() << ',' << s.followee.str() << ',' << s.since << '\n';
  }
}

std::vector<SubscriptionRecord> read_subscriptions_csv(std::istream& in) {
  std::vector<SubscriptionRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line.rfind("follower,", 0) == 0)) {
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw CsvError("line " + std::to_string(line_no) + ": expected 3 fields");
    }
    SubscriptionRecord s;
    s.follower = parse_user_field(fields[0], line_no);
    s.followee = parse_user_field(fields[1], line_no);
    s.since = parse_int_field(fields[2], line_no);
    records.push_back(s);
  }
  return records;
}

void write_publications_csv(std::ostream& out,
                            std::span<const Publication> publications) {
  out << "author,number,created_at\n";
  for (const Publication& p : publications) {
    out << p.message.author.str() << ',' << p.message.number << ','
        << p.created_at << '\n';
  }
}

std::vector<Publication> read_publications_csv(std::istream& in) {
  std::vector<Publication> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line.rfind("author,", 0) == 0)) {
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw CsvError("line " + std::to_string(line_no) + ": expected 3 fields");
    }
    Publication p;
    p.message.author = parse_user_field(fields[0], line_no);
    p.message.number =
        static_cast<core::MessageNumber>(parse_int_field(fields[1], line_no));
    p.created_at = parse_int_field(fields[2], line_no);
    records.push_back(p);
  }
  return records;
}

void write_summary(std::ostream& out, const MetricsReport& report) {
  out << "unique_messages=" << report.totals.unique_messages << '\n';
  out << "disseminated_copies=" << report.totals.disseminated_copies << '\n';
  out << "unique_messages_delivered=" << report.totals.unique_messages_delivered
      << '\n';
  out << "subscriptions=" << report.totals.subscriptions << '\n';
  out << "one_hop_fraction=" << fixed6(report.one_hop_fraction) << '\n';
  out << "cdf_all_24h="
      << fixed6(cdf_value_at(report.deliveries, HopFilter::All,
                             kDelayThresholdShort))
      << '\n';
  out << "cdf_all_94h="
      << fixed6(cdf_value_at(report.deliveries, HopFilter::All,
                             kDelayThresholdLong))
      << '\n';
  out << "cdf_1hop_24h="
      << fixed6(cdf_value_at(report.deliveries, HopFilter::OneHop,
                             kDelayThresholdShort))
      << '\n';
  out << "cdf_1hop_94h="
      << fixed6(cdf_value_at(report.deliveries, HopFilter::OneHop,
                             kDelayThresholdLong))
      << '\n';
  out << "subs_counted=" << report.ratios.summary.counted_subscriptions << '\n';
  out << "subs_skipped_no_publications="
      << report.ratios.summary.skipped_no_publications << '\n';
  out << "subs_above_0.70_all=" << fixed6(report.ratios.summary.above_070_all)
      << '\n';
  out << "subs_above_0.80_all=" << fixed6(report.ratios.summary.above_080_all)
      << '\n';
  out << "subs_above_0.70_1hop="
      << fixed6(report.ratios.summary.above_070_one_hop) << '\n';
  out << "subs_above_0.80_1hop="
      << fixed6(report.ratios.summary.above_080_one_hop) << '\n';
  if (report.social_graph) {
    const graph::GraphStats& g = *report.social_graph;
    out << "graph_density=" << fixed6(g.density) << '\n';
    out << "graph_avg_shortest_path=" << fixed6(g.paths.avg_shortest_path)
        << '\n';
    out << "graph_avg_shortest_path_unordered="
        << fixed6(g.paths.avg_shortest_path_unordered) << '\n';
    out << "graph_diameter="
        << (g.paths.diameter ? std::to_string(*g.paths.diameter)
                             : std::string("undefined"))
        << '\n';
    out << "graph_radius="
        << (g.paths.radius ? std::to_string(*g.paths.radius)
                           : std::string("undefined"))
        << '\n';
    out << "graph_center=";
    for (std::size_t i = 0; i < g.paths.center.size(); ++i) {
      if (i > 0) out << ';';
      out << g.paths.center[i].str();
    }
    out << '\n';
    out << "graph_transitivity=" << fixed6(g.transitivity) << '\n';
    out << "graph_unreachable_pairs=" << g.paths.unreachable_pairs << '\n';
  }
  out << "crl=";
  for (std::size_t i = 0; i < report.crl.size(); ++i) {
    if (i > 0) out << ';';
    out << report.crl[i].str();
  }
  out << '\n';
  out << "protocol_errors=" << report.protocol_errors << '\n';
}

void write_report_files(const std::string& directory,
                        const MetricsReport& report) {
  std::filesystem::create_directories(directory);
  auto open = [&directory](const char* name) {
    std::ofstream out(std::filesystem::path(directory) / name,
                      std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error(std::string("cannot write ") + name + " in " +
                               directory);
    }
    return out;
  };
  {
    auto out = open("deliveries.csv");
    write_deliveries_csv(out, report.deliveries);
  }
  {
    auto out = open("cdf_all.csv");
    write_cdf_csv(out, report.delay_cdf_all);
  }
  {
    auto out = open("cdf_1hop.csv");
    write_cdf_csv(out, report.delay_cdf_1hop);
  }
  {
    auto out = open("ratios.csv");
    write_ratios_csv(out, report.ratios.per_subscription);
  }
  {
    auto out = open("summary.txt");
    write_summary(out, report);
  }
}

}  // namespace sos::harness
