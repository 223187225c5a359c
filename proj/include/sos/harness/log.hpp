// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sos::harness {

/// Append-only, line-oriented event log. Identical runs must produce
/// byte-identical logs, so callers format lines from values only — never
/// from addresses, wall-clock time, or iteration over unordered containers.
class EventLog {
 public:
  enum class Level { Quiet = 0, Normal = 1, Verbose = 2 };

  explicit EventLog(Level level = Level::Normal) : level_(level) {}

  static Level parse_level(std::string_view name);  // "quiet|normal|verbose"

  Level level() const { return level_; }
  bool verbose() const { return level_ >= Level::Verbose; }

  void normal(std::string line) { append(Level::Normal, std::move(line)); }
  void detail(std::string line) { append(Level::Verbose, std::move(line)); }

  const std::vector<std::string>& lines() const { return lines_; }
  std::string joined() const;
  void write_to(std::ostream& out) const;

 private:
  void append(Level min_level, std::string line) {
    if (level_ >= min_level) {
      lines_.push_back(std::move(line));
    }
  }

  Level level_;
  std::vector<std::string> lines_;
};

}  // namespace sos::harness
