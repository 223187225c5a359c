// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/harness/log.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sos::harness {

EventLog::Level EventLog::parse_level(std::string_view name) {
  if (name == "quiet") return Level::Quiet;
  if (name == "normal" || name.empty()) return Level::Normal;
  if (name == "verbose") return Level::Verbose;
  throw std::invalid_argument("unknown log level \"" + std::string(name) +
                              "\" (expected quiet, normal or verbose)");
}

std::string EventLog::joined() const {
  std::ostringstream out;
  write_to(out);
  return out.str();
}

void EventLog::write_to(std::ostream& out) const {
  for (const std::string& line : lines_) {
    out << line << '\n';
  }
}

}  // namespace sos::harness
