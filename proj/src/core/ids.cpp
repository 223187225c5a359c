// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/core/ids.hpp"

#include <algorithm>
#include <stdexcept>

namespace sos::core {

namespace {

bool printable(char c) { return c >= 0x20 && c <= 0x7e; }

}  // namespace

bool UserId::valid(std::string_view s) {
  return s.size() == kUserIdLength && std::all_of(s.begin(), s.end(), printable);
}

UserId UserId::from_string(std::string_view s) {
  auto id = try_from_string(s);
  if (!id) {
    throw std::invalid_argument("user id must be exactly 10 printable characters: \"" +
                                std::string(s) + "\"");
  }
  return *id;
}

std::optional<UserId> UserId::try_from_string(std::string_view s) {
  if (!valid(s)) {
    return std::nullopt;
  }
  UserId id;
  std::copy(s.begin(), s.end(), id.chars_.begin());
  return id;
}

std::string MessageId::str() const {
  return author.str() + ":" + std::to_string(number);
}

}  // namespace sos::core
