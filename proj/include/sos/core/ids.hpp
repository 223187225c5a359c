// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sos::core {

/// Simulation time in whole seconds.
using Timestamp = std::int64_t;

inline constexpr Timestamp kSecondsPerHour = 3600;
inline constexpr Timestamp kSecondsPerDay = 86400;

/// Per-author message counter, 1-based and strictly increasing.
using MessageNumber = std::uint64_t;

inline constexpr std::size_t kUserIdLength = 10;

/// Fixed-width 10-character printable user identifier. The width is part of
/// the wire format: advertisements and certificates embed the raw bytes with
/// no terminator.
class UserId {
 public:
  UserId() { chars_.fill('?'); }

  /// Throws std::invalid_argument unless `s` is exactly 10 printable
  /// ASCII characters.
  static UserId from_string(std::string_view s);
  static std::optional<UserId> try_from_string(std::string_view s);
  static bool valid(std::string_view s);

  std::string str() const { return std::string(chars_.begin(), chars_.end()); }
  std::string_view view() const {
    return std::string_view(chars_.data(), chars_.size());
  }

  auto operator<=>(const UserId&) const = default;

 private:
  std::array<char, kUserIdLength> chars_;
};

/// (author, number); ordering is lexicographic on the pair.
struct MessageId {
  UserId author;
  MessageNumber number = 0;

  auto operator<=>(const MessageId&) const = default;
  std::string str() const;
};

}  // namespace sos::core
