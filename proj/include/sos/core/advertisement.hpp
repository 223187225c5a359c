// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>

#include "sos/core/ids.hpp"
#include "sos/util/bytes.hpp"

namespace sos::core {

/// Discovery payloads carry at most this many entries; advertisers evict the
/// least recently advanced authors beyond it.
inline constexpr std::size_t kMaxAdvertisementEntries = 64;

/// Plain-text UserId -> latest MessageNumber dictionary broadcast while a
/// node is discoverable. An entry's number is the highest number for which
/// the advertiser holds the complete run 1..n, so a browser can request the
/// gap without ever being promised missing intermediates.
struct Advertisement {
  UserId advertiser;
  std::map<UserId, MessageNumber> entries;

  bool operator==(const Advertisement&) const = default;
};

/// Canonical wire form, byte-identical for equal advertisements:
///   advertiser (10) | count (2 BE) | count * (user (10) | number (8 BE))
/// with entries in ascending UserId order. Throws CodecError when more than
/// kMaxAdvertisementEntries entries are present.
Bytes encode_advertisement(const Advertisement& adv);
Advertisement decode_advertisement(ByteReader& in);
Advertisement decode_advertisement(std::span<const std::uint8_t> data);

/// Pointwise maximum; keys are the union of both sides.
std::map<UserId, MessageNumber> merge_latest(
    const std::map<UserId, MessageNumber>& local, const Advertisement& remote);

}  // namespace sos::core
