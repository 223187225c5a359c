// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "sos/core/ids.hpp"
#include "sos/util/bytes.hpp"

namespace sos::core {

inline constexpr std::size_t kMaxPayloadBytes = 4096;

/// An author-signed, monotonically numbered post. The signature covers
/// signable_bytes() only; transport metadata stays outside it.
struct Message {
  MessageId id;
  Timestamp created_at = 0;
  Bytes payload;
  Bytes author_signature;

  bool operator==(const Message&) const = default;
};

/// One device's copy of a message. hop_count and received_at are copy-local:
/// they are never covered by the author signature and are rewritten on every
/// device-to-device transfer.
struct MessageCopy {
  Message message;
  std::uint32_t hop_count = 0;  // 0 only at the author
  Timestamp received_at = 0;

  bool operator==(const MessageCopy&) const = default;
};

/// Canonical bytes covered by the author signature:
///   author (10) | number (8 BE) | created_at (8 BE) | payload length (4 BE) | payload
/// Throws CodecError if the payload exceeds kMaxPayloadBytes or created_at
/// is negative.
Bytes signable_bytes(const Message& msg);

/// Wire form: signable_bytes followed by a length-prefixed signature.
Bytes encode_message(const Message& msg);
Message decode_message(ByteReader& in);
Message decode_message(std::span<const std::uint8_t> data);

}  // namespace sos::core
