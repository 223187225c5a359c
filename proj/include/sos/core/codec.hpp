// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "sos/core/ids.hpp"
#include "sos/util/bytes.hpp"

namespace sos::core {

/// Reads a fixed 10-byte user id, rejecting non-printable bytes with a
/// CodecError rather than std::invalid_argument.
inline UserId read_user_id(ByteReader& in) {
  auto raw = in.raw(kUserIdLength);
  auto id = UserId::try_from_string(
      std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
  if (!id) {
    throw CodecError("invalid user id bytes");
  }
  return *id;
}

inline void write_message_id(ByteWriter& w, const MessageId& id) {
  w.raw(id.author.view());
  w.u64(id.number);
}

inline MessageId read_message_id(ByteReader& in) {
  MessageId id;
  id.author = read_user_id(in);
  id.number = in.u64();
  return id;
}

inline constexpr std::size_t kMessageIdWireBytes = kUserIdLength + 8;

}  // namespace sos::core
