// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/core/message.hpp"

#include "sos/core/codec.hpp"

namespace sos::core {

Bytes signable_bytes(const Message& msg) {
  if (msg.payload.size() > kMaxPayloadBytes) {
    throw CodecError("payload exceeds " + std::to_string(kMaxPayloadBytes) +
                     " bytes: " + std::to_string(msg.payload.size()));
  }
  if (msg.created_at < 0) {
    throw CodecError("created_at must be non-negative");
  }
  ByteWriter w;
  w.raw(msg.id.author.view());
  w.u64(msg.id.number);
  w.u64(static_cast<std::uint64_t>(msg.created_at));
  w.u32(static_cast<std::uint32_t>(msg.payload.size()));
  w.raw(msg.payload);
  return w.take();
}

Bytes encode_message(const Message& msg) {
  ByteWriter w;
  w.raw(signable_bytes(msg));
  w.u32(static_cast<std::uint32_t>(msg.author_signature.size()));
  w.raw(msg.author_signature);
  return w.take();
}

Message decode_message(ByteReader& in) {
  Message msg;
  msg.id.author = read_user_id(in);
  msg.id.number = in.u64();
  msg.created_at = static_cast<Timestamp>(in.u64());
  std::uint32_t payload_len = in.u32();
  if (payload_len > kMaxPayloadBytes) {
    throw CodecError("payload length field exceeds bound: " +
                     std::to_string(payload_len));
  }
  auto payload = in.raw(payload_len);
  msg.payload.assign(payload.begin(), payload.end());
  std::uint32_t sig_len = in.u32();
  auto sig = in.raw(sig_len);
  msg.author_signature.assign(sig.begin(), sig.end());
  return msg;
}

Message decode_message(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  Message msg = decode_message(in);
  in.expect_done();
  return msg;
}

}  // namespace sos::core
