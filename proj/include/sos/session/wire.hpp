// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

#include "sos/routing/scheme.hpp"
#include "sos/util/bytes.hpp"

namespace sos::session {

using core::MessageId;

enum class FrameKind : std::uint8_t {
  CertExchange = 1,
  Request = 2,
  MessageData = 3,
  Ack = 4,
  Close = 5,
};

const char* to_string(FrameKind kind);

/// Link-layer unit: 1-byte kind tag, 4-byte big-endian body length, body.
struct WireFrame {
  FrameKind kind = FrameKind::Close;
  Bytes body;

  bool operator==(const WireFrame&) const = default;
};

inline constexpr std::size_t kFrameHeaderBytes = 5;
inline constexpr std::size_t kMaxFrameBytes = 64 * 1024;

class FrameOversizeError : public CodecError {
 public:
  using CodecError::CodecError;
};

std::size_t frame_wire_size(const WireFrame& frame);

/// Throws FrameOversizeError when header + body exceeds kMaxFrameBytes.
Bytes encode_frame(const WireFrame& frame);
WireFrame decode_frame(ByteReader& in);
WireFrame decode_frame(std::span<const std::uint8_t> data);

// Body construction and parsing per kind. CertExchange bodies are plain
// encoded certificates.

WireFrame make_cert_exchange_frame(const security::Certificate& cert);
security::Certificate parse_cert_exchange(const WireFrame& frame);

WireFrame make_request_frame(std::span<const MessageId> wanted);
std::vector<MessageId> parse_request(const WireFrame& frame);

/// MessageData carries the sender's stored copy (its hop count) plus the
/// author's certificate so the receiver can verify without ever having met
/// the author.
WireFrame make_message_data_frame(const routing::ForwardedCopy& item);
routing::ForwardedCopy parse_message_data(const WireFrame& frame);

WireFrame make_ack_frame(const MessageId& id);
MessageId parse_ack(const WireFrame& frame);

WireFrame make_close_frame();

}  // namespace sos::session
