// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/session/wire.hpp"

#include "sos/core/codec.hpp"

namespace sos::session {

const char* to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::CertExchange: return "cert-exchange";
    case FrameKind::Request: return "request";
    case FrameKind::MessageData: return "message-data";
    case FrameKind::Ack: return "ack";
    case FrameKind::Close: return "close";
  }
  return "unknown";
}

std::size_t frame_wire_size(const WireFrame& frame) {
  return kFrameHeaderBytes + frame.body.size();
}

Bytes encode_frame(const WireFrame& frame) {
  if (frame_wire_size(frame) > kMaxFrameBytes) {
    throw FrameOversizeError("frame exceeds " + std::to_string(kMaxFrameBytes) +
                             " bytes: " + std::to_string(frame_wire_size(frame)));
  }
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(frame.kind));
  w.u32(static_cast<std::uint32_t>(frame.body.size()));
  w.raw(frame.body);
  return w.take();
}

WireFrame decode_frame(ByteReader& in) {
  WireFrame frame;
  std::uint8_t tag = in.u8();
  if (tag < 1 || tag > 5) {
    throw CodecError("unknown frame kind tag: " + std::to_string(tag));
  }
  frame.kind = static_cast<FrameKind>(tag);
  std::uint32_t len = in.u32();
  if (kFrameHeaderBytes + len > kMaxFrameBytes) {
    throw FrameOversizeError("frame length field exceeds bound: " +
                             std::to_string(len));
  }
  auto body = in.raw(len);
  frame.body.assign(body.begin(), body.end());
  return frame;
}

WireFrame decode_frame(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  WireFrame frame = decode_frame(in);
  in.expect_done();
  return frame;
}

namespace {

void expect_kind(const WireFrame& frame, FrameKind kind) {
  if (frame.kind != kind) {
    throw CodecError(std::string("expected ") + to_string(kind) + " frame, got " +
                     to_string(frame.kind));
  }
}

}  // namespace

WireFrame make_cert_exchange_frame(const security::Certificate& cert) {
  return WireFrame{FrameKind::CertExchange, security::encode_certificate(cert)};
}

security::Certificate parse_cert_exchange(const WireFrame& frame) {
  expect_kind(frame, FrameKind::CertExchange);
  return security::decode_certificate(frame.body);
}

WireFrame make_request_frame(std::span<const MessageId> wanted) {
  ByteWriter w;
  w.u16(static_cast<std::uint16_t>(wanted.size()));
  for (const MessageId& id : wanted) {
    core::write_message_id(w, id);
  }
  WireFrame frame{FrameKind::Request, w.take()};
  if (frame_wire_size(frame) > kMaxFrameBytes) {
    throw FrameOversizeError("request frame too large: " +
                             std::to_string(wanted.size()) + " ids");
  }
  return frame;
}

std::vector<MessageId> parse_request(const WireFrame& frame) {
  expect_kind(frame, FrameKind::Request);
  ByteReader in(frame.body);
  std::uint16_t count = in.u16();
  std::vector<MessageId> wanted;
  wanted.reserve(count);
  for (std::uint16_t i = 0; i < count; ++i) {
    wanted.push_back(core::read_message_id(in));
  }
  in.expect_done();
  return wanted;
}

WireFrame make_message_data_frame(const routing::ForwardedCopy& item) {
  ByteWriter w;
  w.u32(item.copy.hop_count);
  w.raw(core::encode_message(item.copy.message));
  w.raw(security::encode_certificate(item.author_cert));
  WireFrame frame{FrameKind::MessageData, w.take()};
  // Header + max payload + signatures fits well under the limit; this guards
  // fault-injected inputs.
  encode_frame(frame);
  return frame;
}

routing::ForwardedCopy parse_message_data(const WireFrame& frame) {
  expect_kind(frame, FrameKind::MessageData);
  ByteReader in(frame.body);
  routing::ForwardedCopy item;
  item.copy.hop_count = in.u32();
  item.copy.message = core::decode_message(in);
  item.author_cert = security::decode_certificate(in);
  in.expect_done();
  return item;
}

WireFrame make_ack_frame(const MessageId& id) {
  ByteWriter w;
  core::write_message_id(w, id);
  return WireFrame{FrameKind::Ack, w.take()};
}

MessageId parse_ack(const WireFrame& frame) {
  expect_kind(frame, FrameKind::Ack);
  ByteReader in(frame.body);
  MessageId id = core::read_message_id(in);
  in.expect_done();
  return id;
}

WireFrame make_close_frame() { return WireFrame{FrameKind::Close, {}}; }

}  // namespace sos::session
