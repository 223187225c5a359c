// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/core/advertisement.hpp"

#include "sos/core/codec.hpp"

namespace sos::core {

Bytes encode_advertisement(const Advertisement& adv) {
  if (adv.entries.size() > kMaxAdvertisementEntries) {
    throw CodecError("advertisement exceeds " +
                     std::to_string(kMaxAdvertisementEntries) + " entries: " +
                     std::to_string(adv.entries.size()));
  }
  ByteWriter w;
  w.raw(adv.advertiser.view());
  w.u16(static_cast<std::uint16_t>(adv.entries.size()));
  // std::map iterates in ascending UserId order, which is the canonical form.
  for (const auto& [user, number] : adv.entries) {
    w.raw(user.view());
    w.u64(number);
  }
  return w.take();
}

Advertisement decode_advertisement(ByteReader& in) {
  Advertisement adv;
  adv.advertiser = read_user_id(in);
  std::uint16_t count = in.u16();
  if (count > kMaxAdvertisementEntries) {
    throw CodecError("advertisement entry count exceeds bound: " +
                     std::to_string(count));
  }
  UserId previous;
  for (std::uint16_t i = 0; i < count; ++i) {
    UserId user = read_user_id(in);
    MessageNumber number = in.u64();
    if (i > 0 && !(previous < user)) {
      throw CodecError("advertisement entries not in ascending user order");
    }
    previous = user;
    adv.entries.emplace(user, number);
  }
  return adv;
}

Advertisement decode_advertisement(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  Advertisement adv = decode_advertisement(in);
  in.expect_done();
  return adv;
}

std::map<UserId, MessageNumber> merge_latest(
    const std::map<UserId, MessageNumber>& local, const Advertisement& remote) {
  std::map<UserId, MessageNumber> merged = local;
  for (const auto& [user, number] : remote.entries) {
    auto [it, inserted] = merged.emplace(user, number);
    if (!inserted && it->second < number) {
      it->second = number;
    }
  }
  return merged;
}

}  // namespace sos::core
