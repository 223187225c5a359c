// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <set>
#include <string>

#include "sos/core/ids.hpp"
#include "sos/security/signature.hpp"
#include "sos/util/bytes.hpp"

namespace sos::security {

using core::Timestamp;
using core::UserId;

inline constexpr std::string_view kCaIssuer = "SOS-CA";

/// Flat certificate record binding a UserId to a public key, signed by the
/// CA root. Deliberately not X.509: the validation logic is what matters
/// here, not the encoding.
struct Certificate {
  UserId subject;
  Bytes subject_public_key;
  std::string issuer = std::string(kCaIssuer);
  Timestamp not_before = 0;
  Timestamp not_after = 0;
  Bytes ca_signature;

  bool operator==(const Certificate&) const = default;
};

/// Bytes covered by the CA signature: fields concatenated in declaration
/// order, integers big-endian, the variable-length key length-prefixed.
Bytes certificate_signing_bytes(const Certificate& cert);

/// Wire form: signing bytes plus the length-prefixed CA signature.
Bytes encode_certificate(const Certificate& cert);
Certificate decode_certificate(ByteReader& in);
Certificate decode_certificate(std::span<const std::uint8_t> data);

enum class CertFailure { BadSignature, NotYetValid, Expired, Revoked };

const char* to_string(CertFailure f);

/// Full offline check against the CA root: signature, validity window, and
/// the caller's (possibly stale) CRL snapshot. nullopt means the certificate
/// is good.
std::optional<CertFailure> validate_certificate(const Certificate& cert,
                                                const Bytes& root_public_key,
                                                Timestamp now,
                                                const std::set<UserId>& crl,
                                                const SignatureScheme& scheme);

}  // namespace sos::security
