// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/security/certificate.hpp"

#include "sos/core/codec.hpp"

namespace sos::security {

Bytes certificate_signing_bytes(const Certificate& cert) {
  if (cert.issuer.size() != kCaIssuer.size()) {
    throw CodecError("certificate issuer must be exactly " +
                     std::to_string(kCaIssuer.size()) + " bytes");
  }
  ByteWriter w;
  w.raw(cert.subject.view());
  w.u32(static_cast<std::uint32_t>(cert.subject_public_key.size()));
  w.raw(cert.subject_public_key);
  w.raw(cert.issuer);
  w.u64(static_cast<std::uint64_t>(cert.not_before));
  w.u64(static_cast<std::uint64_t>(cert.not_after));
  return w.take();
}

Bytes encode_certificate(const Certificate& cert) {
  ByteWriter w;
  w.raw(certificate_signing_bytes(cert));
  w.u32(static_cast<std::uint32_t>(cert.ca_signature.size()));
  w.raw(cert.ca_signature);
  return w.take();
}

Certificate decode_certificate(ByteReader& in) {
  Certificate cert;
  cert.subject = core::read_user_id(in);
  std::uint32_t key_len = in.u32();
  if (key_len > 4096) {
    throw CodecError("certificate key length implausible: " +
                     std::to_string(key_len));
  }
  auto key = in.raw(key_len);
  cert.subject_public_key.assign(key.begin(), key.end());
  auto issuer = in.raw(kCaIssuer.size());
  cert.issuer.assign(issuer.begin(), issuer.end());
  cert.not_before = static_cast<Timestamp>(in.u64());
  cert.not_after = static_cast<Timestamp>(in.u64());
  std::uint32_t sig_len = in.u32();
  if (sig_len > 4096) {
    throw CodecError("certificate signature length implausible: " +
                     std::to_string(sig_len));
  }
  auto sig = in.raw(sig_len);
  cert.ca_signature.assign(sig.begin(), sig.end());
  return cert;
}

Certificate decode_certificate(std::span<const std::uint8_t> data) {
  ByteReader in(data);
  Certificate cert = decode_certificate(in);
  in.expect_done();
  return cert;
}

const char* to_string(CertFailure f) {
  switch (f) {
    case CertFailure::BadSignature: return "bad-signature";
    case CertFailure::NotYetValid: return "not-yet-valid";
    case CertFailure::Expired: return "expired";
    case CertFailure::Revoked: return "revoked";
  }
  return "unknown";
}

std::optional<CertFailure> validate_certificate(const Certificate& cert,
                                                const Bytes& root_public_key,
                                                Timestamp now,
                                                const std::set<UserId>& crl,
                                                const SignatureScheme& scheme) {
  // Signature first: none of the other fields can be trusted without it.
  Bytes signed_bytes;
  try {
    signed_bytes = certificate_signing_bytes(cert);
  } catch (const CodecError&) {
    return CertFailure::BadSignature;
  }
  if (!scheme.verify(root_public_key, signed_bytes, cert.ca_signature)) {
    return CertFailure::BadSignature;
  }
  if (now < cert.not_before) {
    return CertFailure::NotYetValid;
  }
  if (now > cert.not_after) {
    return CertFailure::Expired;
  }
  if (crl.contains(cert.subject)) {
    return CertFailure::Revoked;
  }
  return std::nullopt;
}

}  // namespace sos::security
