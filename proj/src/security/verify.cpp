// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/security/verify.hpp"

namespace sos::security {

void sign_message(core::Message& msg, const KeyPair& author_keys,
                  const SignatureScheme& scheme) {
  msg.author_signature = scheme.sign(author_keys.private_key, core::signable_bytes(msg));
}

const char* to_string(ForwardFailure f) {
  switch (f) {
    case ForwardFailure::CertBadSignature: return "cert-invalid(bad-signature)";
    case ForwardFailure::CertNotYetValid: return "cert-invalid(not-yet-valid)";
    case ForwardFailure::CertExpired: return "cert-invalid(expired)";
    case ForwardFailure::CertRevoked: return "cert-invalid(revoked)";
    case ForwardFailure::SubjectMismatch: return "subject-mismatch";
    case ForwardFailure::BadMessageSignature: return "bad-message-signature";
  }
  return "unknown";
}

ForwardFailure to_forward_failure(CertFailure f) {
  switch (f) {
    case CertFailure::BadSignature: return ForwardFailure::CertBadSignature;
    case CertFailure::NotYetValid: return ForwardFailure::CertNotYetValid;
    case CertFailure::Expired: return ForwardFailure::CertExpired;
    case CertFailure::Revoked: return ForwardFailure::CertRevoked;
  }
  return ForwardFailure::CertBadSignature;
}

std::optional<ForwardFailure> verify_forwarded(const core::Message& msg,
                                               const Certificate& author_cert,
                                               const Bytes& root_public_key,
                                               Timestamp now,
                                               const std::set<UserId>& crl,
                                               const SignatureScheme& scheme) {
  if (auto cert_failure =
          validate_certificate(author_cert, root_public_key, now, crl, scheme)) {
    return to_forward_failure(*cert_failure);
  }
  if (author_cert.subject != msg.id.author) {
    return ForwardFailure::SubjectMismatch;
  }
  Bytes body;
  try {
    body = core::signable_bytes(msg);
  } catch (const CodecError&) {
    return ForwardFailure::BadMessageSignature;
  }
  if (!scheme.verify(author_cert.subject_public_key, body, msg.author_signature)) {
    return ForwardFailure::BadMessageSignature;
  }
  return std::nullopt;
}

}  // namespace sos::security
