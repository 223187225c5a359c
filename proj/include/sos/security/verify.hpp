// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "sos/core/message.hpp"
#include "sos/security/certificate.hpp"

namespace sos::security {

/// Signs the message in place with the author's private key. All other
/// fields are left untouched. Oversize payloads propagate a CodecError.
void sign_message(core::Message& msg, const KeyPair& author_keys,
                  const SignatureScheme& scheme);

enum class ForwardFailure {
  CertBadSignature,
  CertNotYetValid,
  CertExpired,
  CertRevoked,
  SubjectMismatch,
  BadMessageSignature,
};

const char* to_string(ForwardFailure f);

ForwardFailure to_forward_failure(CertFailure f);

/// Receiver-side check for a message arriving from a forwarder: the attached
/// certificate must validate against the CA root, name the message's author,
/// and the author signature must cover the message bytes. This is what lets
/// a node accept content from authors it has never met.
std::optional<ForwardFailure> verify_forwarded(const core::Message& msg,
                                               const Certificate& author_cert,
                                               const Bytes& root_public_key,
                                               Timestamp now,
                                               const std::set<UserId>& crl,
                                               const SignatureScheme& scheme);

}  // namespace sos::security
