// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/security/ca.hpp"

namespace sos::security {

CertificateAuthority::CertificateAuthority(SignatureScheme& scheme,
                                           Timestamp cert_lifetime_seconds)
    : scheme_(scheme), cert_lifetime_(cert_lifetime_seconds) {
  state_.root_keypair = scheme_.generate();
}

SignupResult CertificateAuthority::signup(const UserId& requested,
                                          const UserId& logged_in_identity,
                                          Timestamp now,
                                          const SignupOptions& options) {
  if (!options.internet_available) {
    throw ConnectivityError("signup requires Internet connectivity");
  }
  // The cloud asks the CA to compare the UserId in the request against the
  // identity of the logged-in account before anything is signed.
  if (requested != logged_in_identity) {
    throw IdentifierMismatchError("certificate requested for " +
                                  requested.str() + " by account " +
                                  logged_in_identity.str());
  }
  auto bound = state_.account_identity.find(requested);
  if (bound != state_.account_identity.end() &&
      bound->second != logged_in_identity) {
    throw IdentifierMismatchError("user id " + requested.str() +
                                  " already bound to a different account");
  }
  if (state_.issued.contains(requested) && !options.reissue) {
    throw DuplicateIssuanceError("user " + requested.str() +
                                 " already holds a certificate");
  }

  KeyPair device_keys = scheme_.generate();
  Certificate cert;
  cert.subject = requested;
  cert.subject_public_key = device_keys.public_key;
  cert.not_before = now;
  cert.not_after = now + cert_lifetime_;
  cert.ca_signature =
      scheme_.sign(state_.root_keypair.private_key, certificate_signing_bytes(cert));

  state_.issued[requested] = cert;
  state_.account_identity[requested] = logged_in_identity;
  return SignupResult{device_keys, cert, root_public_key()};
}

void CertificateAuthority::revoke(const UserId& user) {
  if (!state_.issued.contains(user)) {
    throw UnknownSubjectError("cannot revoke unknown user " + user.str());
  }
  state_.revoked.insert(user);
}

}  // namespace sos::security
