// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <map>
#include <set>

#include "sos/security/certificate.hpp"

namespace sos::security {

class SecurityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signup requested for a UserId other than the one the logged-in cloud
/// account owns (the credential-forgery attempt the CA must catch).
class IdentifierMismatchError : public SecurityError {
 public:
  using SecurityError::SecurityError;
};

/// Issuance or revocation attempted without Internet connectivity.
class ConnectivityError : public SecurityError {
 public:
  using SecurityError::SecurityError;
};

class UnknownSubjectError : public SecurityError {
 public:
  using SecurityError::SecurityError;
};

class DuplicateIssuanceError : public SecurityError {
 public:
  using SecurityError::SecurityError;
};

struct CaState {
  KeyPair root_keypair;
  std::map<UserId, Certificate> issued;
  std::set<UserId> revoked;
  // Cloud account each UserId was first bound to; later signups must match.
  std::map<UserId, UserId> account_identity;
};

/// Everything the device keeps from the one-time signup: its keys, its
/// certificate, and the CA root needed to verify everyone else offline.
struct SignupResult {
  KeyPair device_keys;
  Certificate certificate;
  Bytes root_public_key;
};

struct SignupOptions {
  bool reissue = false;
  bool internet_available = true;
};

/// The cloud-side certificate authority. Only the single-threaded event loop
/// mutates it; nodes interact with it exclusively at signup and cloud-sync
/// events.
class CertificateAuthority {
 public:
  CertificateAuthority(SignatureScheme& scheme, Timestamp cert_lifetime_seconds);

  /// One-time infrastructure step: the device generates a fresh keypair and
  /// the CA issues a certificate after checking that the requested UserId is
  /// the one bound to the logged-in account. Throws IdentifierMismatchError,
  /// ConnectivityError or DuplicateIssuanceError.
  SignupResult signup(const UserId& requested, const UserId& logged_in_identity,
                      Timestamp now, const SignupOptions& options = {});

  /// Adds the user to the CRL. Throws UnknownSubjectError for users never
  /// issued a certificate.
  void revoke(const UserId& user);

  /// Snapshot of the CRL, handed to nodes only at cloud-sync events; nodes
  /// cache it in between.
  std::set<UserId> fetch_crl() const { return state_.revoked; }

  const Bytes& root_public_key() const { return state_.root_keypair.public_key; }
  const CaState& state() const { return state_; }
  Timestamp cert_lifetime_seconds() const { return cert_lifetime_; }

 private:
  SignatureScheme& scheme_;
  Timestamp cert_lifetime_;
  CaState state_;
};

}  // namespace sos::security
