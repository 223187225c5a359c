// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <memory>
#include <string>

#include "sos/util/bytes.hpp"
#include "sos/util/rng.hpp"

namespace sos::security {

struct KeyPair {
  Bytes public_key;
  Bytes private_key;
};

/// Detached-signature capability. Key generation draws from a seeded stream
/// so whole simulations are reproducible; sign and verify are pure and
/// thread-safe.
class SignatureScheme {
 public:
  virtual ~SignatureScheme() = default;

  virtual std::string name() const = 0;
  virtual KeyPair generate() = 0;
  virtual Bytes sign(const Bytes& private_key,
                     std::span<const std::uint8_t> data) const = 0;
  virtual bool verify(const Bytes& public_key,
                      std::span<const std::uint8_t> data,
                      const Bytes& signature) const = 0;
};

/// Ed25519 via libsodium. Signing is deterministic, so runs with the same
/// seed produce identical signatures on every platform.
class Ed25519Scheme final : public SignatureScheme {
 public:
  explicit Ed25519Scheme(std::uint64_t seed);

  std::string name() const override { return "ed25519"; }
  KeyPair generate() override;
  Bytes sign(const Bytes& private_key,
             std::span<const std::uint8_t> data) const override;
  bool verify(const Bytes& public_key, std::span<const std::uint8_t> data,
              const Bytes& signature) const override;

 private:
  Rng rng_;
};

/// Test double: signature = SHA-256(key | data) and the public key equals the
/// private key, so any holder of a "public" key can forge. Tamper detection
/// still works, which is all the protocol tests need from it.
class KeyedHashScheme final : public SignatureScheme {
 public:
  explicit KeyedHashScheme(std::uint64_t seed);

  std::string name() const override { return "keyed-hash"; }
  KeyPair generate() override;
  Bytes sign(const Bytes& private_key,
             std::span<const std::uint8_t> data) const override;
  bool verify(const Bytes& public_key, std::span<const std::uint8_t> data,
              const Bytes& signature) const override;

 private:
  Rng rng_;
};

enum class SignatureSchemeKind { Ed25519, KeyedHash };

std::unique_ptr<SignatureScheme> make_signature_scheme(SignatureSchemeKind kind,
                                                       std::uint64_t seed);

}  // namespace sos::security
