// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#include "sos/security/signature.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

namespace sos::security {

namespace {

void ensure_sodium_ready() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    if (sodium_init() < 0) {
      throw std::runtime_error("libsodium initialization failed");
    }
  });
}

}  // namespace

Ed25519Scheme::Ed25519Scheme(std::uint64_t seed) : rng_(seed) {
  ensure_sodium_ready();
}

KeyPair Ed25519Scheme::generate() {
  Bytes seed = rng_.bytes(crypto_sign_SEEDBYTES);
  KeyPair keys;
  keys.public_key.resize(crypto_sign_PUBLICKEYBYTES);
  keys.private_key.resize(crypto_sign_SECRETKEYBYTES);
  crypto_sign_seed_keypair(keys.public_key.data(), keys.private_key.data(),
                           seed.data());
  return keys;
}

Bytes Ed25519Scheme::sign(const Bytes& private_key,
                          std::span<const std::uint8_t> data) const {
  if (private_key.size() != crypto_sign_SECRETKEYBYTES) {
    throw std::invalid_argument("ed25519 private key has wrong size");
  }
  Bytes sig(crypto_sign_BYTES);
  crypto_sign_detached(sig.data(), nullptr, data.data(), data.size(),
                       private_key.data());
  return sig;
}

bool Ed25519Scheme::verify(const Bytes& public_key,
                           std::span<const std::uint8_t> data,
                           const Bytes& signature) const {
  if (public_key.size() != crypto_sign_PUBLICKEYBYTES ||
      signature.size() != crypto_sign_BYTES) {
    return false;
  }
  return crypto_sign_verify_detached(signature.data(), data.data(), data.size(),
                                     public_key.data()) == 0;
}

KeyedHashScheme::KeyedHashScheme(std::uint64_t seed) : rng_(seed) {
  ensure_sodium_ready();
}

KeyPair KeyedHashScheme::generate() {
  Bytes key = rng_.bytes(32);
  return KeyPair{key, key};
}

Bytes KeyedHashScheme::sign(const Bytes& private_key,
                            std::span<const std::uint8_t> data) const {
  Bytes digest(crypto_hash_sha256_BYTES);
  crypto_hash_sha256_state state;
  crypto_hash_sha256_init(&state);
  crypto_hash_sha256_update(&state, private_key.data(), private_key.size());
  crypto_hash_sha256_update(&state, data.data(), data.size());
  crypto_hash_sha256_final(&state, digest.data());
  return digest;
}

bool KeyedHashScheme::verify(const Bytes& public_key,
                             std::span<const std::uint8_t> data,
                             const Bytes& signature) const {
  return sign(public_key, data) == signature;
}

std::unique_ptr<SignatureScheme> make_signature_scheme(SignatureSchemeKind kind,
                                                       std::uint64_t seed) {
  switch (kind) {
    case SignatureSchemeKind::Ed25519:
      return std::make_unique<Ed25519Scheme>(seed);
    case SignatureSchemeKind::KeyedHash:
      return std::make_unique<KeyedHashScheme>(seed);
  }
  throw std::invalid_argument("unknown signature scheme kind");
}

}  // namespace sos::security
