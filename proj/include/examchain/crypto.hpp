#pragma once

#include <cstdint>
#include <stdexcept>

#include "examchain/bytes.hpp"

namespace examchain {

// SHA-256 digest. Hash pointers, merkle nodes, state roots and commitment
// values are all Digest32.
using Digest32 = FixedBytes<32>;

// 20-byte account address, the truncated hash of an Ed25519 public key.
using Address = FixedBytes<20>;

using PublicKey = FixedBytes<32>;
using PrivateKey = FixedBytes<64>;  // Ed25519 secret key (seed || public half)
using Signature = FixedBytes<64>;
using Seed = FixedBytes<32>;

struct KeyPair {
  PublicKey public_key;
  PrivateKey private_key;  // never serialized into any ledger structure
};

struct CryptoError : std::runtime_error {
  explicit CryptoError(const std::string& what) : std::runtime_error(what) {}
};

/// SHA-256 of `data`. Pure; empty input allowed.
Digest32 hash(ByteView data);

/// Deterministic Ed25519 keypair from a 32-byte seed. Meant for reproducible
/// fixtures and scripted rosters; use generate_identity_random() when the
/// caller has no seed to offer.
KeyPair generate_identity(const Seed& seed);
KeyPair generate_identity(ByteView seed);  // throws CryptoError unless 32 bytes

/// Keypair from OS entropy.
KeyPair generate_identity_random();

Signature sign(const PrivateKey& key, ByteView message);

/// True iff `signature` was produced by the private half of `key` over
/// exactly `message`. Malformed inputs verify false, never throw.
bool verify(const PublicKey& key, ByteView message, const Signature& signature);

/// Last 20 bytes of hash(public_key).
Address derive_address(const PublicKey& key);

}  // namespace examchain
