#include "examchain/crypto.hpp"

#include <sodium.h>

#include <mutex>

namespace examchain {

namespace {
void ensure_sodium() {
  static std::once_flag once;
  std::call_once(once, [] {
    if (sodium_init() < 0) throw CryptoError("sodium_init failed");
  });
}

static_assert(crypto_hash_sha256_BYTES == 32);
static_assert(crypto_sign_PUBLICKEYBYTES == 32);
static_assert(crypto_sign_SECRETKEYBYTES == 64);
static_assert(crypto_sign_BYTES == 64);
static_assert(crypto_sign_SEEDBYTES == 32);
}  // namespace

Digest32 hash(ByteView data) {
  ensure_sodium();
  Digest32 out;
  crypto_hash_sha256(out.bytes.data(), data.data(), data.size());
  return out;
}

KeyPair generate_identity(const Seed& seed) {
  ensure_sodium();
  KeyPair kp;
  crypto_sign_seed_keypair(kp.public_key.bytes.data(), kp.private_key.bytes.data(),
                           seed.bytes.data());
  return kp;
}

KeyPair generate_identity(ByteView seed) {
  if (seed.size() != Seed::size()) throw CryptoError("seed must be 32 bytes");
  return generate_identity(Seed::from(seed));
}

KeyPair generate_identity_random() {
  ensure_sodium();
  Seed seed;
  randombytes_buf(seed.bytes.data(), seed.bytes.size());
  return generate_identity(seed);
}

Signature sign(const PrivateKey& key, ByteView message) {
  ensure_sodium();
  Signature sig;
  if (crypto_sign_detached(sig.bytes.data(), nullptr, message.data(), message.size(),
                           key.bytes.data()) != 0)
    throw CryptoError("sign failed");
  return sig;
}

bool verify(const PublicKey& key, ByteView message, const Signature& signature) {
  ensure_sodium();
  return crypto_sign_verify_detached(signature.bytes.data(), message.data(), message.size(),
                                     key.bytes.data()) == 0;
}

Address derive_address(const PublicKey& key) {
  Digest32 d = hash(key.view());
  Address addr;
  std::copy(d.bytes.end() - Address::size(), d.bytes.end(), addr.bytes.begin());
  return addr;
}

}  // namespace examchain
