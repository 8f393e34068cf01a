#pragma once

#include <vector>

#include "examchain/crypto.hpp"

namespace examchain {

// Binary merkle tree over precomputed leaf digests. Conventions: the empty
// list roots to the zero digest, a single leaf is its own root, and a layer
// with an odd node count duplicates its last node.

Digest32 merkle_root(const std::vector<Digest32>& leaves);

struct MerkleStep {
  Digest32 sibling;
  bool sibling_on_right;  // hash order: left || right
};
using MerkleProof = std::vector<MerkleStep>;

/// Inclusion path for `index`; throws std::out_of_range when index is out of
/// bounds.
MerkleProof merkle_proof(const std::vector<Digest32>& leaves, size_t index);

bool verify_merkle_proof(const Digest32& root, const Digest32& leaf, const MerkleProof& proof);

}  // namespace examchain
