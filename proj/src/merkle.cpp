#include "examchain/merkle.hpp"

#include <stdexcept>

#include "examchain/codec.hpp"

namespace examchain {

namespace {
Digest32 hash_pair(const Digest32& left, const Digest32& right) {
  Encoder enc;
  enc.put_fixed(left);
  enc.put_fixed(right);
  return hash(enc.bytes());
}
}  // namespace

Digest32 merkle_root(const std::vector<Digest32>& leaves) {
  if (leaves.empty()) return Digest32{};
  std::vector<Digest32> layer = leaves;
  while (layer.size() > 1) {
    if (layer.size() % 2 != 0) layer.push_back(layer.back());
    std::vector<Digest32> next;
    next.reserve(layer.size() / 2);
    for (size_t i = 0; i < layer.size(); i += 2)
      next.push_back(hash_pair(layer[i], layer[i + 1]));
    layer = std::move(next);
  }
  return layer[0];
}

MerkleProof merkle_proof(const std::vector<Digest32>& leaves, size_t index) {
  if (index >= leaves.size()) throw std::out_of_range("merkle_proof: index out of bounds");
  MerkleProof proof;
  std::vector<Digest32> layer = leaves;
  size_t pos = index;
  while (layer.size() > 1) {
    if (layer.size() % 2 != 0) layer.push_back(layer.back());
    size_t sibling = (pos % 2 == 0) ? pos + 1 : pos - 1;
    proof.push_back({layer[sibling], pos % 2 == 0});
    std::vector<Digest32> next;
    next.reserve(layer.size() / 2);
    for (size_t i = 0; i < layer.size(); i += 2)
      next.push_back(hash_pair(layer[i], layer[i + 1]));
    layer = std::move(next);
    pos /= 2;
  }
  return proof;
}

bool verify_merkle_proof(const Digest32& root, const Digest32& leaf, const MerkleProof& proof) {
  Digest32 node = leaf;
  for (const MerkleStep& step : proof)
    node = step.sibling_on_right ? hash_pair(node, step.sibling) : hash_pair(step.sibling, node);
  return node == root;
}

}  // namespace examchain
