#include "examchain/block.hpp"

namespace examchain {

Bytes BlockHeader::encode() const {
  Encoder enc;
  enc.put_u64(height);
  enc.put_fixed(prev_hash);
  enc.put_fixed(tx_merkle_root);
  enc.put_fixed(state_root);
  enc.put_u64(timestamp);
  enc.put_fixed(proposer);
  return enc.take();
}

BlockHeader BlockHeader::decode(ByteView data) {
  Decoder dec(data);
  BlockHeader h;
  h.height = dec.get_u64();
  h.prev_hash = dec.get_fixed<32>();
  h.tx_merkle_root = dec.get_fixed<32>();
  h.state_root = dec.get_fixed<32>();
  h.timestamp = dec.get_u64();
  h.proposer = dec.get_fixed<20>();
  dec.finish();
  return h;
}

Digest32 BlockHeader::hash() const {
  return examchain::hash(encode());
}

Bytes Block::encode() const {
  Encoder enc;
  enc.put_raw(header.encode());
  enc.put_u32(static_cast<uint32_t>(transactions.size()));
  for (const Transaction& tx : transactions) enc.put_bytes(tx.encode());
  return enc.take();
}

Block Block::decode(ByteView data) {
  Decoder dec(data);
  Block b;
  b.header = BlockHeader::decode(dec.get_raw(132));
  uint32_t n = dec.get_u32();
  b.transactions.reserve(n);
  for (uint32_t i = 0; i < n; ++i) b.transactions.push_back(Transaction::decode(dec.get_bytes()));
  dec.finish();
  return b;
}

std::vector<Digest32> tx_leaves(const std::vector<Transaction>& txs) {
  std::vector<Digest32> leaves;
  leaves.reserve(txs.size());
  for (const Transaction& tx : txs) leaves.push_back(hash(tx.encode()));
  return leaves;
}

Digest32 tx_merkle_root(const std::vector<Transaction>& txs) {
  return merkle_root(tx_leaves(txs));
}

}  // namespace examchain
