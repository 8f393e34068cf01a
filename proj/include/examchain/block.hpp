#pragma once

#include <cstdint>
#include <vector>

#include "examchain/merkle.hpp"
#include "examchain/tx.hpp"

namespace examchain {

struct BlockHeader {
  uint64_t height = 0;
  Digest32 prev_hash;       // hash of the previous block's header encoding
  Digest32 tx_merkle_root;  // merkle_root over hash(tx encoding) leaves
  Digest32 state_root;      // WorldState root after applying this block
  uint64_t timestamp = 0;   // seconds; simulation tick in netsim runs
  Address proposer;

  Bytes encode() const;
  static BlockHeader decode(ByteView data);
  Digest32 hash() const;
};

struct Block {
  BlockHeader header;
  std::vector<Transaction> transactions;

  Bytes encode() const;
  static Block decode(ByteView data);  // throws DecodeError
  Digest32 hash() const { return header.hash(); }
};

std::vector<Digest32> tx_leaves(const std::vector<Transaction>& txs);
Digest32 tx_merkle_root(const std::vector<Transaction>& txs);

}  // namespace examchain
