#include "examchain/chain.hpp"

#include <cstdio>
#include <fstream>

namespace examchain {

Block make_genesis_block(const GenesisConfig& config) {
  WorldState state = build_genesis_state(config);
  Block genesis;
  genesis.header.height = 0;
  genesis.header.prev_hash = Digest32{};
  genesis.header.tx_merkle_root = tx_merkle_root({});
  genesis.header.state_root = state_root(state);
  genesis.header.timestamp = 0;
  genesis.header.proposer = Address{};
  return genesis;
}

const char* append_error_name(AppendError e) {
  switch (e) {
    case AppendError::kHashPointerMismatch: return "hash-pointer-mismatch";
    case AppendError::kHeightGap: return "height-gap";
    case AppendError::kMerkleMismatch: return "merkle-mismatch";
    case AppendError::kEmptyBlock: return "empty-block";
  }
  return "?";
}

ChainVerifyResult verify_blocks(const std::vector<Block>& blocks,
                                const std::optional<Digest32>& expected_tip_hash) {
  auto fail = [](uint64_t height, std::string detail) {
    return ChainVerifyResult{false, height, std::move(detail)};
  };
  if (blocks.empty()) return fail(0, "empty chain");

  for (size_t h = 0; h < blocks.size(); ++h) {
    const Block& b = blocks[h];
    if (b.header.height != h) return fail(h, "height mismatch");
    if (h == 0) {
      if (!b.header.prev_hash.is_zero()) return fail(0, "genesis prev_hash not zero");
    } else if (b.transactions.empty()) {
      return fail(h, "empty non-genesis block");
    }
    if (tx_merkle_root(b.transactions) != b.header.tx_merkle_root)
      return fail(h, "tx merkle root mismatch");
    if (h + 1 < blocks.size() && b.header.hash() != blocks[h + 1].header.prev_hash)
      return fail(h, "hash pointer break");
  }
  if (expected_tip_hash && blocks.back().header.hash() != *expected_tip_hash)
    return fail(blocks.size() - 1, "tip hash mismatch");
  return {};
}

Chain::Chain(Block genesis) {
  tip_hash_ = genesis.header.hash();
  blocks_.push_back(std::move(genesis));
}

std::optional<AppendError> Chain::append_block(Block block) {
  if (block.header.prev_hash != tip_hash_) return AppendError::kHashPointerMismatch;
  if (block.header.height != height() + 1) return AppendError::kHeightGap;
  if (tx_merkle_root(block.transactions) != block.header.tx_merkle_root)
    return AppendError::kMerkleMismatch;
  if (block.transactions.empty()) return AppendError::kEmptyBlock;
  tip_hash_ = block.header.hash();
  blocks_.push_back(std::move(block));
  return std::nullopt;
}

namespace {
void write_entry(std::ofstream& out, const Block& block) {
  Bytes enc = block.encode();
  uint8_t len[4] = {static_cast<uint8_t>(enc.size() >> 24), static_cast<uint8_t>(enc.size() >> 16),
                    static_cast<uint8_t>(enc.size() >> 8), static_cast<uint8_t>(enc.size())};
  out.write(reinterpret_cast<const char*>(len), 4);
  out.write(reinterpret_cast<const char*>(enc.data()), static_cast<std::streamsize>(enc.size()));
}
}  // namespace

void save_chain(const Chain& chain, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const Block& b : chain.blocks()) write_entry(out, b);
  if (!out) throw std::runtime_error("write failed: " + path);
}

void append_chain_entry(const Block& block, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_entry(out, block);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Block> load_chain_blocks(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Block> blocks;
  for (;;) {
    uint8_t len[4];
    in.read(reinterpret_cast<char*>(len), 4);
    if (in.gcount() == 0 && in.eof()) break;
    if (in.gcount() != 4) throw std::runtime_error(path + ": truncated length prefix");
    uint32_t n = (uint32_t{len[0]} << 24) | (uint32_t{len[1]} << 16) | (uint32_t{len[2]} << 8) |
                 uint32_t{len[3]};
    Bytes body(n);
    in.read(reinterpret_cast<char*>(body.data()), n);
    if (static_cast<uint32_t>(in.gcount()) != n)
      throw std::runtime_error(path + ": truncated block entry");
    blocks.push_back(Block::decode(body));
  }
  return blocks;
}

Chain load_chain(const std::string& path) {
  std::vector<Block> blocks = load_chain_blocks(path);
  if (blocks.empty()) throw std::runtime_error(path + ": no genesis entry");
  Chain chain(blocks[0]);
  for (size_t i = 1; i < blocks.size(); ++i) {
    if (auto err = chain.append_block(blocks[i]))
      throw std::runtime_error(path + ": entry " + std::to_string(i) + ": " +
                               append_error_name(*err));
  }
  return chain;
}

WorldState replay_chain(const GenesisConfig& config, const std::vector<Block>& blocks) {
  WorldState state = build_genesis_state(config);
  if (blocks.empty()) throw std::runtime_error("replay: empty chain");
  if (blocks[0].header.state_root != state_root(state))
    throw std::runtime_error("replay: genesis state root mismatch");
  for (size_t h = 1; h < blocks.size(); ++h) {
    for (const Transaction& tx : blocks[h].transactions) {
      if (auto err = apply_transaction(state, tx, blocks[h].header.height))
        throw std::runtime_error("replay: height " + std::to_string(h) + " tx rejected: " +
                                 tx_error_name(*err));
    }
    if (blocks[h].header.state_root != state_root(state))
      throw std::runtime_error("replay: state root mismatch at height " + std::to_string(h));
  }
  return state;
}

}  // namespace examchain
