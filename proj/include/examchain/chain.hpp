#pragma once

#include <optional>
#include <string>
#include <vector>

#include "examchain/block.hpp"
#include "examchain/config.hpp"
#include "examchain/state.hpp"

namespace examchain {

/// Genesis block for a config: height 0, zero prev_hash, no transactions,
/// state_root over the initial WorldState. Throws GenesisError (see
/// build_genesis_state) on a bad roster.
Block make_genesis_block(const GenesisConfig& config);

enum class AppendError : uint8_t {
  kHashPointerMismatch,
  kHeightGap,
  kMerkleMismatch,
  kEmptyBlock,
};
const char* append_error_name(AppendError e);

struct ChainVerifyResult {
  bool ok = true;
  uint64_t first_invalid_height = 0;
  std::string detail;
};

/// Structural verification: heights, hash pointers, merkle roots, the
/// genesis shape, and (when given) the expected tip hash. With the tip hash
/// pinned, every byte of every block is covered by some check. A hash
/// pointer mismatch between heights h and h+1 is reported at h.
ChainVerifyResult verify_blocks(const std::vector<Block>& blocks,
                                const std::optional<Digest32>& expected_tip_hash);

// Append-only sequence of blocks. No operation mutates or removes a block;
// the tip hash is maintained on append and pins the newest header.
class Chain {
 public:
  Chain() = default;
  explicit Chain(Block genesis);

  std::optional<AppendError> append_block(Block block);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& tip() const { return blocks_.back(); }
  uint64_t height() const { return blocks_.back().header.height; }
  const Digest32& tip_hash() const { return tip_hash_; }
  bool empty() const { return blocks_.empty(); }

  ChainVerifyResult verify() const { return verify_blocks(blocks_, tip_hash_); }

 private:
  std::vector<Block> blocks_;
  Digest32 tip_hash_;
};

// Block log persistence: a flat file of 4-byte big-endian length prefixed
// block encodings. Recovery replays the file front to back.
void save_chain(const Chain& chain, const std::string& path);       // throws std::runtime_error
void append_chain_entry(const Block& block, const std::string& path);
std::vector<Block> load_chain_blocks(const std::string& path);      // throws on malformed entries
Chain load_chain(const std::string& path);                          // throws if the log replays to an invalid chain

/// Replays every block's transactions onto the genesis state and checks each
/// header's state_root along the way. Returns the final state. Throws
/// std::runtime_error on the first divergence.
WorldState replay_chain(const GenesisConfig& config, const std::vector<Block>& blocks);

}  // namespace examchain
