#pragma once

#include <cstdint>

#include "examchain/crypto.hpp"
#include "examchain/tx.hpp"

namespace examchain {

struct WorldState;
enum class TxError : uint8_t;

// Admission record for a college or university node. The member address is
// derived from the node public key; replica identity for consensus is the
// rank of member_seq among the currently admitted members.
struct MemberRecord {
  Address member_address;
  MemberKind kind = MemberKind::kAffiliatedCollege;
  PublicKey node_public_key;
  uint64_t admitted_at_height = 0;
  uint64_t member_seq = 0;
};

// Both take effect for replica sets built after this block, never mid-instance.
std::optional<TxError> admit_member(WorldState& state, const Address& sender,
                                    const AdmitMember& payload, uint64_t height);
std::optional<TxError> revoke_member(WorldState& state, const Address& sender,
                                     const RevokeMember& payload);

}  // namespace examchain
