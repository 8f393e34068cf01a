#include "examchain/membership.hpp"

#include "examchain/state.hpp"

namespace examchain {

std::optional<TxError> admit_member(WorldState& state, const Address& sender,
                                    const AdmitMember& payload, uint64_t height) {
  if (sender != state.university_address) return TxError::kNonUniversitySender;
  if (payload.member_kind == MemberKind::kUniversity) return TxError::kUniversityExists;
  Address addr = derive_address(payload.node_public_key);
  if (state.members.contains(addr)) return TxError::kDuplicateMember;

  MemberRecord rec;
  rec.member_address = addr;
  rec.kind = payload.member_kind;
  rec.node_public_key = payload.node_public_key;
  rec.admitted_at_height = height;
  rec.member_seq = state.next_member_seq++;
  state.members.emplace(addr, rec);
  return std::nullopt;
}

std::optional<TxError> revoke_member(WorldState& state, const Address& sender,
                                     const RevokeMember& payload) {
  if (sender != state.university_address) return TxError::kNonUniversitySender;
  auto it = state.members.find(payload.member_address);
  if (it == state.members.end()) return TxError::kUnknownMember;
  if (it->second.kind == MemberKind::kUniversity) return TxError::kCannotRevokeUniversity;
  // The remaining replica set must still tolerate the configured fault bound.
  uint64_t remaining = state.members.size() - 1;
  if (remaining < 3 * uint64_t{state.fault_bound} + 1) return TxError::kWouldBreakQuorum;
  state.members.erase(it);
  return std::nullopt;
}

}  // namespace examchain
