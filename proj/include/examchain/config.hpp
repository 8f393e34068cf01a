#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "examchain/textfile.hpp"
#include "examchain/tx.hpp"

namespace examchain {

using PermissionMatrix = std::map<TxKind, std::set<Role>>;

/// The documented default authorization matrix (SRQ4): which role may send
/// which transaction kind. Membership changes additionally require the
/// sender to be the university member.
PermissionMatrix default_permissions();

struct GenesisIdentity {
  PublicKey public_key;
  Role role = Role::kStudent;
  Digest32 real_identity_hash;
};

struct GenesisMember {
  MemberKind kind = MemberKind::kAffiliatedCollege;
  PublicKey node_public_key;
};

struct GenesisConfig {
  // [params]
  uint32_t attendance_threshold_percent = 75;
  uint32_t fault_bound = 1;  // configured f; revocation keeps n >= 3f+1
  std::vector<std::string> grade_scale = {"AA", "AB", "BB", "BC", "CC", "CD", "DD", "FF"};

  PermissionMatrix permissions = default_permissions();
  std::vector<GenesisMember> members;
  std::vector<GenesisIdentity> identities;

  static GenesisConfig parse(const SectionedFile& file);  // throws std::runtime_error
  static GenesisConfig load(const std::string& path);
  std::string to_text() const;
};

}  // namespace examchain
