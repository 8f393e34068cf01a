#include "examchain/config.hpp"

#include <sstream>
#include <stdexcept>

namespace examchain {

PermissionMatrix default_permissions() {
  using enum Role;
  PermissionMatrix m;
  m[TxKind::kRegisterIdentity] = {kController};
  m[TxKind::kEnroll] = {kStudent};
  m[TxKind::kRecordAttendance] = {kTeacher};
  m[TxKind::kIssueHallTicket] = {kController};
  m[TxKind::kRedeemHallTicket] = {kPrincipal, kController};
  m[TxKind::kCommitQuestionBank] = {kPaperSetter};
  m[TxKind::kGenerateExamPaper] = {kController};
  m[TxKind::kTrackAsset] = {kPrincipal, kController};
  m[TxKind::kUpdateInventory] = {kPrincipal, kController};
  m[TxKind::kRecordGrade] = {kEvaluator};
  m[TxKind::kIssueCertificate] = {kController};
  m[TxKind::kAdmitMember] = {kController};
  m[TxKind::kRevokeMember] = {kController};
  return m;
}

namespace {

TxKind tx_kind_from_name(std::string_view name) {
  for (int i = 0; i < kTxKindCount; ++i) {
    TxKind k = static_cast<TxKind>(i);
    if (name == tx_kind_name(k)) return k;
  }
  throw std::runtime_error("unknown transaction kind: " + std::string(name));
}

}  // namespace

GenesisConfig GenesisConfig::parse(const SectionedFile& file) {
  GenesisConfig cfg;

  if (auto v = file.value("params", "attendance_threshold_percent"))
    cfg.attendance_threshold_percent = static_cast<uint32_t>(std::stoul(*v));
  if (auto v = file.value("params", "f")) cfg.fault_bound = static_cast<uint32_t>(std::stoul(*v));
  if (auto v = file.value("params", "grade_scale")) {
    cfg.grade_scale = split_tokens(*v);
    if (cfg.grade_scale.empty()) throw std::runtime_error("grade_scale is empty");
  }
  if (cfg.attendance_threshold_percent > 100)
    throw std::runtime_error("attendance_threshold_percent must be <= 100");

  if (const auto* s = file.find("members")) {
    for (const auto& line : s->lines) {
      auto toks = split_tokens(line.key.empty() ? line.value : line.key + " " + line.value);
      if (toks.size() != 2)
        throw std::runtime_error("members line " + std::to_string(line.line_no) +
                                 ": want '<kind> <hex public key>'");
      GenesisMember m;
      m.kind = member_kind_from_name(toks[0]);
      m.node_public_key = PublicKey::from_hex_string(toks[1]);
      cfg.members.push_back(m);
    }
  }

  if (const auto* s = file.find("identities")) {
    for (const auto& line : s->lines) {
      auto toks = split_tokens(line.key.empty() ? line.value : line.key + " " + line.value);
      if (toks.size() != 3)
        throw std::runtime_error("identities line " + std::to_string(line.line_no) +
                                 ": want '<role> <hex public key> <hex identity hash>'");
      GenesisIdentity id;
      id.role = role_from_name(toks[0]);
      id.public_key = PublicKey::from_hex_string(toks[1]);
      id.real_identity_hash = Digest32::from_hex_string(toks[2]);
      cfg.identities.push_back(id);
    }
  }

  if (const auto* s = file.find("permissions")) {
    for (const auto& line : s->lines) {
      if (line.key.empty())
        throw std::runtime_error("permissions line " + std::to_string(line.line_no) +
                                 ": want '<kind> = <roles...>'");
      std::set<Role> roles;
      for (const auto& tok : split_tokens(line.value)) roles.insert(role_from_name(tok));
      cfg.permissions[tx_kind_from_name(line.key)] = roles;
    }
  }

  return cfg;
}

GenesisConfig GenesisConfig::load(const std::string& path) {
  return parse(SectionedFile::load(path));
}

std::string GenesisConfig::to_text() const {
  std::ostringstream out;
  out << "[params]\n";
  out << "attendance_threshold_percent = " << attendance_threshold_percent << "\n";
  out << "f = " << fault_bound << "\n";
  out << "grade_scale =";
  for (const auto& g : grade_scale) out << " " << g;
  out << "\n\n[members]\n";
  for (const auto& m : members)
    out << member_kind_name(m.kind) << " " << m.node_public_key.hex() << "\n";
  out << "\n[identities]\n";
  for (const auto& id : identities)
    out << role_name(id.role) << " " << id.public_key.hex() << " " << id.real_identity_hash.hex()
        << "\n";
  out << "\n[permissions]\n";
  for (const auto& [kind, roles] : permissions) {
    out << tx_kind_name(kind) << " =";
    for (Role r : roles) out << " " << role_name(r);
    out << "\n";
  }
  return out.str();
}

}  // namespace examchain
