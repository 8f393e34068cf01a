#include "examchain/state.hpp"

#include <algorithm>

#include "examchain/merkle.hpp"

namespace examchain {

const char* tx_error_name(TxError e) {
  switch (e) {
    case TxError::kUnknownSender: return "unknown-sender";
    case TxError::kBadSignature: return "bad-signature";
    case TxError::kBadNonce: return "bad-nonce";
    case TxError::kUnauthorizedRole: return "unauthorized-role";
    case TxError::kMalformedPayload: return "malformed-payload";
    case TxError::kAddressAlreadyBound: return "address-already-bound";
    case TxError::kAlreadyEnrolled: return "already-enrolled";
    case TxError::kDuplicateSession: return "duplicate-session";
    case TxError::kDuplicateAttendanceMark: return "duplicate-attendance-mark";
    case TxError::kStudentNotEnrolled: return "student-not-enrolled";
    case TxError::kAttendanceBelowThreshold: return "attendance-below-threshold";
    case TxError::kTicketAlreadyIssued: return "already-issued";
    case TxError::kTicketNotIssued: return "not-issued";
    case TxError::kTicketAlreadyRedeemed: return "already-redeemed";
    case TxError::kBankAlreadyCommitted: return "bank-already-committed";
    case TxError::kBankSizeTooLarge: return "bank-size-too-large";
    case TxError::kNoCommitment: return "no-commitment";
    case TxError::kCountExceedsBankSize: return "count-exceeds-bank-size";
    case TxError::kAssetAlreadyRegistered: return "asset-already-registered";
    case TxError::kUnknownAsset: return "unknown-asset";
    case TxError::kNonMonotonicTimestamp: return "non-monotonic-timestamp";
    case TxError::kNegativeInventory: return "negative-inventory";
    case TxError::kInventoryOverflow: return "inventory-overflow";
    case TxError::kInvalidGrade: return "invalid-grade";
    case TxError::kNoRedeemedTicket: return "no-redeemed-ticket";
    case TxError::kDuplicateGrade: return "duplicate-grade";
    case TxError::kNoGrades: return "no-grades";
    case TxError::kDuplicateCertificate: return "duplicate-certificate";
    case TxError::kNonUniversitySender: return "non-university-sender";
    case TxError::kDuplicateMember: return "duplicate-member";
    case TxError::kUniversityExists: return "university-exists";
    case TxError::kUnknownMember: return "unknown-member";
    case TxError::kCannotRevokeUniversity: return "cannot-revoke-university";
    case TxError::kWouldBreakQuorum: return "would-break-quorum";
  }
  return "?";
}

const char* cert_verdict_name(CertVerdict v) {
  switch (v) {
    case CertVerdict::kAccept: return "accept";
    case CertVerdict::kUnknownId: return "unknown-id";
    case CertVerdict::kFieldMismatch: return "field-mismatch";
    case CertVerdict::kGradesRootMismatch: return "grades-root-mismatch";
  }
  return "?";
}

Bytes Certificate::id_signing_bytes() const {
  Encoder enc;
  enc.put_fixed(student);
  enc.put_string(program);
  enc.put_fixed(grades_root);
  enc.put_u64(issued_at_height);
  enc.put_fixed(issuer);
  return enc.take();
}

Bytes Certificate::encode() const {
  Encoder enc;
  enc.put_fixed(certificate_id);
  enc.put_raw(id_signing_bytes());
  return enc.take();
}

Certificate Certificate::decode(ByteView data) {
  Decoder dec(data);
  Certificate c;
  c.certificate_id = dec.get_fixed<32>();
  c.student = dec.get_fixed<20>();
  c.program = dec.get_string();
  c.grades_root = dec.get_fixed<32>();
  c.issued_at_height = dec.get_u64();
  c.issuer = dec.get_fixed<20>();
  dec.finish();
  return c;
}

uint64_t WorldState::nonce_of(const Address& sender) const {
  auto it = nonces.find(sender);
  return it == nonces.end() ? 0 : it->second;
}

std::vector<const MemberRecord*> WorldState::ordered_members() const {
  std::vector<const MemberRecord*> out;
  out.reserve(members.size());
  for (const auto& [addr, rec] : members) out.push_back(&rec);
  std::sort(out.begin(), out.end(),
            [](const MemberRecord* a, const MemberRecord* b) { return a->member_seq < b->member_seq; });
  return out;
}

WorldState build_genesis_state(const GenesisConfig& config) {
  if (config.members.empty()) throw GenesisError("empty member roster");

  WorldState state;
  state.attendance_threshold_percent = config.attendance_threshold_percent;
  state.fault_bound = config.fault_bound;
  state.grade_scale = config.grade_scale;
  state.permissions = config.permissions;

  size_t universities = 0;
  for (const GenesisMember& m : config.members) {
    MemberRecord rec;
    rec.member_address = derive_address(m.node_public_key);
    rec.kind = m.kind;
    rec.node_public_key = m.node_public_key;
    rec.admitted_at_height = 0;
    rec.member_seq = state.next_member_seq++;
    if (!state.members.emplace(rec.member_address, rec).second)
      throw GenesisError("duplicate member address " + rec.member_address.hex());
    if (m.kind == MemberKind::kUniversity) {
      ++universities;
      state.university_address = rec.member_address;
    }
  }
  if (universities != 1)
    throw GenesisError("roster must contain exactly one university, found " +
                       std::to_string(universities));

  bool have_controller = false;
  for (const GenesisIdentity& id : config.identities) {
    IdentityRecord rec{id.public_key, id.role, id.real_identity_hash};
    Address addr = derive_address(id.public_key);
    if (!state.identities.emplace(addr, rec).second)
      throw GenesisError("duplicate identity address " + addr.hex());
    have_controller |= id.role == Role::kController;
  }
  if (!have_controller) throw GenesisError("roster contains no controller identity");

  return state;
}

std::vector<uint64_t> exam_paper_selection(const Digest32& bank_root, const std::string& exam_id,
                                           uint64_t commit_height, uint64_t bank_size,
                                           uint64_t question_count) {
  Encoder seed_enc;
  seed_enc.put_fixed(bank_root);
  seed_enc.put_raw(to_bytes(exam_id));
  seed_enc.put_u64(commit_height);
  Digest32 seed = hash(seed_enc.bytes());

  std::vector<uint64_t> perm(bank_size);
  for (uint64_t i = 0; i < bank_size; ++i) perm[i] = i;

  uint64_t counter = 0;
  for (uint64_t i = bank_size; i > 1; --i) {
    Encoder draw;
    draw.put_fixed(seed);
    draw.put_u64(counter++);
    Digest32 d = hash(draw.bytes());
    uint64_t r = 0;
    for (int k = 0; k < 8; ++k) r = (r << 8) | d.bytes[k];
    std::swap(perm[i - 1], perm[r % i]);
  }
  perm.resize(question_count);
  return perm;
}

Digest32 grades_root_for(const WorldState& state, const Address& student) {
  std::vector<Digest32> leaves;
  auto it = state.grades.lower_bound({student, "", ""});
  for (; it != state.grades.end() && std::get<0>(it->first) == student; ++it) {
    Encoder enc;
    enc.put_string(std::get<1>(it->first));
    enc.put_string(std::get<2>(it->first));
    enc.put_string(it->second.grade);
    leaves.push_back(hash(enc.bytes()));
  }
  return merkle_root(leaves);
}

namespace {

struct TxHandler {
  WorldState& state;
  const Address& sender;
  uint64_t height;

  std::optional<TxError> operator()(const RegisterIdentity& p) {
    Address addr = derive_address(p.public_key);
    if (state.identities.contains(addr)) return TxError::kAddressAlreadyBound;
    state.identities[addr] = IdentityRecord{p.public_key, p.role, p.real_identity_hash};
    return std::nullopt;
  }

  std::optional<TxError> operator()(const Enroll& p) {
    auto key = std::pair{sender, p.course_id};
    if (state.enrollments.contains(key)) return TxError::kAlreadyEnrolled;
    state.enrollments[key] = EnrollmentRecord{height};
    return std::nullopt;
  }

  std::optional<TxError> operator()(const RecordAttendance& p) {
    if (state.attendance_sessions.contains({p.course_id, p.session_id}))
      return TxError::kDuplicateSession;
    std::set<Address> seen;
    for (const AttendanceMark& m : p.marks) {
      if (!seen.insert(m.student).second) return TxError::kDuplicateAttendanceMark;
      if (!state.enrollments.contains({m.student, p.course_id}))
        return TxError::kStudentNotEnrolled;
    }
    for (const AttendanceMark& m : p.marks) {
      AttendanceRecord& rec = state.attendance[{m.student, p.course_id}];
      rec.sessions_held += 1;
      if (m.present) rec.sessions_attended += 1;
    }
    state.attendance_sessions.insert({p.course_id, p.session_id});
    return std::nullopt;
  }

  std::optional<TxError> operator()(const IssueHallTicket& p) {
    if (!state.enrollments.contains({p.student, p.course_id})) return TxError::kStudentNotEnrolled;
    if (state.hall_tickets.contains({p.student, p.exam_id})) return TxError::kTicketAlreadyIssued;
    AttendanceRecord rec;
    if (auto it = state.attendance.find({p.student, p.course_id}); it != state.attendance.end())
      rec = it->second;
    // Exact integer comparison: attended/held >= threshold% without floats.
    if (rec.sessions_attended * 100 <
        rec.sessions_held * uint64_t{state.attendance_threshold_percent})
      return TxError::kAttendanceBelowThreshold;
    state.hall_tickets[{p.student, p.exam_id}] =
        HallTicket{TicketStatus::kIssued, p.course_id, height, 0};
    return std::nullopt;
  }

  std::optional<TxError> operator()(const RedeemHallTicket& p) {
    auto it = state.hall_tickets.find({p.student, p.exam_id});
    if (it == state.hall_tickets.end()) return TxError::kTicketNotIssued;
    if (it->second.status == TicketStatus::kRedeemed) return TxError::kTicketAlreadyRedeemed;
    it->second.status = TicketStatus::kRedeemed;
    it->second.redeemed_at_height = height;
    return std::nullopt;
  }

  std::optional<TxError> operator()(const CommitQuestionBank& p) {
    if (state.question_commitments.contains(p.exam_id)) return TxError::kBankAlreadyCommitted;
    if (p.bank_size > kMaxBankSize) return TxError::kBankSizeTooLarge;
    state.question_commitments[p.exam_id] = BankCommitment{p.bank_root, p.bank_size, height};
    return std::nullopt;
  }

  std::optional<TxError> operator()(const GenerateExamPaper& p) {
    auto it = state.question_commitments.find(p.exam_id);
    if (it == state.question_commitments.end()) return TxError::kNoCommitment;
    if (p.question_count > it->second.bank_size) return TxError::kCountExceedsBankSize;
    state.exam_papers[p.exam_id] =
        exam_paper_selection(it->second.bank_root, p.exam_id, it->second.committed_at_height,
                             it->second.bank_size, p.question_count);
    return std::nullopt;
  }

  std::optional<TxError> operator()(const TrackAsset& p) {
    if (p.action == AssetAction::kRegister) {
      if (state.assets.contains(p.asset_tag)) return TxError::kAssetAlreadyRegistered;
      state.assets[p.asset_tag] = {AssetTraceEntry{p.location_id, 0}};
      return std::nullopt;
    }
    auto it = state.assets.find(p.asset_tag);
    if (it == state.assets.end()) return TxError::kUnknownAsset;
    if (p.timestamp <= it->second.back().timestamp) return TxError::kNonMonotonicTimestamp;
    it->second.push_back(AssetTraceEntry{p.location_id, p.timestamp});
    return std::nullopt;
  }

  std::optional<TxError> operator()(const UpdateInventory& p) {
    int64_t current = 0;
    if (auto it = state.inventory.find(p.item_code); it != state.inventory.end())
      current = it->second;
    int64_t next = 0;
    if (__builtin_add_overflow(current, p.delta, &next)) return TxError::kInventoryOverflow;
    if (next < 0) return TxError::kNegativeInventory;
    state.inventory[p.item_code] = next;
    return std::nullopt;
  }

  std::optional<TxError> operator()(const RecordGrade& p) {
    if (std::find(state.grade_scale.begin(), state.grade_scale.end(), p.grade) ==
        state.grade_scale.end())
      return TxError::kInvalidGrade;
    auto ticket = state.hall_tickets.find({p.student, p.exam_id});
    if (ticket == state.hall_tickets.end() || ticket->second.status != TicketStatus::kRedeemed)
      return TxError::kNoRedeemedTicket;
    auto key = std::tuple{p.student, p.course_id, p.exam_id};
    if (state.grades.contains(key)) return TxError::kDuplicateGrade;
    state.grades[key] = GradeRecord{p.grade, height};
    return std::nullopt;
  }

  std::optional<TxError> operator()(const IssueCertificate& p) {
    if (state.certificate_index.contains({p.student, p.program}))
      return TxError::kDuplicateCertificate;
    auto first = state.grades.lower_bound({p.student, "", ""});
    if (first == state.grades.end() || std::get<0>(first->first) != p.student)
      return TxError::kNoGrades;
    Digest32 root = grades_root_for(state, p.student);
    Certificate cert;
    cert.student = p.student;
    cert.program = p.program;
    cert.grades_root = root;
    cert.issued_at_height = height;
    cert.issuer = sender;
    cert.certificate_id = hash(cert.id_signing_bytes());
    state.certificates[cert.certificate_id] = cert;
    state.certificate_index[{p.student, p.program}] = cert.certificate_id;
    return std::nullopt;
  }

  std::optional<TxError> operator()(const AdmitMember& p) {
    return admit_member(state, sender, p, height);
  }

  std::optional<TxError> operator()(const RevokeMember& p) {
    return revoke_member(state, sender, p);
  }
};

}  // namespace

std::optional<TxError> apply_transaction(WorldState& state, const Transaction& tx,
                                         uint64_t height) {
  auto identity = state.identities.find(tx.sender);
  if (identity == state.identities.end()) return TxError::kUnknownSender;
  if (!verify(identity->second.public_key, tx.signing_bytes(), tx.signature))
    return TxError::kBadSignature;
  if (tx.nonce != state.nonce_of(tx.sender)) return TxError::kBadNonce;

  auto allowed = state.permissions.find(tx.kind);
  if (allowed == state.permissions.end() || !allowed->second.contains(identity->second.role))
    return TxError::kUnauthorizedRole;

  TxPayload payload;
  try {
    payload = decode_payload(tx.kind, tx.payload);
  } catch (const DecodeError&) {
    return TxError::kMalformedPayload;
  }

  if (auto err = std::visit(TxHandler{state, tx.sender, height}, payload)) return err;

  state.nonces[tx.sender] = tx.nonce + 1;
  return std::nullopt;
}

namespace {

void leaf(std::vector<Digest32>& leaves, const Encoder& enc) {
  leaves.push_back(hash(enc.bytes()));
}

}  // namespace

Digest32 state_root(const WorldState& state) {
  std::vector<Digest32> leaves;

  {
    Encoder enc;
    enc.put_u8(1);
    enc.put_u32(state.attendance_threshold_percent);
    enc.put_u32(state.fault_bound);
    enc.put_u32(static_cast<uint32_t>(state.grade_scale.size()));
    for (const auto& g : state.grade_scale) enc.put_string(g);
    enc.put_u32(static_cast<uint32_t>(state.permissions.size()));
    for (const auto& [kind, roles] : state.permissions) {
      enc.put_u8(static_cast<uint8_t>(kind));
      enc.put_u32(static_cast<uint32_t>(roles.size()));
      for (Role r : roles) enc.put_u8(static_cast<uint8_t>(r));
    }
    enc.put_fixed(state.university_address);
    enc.put_u64(state.next_member_seq);
    leaf(leaves, enc);
  }
  for (const auto& [addr, rec] : state.identities) {
    Encoder enc;
    enc.put_u8(2);
    enc.put_fixed(addr);
    enc.put_bytes(rec.public_key.view());
    enc.put_u8(static_cast<uint8_t>(rec.role));
    enc.put_fixed(rec.real_identity_hash);
    leaf(leaves, enc);
  }
  for (const auto& [addr, rec] : state.members) {
    Encoder enc;
    enc.put_u8(3);
    enc.put_fixed(addr);
    enc.put_u8(static_cast<uint8_t>(rec.kind));
    enc.put_bytes(rec.node_public_key.view());
    enc.put_u64(rec.admitted_at_height);
    enc.put_u64(rec.member_seq);
    leaf(leaves, enc);
  }
  for (const auto& [key, rec] : state.enrollments) {
    Encoder enc;
    enc.put_u8(4);
    enc.put_fixed(key.first);
    enc.put_string(key.second);
    enc.put_u64(rec.enrolled_at_height);
    leaf(leaves, enc);
  }
  for (const auto& [key, rec] : state.attendance) {
    Encoder enc;
    enc.put_u8(5);
    enc.put_fixed(key.first);
    enc.put_string(key.second);
    enc.put_u64(rec.sessions_attended);
    enc.put_u64(rec.sessions_held);
    leaf(leaves, enc);
  }
  for (const auto& [course, session] : state.attendance_sessions) {
    Encoder enc;
    enc.put_u8(6);
    enc.put_string(course);
    enc.put_string(session);
    leaf(leaves, enc);
  }
  for (const auto& [key, rec] : state.hall_tickets) {
    Encoder enc;
    enc.put_u8(7);
    enc.put_fixed(key.first);
    enc.put_string(key.second);
    enc.put_u8(static_cast<uint8_t>(rec.status));
    enc.put_string(rec.course_id);
    enc.put_u64(rec.issued_at_height);
    enc.put_u64(rec.redeemed_at_height);
    leaf(leaves, enc);
  }
  for (const auto& [exam, rec] : state.question_commitments) {
    Encoder enc;
    enc.put_u8(8);
    enc.put_string(exam);
    enc.put_fixed(rec.bank_root);
    enc.put_u64(rec.bank_size);
    enc.put_u64(rec.committed_at_height);
    leaf(leaves, enc);
  }
  for (const auto& [exam, indices] : state.exam_papers) {
    Encoder enc;
    enc.put_u8(9);
    enc.put_string(exam);
    enc.put_u32(static_cast<uint32_t>(indices.size()));
    for (uint64_t ix : indices) enc.put_u64(ix);
    leaf(leaves, enc);
  }
  for (const auto& [key, rec] : state.grades) {
    Encoder enc;
    enc.put_u8(10);
    enc.put_fixed(std::get<0>(key));
    enc.put_string(std::get<1>(key));
    enc.put_string(std::get<2>(key));
    enc.put_string(rec.grade);
    enc.put_u64(rec.recorded_at_height);
    leaf(leaves, enc);
  }
  for (const auto& [id, cert] : state.certificates) {
    Encoder enc;
    enc.put_u8(11);
    enc.put_raw(cert.encode());
    leaf(leaves, enc);
  }
  for (const auto& [tag, trace] : state.assets) {
    Encoder enc;
    enc.put_u8(12);
    enc.put_string(tag);
    enc.put_u32(static_cast<uint32_t>(trace.size()));
    for (const AssetTraceEntry& e : trace) {
      enc.put_string(e.location_id);
      enc.put_u64(e.timestamp);
    }
    leaf(leaves, enc);
  }
  for (const auto& [item, qty] : state.inventory) {
    Encoder enc;
    enc.put_u8(13);
    enc.put_string(item);
    enc.put_i64(qty);
    leaf(leaves, enc);
  }
  for (const auto& [addr, nonce] : state.nonces) {
    Encoder enc;
    enc.put_u8(14);
    enc.put_fixed(addr);
    enc.put_u64(nonce);
    leaf(leaves, enc);
  }

  return merkle_root(leaves);
}

CertVerdict verify_certificate(const WorldState& state, const Digest32& certificate_id,
                               const Certificate& presented) {
  auto it = state.certificates.find(certificate_id);
  if (it == state.certificates.end()) return CertVerdict::kUnknownId;
  if (it->second.encode() != presented.encode()) return CertVerdict::kFieldMismatch;
  if (grades_root_for(state, it->second.student) != it->second.grades_root)
    return CertVerdict::kGradesRootMismatch;
  return CertVerdict::kAccept;
}

}  // namespace examchain
