#include "examchain/tx.hpp"

#include <stdexcept>

namespace examchain {

const char* role_name(Role r) {
  switch (r) {
    case Role::kStudent: return "student";
    case Role::kTeacher: return "teacher";
    case Role::kPaperSetter: return "paper_setter";
    case Role::kEvaluator: return "evaluator";
    case Role::kHeadOfDepartment: return "head_of_department";
    case Role::kPrincipal: return "principal";
    case Role::kController: return "controller";
  }
  return "?";
}

Role role_from_name(std::string_view name) {
  for (int i = 0; i < kRoleCount; ++i) {
    Role r = static_cast<Role>(i);
    if (name == role_name(r)) return r;
  }
  throw std::invalid_argument("unknown role: " + std::string(name));
}

const char* member_kind_name(MemberKind k) {
  switch (k) {
    case MemberKind::kUniversity: return "university";
    case MemberKind::kAffiliatedCollege: return "affiliated_college";
    case MemberKind::kAutonomousCollege: return "autonomous_college";
  }
  return "?";
}

MemberKind member_kind_from_name(std::string_view name) {
  for (int i = 0; i < 3; ++i) {
    MemberKind k = static_cast<MemberKind>(i);
    if (name == member_kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown member kind: " + std::string(name));
}

const char* tx_kind_name(TxKind k) {
  switch (k) {
    case TxKind::kRegisterIdentity: return "register_identity";
    case TxKind::kEnroll: return "enroll";
    case TxKind::kRecordAttendance: return "record_attendance";
    case TxKind::kIssueHallTicket: return "issue_hall_ticket";
    case TxKind::kRedeemHallTicket: return "redeem_hall_ticket";
    case TxKind::kCommitQuestionBank: return "commit_question_bank";
    case TxKind::kGenerateExamPaper: return "generate_exam_paper";
    case TxKind::kTrackAsset: return "track_asset";
    case TxKind::kUpdateInventory: return "update_inventory";
    case TxKind::kRecordGrade: return "record_grade";
    case TxKind::kIssueCertificate: return "issue_certificate";
    case TxKind::kAdmitMember: return "admit_member";
    case TxKind::kRevokeMember: return "revoke_member";
  }
  return "?";
}

TxKind payload_kind(const TxPayload& payload) {
  return static_cast<TxKind>(payload.index());
}

namespace {

Role decode_role(uint8_t v) {
  if (v >= kRoleCount) throw DecodeError("bad role value");
  return static_cast<Role>(v);
}

MemberKind decode_member_kind(uint8_t v) {
  if (v > 2) throw DecodeError("bad member kind value");
  return static_cast<MemberKind>(v);
}

struct PayloadEncoder {
  Encoder& enc;

  void operator()(const RegisterIdentity& p) {
    enc.put_fixed(p.real_identity_hash);
    enc.put_bytes(p.public_key.view());
    enc.put_u8(static_cast<uint8_t>(p.role));
  }
  void operator()(const Enroll& p) { enc.put_string(p.course_id); }
  void operator()(const RecordAttendance& p) {
    enc.put_string(p.course_id);
    enc.put_string(p.session_id);
    enc.put_u32(static_cast<uint32_t>(p.marks.size()));
    for (const auto& m : p.marks) {
      enc.put_fixed(m.student);
      enc.put_u8(m.present ? 1 : 0);
    }
  }
  void operator()(const IssueHallTicket& p) {
    enc.put_fixed(p.student);
    enc.put_string(p.exam_id);
    enc.put_string(p.course_id);
  }
  void operator()(const RedeemHallTicket& p) {
    enc.put_fixed(p.student);
    enc.put_string(p.exam_id);
  }
  void operator()(const CommitQuestionBank& p) {
    enc.put_string(p.exam_id);
    enc.put_fixed(p.bank_root);
    enc.put_u64(p.bank_size);
  }
  void operator()(const GenerateExamPaper& p) {
    enc.put_string(p.exam_id);
    enc.put_u64(p.question_count);
  }
  void operator()(const TrackAsset& p) {
    enc.put_u8(static_cast<uint8_t>(p.action));
    enc.put_string(p.asset_tag);
    enc.put_string(p.location_id);
    if (p.action == AssetAction::kMove) enc.put_u64(p.timestamp);
  }
  void operator()(const UpdateInventory& p) {
    enc.put_string(p.item_code);
    enc.put_i64(p.delta);
  }
  void operator()(const RecordGrade& p) {
    enc.put_fixed(p.student);
    enc.put_string(p.course_id);
    enc.put_string(p.exam_id);
    enc.put_string(p.grade);
  }
  void operator()(const IssueCertificate& p) {
    enc.put_fixed(p.student);
    enc.put_string(p.program);
  }
  void operator()(const AdmitMember& p) {
    enc.put_u8(static_cast<uint8_t>(p.member_kind));
    enc.put_bytes(p.node_public_key.view());
  }
  void operator()(const RevokeMember& p) { enc.put_fixed(p.member_address); }
};

}  // namespace

Bytes encode_payload(const TxPayload& payload) {
  Encoder enc;
  std::visit(PayloadEncoder{enc}, payload);
  return enc.take();
}

TxPayload decode_payload(TxKind kind, ByteView data) {
  Decoder dec(data);
  TxPayload out;
  switch (kind) {
    case TxKind::kRegisterIdentity: {
      RegisterIdentity p;
      p.real_identity_hash = dec.get_fixed<32>();
      p.public_key = PublicKey::from(dec.get_bytes());
      p.role = decode_role(dec.get_u8());
      out = p;
      break;
    }
    case TxKind::kEnroll:
      out = Enroll{dec.get_string()};
      break;
    case TxKind::kRecordAttendance: {
      RecordAttendance p;
      p.course_id = dec.get_string();
      p.session_id = dec.get_string();
      uint32_t n = dec.get_u32();
      p.marks.reserve(n);
      for (uint32_t i = 0; i < n; ++i) {
        AttendanceMark m;
        m.student = dec.get_fixed<20>();
        uint8_t flag = dec.get_u8();
        if (flag > 1) throw DecodeError("bad presence flag");
        m.present = flag == 1;
        p.marks.push_back(m);
      }
      out = p;
      break;
    }
    case TxKind::kIssueHallTicket: {
      IssueHallTicket p;
      p.student = dec.get_fixed<20>();
      p.exam_id = dec.get_string();
      p.course_id = dec.get_string();
      out = p;
      break;
    }
    case TxKind::kRedeemHallTicket: {
      RedeemHallTicket p;
      p.student = dec.get_fixed<20>();
      p.exam_id = dec.get_string();
      out = p;
      break;
    }
    case TxKind::kCommitQuestionBank: {
      CommitQuestionBank p;
      p.exam_id = dec.get_string();
      p.bank_root = dec.get_fixed<32>();
      p.bank_size = dec.get_u64();
      out = p;
      break;
    }
    case TxKind::kGenerateExamPaper: {
      GenerateExamPaper p;
      p.exam_id = dec.get_string();
      p.question_count = dec.get_u64();
      out = p;
      break;
    }
    case TxKind::kTrackAsset: {
      TrackAsset p;
      uint8_t action = dec.get_u8();
      if (action > 1) throw DecodeError("bad asset action");
      p.action = static_cast<AssetAction>(action);
      p.asset_tag = dec.get_string();
      p.location_id = dec.get_string();
      p.timestamp = p.action == AssetAction::kMove ? dec.get_u64() : 0;
      out = p;
      break;
    }
    case TxKind::kUpdateInventory: {
      UpdateInventory p;
      p.item_code = dec.get_string();
      p.delta = dec.get_i64();
      out = p;
      break;
    }
    case TxKind::kRecordGrade: {
      RecordGrade p;
      p.student = dec.get_fixed<20>();
      p.course_id = dec.get_string();
      p.exam_id = dec.get_string();
      p.grade = dec.get_string();
      out = p;
      break;
    }
    case TxKind::kIssueCertificate: {
      IssueCertificate p;
      p.student = dec.get_fixed<20>();
      p.program = dec.get_string();
      out = p;
      break;
    }
    case TxKind::kAdmitMember: {
      AdmitMember p;
      p.member_kind = decode_member_kind(dec.get_u8());
      p.node_public_key = PublicKey::from(dec.get_bytes());
      out = p;
      break;
    }
    case TxKind::kRevokeMember:
      out = RevokeMember{dec.get_fixed<20>()};
      break;
    default:
      throw DecodeError("bad tx kind");
  }
  dec.finish();
  return out;
}

Bytes Transaction::signing_bytes() const {
  Encoder enc;
  enc.put_u8(static_cast<uint8_t>(kind));
  enc.put_fixed(sender);
  enc.put_bytes(payload);
  enc.put_u64(nonce);
  return enc.take();
}

Bytes Transaction::encode() const {
  Bytes out = signing_bytes();
  out.insert(out.end(), signature.bytes.begin(), signature.bytes.end());
  return out;
}

Transaction Transaction::decode(ByteView data) {
  Decoder dec(data);
  Transaction tx;
  uint8_t kind = dec.get_u8();
  if (kind >= kTxKindCount) throw DecodeError("bad tx kind");
  tx.kind = static_cast<TxKind>(kind);
  tx.sender = dec.get_fixed<20>();
  tx.payload = dec.get_bytes();
  tx.nonce = dec.get_u64();
  tx.signature = dec.get_fixed<64>();
  dec.finish();
  // Payload must itself decode canonically.
  decode_payload(tx.kind, tx.payload);
  return tx;
}

Digest32 Transaction::hash() const {
  return examchain::hash(encode());
}

Transaction make_transaction(const KeyPair& sender_keys, uint64_t nonce,
                             const TxPayload& payload) {
  Transaction tx;
  tx.kind = payload_kind(payload);
  tx.sender = derive_address(sender_keys.public_key);
  tx.payload = encode_payload(payload);
  tx.nonce = nonce;
  tx.signature = sign(sender_keys.private_key, tx.signing_bytes());
  return tx;
}

}  // namespace examchain
