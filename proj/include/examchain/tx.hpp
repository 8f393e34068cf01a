#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "examchain/codec.hpp"
#include "examchain/crypto.hpp"

namespace examchain {

enum class Role : uint8_t {
  kStudent = 0,
  kTeacher = 1,
  kPaperSetter = 2,
  kEvaluator = 3,
  kHeadOfDepartment = 4,
  kPrincipal = 5,
  kController = 6,
};
constexpr int kRoleCount = 7;
const char* role_name(Role r);
Role role_from_name(std::string_view name);  // throws std::invalid_argument

enum class MemberKind : uint8_t {
  kUniversity = 0,
  kAffiliatedCollege = 1,
  kAutonomousCollege = 2,
};
const char* member_kind_name(MemberKind k);
MemberKind member_kind_from_name(std::string_view name);

// The 13 transaction kinds. TrackAsset covers both asset registration and
// asset movement; the payload carries the action tag.
enum class TxKind : uint8_t {
  kRegisterIdentity = 0,
  kEnroll = 1,
  kRecordAttendance = 2,
  kIssueHallTicket = 3,
  kRedeemHallTicket = 4,
  kCommitQuestionBank = 5,
  kGenerateExamPaper = 6,
  kTrackAsset = 7,
  kUpdateInventory = 8,
  kRecordGrade = 9,
  kIssueCertificate = 10,
  kAdmitMember = 11,
  kRevokeMember = 12,
};
constexpr int kTxKindCount = 13;
const char* tx_kind_name(TxKind k);

// ---- kind-specific payloads ----

struct RegisterIdentity {
  Digest32 real_identity_hash;
  PublicKey public_key;
  Role role;
};

struct Enroll {
  std::string course_id;
};

struct AttendanceMark {
  Address student;
  bool present;
};

struct RecordAttendance {
  std::string course_id;
  std::string session_id;
  std::vector<AttendanceMark> marks;
};

struct IssueHallTicket {
  Address student;
  std::string exam_id;
  std::string course_id;
};

struct RedeemHallTicket {
  Address student;
  std::string exam_id;
};

struct CommitQuestionBank {
  std::string exam_id;
  Digest32 bank_root;
  uint64_t bank_size = 0;
};

struct GenerateExamPaper {
  std::string exam_id;
  uint64_t question_count = 0;
};

enum class AssetAction : uint8_t { kRegister = 0, kMove = 1 };

struct TrackAsset {
  AssetAction action = AssetAction::kRegister;
  std::string asset_tag;
  std::string location_id;
  uint64_t timestamp = 0;  // movement only; registration enters the trace at 0
};

struct UpdateInventory {
  std::string item_code;
  int64_t delta = 0;
};

struct RecordGrade {
  Address student;
  std::string course_id;
  std::string exam_id;
  std::string grade;
};

struct IssueCertificate {
  Address student;
  std::string program;
};

struct AdmitMember {
  MemberKind member_kind = MemberKind::kAffiliatedCollege;
  PublicKey node_public_key;
};

struct RevokeMember {
  Address member_address;
};

using TxPayload =
    std::variant<RegisterIdentity, Enroll, RecordAttendance, IssueHallTicket, RedeemHallTicket,
                 CommitQuestionBank, GenerateExamPaper, TrackAsset, UpdateInventory, RecordGrade,
                 IssueCertificate, AdmitMember, RevokeMember>;

TxKind payload_kind(const TxPayload& payload);
Bytes encode_payload(const TxPayload& payload);
TxPayload decode_payload(TxKind kind, ByteView data);  // throws DecodeError

// Signed, role-authorized command. The signature covers the canonical
// encoding of (kind, sender, payload, nonce).
struct Transaction {
  TxKind kind = TxKind::kRegisterIdentity;
  Address sender;
  Bytes payload;
  uint64_t nonce = 0;
  Signature signature;

  Bytes signing_bytes() const;
  Bytes encode() const;
  static Transaction decode(ByteView data);  // throws DecodeError
  Digest32 hash() const;                     // over the full encoding
  TxPayload decoded_payload() const { return decode_payload(kind, payload); }
};

Transaction make_transaction(const KeyPair& sender_keys, uint64_t nonce, const TxPayload& payload);

}  // namespace examchain
