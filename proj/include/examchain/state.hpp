#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "examchain/config.hpp"
#include "examchain/membership.hpp"
#include "examchain/tx.hpp"

namespace examchain {

enum class TxError : uint8_t {
  kUnknownSender,
  kBadSignature,
  kBadNonce,
  kUnauthorizedRole,
  kMalformedPayload,
  kAddressAlreadyBound,
  kAlreadyEnrolled,
  kDuplicateSession,
  kDuplicateAttendanceMark,
  kStudentNotEnrolled,
  kAttendanceBelowThreshold,
  kTicketAlreadyIssued,
  kTicketNotIssued,
  kTicketAlreadyRedeemed,
  kBankAlreadyCommitted,
  kBankSizeTooLarge,
  kNoCommitment,
  kCountExceedsBankSize,
  kAssetAlreadyRegistered,
  kUnknownAsset,
  kNonMonotonicTimestamp,
  kNegativeInventory,
  kInventoryOverflow,
  kInvalidGrade,
  kNoRedeemedTicket,
  kDuplicateGrade,
  kNoGrades,
  kDuplicateCertificate,
  kNonUniversitySender,
  kDuplicateMember,
  kUniversityExists,
  kUnknownMember,
  kCannotRevokeUniversity,
  kWouldBreakQuorum,
};
const char* tx_error_name(TxError e);

struct IdentityRecord {
  PublicKey public_key;
  Role role = Role::kStudent;
  Digest32 real_identity_hash;
};

struct EnrollmentRecord {
  uint64_t enrolled_at_height = 0;
};

struct AttendanceRecord {
  uint64_t sessions_attended = 0;
  uint64_t sessions_held = 0;
};

enum class TicketStatus : uint8_t { kIssued = 0, kRedeemed = 1 };

struct HallTicket {
  TicketStatus status = TicketStatus::kIssued;
  std::string course_id;
  uint64_t issued_at_height = 0;
  uint64_t redeemed_at_height = 0;
};

struct BankCommitment {
  Digest32 bank_root;
  uint64_t bank_size = 0;
  uint64_t committed_at_height = 0;
};

struct GradeRecord {
  std::string grade;
  uint64_t recorded_at_height = 0;
};

struct Certificate {
  Digest32 certificate_id;
  Address student;
  std::string program;
  Digest32 grades_root;
  uint64_t issued_at_height = 0;
  Address issuer;

  Bytes id_signing_bytes() const;  // fields without the id; hash = certificate_id
  Bytes encode() const;            // full record, used for byte-wise comparison
  static Certificate decode(ByteView data);
};

struct AssetTraceEntry {
  std::string location_id;
  uint64_t timestamp = 0;
};

// Deterministic materialized state. Every container is an ordered map so
// state_root enumeration and replica comparison never depend on memory
// layout.
struct WorldState {
  uint32_t attendance_threshold_percent = 75;
  uint32_t fault_bound = 1;
  std::vector<std::string> grade_scale;
  PermissionMatrix permissions;
  Address university_address;

  std::map<Address, IdentityRecord> identities;
  std::map<Address, MemberRecord> members;
  uint64_t next_member_seq = 0;
  std::map<std::pair<Address, std::string>, EnrollmentRecord> enrollments;
  std::map<std::pair<Address, std::string>, AttendanceRecord> attendance;  // (student, course)
  std::set<std::pair<std::string, std::string>> attendance_sessions;       // (course, session)
  std::map<std::pair<Address, std::string>, HallTicket> hall_tickets;      // (student, exam)
  std::map<std::string, BankCommitment> question_commitments;
  std::map<std::string, std::vector<uint64_t>> exam_papers;
  std::map<std::tuple<Address, std::string, std::string>, GradeRecord> grades;
  std::map<Digest32, Certificate> certificates;
  std::map<std::pair<Address, std::string>, Digest32> certificate_index;  // (student, program)
  std::map<std::string, std::vector<AssetTraceEntry>> assets;
  std::map<std::string, int64_t> inventory;
  std::map<Address, uint64_t> nonces;  // next expected per sender

  uint64_t nonce_of(const Address& sender) const;
  std::vector<const MemberRecord*> ordered_members() const;  // by member_seq
};

struct GenesisError : std::runtime_error {
  explicit GenesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Initial WorldState from a genesis config. Throws GenesisError on an empty
/// roster, a missing controller identity, or a roster without exactly one
/// university.
WorldState build_genesis_state(const GenesisConfig& config);

/// Applies one transaction at `height`. Returns the rejection reason, or
/// nullopt once the state mutation is complete. A rejected transaction
/// leaves the state byte-identical.
std::optional<TxError> apply_transaction(WorldState& state, const Transaction& tx,
                                         uint64_t height);

/// Merkle root over every state entry in canonical key order.
Digest32 state_root(const WorldState& state);

/// Deterministic exam-paper selection: Fisher-Yates over [0, bank_size)
/// keyed by sha256(bank_root || exam_id || be64(commit_height)), draw i
/// taken from the first 8 bytes of sha256(seed || be64(counter)).
std::vector<uint64_t> exam_paper_selection(const Digest32& bank_root, const std::string& exam_id,
                                           uint64_t commit_height, uint64_t bank_size,
                                           uint64_t question_count);

/// Root over one student's grade records in (course_id, exam_id) order.
Digest32 grades_root_for(const WorldState& state, const Address& student);

enum class CertVerdict : uint8_t { kAccept, kUnknownId, kFieldMismatch, kGradesRootMismatch };
const char* cert_verdict_name(CertVerdict v);

CertVerdict verify_certificate(const WorldState& state, const Digest32& certificate_id,
                               const Certificate& presented);

constexpr uint64_t kMaxBankSize = 1'000'000;

}  // namespace examchain
