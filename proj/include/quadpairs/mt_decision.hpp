#pragma once

// Decision engine: for an abelian variety of dimension g with a bad
// semistable place of toric dimension s and a given endomorphism type, say
// which criterion settles the Mumford-Tate conjecture, or name the
// exceptional family the query falls into.

#include "quadpairs/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qp {

enum class EndoType { TrivialZ, QuaternionII, QuaternionIII };

std::string to_string(EndoType e); // "Z", "II", "III"
// Accepts Z, II, III and the long names TrivialZ, QuaternionIndefiniteTypeII,
// QuaternionDefiniteTypeIII. Throws InvalidArgument otherwise.
EndoType parse_endo(const std::string& text);

struct PinkResult {
  bool proves = false;
  std::string reason;
  // Set when inconclusive: 2g = base^exponent with odd exponent > 1
  // (kind "odd-power"), or 2g = binomial(2m, m) with odd m >= 3
  // (kind "central-binomial", base = m, exponent unset).
  std::string kind;
  BigInt base;
  std::optional<unsigned long> exponent;
};

// Pink's criterion. Requires g >= 1.
PinkResult pink_gate(const BigInt& g);

struct MtQuery {
  BigInt g;
  BigInt s; // 0: no bad semistable place known
  EndoType endo = EndoType::TrivialZ;
};

// Throws QueryInvalidError naming the violated condition.
void validate(const MtQuery& q);

enum class MtStatus {
  ProvedByPink,
  ProvedByMainTheorem,
  ProvedByQuaternionTheorem,
  ExceptionalCase,
  NotCovered,
};

std::string to_string(MtStatus s);
MtStatus parse_status(const std::string& text);

struct Witness {
  int family = 1;        // 1: central binomial family, 2: power-of-two family
  std::string parameter; // "r" or "t"
  long value = 0;
  BigInt g;
  BigInt s;
};

// True iff the witness satisfies its family's defining equations for endo.
bool verify_witness(const Witness& w, EndoType endo);

struct MtVerdict {
  MtStatus status = MtStatus::NotCovered;
  std::optional<std::string> target_group;
  std::optional<Witness> witness;
  std::vector<std::string> citations;
  std::string explanation;
  std::vector<std::string> notes;
  MtQuery query;
};

MtVerdict mt_check(const MtQuery& q);

// All exceptional (g, s) with g <= g_max for the endomorphism type, sorted
// by (g, s).
std::vector<Witness> enumerate_exceptional(const BigInt& g_max, EndoType endo);

// Note attached to queries with g in {84, 126}.
extern const char* const kFamilyOneNote;

} // namespace qp
