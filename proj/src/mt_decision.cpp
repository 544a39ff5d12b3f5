#include "quadpairs/mt_decision.hpp"

#include "quadpairs/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qp {

const char* const kFamilyOneNote =
    "r=5 gives (g,s)=(126,70); (84,70) does not satisfy the family-1 equations";

namespace {

const char* const kPinkCitation =
    "Pink: the conjecture holds when End(A) = Z and 2g is neither an odd power nor a "
    "central binomial coefficient binomial(2m,m) with m odd";
const char* const kMainCitation =
    "toric-dimension criterion for End(A) = Z: a bad semistable place with toric dimension s "
    "outside the exceptional families forces the group GSp_2g";
const char* const kQuaternionCitation =
    "toric-dimension criterion for quaternion endomorphism algebras with centre Q (s even)";

BigInt family1_g(long r, EndoType endo) {
  const BigInt c = binomial(2 * static_cast<unsigned long>(r), static_cast<unsigned long>(r));
  return endo == EndoType::TrivialZ ? BigInt(c / 2) : c;
}

BigInt family1_s(long r, EndoType endo) {
  const BigInt c = binomial(2 * static_cast<unsigned long>(r) - 2, static_cast<unsigned long>(r) - 1);
  return endo == EndoType::TrivialZ ? c : BigInt(2 * c);
}

bool family1_r_ok(long r, EndoType endo) {
  if (endo == EndoType::QuaternionIII) return r >= 2 && r % 2 == 0;
  return r >= 3 && r % 2 == 1;
}

bool family2_t_ok(long t, EndoType endo) {
  switch (endo) {
  case EndoType::TrivialZ: return t >= 4 && (t % 4 == 0 || t % 4 == 1);
  case EndoType::QuaternionII: return t >= 5 && (t % 4 == 1 || t % 4 == 2);
  case EndoType::QuaternionIII: return t >= 4 && (t % 4 == 0 || t % 4 == 3);
  }
  return false;
}

std::string group_label(const char* name, const BigInt& n) { return name + ("_" + to_string(n)); }

std::optional<Witness> find_family1(const BigInt& g, const BigInt& s, EndoType endo) {
  for (long r = 2;; ++r) {
    const BigInt gr = family1_g(r, endo);
    if (gr > g) return std::nullopt;
    if (gr == g && family1_r_ok(r, endo) && family1_s(r, endo) == s)
      return Witness{1, "r", r, g, s};
  }
}

std::optional<Witness> find_family2(const BigInt& g, const BigInt& s) {
  auto t = exact_log2(g);
  if (!t) return std::nullopt;
  if (s != g && 2 * s != g) return std::nullopt;
  return Witness{2, "t", static_cast<long>(*t), g, s};
}

} // namespace

std::string to_string(EndoType e) {
  switch (e) {
  case EndoType::TrivialZ: return "Z";
  case EndoType::QuaternionII: return "II";
  case EndoType::QuaternionIII: return "III";
  }
  return "?";
}

EndoType parse_endo(const std::string& text) {
  if (text == "Z" || text == "TrivialZ") return EndoType::TrivialZ;
  if (text == "II" || text == "QuaternionIndefiniteTypeII") return EndoType::QuaternionII;
  if (text == "III" || text == "QuaternionDefiniteTypeIII") return EndoType::QuaternionIII;
  throw InvalidArgument("unknown endomorphism type '" + text + "' (expected Z, II or III)");
}

std::string to_string(MtStatus s) {
  switch (s) {
  case MtStatus::ProvedByPink: return "ProvedByPink";
  case MtStatus::ProvedByMainTheorem: return "ProvedByMainTheorem";
  case MtStatus::ProvedByQuaternionTheorem: return "ProvedByQuaternionTheorem";
  case MtStatus::ExceptionalCase: return "ExceptionalCase";
  case MtStatus::NotCovered: return "NotCovered";
  }
  return "?";
}

MtStatus parse_status(const std::string& text) {
  for (MtStatus s : {MtStatus::ProvedByPink, MtStatus::ProvedByMainTheorem,
                     MtStatus::ProvedByQuaternionTheorem, MtStatus::ExceptionalCase,
                     MtStatus::NotCovered})
    if (to_string(s) == text) return s;
  throw InvalidArgument("unknown verdict status '" + text + "'");
}

PinkResult pink_gate(const BigInt& g) {
  if (g < 1) throw PreconditionError("pink_gate requires g >= 1");
  const BigInt n = 2 * g;
  PinkResult r;
  for (unsigned long k = 3; BigInt(1) << k <= n; k += 2) {
    if (auto m = exact_root(n, k)) {
      r.kind = "odd-power";
      r.base = *m;
      r.exponent = k;
      r.reason = "2g = " + to_string(n) + " = " + to_string(*m) + "^" + std::to_string(k);
      return r;
    }
  }
  for (unsigned long m = 3;; m += 2) {
    const BigInt c = binomial(2 * m, m);
    if (c > n) break;
    if (c == n) {
      r.kind = "central-binomial";
      r.base = m;
      r.reason = "2g = " + to_string(n) + " = binomial(" + std::to_string(2 * m) + "," +
                 std::to_string(m) + ")";
      return r;
    }
  }
  r.proves = true;
  r.reason = "2g = " + to_string(n) + " is neither an odd power nor binomial(2m,m) with m odd";
  return r;
}

void validate(const MtQuery& q) {
  if (q.g < 1) throw QueryInvalidError("g must be >= 1");
  if (q.s < 0 || q.s > q.g) throw QueryInvalidError("s must satisfy 0 <= s <= g");
  if (q.endo != EndoType::TrivialZ && q.s % 2 != 0)
    throw QueryInvalidError("Type II/III requires even s");
}

bool verify_witness(const Witness& w, EndoType endo) {
  if (w.family == 1) {
    return w.parameter == "r" && family1_r_ok(w.value, endo) && family1_g(w.value, endo) == w.g &&
           family1_s(w.value, endo) == w.s;
  }
  if (w.family == 2) {
    return w.parameter == "t" && family2_t_ok(w.value, endo) &&
           w.g == pow2(static_cast<unsigned long>(w.value)) && (w.s == w.g || 2 * w.s == w.g);
  }
  return false;
}

MtVerdict mt_check(const MtQuery& q) {
  validate(q);
  MtVerdict v;
  v.query = q;
  const bool z = q.endo == EndoType::TrivialZ;
  if (z && (q.g == 84 || q.g == 126)) v.notes.push_back(kFamilyOneNote);

  if (z) {
    const PinkResult pink = pink_gate(q.g);
    if (pink.proves) {
      v.status = MtStatus::ProvedByPink;
      v.target_group = group_label("GSp", 2 * q.g);
      v.citations.push_back(kPinkCitation);
      v.explanation = "Pink's criterion applies: " + pink.reason;
      return v;
    }
    v.notes.push_back("Pink's criterion is inconclusive: " + pink.reason);
  }

  if (q.s == 0) {
    v.status = MtStatus::NotCovered;
    v.explanation = "no bad semistable place is known (s = 0); the toric-dimension criteria do "
                    "not apply";
    return v;
  }

  std::optional<Witness> w = find_family1(q.g, q.s, q.endo);
  if (!w) {
    if (auto w2 = find_family2(q.g, q.s); w2 && family2_t_ok(w2->value, q.endo)) w = w2;
  }
  if (w) {
    if (!verify_witness(*w, q.endo)) throw std::logic_error("emitted witness fails its equations");
    v.status = MtStatus::ExceptionalCase;
    v.witness = w;
    v.citations.push_back(z ? kMainCitation : kQuaternionCitation);
    v.explanation = "not proved by these theorems: (g, s) lies in exceptional family " +
                    std::to_string(w->family) + " with " + w->parameter + "=" +
                    std::to_string(w->value);
    return v;
  }

  v.citations.push_back(z ? kMainCitation : kQuaternionCitation);
  switch (q.endo) {
  case EndoType::TrivialZ:
    v.status = MtStatus::ProvedByMainTheorem;
    v.target_group = group_label("GSp", 2 * q.g);
    break;
  case EndoType::QuaternionII:
    v.status = MtStatus::ProvedByQuaternionTheorem;
    v.target_group = group_label("GSp", q.g);
    break;
  case EndoType::QuaternionIII:
    v.status = MtStatus::ProvedByQuaternionTheorem;
    v.target_group = group_label("GSO", q.g);
    break;
  }
  v.explanation = "(g, s) avoids every exceptional family for End type " + to_string(q.endo);
  return v;
}

std::vector<Witness> enumerate_exceptional(const BigInt& g_max, EndoType endo) {
  if (g_max < 1) throw PreconditionError("g_max must be >= 1");
  std::vector<Witness> out;
  for (long r = 2;; ++r) {
    const BigInt g = family1_g(r, endo);
    if (g > g_max) break;
    if (family1_r_ok(r, endo)) out.push_back({1, "r", r, g, family1_s(r, endo)});
  }
  for (long t = 1;; ++t) {
    const BigInt g = pow2(static_cast<unsigned long>(t));
    if (g > g_max) break;
    if (!family2_t_ok(t, endo)) continue;
    out.push_back({2, "t", t, g, g / 2});
    out.push_back({2, "t", t, g, g});
  }
  std::sort(out.begin(), out.end(), [](const Witness& a, const Witness& b) {
    return std::tie(a.g, a.s) < std::tie(b.g, b.s);
  });
  for (const auto& w : out)
    if (!verify_witness(w, endo)) throw std::logic_error("enumerated witness fails its equations");
  return out;
}

} // namespace qp
