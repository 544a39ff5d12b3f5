#include "quadpairs/errors.hpp"
#include "quadpairs/minuscule.hpp"
#include "quadpairs/mt_decision.hpp"

#include <doctest.h>

#include <cstdint>
#include <set>

using namespace qp;

namespace {

// Independent membership scan for the set where Pink's criterion is silent:
// 2g an odd power m^k (k >= 3 odd, m >= 2) or binomial(2m, m) with m >= 3 odd.
std::set<long> pink_inconclusive_oracle(long g_max) {
  const std::uint64_t limit = 2 * static_cast<std::uint64_t>(g_max);
  std::set<long> out;
  for (std::uint64_t m = 2; m * m * m <= limit; ++m)
    for (unsigned k = 3;; k += 2) {
      std::uint64_t p = 1;
      for (unsigned i = 0; i < k && p <= limit; ++i) p *= m;
      if (p > limit) break;
      if (p % 2 == 0) out.insert(static_cast<long>(p / 2));
    }
  // Pascal's triangle row by row
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t n = 1; n <= 40; ++n) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = next;
    if (n % 2 == 0 && (n / 2) % 2 == 1 && n / 2 >= 3 && row[n / 2] <= limit)
      out.insert(static_cast<long>(row[n / 2] / 2));
  }
  return out;
}

MtVerdict check(long g, long s, EndoType e) { return mt_check({BigInt(g), BigInt(s), e}); }

using Pair = std::tuple<long, long, int, long>;

std::vector<Pair> as_tuples(const std::vector<Witness>& ws) {
  std::vector<Pair> out;
  for (const auto& w : ws) out.emplace_back(w.g.get_si(), w.s.get_si(), w.family, w.value);
  return out;
}

} // namespace

TEST_CASE("pink_gate examples") {
  auto r4 = pink_gate(BigInt(4));
  CHECK_FALSE(r4.proves);
  CHECK(r4.kind == "odd-power");
  CHECK(r4.base == 2);
  CHECK(r4.exponent == 3u);

  auto r10 = pink_gate(BigInt(10));
  CHECK_FALSE(r10.proves);
  CHECK(r10.kind == "central-binomial");
  CHECK(r10.base == 3);

  CHECK(pink_gate(BigInt(5)).proves);
  CHECK_THROWS_AS(pink_gate(BigInt(0)), PreconditionError);
}

TEST_CASE("pink_gate agrees with the brute-force oracle") {
  const auto oracle = pink_inconclusive_oracle(5000);
  for (long g = 1; g <= 5000; ++g) {
    CAPTURE(g);
    CHECK(pink_gate(BigInt(g)).proves == (oracle.count(g) == 0));
  }
  const std::set<long> small(oracle.begin(), oracle.upper_bound(500));
  CHECK(small == std::set<long>{4, 10, 16, 32, 64, 108, 126, 256, 500});
}

TEST_CASE("mt_check examples") {
  auto v = check(10, 6, EndoType::TrivialZ);
  CHECK(v.status == MtStatus::ExceptionalCase);
  REQUIRE(v.witness);
  CHECK(v.witness->family == 1);
  CHECK(v.witness->parameter == "r");
  CHECK(v.witness->value == 3);
  CHECK_FALSE(v.target_group);

  v = check(10, 4, EndoType::TrivialZ);
  CHECK(v.status == MtStatus::ProvedByMainTheorem);
  CHECK(v.target_group == "GSp_20");

  v = check(16, 8, EndoType::TrivialZ);
  CHECK(v.status == MtStatus::ExceptionalCase);
  CHECK(v.witness->family == 2);
  CHECK(v.witness->value == 4);

  v = check(4, 1, EndoType::TrivialZ);
  CHECK(v.status == MtStatus::ProvedByMainTheorem);
  CHECK(v.target_group == "GSp_8");

  v = check(252, 140, EndoType::QuaternionII);
  CHECK(v.status == MtStatus::ExceptionalCase);
  CHECK(v.witness->family == 1);
  CHECK(v.witness->value == 5);

  v = check(5, 2, EndoType::TrivialZ);
  CHECK(v.status == MtStatus::ProvedByPink);
  CHECK(v.target_group == "GSp_10");

  v = check(6, 4, EndoType::QuaternionIII);
  CHECK(v.status == MtStatus::ExceptionalCase);
  CHECK(v.witness->value == 2);

  v = check(6, 2, EndoType::QuaternionIII);
  CHECK(v.status == MtStatus::ProvedByQuaternionTheorem);
  CHECK(v.target_group == "GSO_6");
  v = check(6, 2, EndoType::QuaternionII);
  CHECK(v.target_group == "GSp_6");
}

TEST_CASE("mt_check routes s = 0 to NotCovered unless Pink decides") {
  CHECK(check(4, 0, EndoType::TrivialZ).status == MtStatus::NotCovered);
  CHECK(check(5, 0, EndoType::TrivialZ).status == MtStatus::ProvedByPink);
  CHECK(check(5, 0, EndoType::QuaternionII).status == MtStatus::NotCovered);
}

TEST_CASE("mt_check validates queries") {
  try {
    check(7, 3, EndoType::QuaternionII);
    FAIL("expected QueryInvalidError");
  } catch (const QueryInvalidError& e) {
    CHECK(std::string(e.what()) == "Type II/III requires even s");
  }
  CHECK_THROWS_AS(check(4, 5, EndoType::TrivialZ), QueryInvalidError);
  CHECK_THROWS_AS(check(0, 0, EndoType::TrivialZ), QueryInvalidError);
  CHECK_THROWS_AS(check(4, -1, EndoType::TrivialZ), QueryInvalidError);
}

TEST_CASE("family-one discrepancy note") {
  for (long g : {84L, 126L}) {
    auto v = check(g, 70, EndoType::TrivialZ);
    CHECK(std::find(v.notes.begin(), v.notes.end(), kFamilyOneNote) != v.notes.end());
  }
  CHECK(check(84, 70, EndoType::TrivialZ).status == MtStatus::ProvedByPink);
  CHECK(check(126, 70, EndoType::TrivialZ).status == MtStatus::ExceptionalCase);
  CHECK(check(10, 6, EndoType::TrivialZ).notes.size() == 1); // only the Pink note
}

TEST_CASE("enumerate_exceptional examples") {
  CHECK(as_tuples(enumerate_exceptional(BigInt(300), EndoType::TrivialZ)) ==
        std::vector<Pair>{{10, 6, 1, 3},
                          {16, 8, 2, 4},
                          {16, 16, 2, 4},
                          {32, 16, 2, 5},
                          {32, 32, 2, 5},
                          {126, 70, 1, 5},
                          {256, 128, 2, 8},
                          {256, 256, 2, 8}});
  CHECK(enumerate_exceptional(BigInt(9), EndoType::TrivialZ).empty());
  auto big = as_tuples(enumerate_exceptional(BigInt(2000), EndoType::TrivialZ));
  CHECK(std::find(big.begin(), big.end(), Pair{1716, 924, 1, 7}) != big.end());
}

TEST_CASE("enumeration matches mt_check on every query") {
  for (EndoType e : {EndoType::TrivialZ, EndoType::QuaternionII, EndoType::QuaternionIII}) {
    std::set<std::pair<long, long>> listed;
    for (const auto& w : enumerate_exceptional(BigInt(600), e)) {
      CHECK(verify_witness(w, e));
      listed.insert({w.g.get_si(), w.s.get_si()});
    }
    std::set<std::pair<long, long>> found;
    for (long g = 1; g <= 600; ++g)
      for (long s = 1; s <= g; ++s) {
        if (e != EndoType::TrivialZ && s % 2) continue;
        auto v = check(g, s, e);
        if (v.status == MtStatus::ExceptionalCase) {
          CHECK(verify_witness(*v.witness, e));
          found.insert({g, s});
        }
      }
    CAPTURE(to_string(e));
    CHECK(found == listed);
  }
}

TEST_CASE("small toric dimension is never exceptional for End = Z") {
  long exceptional = 0;
  for (long g = 1; g <= 10000; ++g)
    for (long s = 1; s <= std::min(g, 5L); ++s)
      if (check(g, s, EndoType::TrivialZ).status == MtStatus::ExceptionalCase) ++exceptional;
  CHECK(exceptional == 0);
}

TEST_CASE("family polarity matches the duality sign of the underlying representation") {
  // Family 1 comes from (A_{2r-1}, w_r), family 2 from the spin representation
  // of B_{t+1} (dimension 2g) for End = Z and of B_t (dimension g) for II/III.
  for (EndoType e : {EndoType::TrivialZ, EndoType::QuaternionII, EndoType::QuaternionIII}) {
    const int expected = e == EndoType::QuaternionIII ? 1 : -1;
    for (const auto& w : enumerate_exceptional(BigInt(1) << 12, e)) {
      CAPTURE(to_string(e));
      CAPTURE(w.value);
      const int v = static_cast<int>(w.value);
      MinusculeRep rep = w.family == 1
                             ? make_minuscule_rep(CartanType::make(Family::A, 2 * v - 1), v)
                             : (e == EndoType::TrivialZ
                                    ? make_minuscule_rep(CartanType::make(Family::B, v + 1), v + 1)
                                    : make_minuscule_rep(CartanType::make(Family::B, v), v));
      CHECK(rep.sign == expected);
      CHECK(rep.dimension == (e == EndoType::TrivialZ ? BigInt(2 * w.g) : w.g));
    }
  }
}

TEST_CASE("endo and status labels") {
  CHECK(parse_endo("Z") == EndoType::TrivialZ);
  CHECK(parse_endo("QuaternionDefiniteTypeIII") == EndoType::QuaternionIII);
  CHECK_THROWS_AS(parse_endo("IV"), InvalidArgument);
  for (MtStatus s : {MtStatus::ProvedByPink, MtStatus::ExceptionalCase, MtStatus::NotCovered})
    CHECK(parse_status(to_string(s)) == s);
}
