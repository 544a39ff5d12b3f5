#include "quadpairs/errors.hpp"
#include "quadpairs/minuscule.hpp"

#include <doctest.h>

#include <set>

using namespace qp;

namespace {

struct TableRow {
  int j;
  BigInt dimension;
  int sign;
};

// Closed forms of the classical minuscule table: weights, dimensions and
// the congruence rules for the sign.
std::vector<TableRow> table_rows(const CartanType& t) {
  const int n = t.rank;
  const auto un = static_cast<unsigned long>(n);
  std::vector<TableRow> rows;
  switch (t.family) {
  case Family::A:
    for (int j = 1; j <= n; ++j)
      rows.push_back({j, binomial(un + 1, static_cast<unsigned long>(j)),
                      n == 2 * j - 1 ? (j % 2 == 0 ? 1 : -1) : 0});
    break;
  case Family::B:
    rows.push_back({n, pow2(un), (n % 4 == 0 || n % 4 == 3) ? 1 : -1});
    break;
  case Family::C:
    rows.push_back({1, BigInt(2 * n), -1});
    break;
  case Family::D: {
    const int spin = n % 2 == 1 ? 0 : (n % 4 == 0 ? 1 : -1);
    rows.push_back({1, BigInt(2 * n), 1});
    rows.push_back({n - 1, pow2(un - 1), spin});
    rows.push_back({n, pow2(un - 1), spin});
    break;
  }
  default:
    break;
  }
  return rows;
}

} // namespace

TEST_CASE("is_minuscule examples") {
  RootDatum c3(CartanType::make(Family::C, 3));
  CHECK(is_minuscule(c3, Weight::fundamental(3, 1)));

  RootDatum a3(CartanType::make(Family::A, 3));
  CHECK_FALSE(is_minuscule(a3, Weight({2, 0, 0})));

  RootDatum f4(CartanType::make(Family::F4));
  for (int j = 1; j <= 4; ++j) CHECK_FALSE(is_minuscule(f4, Weight::fundamental(4, j)));

  CHECK_THROWS_AS(is_minuscule(a3, Weight::zero(3)), PreconditionError);
  CHECK_THROWS_AS(is_minuscule(a3, Weight({1, -1, 0})), PreconditionError);
}

TEST_CASE("enumerate_minuscule examples") {
  auto b4 = enumerate_minuscule(CartanType::make(Family::B, 4));
  REQUIRE(b4.size() == 1);
  CHECK(b4[0].name == "Spin");
  CHECK(b4[0].dimension == 16);
  CHECK(b4[0].sign == 1);

  auto c5 = enumerate_minuscule(CartanType::make(Family::C, 5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].name == "Std");
  CHECK(c5[0].dimension == 10);
  CHECK(c5[0].sign == -1);

  auto d6 = enumerate_minuscule(CartanType::make(Family::D, 6));
  REQUIRE(d6.size() == 3);
  CHECK(d6[0].name == "Std");
  CHECK(d6[0].dimension == 12);
  CHECK(d6[0].sign == 1);
  CHECK(d6[1].name == "Spin-");
  CHECK(d6[2].name == "Spin+");
  for (int k : {1, 2}) {
    CHECK(d6[k].dimension == 32);
    CHECK(d6[k].sign == -1);
  }
}

TEST_CASE("duality_sign examples") {
  for (int n = 2; n <= 8; ++n) {
    RootDatum c(CartanType::make(Family::C, n));
    CHECK(duality_sign(c, Weight::fundamental(n, 1)) == -1);
  }
  CHECK(duality_sign(RootDatum(CartanType::make(Family::A, 3)), Weight::fundamental(3, 2)) == 1);
  CHECK(duality_sign(RootDatum(CartanType::make(Family::B, 5)), Weight::fundamental(5, 5)) == -1);
  RootDatum b3(CartanType::make(Family::B, 3));
  CHECK_THROWS_AS(duality_sign(b3, Weight::fundamental(3, 1)), PreconditionError);
}

TEST_CASE("classical table reproduced up to rank 12") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const int lo = f == Family::A ? 1 : (f == Family::D ? 3 : 2);
    for (int n = lo; n <= 12; ++n) {
      const auto t = CartanType::make(f, n);
      CAPTURE(to_string(t));
      auto reps = enumerate_minuscule(t);
      auto rows = table_rows(t);
      REQUIRE(reps.size() == rows.size());
      for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(reps[k].fundamental_index == rows[k].j);
        CHECK(reps[k].dimension == rows[k].dimension);
        CHECK(reps[k].sign == rows[k].sign);
        CHECK(reps[k].in_classical_table);
      }
    }
  }
}

TEST_CASE("minuscule rep invariants") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7}) {
    for (int n = 1; n <= 7; ++n) {
      CartanType t;
      try {
        t = CartanType::make(f, f == Family::E6 || f == Family::E7 ? 0 : n);
      } catch (const InvalidTypeError&) {
        continue;
      }
      for (const auto& rep : enumerate_minuscule(t)) {
        CAPTURE(to_string(t));
        CAPTURE(rep.name);
        CHECK(rep.dimension == BigInt(static_cast<unsigned long>(rep.orbit.size())));
        CHECK((rep.sign == 0) == (rep.dual != rep.highest_weight));
        for (auto& [cls, q] : rep.quadratic) CHECK(q);
        // every pairing lies in {-1, 0, 1}
        for (std::size_t i = 0; i < rep.datum->num_positive_roots(); ++i)
          for (const auto& mu : rep.orbit.weights()) {
            const int p = pairing(*rep.datum, mu, i);
            CHECK((p >= -1 && p <= 1));
          }
      }
    }
  }
}

TEST_CASE("exceptional types") {
  auto e6 = enumerate_minuscule(CartanType::make(Family::E6));
  REQUIRE(e6.size() == 2);
  CHECK(e6[0].fundamental_index == 1);
  CHECK(e6[1].fundamental_index == 6);
  for (auto& r : e6) {
    CHECK(r.dimension == 27);
    CHECK(r.sign == 0);
    CHECK_FALSE(r.in_classical_table);
  }
  CHECK(e6[0].dual == Weight::fundamental(6, 6));

  auto e7 = enumerate_minuscule(CartanType::make(Family::E7));
  REQUIRE(e7.size() == 1);
  CHECK(e7[0].fundamental_index == 7);
  CHECK(e7[0].dimension == 56);
  CHECK(e7[0].sign == -1);

  CHECK(enumerate_minuscule(CartanType::make(Family::F4)).empty());
  CHECK(enumerate_minuscule(CartanType::make(Family::G2)).empty());
}

TEST_CASE("make_minuscule_rep rejects non-minuscule weights") {
  CHECK_THROWS_AS(make_minuscule_rep(CartanType::make(Family::B, 3), 1), PreconditionError);
  CHECK_THROWS_AS(make_minuscule_rep(CartanType::make(Family::A, 3), 4), PreconditionError);
}
