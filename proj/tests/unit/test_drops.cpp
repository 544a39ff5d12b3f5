#include "quadpairs/drops.hpp"
#include "quadpairs/errors.hpp"

#include <doctest.h>

#include <set>

using namespace qp;

namespace {

MinusculeRep rep_of(Family f, int n, int j) { return make_minuscule_rep(CartanType::make(f, n), j); }

std::set<std::pair<std::string, int>> as_set(const CandidateList& l) {
  std::set<std::pair<std::string, int>> out;
  for (const auto& c : l.candidates) out.insert({to_string(c.type), c.weight_index});
  return out;
}

// Reps that are the standard representation of Sp under a low-rank
// isomorphism: A1 = C1 and B2 = C2.
bool is_symplectic_standard(const Candidate& c) {
  return c.type.family == Family::C || c.type == CartanType::make(Family::A, 1) ||
         c.type == CartanType::make(Family::B, 2);
}

} // namespace

TEST_CASE("root_element_drop examples") {
  CHECK(root_element_drop(rep_of(Family::A, 5, 3), LengthClass::Long) == 6);
  for (int g = 2; g <= 10; ++g)
    CHECK(root_element_drop(rep_of(Family::C, g, 1), LengthClass::Long) == 1);
  auto b5 = rep_of(Family::B, 5, 5);
  CHECK(root_element_drop(b5, LengthClass::Short) == 16);
  CHECK(root_element_drop(b5, LengthClass::Long) == 8);
  CHECK(root_element_drop(rep_of(Family::D, 6, 6), LengthClass::Long) == 8);
}

TEST_CASE("root_element_drop errors") {
  CHECK_THROWS_AS(root_element_drop(rep_of(Family::D, 6, 6), LengthClass::Short), NoSuchClassError);
  CHECK_THROWS_AS(root_element_drop(rep_of(Family::A, 3, 1), LengthClass::Short), PreconditionError);
}

TEST_CASE("drop_spectrum examples") {
  auto c4 = drop_spectrum(rep_of(Family::C, 4, 1));
  CHECK(c4.per_length_class.size() == 2);
  CHECK(c4.per_length_class.at(LengthClass::Long) == 1);
  CHECK(c4.per_length_class.at(LengthClass::Short) == 2);

  auto a9 = drop_spectrum(rep_of(Family::A, 9, 5));
  REQUIRE(a9.per_length_class.size() == 1);
  CHECK(a9.per_length_class.at(LengthClass::Long) == 70);

  auto d6 = drop_spectrum(rep_of(Family::D, 6, 1));
  REQUIRE(d6.per_length_class.size() == 1);
  // e1-e2 moves both e2 and -e1
  CHECK(d6.per_length_class.at(LengthClass::Long) == 2);
}

TEST_CASE("drop does not depend on the representative root") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7}) {
    for (int n = 1; n <= 8; ++n) {
      CartanType t;
      try {
        t = CartanType::make(f, f == Family::E6 || f == Family::E7 ? 0 : n);
      } catch (const InvalidTypeError&) {
        continue;
      }
      if ((f == Family::E6 || f == Family::E7) && n > 1) break;
      for (const auto& rep : enumerate_minuscule(t)) {
        CAPTURE(to_string(t));
        CAPTURE(rep.name);
        auto spectrum = drop_spectrum(rep);
        const auto& d = *rep.datum;
        bool same = true;
        for (std::size_t i = 0; i < d.num_positive_roots(); ++i) {
          const BigInt drop(static_cast<unsigned long>(drop_for_root(rep, i)));
          same = same && drop == spectrum.per_length_class.at(d.length_class(i));
        }
        CHECK(same);
        for (auto& [cls, drop] : spectrum.per_length_class) {
          CHECK(drop >= 1);
          CHECK(2 * drop <= rep.dimension);
        }
      }
    }
  }
}

TEST_CASE("classify examples") {
  using S = std::set<std::pair<std::string, int>>;
  CHECK(as_set(classify_symplectic_minuscule(BigInt(20))) == S{{"C10", 1}, {"A5", 3}});
  CHECK(as_set(classify_symplectic_minuscule(BigInt(32))) ==
        S{{"C16", 1}, {"B5", 5}, {"D6", 5}, {"D6", 6}});
  CHECK(as_set(classify_symplectic_minuscule(BigInt(8))) == S{{"C4", 1}});

  auto l20 = classify_symplectic_minuscule(BigInt(20));
  for (const auto& c : l20.candidates)
    if (c.type.family == Family::A) CHECK(c.witness == 3);
}

TEST_CASE("classify preconditions") {
  CHECK_THROWS_AS(classify_symplectic_minuscule(BigInt(7)), PreconditionError);
  CHECK_THROWS_AS(classify_symplectic_minuscule(BigInt(0)), PreconditionError);
  CHECK_THROWS_AS(classify_symplectic_minuscule(BigInt(1024)), PreconditionError);
  using S = std::set<std::pair<std::string, int>>;
  CHECK(as_set(classify_symplectic_minuscule(BigInt(512))) ==
        S{{"B9", 9}, {"C256", 1}, {"D10", 9}, {"D10", 10}});
}

TEST_CASE("classify agrees with a brute-force scan of enumerate_minuscule") {
  const long max_two_g = 64;
  auto sweep = classify_symplectic_minuscule_upto(max_two_g);
  REQUIRE(sweep.size() == static_cast<std::size_t>(max_two_g / 2));
  std::vector<std::set<std::pair<std::string, int>>> brute(sweep.size());
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n < max_two_g; ++n) {
      CartanType t;
      try {
        t = CartanType::make(f, n);
      } catch (const InvalidTypeError&) {
        continue;
      }
      if (f != Family::A && 2 * n > max_two_g) continue;
      auto datum = shared_root_datum(t);
      for (int j = 1; j <= n; ++j) {
        const Weight w = Weight::fundamental(n, j);
        if (weyl_orbit_size(datum->cartan(), w) > max_two_g || !is_minuscule(*datum, w)) continue;
        auto rep = make_minuscule_rep(datum, w);
        if (rep.sign == -1) brute[rep.dimension.get_ui() / 2 - 1].insert({to_string(t), j});
      }
    }
  }
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    CAPTURE(k);
    CHECK(sweep[k].two_g == BigInt(static_cast<unsigned long>(2 * k + 2)));
    CHECK(as_set(sweep[k]) == brute[k]);
    CHECK(as_set(classify_symplectic_minuscule(sweep[k].two_g)) == brute[k]);
  }
}

TEST_CASE("drop 1 occurs only for the standard representation of Sp") {
  for (const auto& list : classify_symplectic_minuscule_upto(256)) {
    for (const auto& c : list.candidates) {
      CAPTURE(to_string(c.type));
      CAPTURE(c.weight_label);
      auto datum = std::make_shared<const RootDatum>(c.type);
      auto spectrum = drop_spectrum(make_minuscule_rep(datum, Weight::fundamental(c.type.rank, c.weight_index)));
      CHECK(spectrum.rep.sign == -1);
      CHECK(spectrum.rep.dimension == list.two_g);
      BigInt smallest = spectrum.rep.dimension;
      for (auto& [cls, d] : spectrum.per_length_class) smallest = std::min(smallest, d);
      if (is_symplectic_standard(c)) {
        CHECK(smallest == 1);
      } else {
        CHECK(smallest >= 6);
      }
    }
  }
}
