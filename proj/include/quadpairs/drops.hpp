#pragma once

// Drops of root elements on minuscule representations and the
// classification of symplectic minuscule representations by dimension.
//
// On a minuscule orbit the root element x_a moves v_mu to v_mu +- v_{mu+a}
// exactly when <mu, a^v> = -1, so rank(x_a - 1) is the number of orbit
// weights with <mu, a^v> = 1.

#include "quadpairs/bigint.hpp"
#include "quadpairs/minuscule.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace qp {

struct DropReport {
  MinusculeRep rep;
  std::map<LengthClass, BigInt> per_length_class;
  std::map<LengthClass, bool> quadratic;
};

// #{mu in orbit : <mu, a^v> = 1} for the positive root with the given index.
// Throws QuadraticityError if some pairing leaves {-1, 0, 1}.
std::size_t drop_for_root(const MinusculeRep& rep, std::size_t root_index);

// Drop of the representative root of the class.
BigInt root_element_drop(const MinusculeRep& rep, LengthClass cls);

DropReport drop_spectrum(const MinusculeRep& rep);

struct Candidate {
  CartanType type;
  int weight_index = 1; // 1-based fundamental weight
  std::string weight_label;
  std::string name;
  int witness = 0; // j for A_{2j-1}, the rank otherwise
};

struct CandidateList {
  BigInt two_g;
  std::vector<Candidate> candidates;
};

// Largest dimension accepted by the classifier. The scan over A_n with
// n < two_g costs O(two_g^3).
inline constexpr long kMaxClassifyDimension = 512;

// Every classical (type, fundamental weight) that is minuscule, symplectic
// and of dimension two_g. Candidates are sorted by family, rank, weight.
CandidateList classify_symplectic_minuscule(const BigInt& two_g);

// One list per even dimension 2, 4, ..., max_two_g, from a single scan.
std::vector<CandidateList> classify_symplectic_minuscule_upto(long max_two_g);

} // namespace qp
