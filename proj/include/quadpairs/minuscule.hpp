#pragma once

// Minuscule weights, their orbits, dimensions and duality signs.
//
// Weight labels use Bourbaki numbering. Names of the fundamental minuscule
// representations:
//
//   A_n  w_j           Lambda^j Std (w_1 is Std)
//   B_n  w_n           Spin
//   C_n  w_1           Std
//   D_n  w_1           Std
//        w_{n-1}       Spin-
//        w_n           Spin+
//   E6   w_1, w_6      V27, V27*
//   E7   w_7           V56
//
// The E6/E7 entries are flagged as outside the classical table.

#include "quadpairs/bigint.hpp"
#include "quadpairs/root_system.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qp {

struct MinusculeRep {
  std::shared_ptr<const RootDatum> datum;
  Weight highest_weight;
  // 1-based fundamental weight index when the highest weight is fundamental.
  std::optional<int> fundamental_index;
  std::string name;
  BigInt dimension;
  int sign = 0; // +1 orthogonal, -1 symplectic, 0 not self-dual
  Weight dual;
  WeightOrbit orbit;
  // Per length class: every orbit weight pairs into {-1,0,1} with every
  // coroot of that class.
  std::map<LengthClass, bool> quadratic;
  bool in_classical_table = true;

  const CartanType& type() const { return datum->type(); }
};

// True iff <w, a^v> is in {0, 1} for every positive coroot. Requires w
// dominant and nonzero.
bool is_minuscule(const RootDatum& datum, const Weight& w);

// 0 if w is not self-dual, else (-1)^p with p = sum over positive coroots of
// <w, a^v>. Requires w minuscule.
int duality_sign(const RootDatum& datum, const Weight& w);

// Name for a fundamental minuscule weight, e.g. "Spin+" or "Lambda^3 Std".
std::string representation_name(const CartanType& type, int j);
std::string weight_label(int j); // "w3"

// Builds the full record for a minuscule highest weight.
MinusculeRep make_minuscule_rep(std::shared_ptr<const RootDatum> datum, const Weight& w);
MinusculeRep make_minuscule_rep(const CartanType& type, int j);

// All fundamental weights of the type that are minuscule, in index order.
std::vector<MinusculeRep> enumerate_minuscule(const CartanType& type);

} // namespace qp
