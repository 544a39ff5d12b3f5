#include "quadpairs/minuscule.hpp"

#include "quadpairs/errors.hpp"
#include "quadpairs/kernels.hpp"

namespace qp {

bool is_minuscule(const RootDatum& datum, const Weight& w) {
  if (w.rank() != datum.rank())
    throw PreconditionError("weight rank does not match root datum rank");
  if (!w.is_dominant())
    throw PreconditionError("is_minuscule requires a dominant weight, got " + to_string(w));
  if (w.is_zero())
    throw PreconditionError("is_minuscule requires a nonzero weight");
  for (std::size_t i = 0; i < datum.num_positive_roots(); ++i)
    if (pairing(datum, w, i) > 1) return false;
  return true;
}

namespace {

int sign_from_dual(const RootDatum& datum, const Weight& w, const Weight& dual) {
  if (dual != w) return 0;
  long p = 0;
  auto sum = datum.coroot_sum();
  for (std::size_t j = 0; j < sum.size(); ++j) p += w.coords[j] * sum[j];
  return p % 2 == 0 ? 1 : -1;
}

} // namespace

int duality_sign(const RootDatum& datum, const Weight& w) {
  if (!is_minuscule(datum, w))
    throw PreconditionError("duality_sign is only supported for minuscule weights, got " +
                            to_string(w));
  return sign_from_dual(datum, w, dual_weight(datum, w));
}

std::string weight_label(int j) { return "w" + std::to_string(j); }

std::string representation_name(const CartanType& type, int j) {
  const int n = type.rank;
  switch (type.family) {
  case Family::A:
    return j == 1 ? "Std" : "Lambda^" + std::to_string(j) + " Std";
  case Family::B:
    if (j == n) return "Spin";
    break;
  case Family::C:
    if (j == 1) return "Std";
    break;
  case Family::D:
    if (j == 1) return "Std";
    if (j == n - 1) return "Spin-";
    if (j == n) return "Spin+";
    break;
  case Family::E6:
    if (j == 1) return "V27";
    if (j == 6) return "V27*";
    break;
  case Family::E7:
    if (j == 7) return "V56";
    break;
  default:
    break;
  }
  return weight_label(j);
}

MinusculeRep make_minuscule_rep(std::shared_ptr<const RootDatum> datum, const Weight& w) {
  if (!datum) throw PreconditionError("null root datum");
  if (!is_minuscule(*datum, w))
    throw PreconditionError("weight " + to_string(w) + " is not minuscule for " +
                            to_string(datum->type()));
  MinusculeRep rep;
  rep.highest_weight = w;
  for (int j = 1; j <= w.rank(); ++j)
    if (w == Weight::fundamental(w.rank(), j)) rep.fundamental_index = j;
  rep.name = rep.fundamental_index ? representation_name(datum->type(), *rep.fundamental_index)
                                   : to_string(w);
  rep.orbit = weyl_orbit(*datum, w);
  rep.dimension = BigInt(static_cast<unsigned long>(rep.orbit.size()));
  rep.dual = dual_weight(rep.orbit);
  rep.sign = sign_from_dual(*datum, w, rep.dual);
  rep.in_classical_table = is_classical(datum->type().family);

  std::vector<std::int32_t> buf;
  for (std::size_t i = 0; i < datum->num_positive_roots(); ++i) {
    const LengthClass c = datum->length_class(i);
    auto [it, fresh] = rep.quadratic.emplace(c, true);
    if (!it->second) continue;
    rep.orbit.pairings(datum->coroot(i), buf);
    auto [lo, hi] = kernels::minmax_i32(buf);
    if (lo < -1 || hi > 1) it->second = false;
  }
  rep.datum = std::move(datum);
  return rep;
}

MinusculeRep make_minuscule_rep(const CartanType& type, int j) {
  auto datum = shared_root_datum(type);
  return make_minuscule_rep(datum, Weight::fundamental(datum->rank(), j));
}

std::vector<MinusculeRep> enumerate_minuscule(const CartanType& type) {
  auto datum = shared_root_datum(type);
  std::vector<MinusculeRep> out;
  for (int j = 1; j <= datum->rank(); ++j) {
    const Weight w = Weight::fundamental(datum->rank(), j);
    if (is_minuscule(*datum, w)) out.push_back(make_minuscule_rep(datum, w));
  }
  return out;
}

} // namespace qp
