#include "quadpairs/drops.hpp"

#include "quadpairs/errors.hpp"
#include "quadpairs/kernels.hpp"

#include <algorithm>
#include <tuple>

namespace qp {

std::size_t drop_for_root(const MinusculeRep& rep, std::size_t root_index) {
  const RootDatum& d = *rep.datum;
  if (root_index >= d.num_positive_roots())
    throw PreconditionError("root index " + std::to_string(root_index) + " out of range");
  auto p = rep.orbit.pairings(d.coroot(root_index));
  auto [lo, hi] = kernels::minmax_i32(p);
  if (lo < -1 || hi > 1)
    throw QuadraticityError("root element does not act quadratically on " + rep.name);
  return kernels::count_equal_i32(p, 1);
}

BigInt root_element_drop(const MinusculeRep& rep, LengthClass cls) {
  auto idx = rep.datum->representative(cls);
  if (!idx)
    throw NoSuchClassError(std::string("no ") + to_string(cls) + " roots in " +
                           to_string(rep.type()));
  return BigInt(static_cast<unsigned long>(drop_for_root(rep, *idx)));
}

DropReport drop_spectrum(const MinusculeRep& rep) {
  DropReport out;
  out.rep = rep;
  for (LengthClass c : {LengthClass::Long, LengthClass::Short}) {
    if (!rep.datum->has_class(c)) continue;
    auto q = rep.quadratic.find(c);
    const bool quadratic = q != rep.quadratic.end() && q->second;
    out.quadratic[c] = quadratic;
    if (quadratic) out.per_length_class[c] = root_element_drop(rep, c);
  }
  return out;
}

namespace {

BigInt positive_root_count(const CartanType& t) {
  const unsigned long n = static_cast<unsigned long>(t.rank);
  switch (t.family) {
  case Family::A: return BigInt(n * (n + 1) / 2);
  case Family::B:
  case Family::C: return BigInt(n * n);
  case Family::D: return BigInt(n * (n - 1));
  case Family::E6: return BigInt(36);
  case Family::E7: return BigInt(63);
  case Family::F4: return BigInt(24);
  case Family::G2: return BigInt(6);
  }
  return BigInt(0);
}

bool orbit_is_minuscule(const WeightOrbit& orbit) {
  // Every root is conjugate to a simple root, so all coroot pairings lie in
  // {-1,0,1} iff every orbit weight has coordinates in {-1,0,1}.
  for (const auto& mu : orbit.weights())
    for (int c : mu.coords)
      if (c < -1 || c > 1) return false;
  return true;
}

void scan(long lo, long hi, std::vector<CandidateList>& out) {
  auto slot = [&](long two_g) -> CandidateList& {
    return out[static_cast<std::size_t>((two_g - lo) / 2)];
  };
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    // An orbit of a nonzero weight has at least rank+1 elements, and at
    // least 2*rank when -1 lies in the Weyl group (B, C, D).
    const long max_rank = f == Family::A ? hi - 1 : hi / 2;
    const int min_rank = f == Family::A ? 1 : (f == Family::D ? 3 : 2);
    for (int n = min_rank; n <= max_rank; ++n) {
      const auto type = CartanType::make(f, n);
      const auto cartan = cartan_matrix(type);
      const DynkinDiagram diagram(cartan);
      const BigInt roots = positive_root_count(type);
      for (int j = 1; j <= n; ++j) {
        const Weight w = Weight::fundamental(n, j);
        const BigInt size = diagram.orbit_size(w);
        if (size < lo || size > hi || size % 2 != 0) continue;
        const WeightOrbit orbit = weyl_orbit(cartan, w);
        if (!orbit_is_minuscule(orbit) || dual_weight(orbit) != w) continue;
        // <w, 2 rho^v> counts the positive roots outside the stabilizer
        std::vector<bool> stab(static_cast<std::size_t>(n), true);
        stab[static_cast<std::size_t>(j - 1)] = false;
        BigInt levi(0);
        for (const auto& c : diagram.components(stab)) levi += positive_root_count(c);
        if ((roots - levi) % 2 == 0) continue;
        slot(size.get_si()).candidates.push_back(
            {type, j, weight_label(j), representation_name(type, j), f == Family::A ? j : n});
      }
    }
  }
  for (auto& list : out)
    std::sort(list.candidates.begin(), list.candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                return std::tie(a.type, a.weight_index) < std::tie(b.type, b.weight_index);
              });
}

} // namespace

CandidateList classify_symplectic_minuscule(const BigInt& two_g) {
  if (two_g < 2 || two_g % 2 != 0)
    throw PreconditionError("two_g must be an even integer >= 2, got " + to_string(two_g));
  if (two_g > kMaxClassifyDimension)
    throw PreconditionError("two_g must be at most " + std::to_string(kMaxClassifyDimension));
  const long n = two_g.get_si();
  std::vector<CandidateList> out(1);
  out[0].two_g = two_g;
  scan(n, n, out);
  return std::move(out[0]);
}

std::vector<CandidateList> classify_symplectic_minuscule_upto(long max_two_g) {
  if (max_two_g < 2)
    throw PreconditionError("max_two_g must be >= 2");
  if (max_two_g > kMaxClassifyDimension)
    throw PreconditionError("max_two_g must be at most " + std::to_string(kMaxClassifyDimension));
  std::vector<CandidateList> out(static_cast<std::size_t>(max_two_g / 2));
  for (std::size_t k = 0; k < out.size(); ++k) out[k].two_g = BigInt(2 * (static_cast<long>(k) + 1));
  scan(2, max_two_g - max_two_g % 2, out);
  return out;
}

} // namespace qp
