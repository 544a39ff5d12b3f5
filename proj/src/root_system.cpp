#include "quadpairs/root_system.hpp"

#include "quadpairs/errors.hpp"
#include "quadpairs/kernels.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace qp {

namespace {

int fixed_rank(Family f) {
  switch (f) {
  case Family::E6: return 6;
  case Family::E7: return 7;
  case Family::F4: return 4;
  case Family::G2: return 2;
  default: return 0;
  }
}

int min_rank(Family f) {
  switch (f) {
  case Family::A: return 1;
  case Family::B:
  case Family::C: return 2;
  case Family::D: return 3;
  default: return fixed_rank(f);
  }
}

} // namespace

CartanType CartanType::make(Family family, int rank) {
  const int fixed = fixed_rank(family);
  if (fixed != 0) {
    if (rank != 0 && rank != fixed)
      throw InvalidTypeError(family_name(family) + " has rank " + std::to_string(fixed) +
                             ", got " + std::to_string(rank));
    return CartanType{family, fixed};
  }
  if (rank < min_rank(family))
    throw InvalidTypeError("type " + family_name(family) + " requires rank >= " +
                           std::to_string(min_rank(family)) + ", got " +
                           std::to_string(rank));
  return CartanType{family, rank};
}

std::string family_name(Family family) {
  switch (family) {
  case Family::A: return "A";
  case Family::B: return "B";
  case Family::C: return "C";
  case Family::D: return "D";
  case Family::E6: return "E6";
  case Family::E7: return "E7";
  case Family::F4: return "F4";
  case Family::G2: return "G2";
  }
  return "?";
}

std::string to_string(const CartanType& type) {
  if (fixed_rank(type.family) != 0)
    return family_name(type.family);
  return family_name(type.family) + std::to_string(type.rank);
}

bool is_classical(Family family) {
  return family == Family::A || family == Family::B || family == Family::C ||
         family == Family::D;
}

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank))
    throw PreconditionError("Cartan matrix must be rank x rank");
}

CartanMatrix cartan_matrix(const CartanType& t) {
  const CartanType type = CartanType::make(t.family, t.rank);
  const int n = type.rank;
  std::vector<int> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [&](int i, int j) -> int& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  };
  auto link = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  for (int i = 0; i < n; ++i)
    at(i, i) = 2;

  switch (type.family) {
  case Family::A:
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    break;
  case Family::B:
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    // alpha_n short
    at(n - 1, n - 2) = -2;
    break;
  case Family::C:
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    // alpha_n long
    at(n - 2, n - 1) = -2;
    break;
  case Family::D:
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
    break;
  case Family::E6:
  case Family::E7:
    // 1-3-4-5-6(-7), 2 attached to 4
    link(0, 2);
    link(1, 3);
    for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
    break;
  case Family::F4:
    link(0, 1);
    link(2, 3);
    at(1, 2) = -1;
    at(2, 1) = -2;
    break;
  case Family::G2:
    // alpha_1 short, alpha_2 long
    at(0, 1) = -3;
    at(1, 0) = -1;
    break;
  }
  return CartanMatrix(n, std::move(a));
}

const char* to_string(LengthClass c) { return c == LengthClass::Long ? "long" : "short"; }

Weight Weight::zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

Weight Weight::fundamental(int rank, int j) {
  if (j < 1 || j > rank)
    throw PreconditionError("fundamental weight index " + std::to_string(j) +
                            " outside 1.." + std::to_string(rank));
  Weight w = zero(rank);
  w.coords[static_cast<std::size_t>(j - 1)] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::is_antidominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight operator-(const Weight& w) {
  Weight r = w;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.coords[i]);
  }
  return s + "]";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int c : w.coords) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}

Weight reflect(const CartanMatrix& cartan, const Weight& mu, int i) {
  Weight r = mu;
  const int p = mu.coords[static_cast<std::size_t>(i)];
  if (p == 0) return r;
  for (int k = 0; k < cartan.rank(); ++k)
    r.coords[static_cast<std::size_t>(k)] -= p * cartan(k, i);
  return r;
}

// ---------------------------------------------------------------------------
// RootDatum

namespace {

// Squared lengths of the simple roots, shortest = 1. Uses
// |alpha_j|^2 / |alpha_i|^2 = A(i,j) / A(j,i) along edges.
std::vector<int> simple_lengths(const CartanMatrix& a) {
  const int n = a.rank();
  std::vector<long> len(static_cast<std::size_t>(n), 0);
  len[0] = 6;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0 || len[static_cast<std::size_t>(j)] != 0) continue;
      len[static_cast<std::size_t>(j)] = len[static_cast<std::size_t>(i)] * a(i, j) / a(j, i);
      queue.push_back(j);
    }
  }
  long g = 0;
  for (long l : len) g = std::gcd(g, l);
  std::vector<int> out;
  out.reserve(len.size());
  for (long l : len) out.push_back(static_cast<int>(l / g));
  return out;
}

std::string key_of(std::span<const std::int8_t> v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size());
}

} // namespace

RootDatum::RootDatum(const CartanType& t)
    : type_(CartanType::make(t.family, t.rank)), cartan_(cartan_matrix(type_)) {
  const int n = type_.rank;
  const auto un = static_cast<std::size_t>(n);
  lengths_ = simple_lengths(cartan_);
  const int max_len = *std::max_element(lengths_.begin(), lengths_.end());
  simply_laced_ = std::all_of(lengths_.begin(), lengths_.end(),
                              [&](int l) { return l == max_len; });

  // Column adjacency: nonzero entries of column i of the Cartan matrix.
  std::vector<std::vector<std::pair<int, int>>> column(un);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (cartan_(k, i) != 0) column[static_cast<std::size_t>(i)].emplace_back(k, cartan_(k, i));

  // Reflection closure over positive roots. Each pending root carries its
  // simple-root coordinates, its fundamental-weight coordinates and its
  // squared length (reflections preserve length).
  struct Pending {
    std::vector<std::int8_t> simple;
    std::vector<int> weight;
    int length;
  };
  std::vector<Pending> found;
  std::unordered_map<std::string, std::size_t> seen;
  for (int j = 0; j < n; ++j) {
    Pending p{std::vector<std::int8_t>(un, 0), std::vector<int>(un, 0),
              lengths_[static_cast<std::size_t>(j)]};
    p.simple[static_cast<std::size_t>(j)] = 1;
    for (auto [k, v] : column[static_cast<std::size_t>(j)]) p.weight[static_cast<std::size_t>(k)] = v;
    seen.emplace(key_of(p.simple), found.size());
    found.push_back(std::move(p));
  }
  for (std::size_t cur = 0; cur < found.size(); ++cur) {
    for (int i = 0; i < n; ++i) {
      const int pr = found[cur].weight[static_cast<std::size_t>(i)];
      if (pr == 0) continue;
      const auto& src = found[cur];
      const int ci = src.simple[static_cast<std::size_t>(i)] - pr;
      if (ci < 0) continue; // s_i(alpha_i) = -alpha_i
      Pending next{src.simple, src.weight, src.length};
      next.simple[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(ci);
      auto key = key_of(next.simple);
      if (seen.count(key)) continue;
      for (auto [k, v] : column[static_cast<std::size_t>(i)])
        next.weight[static_cast<std::size_t>(k)] -= pr * v;
      seen.emplace(std::move(key), found.size());
      found.push_back(std::move(next));
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return found[x].simple < found[y].simple;
  });

  roots_.reserve(found.size() * un);
  coroots_.reserve(found.size() * un);
  classes_.reserve(found.size());
  coroot_sum_.assign(un, 0);
  long best_height = -1;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const auto& r = found[order[idx]];
    long height = 0;
    for (int j = 0; j < n; ++j) {
      const int c = r.simple[static_cast<std::size_t>(j)];
      height += c;
      roots_.push_back(static_cast<std::int8_t>(c));
      // alpha^vee = sum_j c_j (|alpha_j|^2 / |alpha|^2) alpha_j^vee
      const int num = c * lengths_[static_cast<std::size_t>(j)];
      if (num % r.length != 0)
        throw std::logic_error("non-integral coroot coefficient");
      const int d = num / r.length;
      coroots_.push_back(static_cast<std::int8_t>(d));
      coroot_sum_[static_cast<std::size_t>(j)] += d;
    }
    classes_.push_back(r.length == max_len ? LengthClass::Long : LengthClass::Short);
    if (height > best_height) {
      best_height = height;
      highest_ = idx;
    }
  }
}

std::span<const std::int8_t> RootDatum::root(std::size_t i) const {
  const auto n = static_cast<std::size_t>(rank());
  if (i >= num_positive_roots()) throw PreconditionError("root index out of range");
  return std::span<const std::int8_t>(roots_).subspan(i * n, n);
}

std::span<const std::int8_t> RootDatum::coroot(std::size_t i) const {
  const auto n = static_cast<std::size_t>(rank());
  if (i >= num_positive_roots())
    throw PreconditionError("coroot index " + std::to_string(i) + " out of range (" +
                            std::to_string(num_positive_roots()) + " positive coroots)");
  return std::span<const std::int8_t>(coroots_).subspan(i * n, n);
}

bool RootDatum::has_class(LengthClass c) const { return representative(c).has_value(); }

std::optional<std::size_t> RootDatum::representative(LengthClass c) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i] == c) return i;
  return std::nullopt;
}

std::optional<std::size_t> RootDatum::find_root(std::span<const int> simple_coords) const {
  const auto n = static_cast<std::size_t>(rank());
  if (simple_coords.size() != n) return std::nullopt;
  std::vector<std::int8_t> key(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (simple_coords[j] < 0 || simple_coords[j] > 127) return std::nullopt;
    key[j] = static_cast<std::int8_t>(simple_coords[j]);
  }
  std::size_t lo = 0, hi = num_positive_roots();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto r = root(mid);
    if (std::lexicographical_compare(r.begin(), r.end(), key.begin(), key.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < num_positive_roots()) {
    auto r = root(lo);
    if (std::equal(r.begin(), r.end(), key.begin())) return lo;
  }
  return std::nullopt;
}

Weight RootDatum::root_as_weight(std::size_t i) const {
  auto c = root(i);
  const int n = rank();
  Weight w = Weight::zero(n);
  for (int k = 0; k < n; ++k) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += cartan_(k, j) * c[static_cast<std::size_t>(j)];
    w.coords[static_cast<std::size_t>(k)] = s;
  }
  return w;
}

std::shared_ptr<const RootDatum> shared_root_datum(const CartanType& t) {
  static std::mutex mutex;
  static std::map<CartanType, std::shared_ptr<const RootDatum>> cache;
  const CartanType type = CartanType::make(t.family, t.rank);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(type); it != cache.end()) return it->second;
  }
  auto datum = std::make_shared<const RootDatum>(type);
  std::lock_guard lock(mutex);
  return cache.emplace(type, std::move(datum)).first->second;
}

int pairing(const RootDatum& datum, const Weight& w, std::size_t coroot_index) {
  if (w.rank() != datum.rank())
    throw PreconditionError("weight rank " + std::to_string(w.rank()) +
                            " does not match root datum rank " + std::to_string(datum.rank()));
  auto c = datum.coroot(coroot_index);
  int s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += w.coords[j] * c[j];
  return s;
}

// ---------------------------------------------------------------------------
// Orbits

WeightOrbit::WeightOrbit(int rank, std::vector<Weight> weights)
    : rank_(rank), weights_(std::move(weights)) {
  std::sort(weights_.begin(), weights_.end());
  const std::size_t m = weights_.size();
  columns_.resize(m * static_cast<std::size_t>(rank_));
  for (std::size_t k = 0; k < m; ++k)
    for (int j = 0; j < rank_; ++j)
      columns_[static_cast<std::size_t>(j) * m + k] = weights_[k].coords[static_cast<std::size_t>(j)];
}

std::optional<std::size_t> WeightOrbit::index_of(const Weight& w) const {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), w);
  if (it != weights_.end() && *it == w)
    return static_cast<std::size_t>(it - weights_.begin());
  return std::nullopt;
}

void WeightOrbit::pairings(std::span<const std::int8_t> coroot,
                           std::vector<std::int32_t>& out) const {
  const std::size_t m = weights_.size();
  out.assign(m, 0);
  for (int j = 0; j < rank_; ++j) {
    const int c = coroot[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    kernels::axpy_i32(out, c,
                      std::span<const std::int32_t>(columns_).subspan(static_cast<std::size_t>(j) * m, m));
  }
}

std::vector<std::int32_t> WeightOrbit::pairings(std::span<const std::int8_t> coroot) const {
  std::vector<std::int32_t> out;
  pairings(coroot, out);
  return out;
}

WeightOrbit weyl_orbit(const CartanMatrix& cartan, const Weight& w) {
  if (w.rank() != cartan.rank())
    throw PreconditionError("weight rank does not match Cartan matrix rank");
  if (!w.is_dominant())
    throw PreconditionError("weyl_orbit requires a dominant weight, got " + to_string(w));
  const int n = cartan.rank();
  std::vector<std::vector<std::pair<int, int>>> column(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (cartan(k, i) != 0) column[static_cast<std::size_t>(i)].emplace_back(k, cartan(k, i));

  std::vector<Weight> found{w};
  std::unordered_set<Weight, WeightHash> seen{w};
  for (std::size_t cur = 0; cur < found.size(); ++cur) {
    for (int i = 0; i < n; ++i) {
      const int p = found[cur].coords[static_cast<std::size_t>(i)];
      if (p == 0) continue;
      Weight next = found[cur];
      for (auto [k, v] : column[static_cast<std::size_t>(i)])
        next.coords[static_cast<std::size_t>(k)] -= p * v;
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  return WeightOrbit(n, std::move(found));
}

WeightOrbit weyl_orbit(const RootDatum& datum, const Weight& w) {
  return weyl_orbit(datum.cartan(), w);
}

Weight dual_weight(const WeightOrbit& orbit) {
  for (const auto& mu : orbit.weights())
    if (mu.is_antidominant()) return -mu;
  throw std::logic_error("Weyl orbit without an antidominant element");
}

Weight dual_weight(const RootDatum& datum, const Weight& w) {
  return dual_weight(weyl_orbit(datum, w));
}

// ---------------------------------------------------------------------------
// Weyl group orders and parabolic subgroups

BigInt weyl_group_order(const CartanType& t) {
  const CartanType type = CartanType::make(t.family, t.rank);
  const auto n = static_cast<unsigned long>(type.rank);
  switch (type.family) {
  case Family::A: return factorial(n + 1);
  case Family::B:
  case Family::C: return pow2(n) * factorial(n);
  case Family::D: return pow2(n - 1) * factorial(n);
  case Family::E6: return BigInt(51840);
  case Family::E7: return BigInt(2903040);
  case Family::F4: return BigInt(1152);
  case Family::G2: return BigInt(12);
  }
  return BigInt(0);
}

DynkinDiagram::DynkinDiagram(const CartanMatrix& cartan)
    : adj_(static_cast<std::size_t>(cartan.rank())) {
  const int n = cartan.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cartan(i, j) != 0)
        adj_[static_cast<std::size_t>(i)].push_back(Edge{j, cartan(i, j), cartan(j, i)});
  weyl_order_ = 1;
  for (const auto& t : components(std::vector<bool>(static_cast<std::size_t>(n), true)))
    weyl_order_ *= weyl_group_order(t);
}

std::vector<CartanType> DynkinDiagram::components(const std::vector<bool>& keep) const {
  const int n = rank();
  auto kept = [&](int u) { return keep[static_cast<std::size_t>(u)]; };
  auto degree = [&](int u) {
    std::size_t d = 0;
    for (const auto& e : adj_[static_cast<std::size_t>(u)]) d += kept(e.to);
    return d;
  };

  std::vector<CartanType> out;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<int> nodes;
  for (int start = 0; start < n; ++start) {
    if (!kept(start) || visited[static_cast<std::size_t>(start)]) continue;
    nodes.assign(1, start);
    visited[static_cast<std::size_t>(start)] = true;
    for (std::size_t cur = 0; cur < nodes.size(); ++cur)
      for (const auto& e : adj_[static_cast<std::size_t>(nodes[cur])])
        if (kept(e.to) && !visited[static_cast<std::size_t>(e.to)]) {
          visited[static_cast<std::size_t>(e.to)] = true;
          nodes.push_back(e.to);
        }

    const int m = static_cast<int>(nodes.size());
    int bond = 1, short_node = -1, long_node = -1, branch = -1;
    for (int u : nodes) {
      if (degree(u) >= 3) branch = u;
      for (const auto& e : adj_[static_cast<std::size_t>(u)]) {
        if (!kept(e.to)) continue;
        const int b = e.out * e.in;
        if (b > 1) {
          bond = b;
          // cartan(short, long) is the entry of larger magnitude
          short_node = e.out < e.in ? u : e.to;
          long_node = e.out < e.in ? e.to : u;
        }
      }
    }

    if (bond == 3) {
      out.push_back(CartanType::make(Family::G2));
    } else if (bond == 2) {
      if (m == 2)
        out.push_back(CartanType::make(Family::B, 2));
      else if (m == 4 && degree(short_node) == 2 && degree(long_node) == 2)
        out.push_back(CartanType::make(Family::F4));
      else
        out.push_back(CartanType::make(degree(short_node) == 1 ? Family::B : Family::C, m));
    } else if (branch < 0) {
      out.push_back(CartanType::make(Family::A, m));
    } else {
      std::vector<int> arms;
      for (const auto& first : adj_[static_cast<std::size_t>(branch)]) {
        if (!kept(first.to)) continue;
        int len = 0, prev = branch, cur = first.to;
        while (true) {
          ++len;
          int next = -1;
          for (const auto& e : adj_[static_cast<std::size_t>(cur)])
            if (kept(e.to) && e.to != prev) next = e.to;
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1)
        out.push_back(CartanType::make(Family::D, m));
      else if (arms == std::vector<int>{1, 2, 2})
        out.push_back(CartanType::make(Family::E6));
      else if (arms == std::vector<int>{1, 2, 3})
        out.push_back(CartanType::make(Family::E7));
      else
        throw PreconditionError("unsupported Dynkin component with " + std::to_string(m) + " nodes");
    }
  }
  return out;
}

BigInt DynkinDiagram::orbit_size(const Weight& w) const {
  if (w.rank() != rank() || !w.is_dominant())
    throw PreconditionError("orbit_size requires a dominant weight of matching rank");
  std::vector<bool> stabilizer(static_cast<std::size_t>(rank()));
  for (std::size_t i = 0; i < stabilizer.size(); ++i) stabilizer[i] = w.coords[i] == 0;
  BigInt sub(1);
  for (const auto& t : components(stabilizer)) sub *= weyl_group_order(t);
  return weyl_order_ / sub;
}

std::vector<CartanType> identify_components(const CartanMatrix& cartan,
                                            const std::vector<bool>& keep) {
  return DynkinDiagram(cartan).components(keep);
}

BigInt weyl_orbit_size(const CartanMatrix& cartan, const Weight& w) {
  return DynkinDiagram(cartan).orbit_size(w);
}

} // namespace qp
