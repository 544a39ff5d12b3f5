#include "quadpairs/oracle.hpp"

#include "quadpairs/drops.hpp"
#include "quadpairs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace qp {

UnipotenceReport unipotence(const ExactMatrix& m) {
  const ExactMatrix n = m.minus_identity();
  UnipotenceReport r;
  if (n.is_zero()) return r;
  ExactMatrix power = n;
  int k = 1;
  while (!power.is_zero()) {
    if (static_cast<std::size_t>(k) >= m.dim())
      throw NotUnipotentError("M - 1 is not nilpotent");
    power = power * n;
    ++k;
  }
  r.degree = k;
  r.drop = n.rank();
  r.quadratic = k <= 2;
  return r;
}

const char* to_string(SignConvention c) {
  return c == SignConvention::Positive ? "positive" : "index-parity";
}

SignConvention parse_sign_convention(const std::string& text) {
  if (text == "positive") return SignConvention::Positive;
  if (text == "index-parity") return SignConvention::IndexParity;
  throw InvalidArgument("unknown sign convention '" + text + "' (expected positive or index-parity)");
}

ExactMatrix build_root_element(const MinusculeRep& rep, std::span<const std::size_t> roots,
                               Field field, SignConvention signs) {
  const RootDatum& d = *rep.datum;
  if (roots.empty()) throw PreconditionError("build_root_element needs at least one root");
  for (std::size_t a : roots)
    if (a >= d.num_positive_roots())
      throw PreconditionError("root index " + std::to_string(a) + " out of range");
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x + 1; y < roots.size(); ++y)
      if (pairing(d, d.root_as_weight(roots[x]), roots[y]) != 0)
        throw PreconditionError("roots " + root_label(d, roots[x]) + " and " +
                                root_label(d, roots[y]) + " are not orthogonal");

  const std::size_t dim = rep.orbit.size();
  std::optional<ExactMatrix> result;
  std::vector<std::int32_t> p;
  for (std::size_t a : roots) {
    const Weight alpha = d.root_as_weight(a);
    rep.orbit.pairings(d.coroot(a), p);
    ExactMatrix x = ExactMatrix::identity(dim, field);
    for (std::size_t i = 0; i < dim; ++i) {
      if (p[i] != -1) continue;
      Weight target = rep.orbit[i];
      for (int k = 0; k < target.rank(); ++k) target.coords[static_cast<std::size_t>(k)] += alpha[static_cast<std::size_t>(k)];
      auto j = rep.orbit.index_of(target);
      if (!j) throw std::logic_error("weight " + to_string(target) + " missing from orbit");
      const int c = signs == SignConvention::Positive || (i + *j) % 2 == 0 ? 1 : -1;
      x.set(*j, i, mpq_class(c));
    }
    result = result ? x * *result : std::move(x);
  }
  return std::move(*result);
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) { return kronecker(a, b); }

ExactMatrix jordan_unipotent(std::span<const int> blocks, Field field) {
  std::size_t dim = 0;
  for (int b : blocks) {
    if (b < 1) throw PreconditionError("Jordan block sizes must be positive");
    dim += static_cast<std::size_t>(b);
  }
  ExactMatrix m = ExactMatrix::identity(dim, field);
  std::size_t start = 0;
  for (int b : blocks) {
    for (int i = 0; i + 1 < b; ++i)
      m.set(start + static_cast<std::size_t>(i), start + static_cast<std::size_t>(i) + 1, mpq_class(1));
    start += static_cast<std::size_t>(b);
  }
  return m;
}

ExactMatrix random_unipotent(int k, std::size_t dim, std::mt19937_64& rng, Field field) {
  if (k < 1 || static_cast<std::size_t>(k) > dim)
    throw PreconditionError("need 1 <= k <= dim for a k-unipotent matrix");
  std::vector<int> blocks{k};
  for (std::size_t rest = dim - static_cast<std::size_t>(k); rest > 0;) {
    const int cap = static_cast<int>(std::min<std::size_t>(rest, static_cast<std::size_t>(k)));
    const int b = std::uniform_int_distribution<int>(1, cap)(rng);
    blocks.push_back(b);
    rest -= static_cast<std::size_t>(b);
  }

  // Integer Jordan matrix, conjugated by elementary matrices I + cE_ij
  // (inverse I - cE_ij) and a permutation so that entries stay integral.
  std::vector<BigInt> m(dim * dim);
  std::size_t start = 0;
  for (int b : blocks) {
    for (int i = 0; i < b; ++i) {
      const std::size_t r = start + static_cast<std::size_t>(i);
      m[r * dim + r] = 1;
      if (i + 1 < b) m[r * dim + r + 1] = 1;
    }
    start += static_cast<std::size_t>(b);
  }
  if (dim > 1) {
    static constexpr int kCoeffs[] = {-2, -1, 1, 2};
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (std::size_t step = 0; step < 2 * dim; ++step) {
      const std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      if (i == j) j = (j + 1) % dim;
      const int c = kCoeffs[coeff(rng)];
      for (std::size_t t = 0; t < dim; ++t) m[i * dim + t] += c * m[j * dim + t];
      for (std::size_t t = 0; t < dim; ++t) m[t * dim + j] -= c * m[t * dim + i];
    }
  }
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<BigInt> out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[perm[i] * dim + perm[j]] = m[i * dim + j];
  return ExactMatrix::from_integers(dim, out, field);
}

TensorLemmaReport verify_tensor_lemma(const TensorLemmaOptions& o) {
  if (o.trials <= 0) throw PreconditionError("trials must be positive");
  if (o.k1 < 1 || o.k2 < 1) throw PreconditionError("k1 and k2 must be >= 1");
  if (o.max_dim1 < static_cast<std::size_t>(o.k1) || o.max_dim2 < static_cast<std::size_t>(o.k2))
    throw PreconditionError("dimensions must be at least k1 and k2");

  TensorLemmaReport r;
  r.options = o;
  r.expected_degree = o.k1 + o.k2 - 1;
  if (!o.field.is_rational() && o.field.characteristic() < static_cast<std::uint32_t>(r.expected_degree))
    r.notes.push_back("characteristic " + std::to_string(o.field.characteristic()) +
                      " is below k1+k2-1; degrees may drop");

  std::mt19937_64 master(o.seed);
  for (int t = 0; t < o.trials; ++t) {
    std::mt19937_64 rng(master());
    TensorTrial trial;
    trial.trial = t;
    trial.dim1 = std::uniform_int_distribution<std::size_t>(static_cast<std::size_t>(o.k1), o.max_dim1)(rng);
    trial.dim2 = std::uniform_int_distribution<std::size_t>(static_cast<std::size_t>(o.k2), o.max_dim2)(rng);
    const ExactMatrix m1 = random_unipotent(o.k1, trial.dim1, rng, o.field);
    const ExactMatrix m2 = random_unipotent(o.k2, trial.dim2, rng, o.field);
    trial.degree1 = unipotence(m1).degree;
    trial.degree2 = unipotence(m2).degree;
    trial.degree = unipotence(tensor(m1, m2)).degree;
    ++r.degree_histogram[trial.degree];

    bool anomalous = false;
    if (trial.degree != r.expected_degree) {
      anomalous = true;
      if (o.field.is_rational()) ++r.mismatches;
      else ++r.characteristic_deviations;
    }
    if (trial.degree <= 2 && trial.degree1 > 1 && trial.degree2 > 1) {
      anomalous = true;
      ++r.quadratic_counterexamples;
    }
    if (anomalous) r.anomalies.push_back(trial);
  }
  r.passed = r.mismatches == 0 && r.quadratic_counterexamples == 0;
  return r;
}

namespace {

// Simple roots of a classical type in epsilon coordinates.
std::vector<std::vector<int>> epsilon_basis(const CartanType& t) {
  const int n = t.rank;
  const std::size_t width = static_cast<std::size_t>(t.family == Family::A ? n + 1 : n);
  std::vector<std::vector<int>> s(static_cast<std::size_t>(n), std::vector<int>(width, 0));
  for (int k = 0; k + 1 < n; ++k) {
    s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k) + 1] = -1;
  }
  auto& last = s.back();
  const std::size_t m = static_cast<std::size_t>(n - 1);
  switch (t.family) {
  case Family::A: last[m] = 1; last[m + 1] = -1; break;
  case Family::B: last[m] = 1; break;
  case Family::C: last[m] = 2; break;
  case Family::D: last[m - 1] = 1; last[m] = 1; break;
  default: break;
  }
  return s;
}

std::vector<int> epsilon_coords(const RootDatum& d, std::size_t index,
                                const std::vector<std::vector<int>>& basis) {
  std::vector<int> v(basis[0].size(), 0);
  auto r = d.root(index);
  for (std::size_t k = 0; k < r.size(); ++k)
    for (std::size_t m = 0; m < v.size(); ++m) v[m] += r[k] * basis[k][m];
  return v;
}

std::string linear_label(std::span<const int> coeffs, char symbol) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += symbol + std::to_string(i + 1);
  }
  return out;
}

std::string trim_lower(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

} // namespace

std::string root_label(const RootDatum& d, std::size_t index) {
  if (index >= d.num_positive_roots()) throw PreconditionError("root index out of range");
  if (is_classical(d.type().family)) {
    auto v = epsilon_coords(d, index, epsilon_basis(d.type()));
    return linear_label(v, 'e');
  }
  auto r = d.root(index);
  std::vector<int> c(r.begin(), r.end());
  return linear_label(c, 'a');
}

std::vector<std::size_t> parse_root_spec(const RootDatum& d, const std::string& spec) {
  static const std::regex simple_re("a([0-9]+)");
  static const std::regex term_re("([+-]?)([0-9]*)e([0-9]+)");
  std::vector<std::size_t> out;
  std::size_t begin = 0;
  const std::string text = trim_lower(spec);
  if (text.empty()) throw InvalidArgument("empty root spec");
  while (begin <= text.size()) {
    std::size_t end = text.find(',', begin);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(begin, end - begin);
    begin = end + 1;
    std::smatch m;
    if (item == "theta") {
      out.push_back(d.highest_root());
    } else if (std::regex_match(item, m, simple_re)) {
      const int i = std::stoi(m[1]);
      if (i < 1 || i > d.rank())
        throw InvalidArgument("simple root '" + item + "' out of range for " + to_string(d.type()));
      std::vector<int> unit(static_cast<std::size_t>(d.rank()), 0);
      unit[static_cast<std::size_t>(i - 1)] = 1;
      out.push_back(*d.find_root(unit));
    } else {
      if (!is_classical(d.type().family))
        throw InvalidArgument("epsilon root specs need a classical type; use a<i> or theta for " +
                              to_string(d.type()));
      const auto basis = epsilon_basis(d.type());
      std::vector<int> v(basis[0].size(), 0);
      std::size_t consumed = 0;
      for (auto it = std::sregex_iterator(item.begin(), item.end(), term_re);
           it != std::sregex_iterator(); ++it) {
        const auto& t = *it;
        if (static_cast<std::size_t>(t.position()) != consumed || t.length() == 0) break;
        consumed += static_cast<std::size_t>(t.length());
        const int sign = t[1] == "-" ? -1 : 1;
        const int coeff = t[2].length() ? std::stoi(t[2]) : 1;
        const int idx = std::stoi(t[3]);
        if (idx < 1 || static_cast<std::size_t>(idx) > v.size())
          throw InvalidArgument("index in root spec '" + item + "' out of range");
        v[static_cast<std::size_t>(idx - 1)] += sign * coeff;
      }
      if (consumed != item.size() || item.empty())
        throw InvalidArgument("malformed root spec '" + item + "'");
      std::optional<std::size_t> found;
      for (std::size_t r = 0; r < d.num_positive_roots() && !found; ++r)
        if (epsilon_coords(d, r, basis) == v) found = r;
      if (!found)
        throw InvalidArgument("'" + item + "' is not a positive root of " + to_string(d.type()));
      out.push_back(*found);
    }
    if (end == text.size()) break;
  }
  return out;
}

RootElementReport root_element_report(const MinusculeRep& rep, std::span<const std::size_t> roots,
                                      Field field, SignConvention signs) {
  RootElementReport r;
  r.rep = rep;
  r.roots.assign(roots.begin(), roots.end());
  r.field = field;
  r.signs = signs;
  r.unipotence = unipotence(build_root_element(rep, roots, field, signs));
  if (roots.size() == 1) r.combinatorial_drop = drop_for_root(rep, roots[0]);
  r.exploratory = roots.size() > 1;
  return r;
}

} // namespace qp
