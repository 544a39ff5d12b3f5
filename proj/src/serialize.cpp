#include "quadpairs/serialize.hpp"

#include "quadpairs/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qp {

namespace {

LengthClass parse_class(const std::string& s) {
  if (s == "long") return LengthClass::Long;
  if (s == "short") return LengthClass::Short;
  throw InvalidArgument("unknown length class '" + s + "'");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<int> parse_index(const std::string& digits) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return std::stoi(digits);
}

template <class T>
std::optional<T> opt_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

} // namespace

Json bigint_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(to_string(x));
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

void to_json(Json& j, const CartanType& t) { j = to_string(t); }

void from_json(const Json& j, CartanType& t) { t = parse_cartan_type(j.get<std::string>(), std::nullopt); }

void to_json(Json& j, const Weight& w) { j = w.coords; }
void from_json(const Json& j, Weight& w) { w = Weight(j.get<std::vector<int>>()); }

void to_json(Json& j, const Field& f) { j = to_string(f); }

void from_json(const Json& j, Field& f) {
  const auto s = j.get<std::string>();
  if (s == "Q") {
    f = Field::rationals();
  } else if (s.rfind("F_", 0) == 0 && parse_index(s.substr(2))) {
    f = Field::prime(static_cast<std::uint32_t>(*parse_index(s.substr(2))));
  } else {
    throw InvalidArgument("unknown field '" + s + "'");
  }
}

Json rep_to_json(const MinusculeRep& rep, bool with_orbit) {
  Json j;
  j["type"] = rep.type();
  j["weight"] = rep.fundamental_index ? Json(weight_label(*rep.fundamental_index))
                                      : Json(rep.highest_weight);
  j["name"] = rep.name;
  j["dimension"] = bigint_to_json(rep.dimension);
  j["sign"] = rep.sign;
  j["dual"] = rep.dual;
  Json q = Json::object();
  for (auto& [cls, ok] : rep.quadratic) q[to_string(cls)] = ok;
  j["quadratic"] = q;
  j["in_classical_table"] = rep.in_classical_table;
  if (with_orbit) {
    Json orbit = Json::array();
    for (const auto& w : rep.orbit.weights()) orbit.push_back(w);
    j["orbit"] = orbit;
  }
  return j;
}

MinusculeRep rep_from_json(const Json& j) {
  const CartanType t = j.at("type").get<CartanType>();
  const Json& w = j.at("weight");
  auto datum = shared_root_datum(t);
  MinusculeRep rep = w.is_string()
                         ? make_minuscule_rep(datum, Weight::fundamental(t.rank, parse_weight_label(t, w.get<std::string>())))
                         : make_minuscule_rep(datum, w.get<Weight>());
  if (bigint_from_json(j.at("dimension")) != rep.dimension || j.at("sign").get<int>() != rep.sign)
    throw InvalidArgument("stored dimension or sign disagrees with the recomputed representation");
  return rep;
}

void to_json(Json& j, const DropReport& r) {
  j = rep_to_json(r.rep);
  Json drops = Json::object();
  for (auto& [cls, d] : r.per_length_class) drops[to_string(cls)] = bigint_to_json(d);
  j["drops"] = drops;
  Json q = Json::object();
  for (auto& [cls, ok] : r.quadratic) q[to_string(cls)] = ok;
  j["quadratic"] = q;
}

void from_json(const Json& j, DropReport& r) {
  r.rep = rep_from_json(j);
  r.per_length_class.clear();
  r.quadratic.clear();
  for (auto& [k, v] : j.at("drops").items()) r.per_length_class[parse_class(k)] = bigint_from_json(v);
  for (auto& [k, v] : j.at("quadratic").items()) r.quadratic[parse_class(k)] = v.get<bool>();
}

void to_json(Json& j, const Candidate& c) {
  j = Json{{"type", c.type}, {"weight", c.weight_label}, {"name", c.name}, {"witness", c.witness}};
}

void from_json(const Json& j, Candidate& c) {
  c.type = j.at("type").get<CartanType>();
  c.weight_label = j.at("weight").get<std::string>();
  c.weight_index = parse_weight_label(c.type, c.weight_label);
  c.name = j.at("name").get<std::string>();
  c.witness = j.at("witness").get<int>();
}

void to_json(Json& j, const CandidateList& l) {
  j = Json{{"two_g", bigint_to_json(l.two_g)}, {"candidates", l.candidates}};
}

void from_json(const Json& j, CandidateList& l) {
  l.two_g = bigint_from_json(j.at("two_g"));
  l.candidates = j.at("candidates").get<std::vector<Candidate>>();
}

void to_json(Json& j, const UnipotenceReport& r) {
  j = Json{{"degree", r.degree}, {"drop", r.drop}, {"quadratic", r.quadratic}};
}

void from_json(const Json& j, UnipotenceReport& r) {
  r.degree = j.at("degree").get<int>();
  r.drop = j.at("drop").get<std::size_t>();
  r.quadratic = j.at("quadratic").get<bool>();
}

void to_json(Json& j, const TensorTrial& t) {
  j = Json{{"trial", t.trial},     {"dim1", t.dim1},       {"dim2", t.dim2},
           {"degree1", t.degree1}, {"degree2", t.degree2}, {"degree", t.degree}};
}

void from_json(const Json& j, TensorTrial& t) {
  t.trial = j.at("trial").get<int>();
  t.dim1 = j.at("dim1").get<std::size_t>();
  t.dim2 = j.at("dim2").get<std::size_t>();
  t.degree1 = j.at("degree1").get<int>();
  t.degree2 = j.at("degree2").get<int>();
  t.degree = j.at("degree").get<int>();
}

void to_json(Json& j, const TensorLemmaReport& r) {
  const auto& o = r.options;
  Json hist = Json::object();
  for (auto& [deg, n] : r.degree_histogram) hist[std::to_string(deg)] = n;
  j = Json{{"k1", o.k1},
           {"k2", o.k2},
           {"max_dim1", o.max_dim1},
           {"max_dim2", o.max_dim2},
           {"trials", o.trials},
           {"seed", o.seed},
           {"field", o.field},
           {"expected_degree", r.expected_degree},
           {"degree_histogram", hist},
           {"mismatches", r.mismatches},
           {"characteristic_deviations", r.characteristic_deviations},
           {"quadratic_counterexamples", r.quadratic_counterexamples},
           {"anomalies", r.anomalies},
           {"notes", r.notes},
           {"passed", r.passed}};
}

void from_json(const Json& j, TensorLemmaReport& r) {
  auto& o = r.options;
  o.k1 = j.at("k1").get<int>();
  o.k2 = j.at("k2").get<int>();
  o.max_dim1 = j.at("max_dim1").get<std::size_t>();
  o.max_dim2 = j.at("max_dim2").get<std::size_t>();
  o.trials = j.at("trials").get<int>();
  o.seed = j.at("seed").get<std::uint64_t>();
  from_json(j.at("field"), o.field);
  r.expected_degree = j.at("expected_degree").get<int>();
  r.degree_histogram.clear();
  for (auto& [k, v] : j.at("degree_histogram").items()) r.degree_histogram[std::stoi(k)] = v.get<int>();
  r.mismatches = j.at("mismatches").get<int>();
  r.characteristic_deviations = j.at("characteristic_deviations").get<int>();
  r.quadratic_counterexamples = j.at("quadratic_counterexamples").get<int>();
  r.anomalies = j.at("anomalies").get<std::vector<TensorTrial>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.passed = j.at("passed").get<bool>();
}

void to_json(Json& j, const RootElementReport& r) {
  Json roots = Json::array();
  for (std::size_t i : r.roots) roots.push_back(root_label(*r.rep.datum, i));
  j = rep_to_json(r.rep);
  j["roots"] = roots;
  j["field"] = r.field;
  j["signs"] = to_string(r.signs);
  j["unipotence"] = r.unipotence;
  j["combinatorial_drop"] = r.combinatorial_drop ? Json(*r.combinatorial_drop) : Json(nullptr);
  j["exploratory"] = r.exploratory;
}

void from_json(const Json& j, RootElementReport& r) {
  r.rep = rep_from_json(j);
  r.roots.clear();
  for (const auto& label : j.at("roots")) {
    auto idx = parse_root_spec(*r.rep.datum, label.get<std::string>());
    r.roots.insert(r.roots.end(), idx.begin(), idx.end());
  }
  from_json(j.at("field"), r.field);
  r.signs = parse_sign_convention(j.at("signs").get<std::string>());
  r.unipotence = j.at("unipotence").get<UnipotenceReport>();
  r.combinatorial_drop = opt_from<std::size_t>(j, "combinatorial_drop");
  r.exploratory = j.at("exploratory").get<bool>();
}

void to_json(Json& j, const PinkResult& r) {
  j = Json{{"proves", r.proves},
           {"reason", r.reason},
           {"kind", r.kind.empty() ? Json(nullptr) : Json(r.kind)},
           {"base", r.kind.empty() ? Json(nullptr) : bigint_to_json(r.base)},
           {"exponent", r.exponent ? Json(*r.exponent) : Json(nullptr)}};
}

void from_json(const Json& j, PinkResult& r) {
  r.proves = j.at("proves").get<bool>();
  r.reason = j.at("reason").get<std::string>();
  r.kind = opt_from<std::string>(j, "kind").value_or("");
  r.base = j.at("base").is_null() ? BigInt(0) : bigint_from_json(j.at("base"));
  r.exponent = opt_from<unsigned long>(j, "exponent");
}

void to_json(Json& j, const MtQuery& q) {
  j = Json{{"g", bigint_to_json(q.g)}, {"s", bigint_to_json(q.s)}, {"endo", to_string(q.endo)}};
}

void from_json(const Json& j, MtQuery& q) {
  q.g = bigint_from_json(j.at("g"));
  q.s = bigint_from_json(j.at("s"));
  q.endo = parse_endo(j.at("endo").get<std::string>());
}

void to_json(Json& j, const Witness& w) {
  j = Json{{"family", w.family},
           {"r_or_t", w.parameter + "=" + std::to_string(w.value)},
           {"g", bigint_to_json(w.g)},
           {"s", bigint_to_json(w.s)}};
}

void from_json(const Json& j, Witness& w) {
  w.family = j.at("family").get<int>();
  const auto rt = j.at("r_or_t").get<std::string>();
  const auto eq = rt.find('=');
  if (eq == std::string::npos || !parse_index(rt.substr(eq + 1)))
    throw InvalidArgument("malformed witness parameter '" + rt + "'");
  w.parameter = rt.substr(0, eq);
  w.value = *parse_index(rt.substr(eq + 1));
  w.g = bigint_from_json(j.at("g"));
  w.s = bigint_from_json(j.at("s"));
}

void to_json(Json& j, const MtVerdict& v) {
  j = Json{{"status", to_string(v.status)},
           {"target_group", v.target_group ? Json(*v.target_group) : Json(nullptr)},
           {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
           {"citations", v.citations},
           {"explanation", v.explanation},
           {"notes", v.notes},
           {"query", v.query}};
}

void from_json(const Json& j, MtVerdict& v) {
  v.status = parse_status(j.at("status").get<std::string>());
  v.target_group = opt_from<std::string>(j, "target_group");
  v.witness = opt_from<Witness>(j, "witness");
  v.citations = j.at("citations").get<std::vector<std::string>>();
  v.explanation = j.at("explanation").get<std::string>();
  v.notes = j.at("notes").get<std::vector<std::string>>();
  v.query = j.at("query").get<MtQuery>();
}

CartanType parse_cartan_type(const std::string& text, std::optional<int> rank) {
  const std::string s = lower(text);
  static const std::pair<const char*, Family> fixed[] = {
      {"e6", Family::E6}, {"e7", Family::E7}, {"f4", Family::F4}, {"g2", Family::G2}};
  for (auto& [name, f] : fixed) {
    if (s != name) continue;
    const CartanType t = CartanType::make(f);
    if (rank && *rank != t.rank)
      throw InvalidArgument("type " + text + " has rank " + std::to_string(t.rank));
    return t;
  }
  if (s.empty()) throw InvalidArgument("empty type label");
  Family f;
  switch (s[0]) {
  case 'a': f = Family::A; break;
  case 'b': f = Family::B; break;
  case 'c': f = Family::C; break;
  case 'd': f = Family::D; break;
  default: throw InvalidArgument("unknown type '" + text + "'");
  }
  std::optional<int> embedded;
  if (s.size() > 1) {
    embedded = parse_index(s.substr(1));
    if (!embedded) throw InvalidArgument("unknown type '" + text + "'");
  }
  if (embedded && rank && *embedded != *rank)
    throw InvalidArgument("type " + text + " conflicts with rank " + std::to_string(*rank));
  const auto n = embedded ? embedded : rank;
  if (!n) throw InvalidArgument("type " + text + " needs a rank");
  return CartanType::make(f, *n);
}

int parse_weight_label(const CartanType& t, const std::string& label) {
  const std::string s = lower(label);
  const int n = t.rank;
  std::optional<int> j;
  if (s.rfind("wedge", 0) == 0) {
    if (t.family != Family::A) throw InvalidArgument("wedge<j> labels are for type A only");
    j = parse_index(s.substr(5));
  } else if (s.size() > 1 && s[0] == 'w') {
    j = parse_index(s.substr(1));
  } else if (s == "std") {
    j = 1;
  } else if (s == "spin") {
    if (t.family == Family::D) throw InvalidArgument("spin is ambiguous for type D; use spin+ or spin-");
    if (t.family != Family::B) throw InvalidArgument("spin is defined for types B and D only");
    j = n;
  } else if (s == "spin+" || s == "spin-") {
    if (t.family != Family::D) throw InvalidArgument(label + " is defined for type D only");
    j = s == "spin+" ? n : n - 1;
  }
  if (!j) throw InvalidArgument("unknown weight label '" + label + "'");
  if (*j < 1 || *j > n)
    throw InvalidArgument("weight index " + std::to_string(*j) + " out of range for " + to_string(t));
  return *j;
}

} // namespace qp
