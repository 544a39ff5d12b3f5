#include "quadpairs/cli.hpp"

#include "quadpairs/errors.hpp"
#include "quadpairs/kernels.hpp"
#include "quadpairs/serialize.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace qp::cli {

namespace {

enum class Format { Json, Csv, Markdown };

struct Output {
  Json doc;
  Json rows = Json::array(); // flat records for csv / markdown
  std::vector<std::string> notes;
};

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::vector<std::string> columns_of(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void render(const Output& o, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << o.doc.dump(2) << '\n';
    return;
  }
  const auto cols = columns_of(o.rows);
  if (f == Format::Csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
    out << '\n';
    for (const auto& row : o.rows) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << csv_escape(cell_text(row.value(cols[i], Json(nullptr))));
      out << '\n';
    }
    return;
  }
  out << '|';
  for (const auto& c : cols) out << ' ' << md_escape(c) << " |";
  out << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& row : o.rows) {
    out << '|';
    for (const auto& c : cols) out << ' ' << md_escape(cell_text(row.value(c, Json(nullptr)))) << " |";
    out << '\n';
  }
  for (const auto& n : o.notes) out << "\nNote: " << n << '\n';
}

Json drops_json(const DropReport& r, LengthClass c) {
  auto it = r.per_length_class.find(c);
  return it == r.per_length_class.end() ? Json(nullptr) : bigint_to_json(it->second);
}

constexpr int kMaxTableRank = 16;

Output table_output(int max_rank) {
  if (max_rank < 1 || max_rank > kMaxTableRank)
    throw PreconditionError("--max-rank must lie in [1, " + std::to_string(kMaxTableRank) + "]");
  std::vector<CartanType> types;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    const int lo = f == Family::A ? 1 : (f == Family::D ? 3 : 2);
    for (int n = lo; n <= max_rank; ++n) types.push_back(CartanType::make(f, n));
  }
  if (max_rank >= 6) types.push_back(CartanType::make(Family::E6));
  if (max_rank >= 7) types.push_back(CartanType::make(Family::E7));

  Output o;
  bool exceptional = false;
  for (const auto& t : types) {
    for (const auto& rep : enumerate_minuscule(t)) {
      const DropReport d = drop_spectrum(rep);
      exceptional = exceptional || !rep.in_classical_table;
      o.rows.push_back(Json{{"family", family_name(t.family)},
                            {"rank", t.rank},
                            {"weight", weight_label(*rep.fundamental_index)},
                            {"dimension", bigint_to_json(rep.dimension)},
                            {"sign", rep.sign},
                            {"drops_long", drops_json(d, LengthClass::Long)},
                            {"drops_short", drops_json(d, LengthClass::Short)}});
    }
  }
  o.doc = o.rows;
  if (exceptional) o.notes.push_back("E6 and E7 rows lie outside the classical table.");
  return o;
}

Output single(Json doc) {
  Output o;
  o.rows.push_back(doc);
  o.doc = std::move(doc);
  return o;
}

MinusculeRep rep_for(const CartanType& t, const std::string& weight) {
  return make_minuscule_rep(t, parse_weight_label(t, weight));
}

Field field_for(std::optional<std::uint32_t> prime) {
  return prime ? Field::prime(*prime) : Field::rationals();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minuscule representations, root element drops and toric-dimension verdicts",
               "quadpairs"};
  app.require_subcommand(1);
  std::string kernel_choice = "auto";
  app.add_option("--kernels", kernel_choice, "Kernel implementation")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
  };

  std::function<Output()> action;

  int max_rank = 8;
  auto* table = app.add_subcommand("table", "Minuscule table with signs and drops");
  table->add_option("--max-rank", max_rank, "Largest rank listed");
  add_format(table);
  table->callback([&] { action = [&] { return table_output(max_rank); }; });

  std::string type_label, weight;
  std::optional<int> rank;
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", type_label, "Cartan type: A, B, C, D, E6, E7, F4, G2")->required();
    sub->add_option("--rank", rank, "Rank (classical types)");
  };

  bool with_orbit = false;
  auto* minuscule = app.add_subcommand("minuscule", "Minuscule representations of a type");
  add_type(minuscule);
  minuscule->add_flag("--orbit", with_orbit, "Include the weight orbit");
  add_format(minuscule);
  minuscule->callback([&] {
    action = [&] {
      Output o;
      for (const auto& rep : enumerate_minuscule(parse_cartan_type(type_label, rank)))
        o.rows.push_back(rep_to_json(rep, with_orbit));
      o.doc = o.rows;
      return o;
    };
  });

  auto* drops = app.add_subcommand("drops", "Root element drops on a minuscule representation");
  add_type(drops);
  drops->add_option("--weight", weight, "w<j>, std, spin, spin+, spin-, wedge<j>")->required();
  add_format(drops);
  drops->callback([&] {
    action = [&] { return single(Json(drop_spectrum(rep_for(parse_cartan_type(type_label, rank), weight)))); };
  });

  std::string two_g;
  auto* classify = app.add_subcommand("classify", "Symplectic minuscule representations of dimension 2g");
  classify->add_option("--two-g", two_g, "Even dimension")->required();
  add_format(classify);
  classify->callback([&] {
    action = [&] {
      const CandidateList l = classify_symplectic_minuscule(parse_bigint(two_g));
      Output o;
      o.doc = l;
      for (const auto& c : l.candidates) {
        Json row{{"two_g", bigint_to_json(l.two_g)}};
        row.update(Json(c));
        o.rows.push_back(row);
      }
      return o;
    };
  });

  std::string g_text, s_text, endo = "Z";
  auto* mt = app.add_subcommand("mt-check", "Verdict for (g, s, endomorphism type)");
  mt->add_option("--g", g_text, "Dimension of the abelian variety")->required();
  mt->add_option("--s", s_text, "Toric dimension (0: no bad place known)")->required();
  mt->add_option("--endo", endo, "Z, II or III")->required();
  add_format(mt);
  mt->callback([&] {
    action = [&] {
      return single(Json(mt_check({parse_bigint(g_text), parse_bigint(s_text), parse_endo(endo)})));
    };
  });

  std::string max_g;
  auto* exc = app.add_subcommand("mt-exceptional", "Exceptional (g, s) pairs up to a bound");
  exc->add_option("--max-g", max_g, "Largest g")->required();
  exc->add_option("--endo", endo, "Z, II or III")->required();
  add_format(exc);
  exc->callback([&] {
    action = [&] {
      const EndoType e = parse_endo(endo);
      const BigInt bound = parse_bigint(max_g);
      Output o;
      for (const auto& w : enumerate_exceptional(bound, e)) o.rows.push_back(w);
      if (e == EndoType::TrivialZ && bound >= 84) o.notes.push_back(kFamilyOneNote);
      o.doc = Json{{"endo", to_string(e)}, {"max_g", bigint_to_json(bound)}, {"pairs", o.rows},
                   {"notes", o.notes}};
      return o;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force matrix checks");
  oracle->require_subcommand(1);

  TensorLemmaOptions opts;
  std::optional<std::uint32_t> prime;
  auto* tl = oracle->add_subcommand("tensor-lemma", "Degree of tensor products of random unipotents");
  tl->add_option("--k1", opts.k1)->required();
  tl->add_option("--k2", opts.k2)->required();
  tl->add_option("--trials", opts.trials)->required();
  tl->add_option("--seed", opts.seed)->required();
  tl->add_option("--dim1", opts.max_dim1, "Largest dimension of the first factor");
  tl->add_option("--dim2", opts.max_dim2, "Largest dimension of the second factor");
  tl->add_option("--prime", prime, "Work over F_p instead of Q");
  add_format(tl);
  tl->callback([&] {
    action = [&] {
      opts.field = field_for(prime);
      return single(Json(verify_tensor_lemma(opts)));
    };
  });

  std::string roots, signs = "index-parity";
  auto* od = oracle->add_subcommand("drop", "Matrix of a root element product, degree and drop");
  add_type(od);
  od->add_option("--weight", weight, "w<j>, std, spin, spin+, spin-, wedge<j>")->required();
  od->add_option("--roots", roots, "Comma-separated roots: e1-e2, e1+e2, 2e1, a<i>, theta")->required();
  od->add_option("--prime", prime, "Work over F_p instead of Q");
  od->add_option("--signs", signs, "Structure constant convention")
      ->check(CLI::IsMember({"positive", "index-parity"}));
  add_format(od);
  od->callback([&] {
    action = [&] {
      const MinusculeRep rep = rep_for(parse_cartan_type(type_label, rank), weight);
      const auto idx = parse_root_spec(*rep.datum, roots);
      return single(Json(root_element_report(rep, idx, field_for(prime), parse_sign_convention(signs))));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (kernel_choice == "scalar") kernels::set_active_isa(kernels::Isa::Scalar);
    else if (kernel_choice == "avx2") kernels::set_active_isa(kernels::Isa::Avx2);
    const Output o = action();
    const Format f = format == "csv" ? Format::Csv : format == "markdown" ? Format::Markdown : Format::Json;
    std::ostringstream buf;
    render(o, f, buf);
    out << buf.str();
    return 0;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

} // namespace qp::cli
