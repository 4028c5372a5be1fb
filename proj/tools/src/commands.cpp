#include "commands.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "json_io.hpp"
#include "ksix/catalog.hpp"
#include "ksix/error.hpp"
#include "reproduce.hpp"

namespace ksix::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kParseFailure = 2;

AbelianGroup read_group(const std::string& arg) { return group_from_json(load_argument(arg)); }

// "catalog:NAME:N" names a stored entry; anything else is JSON or a file.
std::optional<TotalSixInvariant> catalog_reference(const std::string& arg) {
  const std::string prefix = "catalog:";
  if (arg.rfind(prefix, 0) != 0) return std::nullopt;
  std::string rest = arg.substr(prefix.size());
  auto colon = rest.rfind(':');
  if (colon == std::string::npos) throw ParseError("expected catalog:NAME:N, got '" + arg + "'");
  unsigned long n = 0;
  try {
    n = std::stoul(rest.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("bad catalog parameter in '" + arg + "'");
  }
  return catalog_get(rest.substr(0, colon), n).invariant;
}

SixTermComplex read_complex(const std::string& arg) {
  if (auto t = catalog_reference(arg)) return t->integral;
  json j = load_argument(arg);
  if (j.is_object() && j.contains("integral")) return total_from_json(j).integral;
  return complex_from_json(j);
}

TotalSixInvariant read_total(const std::string& arg) {
  if (auto t = catalog_reference(arg)) return *t;
  return total_from_json(load_argument(arg));
}

std::set<unsigned long> shared_coefficients(const TotalSixInvariant& a, const TotalSixInvariant& b) {
  std::set<unsigned long> out;
  for (const auto& [n, layer] : a.coefficients)
    if (b.coefficients.count(n)) out.insert(n);
  return out;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json violation_to_json(const Violation& v) {
  json j{{"kind", v.kind}, {"position", v.position}, {"detail", v.detail}};
  if (v.n) j["n"] = *v.n;
  return j;
}

std::vector<std::size_t> parse_vertex_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string cleaned;
  for (char c : text) cleaned += (c == '{' || c == '}' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  long v = 0;
  while (in >> v) {
    if (v < 1) throw ParseError("vertices are numbered from 1");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (!in.eof()) throw ParseError("could not read vertex list '" + text + "'");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int print_claims(std::ostream& out, const std::string& title, const std::vector<Claim>& claims) {
  std::size_t passed = 0;
  for (const auto& c : claims) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.computed << " (expected " << c.expected
        << ")\n";
    if (c.pass) ++passed;
  }
  const bool ok = passed == claims.size();
  out << (ok ? "PASS" : "FAIL") << "  " << title << ": " << passed << "/" << claims.size() << " claims\n";
  return ok ? kOk : kMathFailure;
}

struct Cli {
  CLI::App app{"Exact computations with finitely generated abelian groups, six-term complexes, "
               "coefficient invariants and Cuntz-Krieger K-theory.",
               "ksix"};
  std::ostream& out;
  int code = kOk;

  std::string a, b, c, name, which, ideal;
  unsigned long n = 0;
  std::vector<unsigned long> coeffs;
  std::uint64_t bound = kDefaultExtensionBound;
  bool as_json = false;

  explicit Cli(std::ostream& o) : out(o) {
    app.require_subcommand(1);
    add_group();
    add_sixterm();
    add_total();
    add_catalog();
    add_grid();
    add_uct();
    add_ck();
    add_paper();
  }

  void add_group() {
    auto* g = app.add_subcommand("group", "Finitely generated abelian groups")->require_subcommand(1);
    auto* canon = g->add_subcommand("canon", "Canonical form of a group");
    canon->add_option("G", a, "group (shorthand, JSON or file)")->required();
    canon->callback([this] { print(out, group_to_json(read_group(a))); });

    auto two = [&](const char* verb, const char* help) {
      auto* s = g->add_subcommand(verb, help);
      s->add_option("G", a, "first group")->required();
      s->add_option("H", b, "second group")->required();
      return s;
    };
    two("hom", "Hom(G, H) with a basis of homomorphisms")->callback([this] {
      HomGroup h(read_group(a), read_group(b));
      json basis = json::array();
      for (const auto& f : h.basis()) basis.push_back(hom_to_json(f));
      print(out, json{{"group", group_to_json(h.group())}, {"basis", basis}});
    });
    two("ext", "Ext^1(G, H)")->callback([this] { print(out, group_to_json(ext1(read_group(a), read_group(b)))); });
    two("epi", "Whether a surjection G -> H exists")->callback([this] {
      print(out, json{{"exists", exists_epimorphism(read_group(a), read_group(b))}});
    });
    two("mono", "Whether an injection G -> H exists")->callback([this] {
      print(out, json{{"exists", exists_monomorphism(read_group(a), read_group(b))}});
    });
    auto* ext = g->add_subcommand("extensions", "Middle groups of extensions 0 -> S -> X -> Q -> 0");
    ext->add_option("Q", a, "quotient")->required();
    ext->add_option("S", b, "subgroup")->required();
    ext->add_option("--bound", bound, "largest Ext^1 to enumerate");
    ext->callback([this] {
      json arr = json::array();
      for (const auto& m : extension_middles(read_group(a), read_group(b), bound))
        arr.push_back(json{{"middle", to_string(m.middle)},
                           {"classes", m.classes},
                           {"representative", extension_to_json(m.representative)}});
      print(out, arr);
    });
  }

  void add_sixterm() {
    auto* s = app.add_subcommand("sixterm", "Cyclic six-term complexes")->require_subcommand(1);
    auto* check = s->add_subcommand("check", "Chain and exactness check at every position");
    check->add_option("C", a, "complex (JSON, file or catalog:NAME:N)")->required();
    check->callback([this] {
      ExactnessReport r = check_exact(read_complex(a));
      print(out, json{{"chain", r.chain}, {"exact", r.exact}, {"all_exact", r.all_exact()}});
      if (!r.all_exact()) code = kMathFailure;
    });
    auto two = [&](const char* verb, const char* help) {
      auto* t = s->add_subcommand(verb, help);
      t->add_option("C1", a, "first complex")->required();
      t->add_option("C2", b, "second complex")->required();
      return t;
    };
    two("hom", "Chain maps C1 -> C2")->callback([this] {
      ComplexHomGroup h = hom_z6(read_complex(a), read_complex(b));
      json basis = json::array();
      for (const auto& f : h.basis()) basis.push_back(complex_hom_to_json(f));
      print(out, json{{"group", group_to_json(h.group())}, {"basis", basis}});
    });
    two("ext", "Ext^1 in the category of cyclic complexes")->callback([this] {
      print(out, group_to_json(ext1_z6(read_complex(a), read_complex(b))));
    });
    two("sum", "Direct sum")->callback([this] {
      print(out, complex_to_json(direct_sum_complex(read_complex(a), read_complex(b))));
    });
    auto* susp = s->add_subcommand("suspend", "Rotate by three positions");
    susp->add_option("C", a, "complex")->required();
    susp->callback([this] { print(out, complex_to_json(suspend(read_complex(a)))); });
  }

  void add_total() {
    auto* t = app.add_subcommand("total", "Total invariants with mod-n layers")->require_subcommand(1);
    auto* val = t->add_subcommand("validate", "Chain, exactness, naturality and Bockstein checks");
    val->add_option("T", a, "total invariant (JSON, file or catalog:NAME:N)")->required();
    val->callback([this] {
      ValidationReport r = validate(read_total(a));
      json v = json::array();
      for (const auto& x : r.violations) v.push_back(violation_to_json(x));
      print(out, json{{"clean", r.clean()}, {"violations", v}});
      if (!r.clean()) code = kMathFailure;
    });
    auto* hl = t->add_subcommand("hom-lambda", "Homomorphisms respecting all Bockstein operations");
    hl->add_option("T1", a, "source")->required();
    hl->add_option("T2", b, "target")->required();
    hl->add_option("--coeff", coeffs, "coefficient moduli (default: those present in both)");
    hl->callback([this] {
      TotalSixInvariant t1 = read_total(a), t2 = read_total(b);
      std::set<unsigned long> cs = coeffs.empty() ? shared_coefficients(t1, t2)
                                                  : std::set<unsigned long>(coeffs.begin(), coeffs.end());
      LambdaHomGroup h = hom_lambda(t1, t2, cs);
      json basis = json::array();
      for (const auto& f : h.basis()) basis.push_back(lambda_hom_to_json(f));
      print(out, json{{"coefficients", cs},
                      {"group", group_to_json(h.group())},
                      {"basis", basis},
                      {"hom_z6", group_to_json(hom_z6(t1.integral, t2.integral).group())},
                      {"restriction_kernel", group_to_json(kernel_of_restriction(t1, t2, cs))}});
    });
    auto* sum = t->add_subcommand("sum", "Direct sum");
    sum->add_option("T1", a, "first")->required();
    sum->add_option("T2", b, "second")->required();
    sum->callback([this] { print(out, total_to_json(direct_sum_total(read_total(a), read_total(b)))); });
    auto* susp = t->add_subcommand("suspend", "Suspension");
    susp->add_option("T", a, "total invariant")->required();
    susp->callback([this] { print(out, total_to_json(suspend_total(read_total(a)))); });
  }

  void add_catalog() {
    auto* c = app.add_subcommand("catalog", "Stored building blocks")->require_subcommand(1);
    c->add_subcommand("list", "Names of stored entries")->callback([this] { print(out, json(catalog_names())); });
    auto* get = c->add_subcommand("get", "Total invariant of a stored entry");
    get->add_option("NAME", name, "entry name")->required();
    get->add_option("--n", n, "parameter n >= 2")->required();
    get->callback([this] {
      CatalogEntry e = catalog_get(name, n);
      json j = total_to_json(e.invariant);
      j["name"] = e.name;
      j["n"] = e.n;
      print(out, j);
    });
  }

  void add_grid() {
    auto* g = app.add_subcommand("grid", "Exact diagrams with one unknown group")->require_subcommand(1);
    auto* s = g->add_subcommand("solve", "All isomorphism classes consistent with the diagram");
    s->add_option("FILE", a, "diagram JSON")->required();
    s->add_option("--bound", bound, "largest Ext^1 to enumerate");
    s->add_flag("--json", as_json, "JSON output");
    s->callback([this] {
      GridSolution sol = solve(diagram_from_json(load_argument(a)), bound);
      if (as_json) {
        json cons = json::array(), classes = json::array();
        for (const auto& c : sol.constraints) cons.push_back(describe(c));
        for (const auto& c : sol.classes) {
          json w = json::array();
          for (const auto& e : c.witnesses) w.push_back(extension_to_json(e));
          classes.push_back(json{{"group", group_to_json(c.group)}, {"witnesses", w}});
        }
        print(out, json{{"constraints", cons}, {"classes", classes}, {"unique", sol.unique()}});
      } else {
        for (const auto& c : sol.constraints) out << "constraint  " << describe(c) << "\n";
        if (sol.inconsistent()) out << "inconsistent: no group satisfies every constraint\n";
        for (const auto& c : sol.classes) out << "class  " << to_string(c.form) << "\n";
        if (sol.unique()) out << "unique  " << to_string(sol.classes[0].form) << "\n";
      }
      if (sol.inconsistent()) code = kMathFailure;
    });
  }

  void add_uct() {
    auto* u = app.add_subcommand("uct", "Universal coefficient sequences")->require_subcommand(1);
    auto* s = u->add_subcommand("split-test", "Nonsplit when the middle is not Ext ⊕ Hom");
    s->add_option("--ext", a, "Ext term")->required();
    s->add_option("--hom", b, "Hom term")->required();
    s->add_option("--middle", c, "middle group")->required();
    s->callback([this] { out << to_string(split_test(read_group(a), read_group(b), read_group(c))) << "\n"; });
  }

  void add_ck() {
    auto* k = app.add_subcommand("ck", "Cuntz-Krieger algebras")->require_subcommand(1);
    auto* s = k->add_subcommand("analyze", "Condition (II), ideals, K-theory and six-term sequences");
    s->add_option("FILE", a, "matrix file (rows of integers or JSON)")->required();
    s->add_option("--ideal", ideal, "hereditary vertex set, 1-based, e.g. 1,2,3");
    s->callback([this] {
      CKMatrix m = ck_matrix_from_text(read_file(a));
      KGroups k = k_theory(m);
      out << "vertices   " << m.size() << "\n";
      out << "condition  " << (condition_check(m) ? "true" : "false") << "\n";
      out << "K0         " << to_string(k.k0) << "\n";
      out << "K1         " << to_string(k.k1) << "\n";
      auto ideals = ideal_lattice(m);
      out << "ideals     " << ideals.size() << "\n";
      for (const auto& h : ideals) out << "  " << format_vertex_set(h) << "\n";
      std::vector<HereditarySet> shown = ideals;
      if (!ideal.empty()) {
        HereditarySet h = parse_vertex_list(ideal);
        for (auto v : h)
          if (v >= m.size()) throw ParseError("vertex " + std::to_string(v + 1) + " is out of range");
        if (!is_hereditary(m, h)) {
          out << format_vertex_set(h) << " is not hereditary\n";
          code = kMathFailure;
          return;
        }
        shown = {h};
      }
      for (const auto& h : shown) {
        out << "six-term sequence for " << format_vertex_set(h) << "\n" << render_six_term(six_term(m, h));
      }
    });
  }

  void add_paper() {
    auto* p = app.add_subcommand("paper", "Reproduce the worked examples")->require_subcommand(1);
    auto* r = p->add_subcommand("reproduce", "Run a pipeline and print PASS/FAIL per claim");
    r->add_option("WHICH", which, "nonsplit, homlambda, ck or prop43")
        ->required()
        ->check(CLI::IsMember({"nonsplit", "homlambda", "ck", "prop43"}));
    r->add_option("--n", n, "parameter n >= 2")->default_val(2);
    r->callback([this] {
      if (which != "ck" && n < 2) throw MathError("--n must be at least 2");
      std::vector<Claim> claims;
      if (which == "nonsplit") claims = reproduce_nonsplit(n);
      if (which == "homlambda") claims = reproduce_homlambda(n);
      if (which == "ck") claims = reproduce_ck();
      if (which == "prop43") claims = reproduce_prop43(n);
      std::string title = which == "ck" ? which : which + " n=" + std::to_string(n);
      code = print_claims(out, title, claims);
    });
    auto* d = p->add_subcommand("diagram", "Print a worked diagram as grid input");
    d->add_option("WHICH", which, "nonsplit or grid4")->required()->check(CLI::IsMember({"nonsplit", "grid4"}));
    d->add_option("--n", n, "parameter n >= 2")->default_val(2);
    d->callback([this] { print(out, which == "nonsplit" ? nonsplitting_diagram(n) : four_by_four_diagram(n)); });
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = cli.app.exit(e, out, err);
    return rc == 0 ? kOk : kParseFailure;
  } catch (const ParseError& e) {
    err << "ksix: input error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "ksix: input error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const BoundExceeded& e) {
    err << "ksix: " << e.what() << "\n";
    return kMathFailure;
  } catch (const MathError& e) {
    err << "ksix: " << e.what() << "\n";
    return kMathFailure;
  }
  return cli.code;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ksix::cli
