#include "json_io.hpp"

#include <climits>
#include <fstream>
#include <regex>
#include <sstream>

#include "ksix/error.hpp"

namespace ksix::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json load_argument(const std::string& arg) {
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[' || arg[first] == '"')) {
    text = arg;
  } else if (std::ifstream(arg).good()) {
    text = read_file(arg);
  } else {
    return json(arg);  // group shorthand such as "Z_2"
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.dump());
    return x;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (j.is_null() || (j.is_number() && integer_from_json(j) == 0) || (j.is_array() && j.empty()))
    return IntMatrix(rows, cols);
  IntMatrix m = matrix_from_json(j);
  if (rows == 0 || cols == 0) {
    if (!m.is_zero()) throw ParseError("nonzero matrix for a map touching a zero-generator group");
    return IntMatrix(rows, cols);
  }
  if (m.rows() != rows || m.cols() != cols)
    throw ParseError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows), got " + j.dump());
  const std::size_t rows = j.size();
  std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged or malformed matrix row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

AbelianGroup group_from_shorthand(const std::string& text) {
  std::string s;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 3, "⊕") == 0) {
      s += '+';
      i += 3;
    } else {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) s += text[i];
      ++i;
    }
  }
  if (s == "0") return AbelianGroup();
  static const std::regex term(R"(Z(\^(\d+))?|Z_\{?(\d+)\}?)");
  std::size_t rank = 0;
  IntVector torsion;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(start, end - start);
    std::smatch m;
    if (!std::regex_match(part, m, term)) throw ParseError("cannot read group '" + text + "'");
    if (m[3].matched) {
      Integer d(m[3].str());
      if (d == 0) throw ParseError("Z_0 is ambiguous; write Z");
      torsion.push_back(d);
    } else {
      rank += m[2].matched ? std::stoul(m[2].str()) : 1;
    }
    start = end + 1;
  }
  return AbelianGroup::from_invariants(rank, torsion);
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

AbelianGroup group_from_json(const json& j) {
  if (j.is_string()) return group_from_shorthand(j.get<std::string>());
  if (!j.is_object()) throw ParseError("expected a group, got " + j.dump());
  if (j.contains("presentation")) {
    const json& p = j["presentation"];
    if (p.is_array() && !p.empty() && p[0].is_array() && p[0].empty()) {
      for (const auto& row : p)
        if (!row.is_array() || !row.empty()) throw ParseError("ragged presentation");
      return AbelianGroup::free(p.size());
    }
    return AbelianGroup(matrix_from_json(p));
  }
  std::size_t rank = 0;
  if (j.contains("rank")) {
    Integer r = integer_from_json(j["rank"]);
    if (r < 0 || !r.fits_ulong_p()) throw ParseError("rank must be a nonnegative integer");
    rank = r.get_ui();
  }
  IntVector torsion;
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) throw ParseError("torsion must be an array");
    for (const auto& d : j["torsion"]) {
      Integer x = integer_from_json(d);
      if (x < 1) throw ParseError("torsion orders must be positive");
      torsion.push_back(x);
    }
  }
  if (!j.contains("rank") && !j.contains("torsion")) throw ParseError("group needs 'presentation' or 'rank'/'torsion'");
  return AbelianGroup::from_invariants(rank, torsion);
}

json group_to_json(const AbelianGroup& g) {
  json out;
  json pres = json::array();
  for (std::size_t r = 0; r < g.generators(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.relations().cols(); ++c) row.push_back(integer_to_json(g.relations()(r, c)));
    pres.push_back(std::move(row));
  }
  out["presentation"] = std::move(pres);
  out["rank"] = g.canonical().rank;
  json t = json::array();
  for (const auto& d : g.canonical().torsion) t.push_back(integer_to_json(d));
  out["torsion"] = std::move(t);
  out["canonical"] = to_string(g);
  return out;
}

json hom_to_json(const GroupHom& f) { return json{{"matrix", matrix_to_json(f.matrix())}}; }

SixTermComplex complex_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a six-term complex object");
  const json& gs = field(j, "groups");
  if (!gs.is_array() || gs.size() != 6) throw ParseError("'groups' must list six groups");
  std::array<AbelianGroup, 6> groups;
  for (std::size_t p = 0; p < 6; ++p) groups[p] = group_from_json(gs[p]);
  std::array<IntMatrix, 6> maps;
  const json ms = j.contains("maps") ? j["maps"] : json::array({0, 0, 0, 0, 0, 0});
  if (!ms.is_array() || ms.size() != 6) throw ParseError("'maps' must list six matrices");
  for (std::size_t p = 0; p < 6; ++p) {
    const json& mj = ms[p].is_object() ? field(ms[p], "matrix") : ms[p];
    maps[p] = matrix_from_json(mj, groups[next_pos(p)].generators(), groups[p].generators());
  }
  bool exact = j.value("exact", false);
  return SixTermComplex(groups, maps, exact);
}

json complex_to_json(const SixTermComplex& c) {
  json groups = json::array(), maps = json::array();
  for (std::size_t p = 0; p < 6; ++p) {
    groups.push_back(group_to_json(c.group(p)));
    maps.push_back(matrix_to_json(c.map(p).matrix()));
  }
  return json{{"groups", groups}, {"maps", maps}, {"exact", c.flagged_exact()}};
}

json complex_hom_to_json(const ComplexHom& h) {
  json comps = json::array();
  for (const auto& f : h.components) comps.push_back(matrix_to_json(f.matrix()));
  return comps;
}

TotalSixInvariant total_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a total invariant object");
  TotalSixInvariant inv{complex_from_json(field(j, "integral")), {}};
  if (!j.contains("coefficients")) return inv;
  const json& cs = j["coefficients"];
  if (!cs.is_object()) throw ParseError("'coefficients' must be an object keyed by n");
  for (const auto& [key, layer] : cs.items()) {
    unsigned long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("coefficient key '" + key + "' is not a positive integer");
    }
    SixTermComplex modn = complex_from_json(field(layer, "complex"));
    const json& rj = field(layer, "rho");
    const json& bj = field(layer, "beta");
    if (!rj.is_array() || rj.size() != 6 || !bj.is_array() || bj.size() != 6)
      throw ParseError("'rho' and 'beta' must list six matrices");
    std::array<IntMatrix, 6> rho, beta;
    for (std::size_t p = 0; p < 6; ++p) {
      rho[p] = matrix_from_json(rj[p], modn.group(p).generators(), inv.integral.group(p).generators());
      beta[p] = matrix_from_json(bj[p], inv.integral.group(next_pos(p, 3)).generators(), modn.group(p).generators());
    }
    inv.coefficients.emplace(n, make_layer(inv.integral, std::move(modn), rho, beta));
  }
  return inv;
}

json total_to_json(const TotalSixInvariant& inv) {
  json coeffs = json::object();
  for (const auto& [n, layer] : inv.coefficients) {
    json rho = json::array(), beta = json::array();
    for (std::size_t p = 0; p < 6; ++p) {
      rho.push_back(matrix_to_json(layer.rho[p].matrix()));
      beta.push_back(matrix_to_json(layer.beta[p].matrix()));
    }
    coeffs[std::to_string(n)] = json{{"complex", complex_to_json(layer.complex)}, {"rho", rho}, {"beta", beta}};
  }
  return json{{"integral", complex_to_json(inv.integral)}, {"coefficients", coeffs}};
}

json lambda_hom_to_json(const LambdaHom& h) {
  json coeffs = json::object();
  for (const auto& [n, c] : h.coefficients) coeffs[std::to_string(n)] = complex_hom_to_json(c);
  return json{{"integral", complex_hom_to_json(h.integral)}, {"coefficients", coeffs}};
}

DiagramSpec diagram_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a diagram object");
  DiagramSpec spec;
  const json& nodes = field(j, "nodes");
  if (!nodes.is_object()) throw ParseError("'nodes' must map ids to groups");
  for (const auto& [id, g] : nodes.items()) {
    if (g.is_string() && g.get<std::string>() == "unknown")
      spec.nodes[id] = std::nullopt;
    else
      spec.nodes[id] = group_from_json(g);
  }
  spec.unknown = field(j, "unknown").get<std::string>();
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      GridEdge edge{field(e, "from").get<std::string>(), field(e, "to").get<std::string>(), std::nullopt};
      if (!spec.nodes.count(edge.from) || !spec.nodes.count(edge.to))
        throw ParseError("edge " + edge.from + " -> " + edge.to + " names an undeclared node");
      if (e.contains("matrix")) {
        const auto& a = spec.nodes[edge.from];
        const auto& b = spec.nodes[edge.to];
        if (!a || !b) throw ParseError("edge " + edge.from + " -> " + edge.to + " touches the unknown; omit its matrix");
        edge.matrix = matrix_from_json(e["matrix"], b->generators(), a->generators());
      }
      spec.edges.push_back(std::move(edge));
    }
  }
  for (const auto& path : field(j, "exact_paths")) {
    std::vector<std::string> ids;
    for (const auto& id : path) {
      std::string s = id.get<std::string>();
      if (!spec.nodes.count(s)) throw ParseError("exact path names undeclared node '" + s + "'");
      ids.push_back(std::move(s));
    }
    spec.exact_paths.push_back(std::move(ids));
  }
  if (j.contains("constraints")) {
    for (const auto& c : j["constraints"]) {
      std::string type = field(c, "type").get<std::string>();
      GridConstraint gc;
      if (type == "quotient_of") {
        gc.kind = GridConstraint::Kind::QuotientOf;
        gc.group = group_from_json(field(c, "group"));
      } else if (type == "exponent_divides") {
        gc.kind = GridConstraint::Kind::ExponentDivides;
        gc.value = integer_from_json(field(c, "value"));
      } else {
        throw ParseError("unknown constraint type '" + type + "'");
      }
      spec.constraints.push_back(std::move(gc));
    }
  }
  return spec;
}

CKMatrix ck_matrix_from_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return CKMatrix(matrix_from_json(json::parse(text)));
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON matrix: ") + e.what());
    }
  }
  std::vector<IntVector> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t cols = 0;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    IntVector row;
    std::string tok;
    while (in >> tok) {
      Integer x;
      if (x.set_str(tok, 10) != 0) throw ParseError("not an integer: '" + tok + "'");
      row.push_back(x);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != cols) throw ParseError("ragged matrix rows");
    cols = row.size();
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return CKMatrix(IntMatrix::from_rows(rows, cols));
}

json extension_to_json(const ExtensionClass& e) {
  return json{{"quotient", group_to_json(e.quotient)},
              {"sub", group_to_json(e.sub)},
              {"cocycle", matrix_to_json(e.cocycle)},
              {"middle", group_to_json(e.middle)}};
}

}  // namespace ksix::cli
