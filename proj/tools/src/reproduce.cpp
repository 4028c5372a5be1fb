#include "reproduce.hpp"

#include "ksix/catalog.hpp"

namespace ksix::cli {

namespace {

Claim same_group(std::string name, const AbelianGroup& computed, const CanonicalForm& expected) {
  return {std::move(name), to_string(computed), to_string(expected), computed.canonical() == expected};
}

Claim truth(std::string name, bool computed, bool expected) {
  auto word = [](bool b) { return std::string(b ? "true" : "false"); };
  return {std::move(name), word(computed), word(expected), computed == expected};
}

CanonicalForm zn(unsigned long n) { return {0, {Integer(n)}}; }

std::string grid_result(const GridSolution& sol) {
  if (sol.inconsistent()) return "inconsistent";
  std::string s;
  for (const auto& c : sol.classes) s += (s.empty() ? "" : " | ") + to_string(c.form);
  return s;
}

json node(const char* id, json group) { return {id, std::move(group)}; }

json edge(const char* from, const char* to, long entry) {
  return {{"from", from}, {"to", to}, {"matrix", json::array({json::array({entry})})}};
}

json edge(const char* from, const char* to) { return {{"from", from}, {"to", to}}; }

std::string one_line(const SixTermComplex& c) {
  std::string s = render_six_term(c);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::string out;
  for (char ch : s) {
    if (ch == '\n')
      out += " / ";
    else if (ch != ' ' || (!out.empty() && out.back() != ' '))
      out += ch;
  }
  return out;
}

TotalSixInvariant entry(const char* name, unsigned long n) { return catalog_get(name, n).invariant; }

}  // namespace

json nonsplitting_diagram(unsigned long n) {
  const std::string zn = "Z_" + std::to_string(n);
  json j;
  j["nodes"] = json::object({node("zl", "Z"), node("zr", "Z"), node("X", "unknown"), node("zero", "0"),
                             node("a", zn), node("b", zn)});
  j["unknown"] = "X";
  j["edges"] = json::array({edge("zr", "X"), edge("a", "X"), edge("X", "b")});
  j["exact_paths"] = json::array({json::array({"zl", "zr", "X", "zero"}), json::array({"zero", "a", "X", "b", "zero"})});
  return j;
}

json four_by_four_diagram(unsigned long n) {
  const std::string zn = "Z_" + std::to_string(n);
  const long nl = static_cast<long>(n);
  json j;
  j["nodes"] = json::object({node("zero", "0"), node("a1", "0"), node("a2", zn), node("a3", zn),
                             node("b1", "Z"), node("b2", "unknown"), node("b3", zn),
                             node("c1", "Z"), node("c2", "Z"), node("c3", "0"),
                             node("d1", zn), node("d2", zn), node("d3", "0")});
  j["unknown"] = "b2";
  j["edges"] = json::array({edge("a2", "a3", 1), edge("a3", "b3", 1), edge("b1", "c1", nl), edge("c1", "d1", 1),
                            edge("c1", "c2", 1), edge("d1", "d2", 1), edge("c2", "d2", 1), edge("a2", "b2"),
                            edge("b1", "b2"), edge("b2", "b3"), edge("b2", "c2")});
  j["exact_paths"] = json::array({
      json::array({"zero", "a1", "a2", "a3", "zero"}),
      json::array({"zero", "b1", "b2", "b3", "zero"}),
      json::array({"zero", "c1", "c2", "c3", "zero"}),
      json::array({"zero", "d1", "d2", "d3", "zero"}),
      json::array({"zero", "a1", "b1", "c1", "d1", "zero"}),
      json::array({"zero", "a2", "b2", "c2", "d2", "zero"}),
      json::array({"zero", "a3", "b3", "c3", "d3", "zero"}),
  });
  return j;
}

CKMatrix named_ck_matrix(char name) {
  switch (name) {
    case 'A':
    case 'C':
      return CKMatrix(IntMatrix{{1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
                                {0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1}});
    case 'B':
      return CKMatrix(IntMatrix{{1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0},
                                {0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1}});
    case 'D':
      return CKMatrix(IntMatrix{{1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
                                {0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1}});
    default:
      throw ParseError(std::string("no stored matrix named '") + name + "'");
  }
}

SixTermComplex expected_ck_sequence(char name) {
  const AbelianGroup z = AbelianGroup::free(1), z2 = AbelianGroup::cyclic(2), zero;
  std::array<AbelianGroup, 6> g;
  if (name == 'A')
    g = {z, z, z2, z, z, zero};
  else if (name == 'B')
    g = {z2, z, z, zero, z, z};
  else
    throw ParseError(std::string("no displayed sequence for '") + name + "'");
  std::array<IntMatrix, 6> f;
  for (std::size_t p = 0; p < 6; ++p) f[p] = IntMatrix(g[next_pos(p)].generators(), g[p].generators());
  if (name == 'A') {
    f[0] = IntMatrix{{2}};
    f[1] = IntMatrix{{1}};
    f[3] = IntMatrix{{1}};
  } else {
    f[1] = IntMatrix{{1}};
    f[4] = IntMatrix{{2}};
    f[5] = IntMatrix{{1}};
  }
  return SixTermComplex(g, f, true);
}

std::vector<Claim> reproduce_nonsplit(unsigned long n) {
  std::vector<Claim> out;
  const Integer nn(n), n2 = nn * nn;
  const CanonicalForm target{0, {n2}};

  GridSolution sol = solve(diagram_from_json(nonsplitting_diagram(n)));
  out.push_back({"KK-middle candidate", grid_result(sol), to_string(target),
                 sol.unique() && sol.classes[0].form == target});

  auto e0 = entry("e0", n), e1 = entry("e1", n), se1 = entry("Se1", n);
  AbelianGroup hom = hom_z6(e0.integral, se1.integral).group();
  AbelianGroup ext = ext1_z6(e0.integral, e1.integral);
  out.push_back(same_group("Hom", hom, zn(n)));
  out.push_back(same_group("Ext", ext, zn(n)));

  const AbelianGroup middle = AbelianGroup::from_invariants(0, {n2});
  SplitVerdict v = split_test(ext, hom, middle);
  out.push_back({"verdict", to_string(v), to_string(SplitVerdict::Nonsplit), v == SplitVerdict::Nonsplit});

  Order e = exponent(hom_lambda(e0, se1, {n}).group());
  out.push_back({"exponent of Hom_Lambda divides n", to_string(e), "divides " + nn.get_str(),
                 e.has_value() && nn % *e == 0});

  Order top;
  if (sol.unique()) top = exponent(sol.classes[0].group);
  out.push_back({"middle has an element of order n^2", to_string(top), n2.get_str(), top == Order(n2)});
  return out;
}

std::vector<Claim> reproduce_homlambda(unsigned long n) {
  std::vector<Claim> out;
  const Integer nn(n);
  const CanonicalForm kk{1, {nn}}, lambda{1, {nn, nn}};

  GridSolution sol = solve(diagram_from_json(four_by_four_diagram(n)));
  out.push_back({"KK middle group", grid_result(sol), to_string(kk), sol.unique() && sol.classes[0].form == kk});

  auto e0 = entry("e0", n), e1 = entry("e1", n);
  AbelianGroup h = hom_lambda(e1, e0, {n}).group();
  out.push_back(same_group("Hom_Lambda", h, lambda));

  AbelianGroup kk_group = AbelianGroup::from_invariants(1, {nn});
  out.push_back(truth("epimorphism KK -> Hom_Lambda exists", exists_epimorphism(kk_group, h), false));

  GroupHom r = restriction_map(e1, e0, {n});
  out.push_back(truth("restriction to Hom_Z6 is surjective", is_surjective(r), true));
  out.push_back(same_group("kernel of the restriction", kernel(r).group, zn(n)));
  return out;
}

std::vector<Claim> reproduce_ck() {
  std::vector<Claim> out;
  for (char c : {'A', 'B', 'C', 'D'})
    out.push_back(truth(std::string("condition (II) for ") + c, condition_check(named_ck_matrix(c)), true));
  for (char c : {'A', 'B'}) {
    CKMatrix m = named_ck_matrix(c);
    auto ideals = ideal_lattice(m);
    out.push_back({std::string("nontrivial ideals of ") + c, std::to_string(ideals.size()), "1", ideals.size() == 1});
    const HereditarySet h{0, 1, 2};
    out.push_back(truth(std::string("{1,2,3} hereditary in ") + c, is_hereditary(m, h), true));
    SixTermComplex computed = six_term(m, h);
    SixTermComplex expected = expected_ck_sequence(c);
    out.push_back(truth(std::string("six-term sequence of ") + c + " is exact", check_exact(computed).all_exact(), true));
    bool iso = find_complex_isomorphism(computed, expected).has_value();
    out.push_back({std::string("six-term sequence of ") + c, one_line(computed), one_line(expected), iso});
  }
  return out;
}

std::vector<Claim> reproduce_prop43(unsigned long n) {
  std::vector<Claim> out;
  const std::set<unsigned long> coeffs{n};
  const std::array<const char*, 3> names{"Se1", "e1", "e0"};
  std::array<TotalSixInvariant, 3> parts;
  for (std::size_t i = 0; i < 3; ++i) parts[i] = entry(names[i], n);
  const TotalSixInvariant e = entry("Se1+e1+e0", n);

  out.push_back(truth("total invariant of the sum validates", validate(e).clean(), true));

  LambdaHomGroup end_lambda = hom_lambda(e, e, coeffs);
  ComplexHomGroup end_z6 = hom_z6(e.integral, e.integral);

  AbelianGroup sum;
  for (const auto& a : parts)
    for (const auto& b : parts) sum = direct_sum(sum, hom_lambda(a, b, coeffs).group()).group;
  out.push_back(same_group("Hom_Lambda(e, e) is additive over summands", end_lambda.group(), sum.canonical()));

  AbelianGroup sum_z6;
  for (const auto& a : parts)
    for (const auto& b : parts) sum_z6 = direct_sum(sum_z6, hom_z6(a.integral, b.integral).group()).group;
  out.push_back(same_group("Hom_Z6(e, e) is additive over summands", end_z6.group(), sum_z6.canonical()));

  GroupHom r = restriction_map(e, e, coeffs);
  out.push_back(truth("restriction Hom_Lambda -> Hom_Z6 is surjective", is_surjective(r), true));
  Subgroup ker = kernel(r);
  out.push_back(truth("kernel of the restriction is nonzero", !ker.group.is_trivial(), true));

  const LambdaHom id = identity_lambda(e, coeffs);
  const IntVector id_coords = end_lambda.coordinates(id);
  bool all_auto = true, all_differ = true, all_restrict_id = true;
  const IntMatrix& inc = ker.inclusion.matrix();
  for (std::size_t k = 0; k < inc.cols(); ++k) {
    IntVector beta = inc.column(k);
    if (end_lambda.group().is_zero(beta)) continue;
    IntVector c = id_coords;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += beta[i];
    LambdaHom alpha = end_lambda.evaluate(c);
    all_auto = all_auto && is_lambda_hom(e, e, alpha) && is_isomorphism_lambda(alpha);
    all_differ = all_differ && !end_lambda.group().equal(c, id_coords);
    all_restrict_id = all_restrict_id && restriction_to_integral(alpha).is_bijective();
  }
  out.push_back(truth("id + beta restricts to an isomorphism on Ksix(e)", all_restrict_id, true));
  out.push_back(truth("id + beta is an automorphism of the total invariant", all_auto, true));
  out.push_back(truth("id + beta differs from id", all_differ, true));
  return out;
}

}  // namespace ksix::cli
