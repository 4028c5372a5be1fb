#include "ksix/coeff.hpp"

#include <algorithm>

#include "ksix/error.hpp"

namespace ksix {

CoefficientLayer make_layer(const SixTermComplex& integral, SixTermComplex modn,
                            const std::array<IntMatrix, 6>& rho, const std::array<IntMatrix, 6>& beta) {
  CoefficientLayer layer{std::move(modn), {}, {}};
  for (std::size_t p = 0; p < 6; ++p) {
    try {
      layer.rho.emplace_back(integral.group(p), layer.complex.group(p), rho[p]);
    } catch (const MathError& e) {
      throw MathError("rho_" + std::to_string(p) + ": " + e.what());
    }
    try {
      layer.beta.emplace_back(layer.complex.group(p), integral.group(next_pos(p, 3)), beta[p]);
    } catch (const MathError& e) {
      throw MathError("beta_" + std::to_string(p) + ": " + e.what());
    }
  }
  return layer;
}

namespace {

void check_complex(const SixTermComplex& c, std::optional<unsigned long> n, std::vector<Violation>& out) {
  ExactnessReport r = check_exact(c);
  for (std::size_t p = 0; p < 6; ++p) {
    if (!r.chain[p]) out.push_back({"chain", n, p, "f_" + std::to_string(next_pos(p)) + " f_" + std::to_string(p) + " != 0"});
    if (c.flagged_exact() && !r.exact[p]) out.push_back({"exact", n, p, "not exact at node " + std::to_string(p)});
  }
}

}  // namespace

ValidationReport validate(const TotalSixInvariant& inv) {
  ValidationReport report;
  auto& out = report.violations;
  check_complex(inv.integral, std::nullopt, out);
  for (const auto& [n, layer] : inv.coefficients) {
    check_complex(layer.complex, n, out);
    for (std::size_t p = 0; p < 6; ++p) {
      const std::size_t q = next_pos(p);
      if (!(compose(layer.complex.map(p), layer.rho[p]) == compose(layer.rho[q], inv.integral.map(p))))
        out.push_back({"rho-natural", n, p, "f^n_p rho_p != rho_{p+1} f_p"});
      if (!(compose(inv.integral.map(next_pos(p, 3)), layer.beta[p]) == compose(layer.beta[q], layer.complex.map(p))))
        out.push_back({"beta-natural", n, p, "f_{p+3} beta_p != beta_{p+1} f^n_p"});

      const AbelianGroup& g = inv.integral.group(p);
      GroupHom times_n = GroupHom::multiplication(g, Integer(n));
      if (!is_exact_at(layer.beta[next_pos(p, 3)], times_n))
        out.push_back({"bockstein", n, p, "im beta_{p+3} != ker n on G_p"});
      if (!is_exact_at(times_n, layer.rho[p])) out.push_back({"bockstein", n, p, "im n != ker rho_p"});
      if (!is_exact_at(layer.rho[p], layer.beta[p])) out.push_back({"bockstein", n, p, "im rho_p != ker beta_p"});
    }
  }
  return report;
}

TotalSixInvariant total_from_free(const SixTermComplex& c, const std::set<unsigned long>& coeffs) {
  for (std::size_t p = 0; p < 6; ++p)
    if (!c.group(p).is_torsion_free())
      throw MathError("total_from_free: G_" + std::to_string(p) + " = " + to_string(c.group(p)) +
                      " has torsion; supply coefficient data explicitly");
  TotalSixInvariant inv{c, {}};
  for (unsigned long n : coeffs) {
    if (n < 2) throw MathError("coefficient must be at least 2");
    std::array<AbelianGroup, 6> groups;
    std::array<IntMatrix, 6> maps, rho, beta;
    for (std::size_t p = 0; p < 6; ++p) {
      const AbelianGroup& g = c.group(p);
      const std::size_t k = g.generators();
      groups[p] = AbelianGroup(hstack(g.relations(), Integer(n) * IntMatrix::identity(k)));
      maps[p] = c.map(p).matrix();
      rho[p] = IntMatrix::identity(k);
    }
    for (std::size_t p = 0; p < 6; ++p) beta[p] = IntMatrix(c.group(next_pos(p, 3)).generators(), groups[p].generators());
    SixTermComplex modn(groups, maps, c.flagged_exact());
    inv.coefficients.emplace(n, make_layer(c, std::move(modn), rho, beta));
  }
  return inv;
}

LambdaHomGroup::LambdaHomGroup(HomSolution solution, std::vector<unsigned long> coeffs)
    : solution_(std::move(solution)), coeffs_(std::move(coeffs)) {}

HomFamily LambdaHomGroup::flatten(const LambdaHom& h) const {
  HomFamily f = h.integral.components;
  for (unsigned long n : coeffs_) {
    auto it = h.coefficients.find(n);
    if (it == h.coefficients.end()) throw MathError("LambdaHom lacks coefficient " + std::to_string(n));
    f.insert(f.end(), it->second.components.begin(), it->second.components.end());
  }
  return f;
}

LambdaHom LambdaHomGroup::unflatten(const HomFamily& f) const {
  LambdaHom h;
  h.integral.components.assign(f.begin(), f.begin() + 6);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    auto first = f.begin() + static_cast<std::ptrdiff_t>(6 * (i + 1));
    h.coefficients[coeffs_[i]].components.assign(first, first + 6);
  }
  return h;
}

std::vector<LambdaHom> LambdaHomGroup::basis() const {
  std::vector<LambdaHom> out;
  for (const auto& f : solution_.basis()) out.push_back(unflatten(f));
  return out;
}

IntVector LambdaHomGroup::coordinates(const LambdaHom& h) const { return solution_.coordinates(flatten(h)); }

LambdaHom LambdaHomGroup::evaluate(const IntVector& coords) const { return unflatten(solution_.evaluate(coords)); }

namespace {

HomSystem lambda_system(const TotalSixInvariant& a, const TotalSixInvariant& b, const std::vector<unsigned long>& coeffs) {
  HomSystem sys;
  const SixTermComplex& ga = a.integral;
  const SixTermComplex& gb = b.integral;
  for (std::size_t p = 0; p < 6; ++p) sys.add_variable(ga.group(p), gb.group(p));
  for (unsigned long n : coeffs)
    for (std::size_t p = 0; p < 6; ++p)
      sys.add_variable(a.coefficients.at(n).complex.group(p), b.coefficients.at(n).complex.group(p));

  for (std::size_t p = 0; p < 6; ++p) {
    std::size_t eq = sys.add_equation(ga.group(p), gb.group(next_pos(p)));
    sys.add_term(eq, next_pos(p), 1, std::nullopt, ga.map(p));
    sys.add_term(eq, p, -1, gb.map(p), std::nullopt);
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const CoefficientLayer& la = a.coefficients.at(coeffs[i]);
    const CoefficientLayer& lb = b.coefficients.at(coeffs[i]);
    const std::size_t base = 6 * (i + 1);
    for (std::size_t p = 0; p < 6; ++p) {
      std::size_t sq = sys.add_equation(la.complex.group(p), lb.complex.group(next_pos(p)));
      sys.add_term(sq, base + next_pos(p), 1, std::nullopt, la.complex.map(p));
      sys.add_term(sq, base + p, -1, lb.complex.map(p), std::nullopt);

      std::size_t r = sys.add_equation(ga.group(p), lb.complex.group(p));
      sys.add_term(r, base + p, 1, std::nullopt, la.rho[p]);
      sys.add_term(r, p, -1, lb.rho[p], std::nullopt);

      std::size_t be = sys.add_equation(la.complex.group(p), gb.group(next_pos(p, 3)));
      sys.add_term(be, base + p, 1, lb.beta[p], std::nullopt);
      sys.add_term(be, next_pos(p, 3), -1, std::nullopt, la.beta[p]);
    }
  }
  return sys;
}

std::vector<unsigned long> checked_coeffs(const TotalSixInvariant& a, const TotalSixInvariant& b,
                                          const std::set<unsigned long>& coeffs) {
  for (unsigned long n : coeffs)
    if (!a.coefficients.count(n) || !b.coefficients.count(n))
      throw MathError("coefficient " + std::to_string(n) + " missing from an invariant");
  return {coeffs.begin(), coeffs.end()};
}

}  // namespace

LambdaHomGroup hom_lambda(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2,
                          const std::set<unsigned long>& coeffs) {
  auto list = checked_coeffs(inv1, inv2, coeffs);
  return LambdaHomGroup(lambda_system(inv1, inv2, list).solve(), list);
}

bool is_lambda_hom(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2, const LambdaHom& h) {
  std::vector<unsigned long> list;
  for (const auto& [n, _] : h.coefficients) list.push_back(n);
  std::set<unsigned long> coeffs(list.begin(), list.end());
  checked_coeffs(inv1, inv2, coeffs);
  HomFamily f = h.integral.components;
  for (unsigned long n : list) {
    const auto& comps = h.coefficients.at(n).components;
    f.insert(f.end(), comps.begin(), comps.end());
  }
  return lambda_system(inv1, inv2, list).satisfied_by(f);
}

LambdaHom identity_lambda(const TotalSixInvariant& inv, const std::set<unsigned long>& coeffs) {
  LambdaHom h{ComplexHom::identity(inv.integral), {}};
  for (unsigned long n : coeffs) h.coefficients[n] = ComplexHom::identity(inv.coefficients.at(n).complex);
  return h;
}

ComplexHom restriction_to_integral(const LambdaHom& h) { return h.integral; }

GroupHom restriction_map(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2,
                         const std::set<unsigned long>& coeffs) {
  LambdaHomGroup lam = hom_lambda(inv1, inv2, coeffs);
  ComplexHomGroup z6 = hom_z6(inv1.integral, inv2.integral);
  auto basis = lam.basis();
  IntMatrix m(z6.group().generators(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    IntVector c = z6.coordinates(restriction_to_integral(basis[j]));
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return GroupHom(lam.group(), z6.group(), m);
}

AbelianGroup kernel_of_restriction(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2,
                                   const std::set<unsigned long>& coeffs) {
  return kernel(restriction_map(inv1, inv2, coeffs)).group;
}

bool is_isomorphism_lambda(const LambdaHom& h) {
  if (!h.integral.is_bijective()) return false;
  return std::all_of(h.coefficients.begin(), h.coefficients.end(),
                     [](const auto& kv) { return kv.second.is_bijective(); });
}

namespace {

std::array<IntMatrix, 6> rotated(const std::vector<GroupHom>& maps) {
  std::array<IntMatrix, 6> out;
  for (std::size_t p = 0; p < 6; ++p) out[p] = maps[next_pos(p, 3)].matrix();
  return out;
}

std::array<IntMatrix, 6> blockwise(const std::vector<GroupHom>& a, const std::vector<GroupHom>& b) {
  std::array<IntMatrix, 6> out;
  for (std::size_t p = 0; p < 6; ++p) out[p] = block_diagonal(a[p].matrix(), b[p].matrix());
  return out;
}

}  // namespace

TotalSixInvariant suspend_total(const TotalSixInvariant& inv) {
  TotalSixInvariant out{suspend(inv.integral), {}};
  for (const auto& [n, layer] : inv.coefficients)
    out.coefficients.emplace(n, make_layer(out.integral, suspend(layer.complex), rotated(layer.rho), rotated(layer.beta)));
  return out;
}

TotalSixInvariant direct_sum_total(const TotalSixInvariant& a, const TotalSixInvariant& b) {
  TotalSixInvariant out{direct_sum_complex(a.integral, b.integral), {}};
  for (const auto& [n, la] : a.coefficients) {
    auto it = b.coefficients.find(n);
    if (it == b.coefficients.end()) continue;
    const CoefficientLayer& lb = it->second;
    out.coefficients.emplace(n, make_layer(out.integral, direct_sum_complex(la.complex, lb.complex),
                                           blockwise(la.rho, lb.rho), blockwise(la.beta, lb.beta)));
  }
  return out;
}

}  // namespace ksix
