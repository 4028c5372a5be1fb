#include "ksix/sixcomplex.hpp"

#include <algorithm>
#include <cstdlib>

#include "ksix/error.hpp"
#include "ksix/normal_form.hpp"

namespace ksix {

SixTermComplex::SixTermComplex() {
  for (std::size_t p = 0; p < 6; ++p) groups_.emplace_back();
  for (std::size_t p = 0; p < 6; ++p) maps_.push_back(GroupHom::zero(groups_[p], groups_[next_pos(p)]));
  exact_ = true;
}

SixTermComplex::SixTermComplex(std::array<AbelianGroup, 6> groups, std::array<IntMatrix, 6> maps, bool exact)
    : groups_(groups.begin(), groups.end()), exact_(exact) {
  for (std::size_t p = 0; p < 6; ++p) {
    try {
      maps_.emplace_back(groups_[p], groups_[next_pos(p)], std::move(maps[p]));
    } catch (const MathError& e) {
      throw MathError("map f_" + std::to_string(p) + ": " + e.what());
    }
  }
  if (exact_) {
    ExactnessReport r = check_exact(*this);
    for (std::size_t p = 0; p < 6; ++p)
      if (!r.exact[p]) throw MathError("complex flagged exact fails exactness at node " + std::to_string(p));
  }
}

SixTermComplex SixTermComplex::concentrated(std::size_t v, const AbelianGroup& g) {
  std::array<AbelianGroup, 6> groups;
  groups[v] = g;
  std::array<IntMatrix, 6> maps;
  for (std::size_t p = 0; p < 6; ++p) maps[p] = IntMatrix(groups[next_pos(p)].generators(), groups[p].generators());
  return SixTermComplex(groups, maps);
}

SixTermComplex SixTermComplex::projective(std::size_t v) {
  std::array<AbelianGroup, 6> groups;
  groups[v] = AbelianGroup::free(1);
  groups[next_pos(v)] = AbelianGroup::free(1);
  std::array<IntMatrix, 6> maps;
  for (std::size_t p = 0; p < 6; ++p) maps[p] = IntMatrix(groups[next_pos(p)].generators(), groups[p].generators());
  maps[v] = IntMatrix::identity(1);
  return SixTermComplex(groups, maps);
}

bool ExactnessReport::all_chain() const {
  return std::all_of(chain.begin(), chain.end(), [](bool b) { return b; });
}

bool ExactnessReport::all_exact() const {
  return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });
}

bool check_chain(const SixTermComplex& c) { return check_exact(c).all_chain(); }

ExactnessReport check_exact(const SixTermComplex& c) {
  ExactnessReport r;
  for (std::size_t p = 0; p < 6; ++p) {
    r.chain[p] = compose(c.map(next_pos(p)), c.map(p)).is_zero();
    r.exact[p] = is_exact_at(c.map(prev_pos(p)), c.map(p));
  }
  return r;
}

ComplexHom ComplexHom::identity(const SixTermComplex& c) {
  ComplexHom h;
  for (std::size_t p = 0; p < 6; ++p) h.components.push_back(GroupHom::identity(c.group(p)));
  return h;
}

ComplexHom ComplexHom::zero(const SixTermComplex& c1, const SixTermComplex& c2) {
  ComplexHom h;
  for (std::size_t p = 0; p < 6; ++p) h.components.push_back(GroupHom::zero(c1.group(p), c2.group(p)));
  return h;
}

bool ComplexHom::is_bijective() const {
  return std::all_of(components.begin(), components.end(), [](const GroupHom& f) { return ksix::is_bijective(f); });
}

bool is_chain_map(const SixTermComplex& c1, const SixTermComplex& c2, const ComplexHom& phi) {
  if (phi.components.size() != 6) return false;
  for (std::size_t p = 0; p < 6; ++p) {
    if (!(compose(phi.components[next_pos(p)], c1.map(p)) == compose(c2.map(p), phi.components[p]))) return false;
  }
  return true;
}

std::vector<ComplexHom> ComplexHomGroup::basis() const {
  std::vector<ComplexHom> out;
  for (const auto& fam : solution.basis()) out.push_back({fam});
  return out;
}

namespace {

// A representation of the 6-cycle quiver: groups and arrows v -> v+1.
struct Rep {
  std::vector<AbelianGroup> groups;
  std::vector<GroupHom> arrows;
};

Rep rep_of(const SixTermComplex& c) {
  Rep r;
  for (std::size_t p = 0; p < 6; ++p) {
    r.groups.push_back(c.group(p));
    r.arrows.push_back(c.map(p));
  }
  return r;
}

HomSystem quiver_hom_system(const Rep& a, const Rep& b) {
  HomSystem sys;
  for (std::size_t p = 0; p < 6; ++p) sys.add_variable(a.groups[p], b.groups[p]);
  for (std::size_t p = 0; p < 6; ++p) {
    std::size_t eq = sys.add_equation(a.groups[p], b.groups[next_pos(p)]);
    sys.add_term(eq, next_pos(p), 1, std::nullopt, a.arrows[p]);
    sys.add_term(eq, p, -1, b.arrows[p], std::nullopt);
  }
  return sys;
}

}  // namespace

ComplexHomGroup hom_z6(const SixTermComplex& c1, const SixTermComplex& c2) {
  return {quiver_hom_system(rep_of(c1), rep_of(c2)).solve()};
}

AbelianGroup ext1_z6(const SixTermComplex& c1, const SixTermComplex& c2) {
  if (!check_chain(c1) || !check_chain(c2)) throw MathError("ext1_z6 requires chain complexes");

  // P_0 at vertex w is Z^{g_w} (summands projective at w) ⊕ Z^{g_{w-1}}
  // (summands projective at w-1, seen at their second vertex).
  std::array<std::size_t, 6> g{};
  for (std::size_t w = 0; w < 6; ++w) g[w] = c1.group(w).generators();

  Rep proj, kern;
  std::vector<IntMatrix> kernel_basis;
  for (std::size_t w = 0; w < 6; ++w) {
    const std::size_t gp = g[prev_pos(w)];
    AbelianGroup pw = AbelianGroup::free(g[w] + gp);
    GroupHom pi(pw, c1.group(w), hstack(IntMatrix::identity(g[w]), c1.map(prev_pos(w)).matrix()));
    IntMatrix basis = kernel(pi).inclusion.matrix();
    proj.groups.push_back(pw);
    kern.groups.push_back(AbelianGroup::free(basis.cols()));
    kernel_basis.push_back(std::move(basis));
  }
  for (std::size_t w = 0; w < 6; ++w) {
    const std::size_t n = next_pos(w);
    IntMatrix arrow(g[n] + g[w], g[w] + g[prev_pos(w)]);
    for (std::size_t i = 0; i < g[w]; ++i) arrow(g[n] + i, i) = 1;
    proj.arrows.emplace_back(proj.groups[w], proj.groups[n], arrow);
    auto induced = solve_integer(kernel_basis[n], arrow * kernel_basis[w]);
    if (!induced) throw MathError("internal: kernel module not closed under arrows");
    kern.arrows.emplace_back(kern.groups[w], kern.groups[n], std::move(*induced));
  }

  Rep target = rep_of(c2);
  HomSolution from_proj = quiver_hom_system(proj, target).solve();
  HomSolution from_kern = quiver_hom_system(kern, target).solve();

  const auto& pbasis = from_proj.basis();
  IntMatrix restriction(from_kern.group().generators(), pbasis.size());
  for (std::size_t j = 0; j < pbasis.size(); ++j) {
    HomFamily restricted;
    for (std::size_t w = 0; w < 6; ++w)
      restricted.emplace_back(kern.groups[w], target.groups[w], pbasis[j][w].matrix() * kernel_basis[w]);
    IntVector c = from_kern.coordinates(restricted);
    for (std::size_t i = 0; i < c.size(); ++i) restriction(i, j) = c[i];
  }
  return cokernel(GroupHom(from_proj.group(), from_kern.group(), restriction)).group;
}

SixTermComplex suspend(const SixTermComplex& c) {
  std::array<AbelianGroup, 6> groups;
  std::array<IntMatrix, 6> maps;
  for (std::size_t p = 0; p < 6; ++p) {
    groups[p] = c.group(next_pos(p, 3));
    maps[p] = c.map(next_pos(p, 3)).matrix();
  }
  return SixTermComplex(groups, maps, c.flagged_exact());
}

SixTermComplex direct_sum_complex(const SixTermComplex& c1, const SixTermComplex& c2) {
  std::array<AbelianGroup, 6> groups;
  std::array<IntMatrix, 6> maps;
  for (std::size_t p = 0; p < 6; ++p) {
    groups[p] = direct_sum(c1.group(p), c2.group(p)).group;
    maps[p] = block_diagonal(c1.map(p).matrix(), c2.map(p).matrix());
  }
  return SixTermComplex(groups, maps, c1.flagged_exact() && c2.flagged_exact());
}

bool same_complex(const SixTermComplex& a, const SixTermComplex& b) {
  for (std::size_t p = 0; p < 6; ++p) {
    if (!a.group(p).same_presentation(b.group(p))) return false;
    if (!(a.map(p) == b.map(p))) return false;
  }
  return true;
}

std::optional<ComplexHom> find_complex_isomorphism(const SixTermComplex& c1, const SixTermComplex& c2, int radius) {
  for (std::size_t p = 0; p < 6; ++p)
    if (!is_isomorphic(c1.group(p), c2.group(p))) return std::nullopt;
  ComplexHomGroup homs = hom_z6(c1, c2);
  const IntVector& orders = homs.group().smith_orders();
  const std::size_t k = orders.size();

  // Candidate values per coordinate: 0, 1, -1, 2, -2, ... up to the radius,
  // cut to one period for torsion coordinates.
  std::vector<std::vector<long>> values(k);
  for (std::size_t i = 0; i < k; ++i) {
    long period = sgn(orders[i]) == 0 ? 0 : orders[i].get_si();
    values[i].push_back(0);
    for (long v = 1; v <= radius; ++v)
      for (long s : {v, -v}) {
        if (period && static_cast<long>(values[i].size()) >= period) break;
        values[i].push_back(s);
      }
  }

  // Iterative deepening on the largest |coefficient| so small solutions come first.
  for (long bound = 0; bound <= radius; ++bound) {
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      IntVector coords(k);
      long norm = 0;
      bool within = true;
      for (std::size_t i = 0; i < k; ++i) {
        long v = values[i][idx[i]];
        if (std::labs(v) > bound) within = false;
        norm = std::max(norm, std::labs(v));
        coords[i] = v;
      }
      if (within && norm == bound) {
        ComplexHom phi = homs.evaluate(coords);
        if (phi.is_bijective()) return phi;
      }
      std::size_t i = 0;
      while (i < k && ++idx[i] == values[i].size()) idx[i++] = 0;
      if (i == k) break;
    }
  }
  return std::nullopt;
}

}  // namespace ksix
