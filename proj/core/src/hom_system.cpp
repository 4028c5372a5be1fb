#include "ksix/hom_system.hpp"

#include "ksix/error.hpp"

namespace ksix {

HomSolution::HomSolution(AbelianGroup group, std::vector<HomFamily> basis, std::vector<HomGroup> blocks,
                         GroupHom inclusion)
    : group_(std::move(group)),
      basis_(std::move(basis)),
      blocks_(std::move(blocks)),
      inclusion_(std::move(inclusion)),
      from_kernel_(inclusion_.domain().smith_generators()) {}

IntVector HomSolution::coordinates(const HomFamily& values) const {
  if (values.size() != blocks_.size()) throw MathError("HomSolution::coordinates: wrong number of components");
  IntVector ambient;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    IntVector c = blocks_[k].coordinates(values[k]);
    ambient.insert(ambient.end(), c.begin(), c.end());
  }
  auto x = preimage(inclusion_, ambient);
  if (!x) throw MathError("HomSolution::coordinates: family is not a solution");
  return inclusion_.domain().smith_coordinates(*x);
}

HomFamily HomSolution::evaluate(const IntVector& coords) const {
  IntVector kernel_coords = from_kernel_ * coords;
  IntVector ambient = inclusion_.apply(kernel_coords);
  HomFamily out;
  std::size_t offset = 0;
  for (const auto& block : blocks_) {
    std::size_t m = block.basis().size();
    IntVector c(ambient.begin() + static_cast<std::ptrdiff_t>(offset),
                ambient.begin() + static_cast<std::ptrdiff_t>(offset + m));
    out.push_back(block.evaluate(c));
    offset += m;
  }
  return out;
}

std::size_t HomSystem::add_variable(AbelianGroup source, AbelianGroup target) {
  vars_.push_back({std::move(source), std::move(target)});
  return vars_.size() - 1;
}

std::size_t HomSystem::add_equation(AbelianGroup source, AbelianGroup target) {
  eqs_.push_back({std::move(source), std::move(target), {}});
  return eqs_.size() - 1;
}

void HomSystem::add_term(std::size_t eq, std::size_t var, int sign, std::optional<GroupHom> post,
                         std::optional<GroupHom> pre) {
  if (eq >= eqs_.size() || var >= vars_.size()) throw MathError("HomSystem: index out of range");
  const Equation& e = eqs_[eq];
  const Variable& v = vars_[var];
  const std::size_t src = pre ? pre->domain().generators() : v.source.generators();
  const std::size_t tgt = post ? post->codomain().generators() : v.target.generators();
  if ((pre && pre->codomain().generators() != v.source.generators()) ||
      (post && post->domain().generators() != v.target.generators()) || src != e.source.generators() ||
      tgt != e.target.generators())
    throw MathError("HomSystem: term shape does not match its equation");
  eqs_[eq].terms.push_back({var, sign, std::move(post), std::move(pre)});
}

GroupHom HomSystem::evaluate_term(const Equation& eq, const Term& t, const GroupHom& x) const {
  IntMatrix m = x.matrix();
  if (t.pre) m = m * t.pre->matrix();
  if (t.post) m = t.post->matrix() * m;
  if (t.sign != 1) m = Integer(t.sign) * m;
  return GroupHom(eq.source, eq.target, std::move(m));
}

HomSolution HomSystem::solve() const {
  std::vector<HomGroup> blocks;
  IntVector ambient_orders;
  std::vector<std::size_t> offsets;
  for (const auto& v : vars_) {
    blocks.emplace_back(v.source, v.target);
    offsets.push_back(ambient_orders.size());
    const IntVector& o = blocks.back().orders();
    ambient_orders.insert(ambient_orders.end(), o.begin(), o.end());
  }
  AbelianGroup ambient = AbelianGroup::diagonal(ambient_orders);

  std::vector<HomGroup> eq_blocks;
  IntVector target_orders;
  std::vector<std::size_t> eq_offsets;
  for (const auto& e : eqs_) {
    eq_blocks.emplace_back(e.source, e.target);
    eq_offsets.push_back(target_orders.size());
    const IntVector& o = eq_blocks.back().orders();
    target_orders.insert(target_orders.end(), o.begin(), o.end());
  }
  AbelianGroup constraint_space = AbelianGroup::diagonal(target_orders);

  // Column j of the constraint matrix: all equations evaluated on the j-th
  // ambient basis element.
  IntMatrix constraint(target_orders.size(), ambient_orders.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    const auto& basis = blocks[k].basis();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t col = offsets[k] + b;
      for (std::size_t e = 0; e < eqs_.size(); ++e) {
        const Equation& eq = eqs_[e];
        std::optional<GroupHom> value;
        for (const Term& t : eq.terms) {
          if (t.var != k) continue;
          GroupHom term = evaluate_term(eq, t, basis[b]);
          value = value ? *value + term : term;
        }
        if (!value) continue;
        IntVector c = eq_blocks[e].coordinates(*value);
        for (std::size_t i = 0; i < c.size(); ++i) constraint(eq_offsets[e] + i, col) = c[i];
      }
    }
  }

  Subgroup ker = kernel(GroupHom(ambient, constraint_space, constraint));
  const AbelianGroup& kg = ker.group;
  IntMatrix ambient_gens = ker.inclusion.matrix() * kg.smith_generators();

  std::vector<HomFamily> basis;
  for (std::size_t j = 0; j < ambient_gens.cols(); ++j) {
    IntVector col = ambient_gens.column(j);
    HomFamily fam;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      std::size_t m = blocks[k].basis().size();
      IntVector c(col.begin() + static_cast<std::ptrdiff_t>(offsets[k]),
                  col.begin() + static_cast<std::ptrdiff_t>(offsets[k] + m));
      fam.push_back(blocks[k].evaluate(c));
    }
    basis.push_back(std::move(fam));
  }
  return HomSolution(AbelianGroup::diagonal(kg.smith_orders()), std::move(basis), std::move(blocks),
                     ker.inclusion);
}

bool HomSystem::satisfied_by(const HomFamily& values) const {
  if (values.size() != vars_.size()) return false;
  for (const auto& eq : eqs_) {
    GroupHom sum = GroupHom::zero(eq.source, eq.target);
    for (const Term& t : eq.terms) sum = sum + evaluate_term(eq, t, values[t.var]);
    if (!sum.is_zero()) return false;
  }
  return true;
}

}  // namespace ksix
