#pragma once

#include <optional>
#include <vector>

#include "ksix/abelian.hpp"

namespace ksix {

/// A family of homomorphisms, one per variable of a HomSystem.
using HomFamily = std::vector<GroupHom>;

/// The solution group of a HomSystem, re-presented on Smith generators.
class HomSolution {
 public:
  HomSolution(AbelianGroup group, std::vector<HomFamily> basis, std::vector<HomGroup> blocks, GroupHom inclusion);

  /// Diagonal group; generator i corresponds to basis()[i].
  const AbelianGroup& group() const { return group_; }
  const std::vector<HomFamily>& basis() const { return basis_; }

  /// Coordinates of a solution family in group(). Throws MathError when the
  /// family is not a solution.
  IntVector coordinates(const HomFamily& values) const;
  HomFamily evaluate(const IntVector& coords) const;

 private:
  AbelianGroup group_;
  std::vector<HomFamily> basis_;
  std::vector<HomGroup> blocks_;
  GroupHom inclusion_;  // kernel presentation -> ambient Hom-coordinates
  IntMatrix from_kernel_;  // Smith generators of the kernel, in kernel coordinates
};

/// Linear constraints on unknown homomorphisms X_k : S_k -> T_k.
///
/// Each equation lives in Hom(P, Q) and states that a signed sum of terms
/// post ∘ X_k ∘ pre vanishes. solve() returns the group of all solutions.
class HomSystem {
 public:
  std::size_t add_variable(AbelianGroup source, AbelianGroup target);
  std::size_t add_equation(AbelianGroup source, AbelianGroup target);

  /// Adds sign * (post ∘ X_var ∘ pre) to equation `eq`. A missing pre or post
  /// stands for an identity.
  void add_term(std::size_t eq, std::size_t var, int sign, std::optional<GroupHom> post = std::nullopt,
                std::optional<GroupHom> pre = std::nullopt);

  std::size_t variables() const { return vars_.size(); }
  HomSolution solve() const;

  /// True when `values` satisfies every equation exactly.
  bool satisfied_by(const HomFamily& values) const;

 private:
  struct Term {
    std::size_t var;
    int sign;
    std::optional<GroupHom> post;
    std::optional<GroupHom> pre;
  };
  struct Equation {
    AbelianGroup source;
    AbelianGroup target;
    std::vector<Term> terms;
  };
  struct Variable {
    AbelianGroup source;
    AbelianGroup target;
  };

  GroupHom evaluate_term(const Equation& eq, const Term& t, const GroupHom& x) const;

  std::vector<Variable> vars_;
  std::vector<Equation> eqs_;
};

}  // namespace ksix
