#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ksix/abelian.hpp"
#include "ksix/hom_system.hpp"

namespace ksix {

inline constexpr std::size_t next_pos(std::size_t p, std::size_t k = 1) { return (p + k) % 6; }
inline constexpr std::size_t prev_pos(std::size_t p) { return (p + 5) % 6; }

/// Six groups G_0..G_5 and maps f_p : G_p -> G_{p+1 mod 6}.
///
/// Positions 0, 1, 2 hold K_0 of ideal, algebra and quotient; 3, 4, 5 hold
/// K_1 of the same, so f_2 is the exponential and f_5 the index map.
class SixTermComplex {
 public:
  /// The zero complex.
  SixTermComplex();
  /// Throws MathError if a matrix is not a homomorphism, or if `exact` is
  /// set and the complex fails check_exact.
  SixTermComplex(std::array<AbelianGroup, 6> groups, std::array<IntMatrix, 6> maps, bool exact = false);

  /// G at position v, zero elsewhere, all maps zero.
  static SixTermComplex concentrated(std::size_t v, const AbelianGroup& g);
  /// Z at v and v+1 joined by the identity.
  static SixTermComplex projective(std::size_t v);

  const AbelianGroup& group(std::size_t p) const { return groups_[p]; }
  const GroupHom& map(std::size_t p) const { return maps_[p]; }
  bool flagged_exact() const { return exact_; }

 private:
  std::vector<AbelianGroup> groups_;
  std::vector<GroupHom> maps_;
  bool exact_ = false;
};

struct ExactnessReport {
  std::array<bool, 6> chain{};  // f_{p+1} ∘ f_p == 0
  std::array<bool, 6> exact{};  // im f_{p-1} == ker f_p at node p

  bool all_chain() const;
  bool all_exact() const;
};

bool check_chain(const SixTermComplex& c);
ExactnessReport check_exact(const SixTermComplex& c);

/// Six maps phi_p : G_p -> H_p.
struct ComplexHom {
  std::vector<GroupHom> components;

  static ComplexHom identity(const SixTermComplex& c);
  static ComplexHom zero(const SixTermComplex& c1, const SixTermComplex& c2);
  bool is_bijective() const;
};

/// All six naturality squares commute.
bool is_chain_map(const SixTermComplex& c1, const SixTermComplex& c2, const ComplexHom& phi);

/// Hom_{Z6}(c1, c2) with an explicit basis.
struct ComplexHomGroup {
  HomSolution solution;

  const AbelianGroup& group() const { return solution.group(); }
  std::vector<ComplexHom> basis() const;
  IntVector coordinates(const ComplexHom& phi) const { return solution.coordinates(phi.components); }
  ComplexHom evaluate(const IntVector& coords) const { return {solution.evaluate(coords)}; }
};

ComplexHomGroup hom_z6(const SixTermComplex& c1, const SixTermComplex& c2);

/// Ext^1 over the path ring of the 6-cycle with length-two zero relations,
/// from the projective presentation with one summand per generator. Both
/// arguments must satisfy the chain condition.
AbelianGroup ext1_z6(const SixTermComplex& c1, const SixTermComplex& c2);

/// Rotation by three: G'_p = G_{p+3}.
SixTermComplex suspend(const SixTermComplex& c);
SixTermComplex direct_sum_complex(const SixTermComplex& c1, const SixTermComplex& c2);

/// Equal presentations and equal maps (as homomorphisms).
bool same_complex(const SixTermComplex& a, const SixTermComplex& b);

/// Searches combinations of a Hom_{Z6} basis with coefficients in
/// [-radius, radius] (torsion coordinates over a full period) for a
/// componentwise bijective chain map.
std::optional<ComplexHom> find_complex_isomorphism(const SixTermComplex& c1, const SixTermComplex& c2,
                                                   int radius = 2);

}  // namespace ksix
