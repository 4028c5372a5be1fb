#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksix/abelian.hpp"

namespace ksix {

/// Ext^1_Z(a, b) = ⊕ b / d_i b over the invariant factors d_i of a.
AbelianGroup ext1(const AbelianGroup& a, const AbelianGroup& b);

/// An extension 0 -> sub -> middle -> quotient -> 0 built from a cocycle.
///
/// The middle group is generated by the generators of `sub` followed by the
/// nontrivial Smith generators of `quotient`. Column i of `cocycle` is the
/// element of `sub` that d_i times the i-th torsion Smith generator equals.
struct ExtensionClass {
  AbelianGroup quotient;
  AbelianGroup sub;
  IntMatrix cocycle;
  AbelianGroup middle;
  GroupHom inclusion;
  GroupHom projection;

  /// Injective inclusion, surjective projection, exact in the middle.
  bool is_exact() const;
};

/// Throws MathError when the cocycle has the wrong shape.
ExtensionClass make_extension(const AbelianGroup& quotient, const AbelianGroup& sub, const IntMatrix& cocycle);

/// The cocycle matrix of an element of ext1(quotient, sub) (in its
/// presentation coordinates).
IntMatrix cocycle_from_ext(const AbelianGroup& quotient, const AbelianGroup& sub, const IntVector& ext_element);

struct ExtensionMiddle {
  CanonicalForm middle;
  ExtensionClass representative;
  std::size_t classes = 0;  // Baer classes with this middle
};

inline constexpr std::uint64_t kDefaultExtensionBound = 10000;

/// One entry per isomorphism class of middle groups over all Baer classes of
/// extensions of `quotient` by `sub`, sorted by canonical form. Throws
/// BoundExceeded when |Ext^1| exceeds `bound`.
std::vector<ExtensionMiddle> extension_middles(const AbelianGroup& quotient, const AbelianGroup& sub,
                                               std::uint64_t bound = kDefaultExtensionBound);

enum class SplitVerdict { Nonsplit, SplitPossible };

std::string to_string(SplitVerdict v);

/// For a sequence ext -> middle -> hom: Nonsplit iff middle is not isomorphic
/// to ext ⊕ hom. Isomorphism never certifies that a given sequence splits.
SplitVerdict split_test(const AbelianGroup& ext, const AbelianGroup& hom, const AbelianGroup& middle);

/// Pext(a, b) vanishes for finitely generated a; inputs of this library
/// always are, so this returns true.
bool pext_fg_is_zero(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace ksix
