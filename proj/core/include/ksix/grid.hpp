#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksix/homalg.hpp"

namespace ksix {

struct GridEdge {
  std::string from;
  std::string to;
  std::optional<IntMatrix> matrix;  // absent: an unknown (existential) map
};

struct GridConstraint {
  enum class Kind { QuotientOf, ExponentDivides };
  Kind kind = Kind::QuotientOf;
  std::optional<AbelianGroup> group;  // QuotientOf
  Integer value;                      // ExponentDivides
};

/// A diagram of abelian groups with one unknown node.
///
/// A missing edge, or an edge without a matrix, between two known nodes is
/// an unknown map, except that any map into or out of a zero group is zero.
struct DiagramSpec {
  std::map<std::string, std::optional<AbelianGroup>> nodes;  // nullopt: the unknown
  std::string unknown;
  std::vector<GridEdge> edges;
  std::vector<std::vector<std::string>> exact_paths;
  std::vector<GridConstraint> constraints;
};

struct NormalizedConstraint {
  enum class Kind { ShortExact, QuotientOf, ExponentDivides };
  Kind kind = Kind::ShortExact;
  AbelianGroup sub;       // ShortExact: 0 -> sub -> X -> quotient -> 0
  AbelianGroup quotient;  // ShortExact
  AbelianGroup source;    // QuotientOf: X is a quotient of source
  Integer value;          // ExponentDivides
  std::string origin;     // "path 2", "constraint 0"
};

std::string describe(const NormalizedConstraint& c);

/// Throws MathError when the spec is malformed: not exactly one unknown, a
/// dangling node, an ill-defined map, a known square that does not commute,
/// or a known part of an exact path that is not exact.
void validate_spec(const DiagramSpec& spec);

/// Reduces every exact path through the unknown to a short exact sequence
/// or a quotient constraint. Throws MathError for irreducible paths.
std::vector<NormalizedConstraint> normalize(const DiagramSpec& spec);

struct SolvedClass {
  CanonicalForm form;
  AbelianGroup group;
  std::vector<ExtensionClass> witnesses;  // one per short exact constraint
};

struct GridSolution {
  std::vector<NormalizedConstraint> constraints;
  std::vector<SolvedClass> classes;  // sorted by canonical form

  bool inconsistent() const { return classes.empty(); }
  bool unique() const { return classes.size() == 1; }
};

/// All isomorphism classes for the unknown compatible with every
/// constraint. Throws MathError when no short exact constraint bounds the
/// candidates, and BoundExceeded from the extension enumeration.
GridSolution solve(const DiagramSpec& spec, std::uint64_t bound = kDefaultExtensionBound);

}  // namespace ksix
