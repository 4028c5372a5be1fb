#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ksix/integer_matrix.hpp"

namespace ksix {

/// Order of a group or of an element. nullopt means infinite.
using Order = std::optional<Integer>;

std::string to_string(const Order& order);

/// Z^rank + Z_{d_1} + ... + Z_{d_t} with 1 < d_1 | d_2 | ... | d_t.
struct CanonicalForm {
  std::size_t rank = 0;
  IntVector torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
  /// Total order used only to make sets of iso-classes deterministic.
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b);
};

/// "Z^r ⊕ Z_d1 ⊕ ...", free part first, "0" for the trivial group.
std::string to_string(const CanonicalForm& form);

/// A finitely generated abelian group Z^g / (column lattice of relations).
///
/// The Smith form of the relation matrix is computed once at construction
/// and shared between copies; values are immutable afterwards. Elements are
/// coordinate vectors of length g with respect to the presentation
/// generators. The "Smith basis" is the list of nontrivial cyclic summands
/// (torsion first, then free) with explicit generators.
class AbelianGroup {
 public:
  /// The trivial group on zero generators.
  AbelianGroup();
  /// g = relations.rows() generators subject to the columns of `relations`.
  explicit AbelianGroup(IntMatrix relations);

  static AbelianGroup free(std::size_t rank);
  /// Z/n; n == 0 gives Z.
  static AbelianGroup cyclic(const Integer& n);
  /// Torsion generators first (in the given order), then `rank` free ones.
  static AbelianGroup from_invariants(std::size_t rank, const IntVector& torsion);
  /// One generator per entry; entry 0 is a free generator.
  static AbelianGroup diagonal(const IntVector& orders);

  std::size_t generators() const;
  const IntMatrix& relations() const;
  const CanonicalForm& canonical() const;

  bool is_trivial() const { return canonical().is_trivial(); }
  bool is_finite() const { return canonical().rank == 0; }
  bool is_torsion_free() const { return canonical().torsion.empty(); }
  Order order() const;

  /// Orders of the Smith generators: torsion factors, then 0 for each free one.
  const IntVector& smith_orders() const;
  /// g x m matrix whose columns are the Smith generators.
  const IntMatrix& smith_generators() const;
  /// m x g matrix taking presentation coordinates to Smith coordinates.
  const IntMatrix& smith_transform() const;

  /// Smith coordinates, torsion entries reduced into [0, order).
  IntVector smith_coordinates(const IntVector& x) const;
  /// The element whose Smith coordinates are `s`.
  IntVector from_smith(const IntVector& s) const;

  bool is_zero(const IntVector& x) const;
  bool equal(const IntVector& x, const IntVector& y) const;
  /// True when every column of `columns` is zero in the group.
  bool kills(const IntMatrix& columns) const;
  Order element_order(const IntVector& x) const;

  /// Every element of a finite group, in a fixed order. Throws MathError for
  /// infinite groups.
  std::vector<IntVector> elements() const;

  /// Structural equality of presentations (same relation matrix).
  bool same_presentation(const AbelianGroup& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

std::string to_string(const AbelianGroup& g);

struct GroupElement {
  AbelianGroup parent;
  IntVector coordinates;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.parent.same_presentation(b.parent) && a.parent.equal(a.coordinates, b.coordinates);
  }
};

/// A homomorphism given by the images of the domain generators (columns)
/// in codomain coordinates.
class GroupHom {
 public:
  /// Throws MathError on a shape mismatch or when the matrix does not carry
  /// the domain relations into the codomain relation lattice.
  GroupHom(AbelianGroup domain, AbelianGroup codomain, IntMatrix matrix);

  static GroupHom identity(const AbelianGroup& g);
  static GroupHom zero(const AbelianGroup& domain, const AbelianGroup& codomain);
  static GroupHom multiplication(const AbelianGroup& g, const Integer& k);

  const AbelianGroup& domain() const { return domain_; }
  const AbelianGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_ * x; }
  bool is_zero() const { return codomain_.kills(matrix_); }

  /// outer ∘ inner.
  friend GroupHom compose(const GroupHom& outer, const GroupHom& inner);
  friend GroupHom operator+(const GroupHom& a, const GroupHom& b);
  friend GroupHom operator-(const GroupHom& a, const GroupHom& b);
  friend GroupHom operator*(const Integer& k, const GroupHom& f);
  GroupHom operator-() const;

  /// Equality modulo the codomain relations, columnwise.
  friend bool operator==(const GroupHom& a, const GroupHom& b);

 private:
  struct Unchecked {};
  GroupHom(AbelianGroup domain, AbelianGroup codomain, IntMatrix matrix, Unchecked);

  AbelianGroup domain_;
  AbelianGroup codomain_;
  IntMatrix matrix_;
};

struct Subgroup {
  AbelianGroup group;
  GroupHom inclusion;
};

struct Quotient {
  AbelianGroup group;
  GroupHom projection;
};

Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);
Quotient cokernel(const GroupHom& f);

struct KernelImageCokernel {
  Subgroup kernel;
  Subgroup image;
  Quotient cokernel;
};

KernelImageCokernel kernel_image_cokernel(const GroupHom& f);

bool is_injective(const GroupHom& f);
bool is_surjective(const GroupHom& f);
bool is_bijective(const GroupHom& f);

/// im(incoming) == ker(outgoing) inside the shared middle group.
bool is_exact_at(const GroupHom& incoming, const GroupHom& outgoing);

/// Some x with f(x) == y in the codomain, or nullopt.
std::optional<IntVector> preimage(const GroupHom& f, const IntVector& y);

bool is_isomorphic(const AbelianGroup& g, const AbelianGroup& h);

/// Existence of a surjection (resp. injection) g -> h, decided from ranks and
/// invariant-factor counts over a coprime base of all invariant factors.
bool exists_epimorphism(const AbelianGroup& g, const AbelianGroup& h);
bool exists_monomorphism(const AbelianGroup& g, const AbelianGroup& h);

Order exponent(const AbelianGroup& g);
Order element_order(const GroupElement& x);

struct DirectSum {
  AbelianGroup group;
  GroupHom inject_first;
  GroupHom inject_second;
  GroupHom project_first;
  GroupHom project_second;
};

DirectSum direct_sum(const AbelianGroup& g, const AbelianGroup& h);

/// Hom(source, target) as an explicit direct sum of cyclic groups: one
/// generator for each pair of Smith generators with a nonzero homomorphism
/// between the corresponding cyclic summands.
class HomGroup {
 public:
  HomGroup(AbelianGroup source, AbelianGroup target);

  const AbelianGroup& source() const { return source_; }
  const AbelianGroup& target() const { return target_; }
  /// Diagonal presentation; generator i is basis()[i].
  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupHom>& basis() const { return basis_; }
  /// Order of each basis element (0 for infinite), aligned with basis().
  const IntVector& orders() const { return orders_; }

  /// Coordinates of a homomorphism source -> target.
  IntVector coordinates(const GroupHom& f) const;
  /// sum_i coords[i] * basis()[i].
  GroupHom evaluate(const IntVector& coords) const;

 private:
  struct Slot {
    std::size_t source_index;
    std::size_t target_index;
    Integer step;   // image of the source generator is step * target generator
    Integer order;  // 0 for Z
  };

  AbelianGroup source_;
  AbelianGroup target_;
  AbelianGroup group_;
  std::vector<Slot> slots_;
  IntVector orders_;
  std::vector<GroupHom> basis_;
};

inline HomGroup hom_group(const AbelianGroup& g, const AbelianGroup& h) { return HomGroup(g, h); }

/// The same group re-presented on its nontrivial Smith generators, plus the
/// coordinate changes in both directions.
struct SmithPresentation {
  AbelianGroup group;     // diagonal on the nontrivial Smith generators
  IntMatrix generators;   // original coordinates of each new generator (g x m)
  IntMatrix coordinates;  // original -> new coordinates (m x g)
};

SmithPresentation smith_presentation(const AbelianGroup& g);

}  // namespace ksix
