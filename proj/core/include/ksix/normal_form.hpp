#pragma once

#include <optional>
#include <vector>

#include "ksix/integer_matrix.hpp"

namespace ksix {

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries d_0 | d_1 | ... nonnegative. Zero diagonal entries come
/// last.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  /// The min(rows, cols) diagonal entries.
  IntVector invariants() const;
};

/// Smallest-nonzero-entry pivoting keeps coefficient growth in check; the
/// result is total on every integer matrix.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// input * transform == form, transform unimodular, form in column echelon
/// shape: column k has its first nonzero entry (positive) at pivot_rows[k],
/// pivot rows strictly increase, entries to the left of a pivot are reduced
/// into [0, pivot), and columns >= rank are zero. Column operations keep the
/// column lattice of the input fixed.
struct HermiteDecomposition {
  IntMatrix form;
  IntMatrix transform;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const noexcept { return pivot_rows.size(); }
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Columns form a basis of the lattice {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Columns form a basis of the lattice spanned by the columns of m.
IntMatrix lattice_basis(const IntMatrix& m);

/// Some integer x with m x == b, or nullopt when b lies outside the column
/// lattice of m.
std::optional<IntVector> solve_integer(const HermiteDecomposition& hnf, const IntVector& b);
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Some integer X with m X == b (column by column), or nullopt.
std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& b);

/// True when every column of `vectors` lies in the column lattice of `lattice`.
bool lattice_contains(const IntMatrix& lattice, const IntMatrix& vectors);

/// Mutual containment of column lattices.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace ksix
