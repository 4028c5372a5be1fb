#pragma once

#include <string>
#include <vector>

#include "ksix/sixcomplex.hpp"

namespace ksix {

/// A square nonnegative integer matrix without zero rows; entry (i, j) is the
/// number of edges i -> j. Vertices are 0-based here.
class CKMatrix {
 public:
  /// Throws MathError for non-square input, negative entries or zero rows.
  explicit CKMatrix(IntMatrix m);

  std::size_t size() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }
  bool has_edge(std::size_t i, std::size_t j) const { return sgn(m_(i, j)) > 0; }

  /// Principal submatrix on the given vertices, in the given order.
  CKMatrix restrict_to(const std::vector<std::size_t>& vertices) const;

 private:
  IntMatrix m_;
};

using HereditarySet = std::vector<std::size_t>;  // sorted vertex list

bool is_hereditary(const CKMatrix& m, const HereditarySet& h);

/// Strongly connected components (each sorted), in a deterministic order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const CKMatrix& m);

/// False iff some strongly connected component carrying an edge is a simple
/// cycle: every vertex in it has exactly one internal out-edge, of weight 1.
bool condition_check(const CKMatrix& m);

/// Proper nonempty hereditary sets, ordered by size then lexicographically
/// (a linear extension of inclusion).
std::vector<HereditarySet> ideal_lattice(const CKMatrix& m);

struct KGroups {
  AbelianGroup k0;  // coker(I - M^T)
  AbelianGroup k1;  // ker(I - M^T)
};

KGroups k_theory(const CKMatrix& m);

/// The six-term sequence of the ideal given by `h`: positions hold K_0 of
/// ideal, algebra, quotient, then K_1 of the same. Throws MathError if `h`
/// is not a proper nonempty hereditary set, and if the assembled complex
/// fails the exactness check.
SixTermComplex six_term(const CKMatrix& m, const HereditarySet& h);

/// "{1,2,3}" style rendering with 1-based vertices.
std::string format_vertex_set(const HereditarySet& h);

/// Two-line rendering: K_0 row left to right, K_1 row right to left.
std::string render_six_term(const SixTermComplex& c);

}  // namespace ksix
