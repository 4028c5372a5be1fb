#pragma once

#include <initializer_list>
#include <ostream>
#include <random>

#include "ksix/abelian.hpp"
#include "ksix/ck.hpp"

namespace ksix {
inline void PrintTo(const CanonicalForm& f, std::ostream* os) { *os << to_string(f); }
}  // namespace ksix

namespace testing_helpers {

inline ksix::CanonicalForm form(std::size_t rank, std::initializer_list<long> torsion = {}) {
  ksix::CanonicalForm f;
  f.rank = rank;
  for (long d : torsion) f.torsion.emplace_back(d);
  return f;
}

inline ksix::AbelianGroup Z() { return ksix::AbelianGroup::free(1); }
inline ksix::AbelianGroup Zn(long n) { return ksix::AbelianGroup::cyclic(n); }
inline ksix::AbelianGroup group(std::size_t rank, std::initializer_list<long> torsion) {
  ksix::IntVector t;
  for (long d : torsion) t.emplace_back(d);
  return ksix::AbelianGroup::from_invariants(rank, t);
}

inline ksix::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  ksix::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

/// Random nonnegative square matrix with entries in [0, max_entry] and no zero
/// rows (a zero row gets a random nonzero entry).
inline ksix::IntMatrix random_ck_matrix(std::mt19937& rng, std::size_t n, long max_entry) {
  ksix::IntMatrix m = random_matrix(rng, n, n, 0, max_entry);
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) any = any || m(r, c) != 0;
    if (!any) m(r, col(rng)) = 1;
  }
  return m;
}

inline ksix::IntMatrix matrix_A() {
  return {{1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
          {0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1}};
}
inline ksix::IntMatrix matrix_B() {
  return {{1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0},
          {0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1}};
}
inline ksix::IntMatrix matrix_D() {
  return {{1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
          {0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1}};
}

}  // namespace testing_helpers
