#include "ksix/normal_form.hpp"

#include <stdexcept>

namespace ksix {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Locate the entry of least nonzero absolute value in the trailing block
// starting at (t, t). Returns false when that block is zero.
bool find_smallest(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      if (sgn(a(r, c)) == 0) continue;
      Integer v = abs_value(a(r, c));
      if (!found || v < best) {
        best = v;
        pr = r;
        pc = c;
        found = true;
      }
    }
  return found;
}

}  // namespace

IntVector SmithDecomposition::invariants() const {
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = diagonal(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_smallest(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_columns(t, pc);
    v.swap_columns(t, pc);

    for (;;) {
      bool restart = false;
      for (std::size_t i = t + 1; i < a.rows() && !restart; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (sgn(a(i, t)) != 0) {
          a.swap_rows(i, t);
          u.swap_rows(i, t);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < a.cols() && !restart; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (sgn(a(t, j)) != 0) {
          a.swap_columns(j, t);
          v.swap_columns(j, t);
          restart = true;
        }
      }
      if (restart) continue;
      // Divisibility: fold an offending row into the pivot row and go again.
      for (std::size_t i = t + 1; i < a.rows() && !restart; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            restart = true;
            break;
          }
        }
      if (!restart) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  const std::size_t n = m.cols();

  for (std::size_t r = 0; r < h.rows() && c < n; ++r) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h(r, j)) == 0) continue;
      if (sgn(h(r, c)) == 0) {
        h.swap_columns(c, j);
        u.swap_columns(c, j);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(r, j).get_mpz_t());
      Integer a_g = h(r, c) / g;
      Integer b_g = h(r, j) / g;
      // [col_c, col_j] <- [col_c, col_j] * [[s, -b/g], [t, a/g]], determinant 1.
      for (IntMatrix* target : {&h, &u}) {
        IntMatrix& x = *target;
        for (std::size_t row = 0; row < x.rows(); ++row) {
          Integer xc = x(row, c);
          Integer xj = x(row, j);
          x(row, c) = s * xc + t * xj;
          x(row, j) = a_g * xj - b_g * xc;
        }
      }
    }
    if (sgn(h(r, c)) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_column(c);
      u.negate_column(c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      h.add_column_multiple(j, c, -q);
      u.add_column_multiple(j, c, -q);
    }
    pivots.push_back(r);
    ++c;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteDecomposition hnf = hermite_normal_form(m);
  const std::size_t rank = hnf.rank();
  IntMatrix k(m.cols(), m.cols() - rank);
  for (std::size_t c = rank; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.cols(); ++r) k(r, c - rank) = hnf.transform(r, c);
  return k;
}

IntMatrix lattice_basis(const IntMatrix& m) {
  HermiteDecomposition hnf = hermite_normal_form(m);
  return hnf.form.block(0, 0, m.rows(), hnf.rank());
}

std::optional<IntVector> solve_integer(const HermiteDecomposition& hnf, const IntVector& b) {
  const IntMatrix& h = hnf.form;
  if (b.size() != h.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  IntVector residual = b;
  IntVector y(h.cols());
  std::size_t k = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (k < hnf.rank() && hnf.pivot_rows[k] == r) {
      if (!mpz_divisible_p(residual[r].get_mpz_t(), h(r, k).get_mpz_t())) return std::nullopt;
      y[k] = residual[r] / h(r, k);
      for (std::size_t i = r; i < h.rows(); ++i) residual[i] -= y[k] * h(i, k);
      ++k;
    } else if (sgn(residual[r]) != 0) {
      return std::nullopt;
    }
  }
  return hnf.transform * y;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  return solve_integer(hermite_normal_form(m), b);
}

std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve_integer: row mismatch");
  HermiteDecomposition hnf = hermite_normal_form(m);
  IntMatrix x(m.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto col = solve_integer(hnf, b.column(c));
    if (!col) return std::nullopt;
    x.set_column(c, *col);
  }
  return x;
}

bool lattice_contains(const IntMatrix& lattice, const IntMatrix& vectors) {
  return solve_integer(lattice, vectors).has_value();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

}  // namespace ksix
