#include "ksix/ck.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ksix/error.hpp"
#include "ksix/normal_form.hpp"

namespace ksix {

CKMatrix::CKMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw MathError("Cuntz-Krieger matrix must be square");
  if (m_.rows() == 0) throw MathError("Cuntz-Krieger matrix must be nonempty");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    bool emits = false;
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      if (sgn(m_(i, j)) < 0) throw MathError("Cuntz-Krieger matrix has a negative entry");
      emits = emits || sgn(m_(i, j)) > 0;
    }
    if (!emits) throw MathError("Cuntz-Krieger matrix has a zero row (vertex " + std::to_string(i + 1) + ")");
  }
}

CKMatrix CKMatrix::restrict_to(const std::vector<std::size_t>& vertices) const {
  IntMatrix sub(vertices.size(), vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = 0; b < vertices.size(); ++b) sub(a, b) = m_(vertices[a], vertices[b]);
  return CKMatrix(std::move(sub));
}

bool is_hereditary(const CKMatrix& m, const HereditarySet& h) {
  std::vector<bool> in(m.size(), false);
  for (std::size_t v : h) {
    if (v >= m.size()) return false;
    in[v] = true;
  }
  for (std::size_t v : h)
    for (std::size_t w = 0; w < m.size(); ++w)
      if (m.has_edge(v, w) && !in[w]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const CKMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!m.has_edge(v, w)) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool condition_check(const CKMatrix& m) {
  for (const auto& comp : strongly_connected_components(m)) {
    bool has_edge = false;
    bool simple_cycle = true;
    for (std::size_t v : comp) {
      Integer out = 0;
      for (std::size_t w : comp) out += m.matrix()(v, w);
      if (sgn(out) > 0) has_edge = true;
      if (out != 1) simple_cycle = false;
    }
    if (has_edge && simple_cycle) return false;
  }
  return true;
}

std::vector<HereditarySet> ideal_lattice(const CKMatrix& m) {
  const std::size_t n = m.size();
  if (n > 24) throw MathError("ideal enumeration is limited to 24 vertices");
  std::vector<HereditarySet> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    HereditarySet h;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) h.push_back(v);
    if (is_hereditary(m, h)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const HereditarySet& a, const HereditarySet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

IntMatrix identity_minus_transpose(const IntMatrix& m) { return IntMatrix::identity(m.rows()) - m.transpose(); }

}  // namespace

KGroups k_theory(const CKMatrix& m) {
  IntMatrix t = identity_minus_transpose(m.matrix());
  return {AbelianGroup(t), AbelianGroup::free(integer_kernel(t).cols())};
}

SixTermComplex six_term(const CKMatrix& m, const HereditarySet& h) {
  const std::size_t n = m.size();
  if (h.empty() || h.size() >= n) throw MathError("ideal vertex set must be proper and nonempty");
  if (!std::is_sorted(h.begin(), h.end()) || std::adjacent_find(h.begin(), h.end()) != h.end())
    throw MathError("ideal vertex set must be sorted without repeats");
  if (!is_hereditary(m, h)) throw MathError("vertex set " + format_vertex_set(h) + " is not hereditary");

  std::vector<std::size_t> q;
  for (std::size_t v = 0; v < n; ++v)
    if (!std::binary_search(h.begin(), h.end(), v)) q.push_back(v);
  std::vector<std::size_t> order = h;
  order.insert(order.end(), q.begin(), q.end());
  const std::size_t a = h.size(), b = q.size();

  // With the ideal first, I - M^T = [[T_H, -C], [0, T_Q]], C = M_QH^T.
  IntMatrix t = identity_minus_transpose(m.restrict_to(order).matrix());
  IntMatrix th = t.block(0, 0, a, a);
  IntMatrix tq = t.block(a, a, b, b);
  IntMatrix off = t.block(0, a, a, b);

  IntMatrix kh = integer_kernel(th), kt = integer_kernel(t), kq = integer_kernel(tq);

  std::array<AbelianGroup, 6> g{AbelianGroup(th),
                                AbelianGroup(t),
                                AbelianGroup(tq),
                                AbelianGroup::free(kh.cols()),
                                AbelianGroup::free(kt.cols()),
                                AbelianGroup::free(kq.cols())};
  IntMatrix inc = vstack(IntMatrix::identity(a), IntMatrix(b, a));
  IntMatrix proj = hstack(IntMatrix(b, a), IntMatrix::identity(b));

  auto f3 = solve_integer(kt, inc * kh);
  auto f4 = solve_integer(kq, proj * kt);
  if (!f3 || !f4) throw MathError("internal: induced map on K_1 has no integer solution");

  std::array<IntMatrix, 6> f{inc, proj, IntMatrix(kh.cols(), b), *f3, *f4, off * kq};
  SixTermComplex c(g, f);
  if (!check_exact(c).all_exact())
    throw MathError("internal: six-term sequence for " + format_vertex_set(h) + " is not exact");
  return SixTermComplex(g, f, true);
}

std::string format_vertex_set(const HereditarySet& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h[i] + 1);
  }
  return s + "}";
}

std::string render_six_term(const SixTermComplex& c) {
  std::vector<std::string> g;
  for (std::size_t p = 0; p < 6; ++p) g.push_back(to_string(c.group(p)));
  std::size_t w0 = std::max(g[0].size(), g[5].size());
  std::size_t w1 = std::max(g[1].size(), g[4].size());
  auto pad = [](const std::string& s, std::size_t w) {
    // Group names may contain the multi-byte "⊕"; pad by visible width.
    std::size_t visible = 0;
    for (unsigned char ch : s)
      if ((ch & 0xC0) != 0x80) ++visible;
    return s + std::string(w > visible ? w - visible : 0, ' ');
  };
  std::ostringstream os;
  os << pad(g[0], w0) << " -> " << pad(g[1], w1) << " -> " << g[2] << "\n";
  os << pad(g[5], w0) << " <- " << pad(g[4], w1) << " <- " << g[3] << "\n";
  return os.str();
}

}  // namespace ksix
