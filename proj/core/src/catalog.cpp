#include "ksix/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "ksix/error.hpp"

namespace ksix {

namespace {

IntMatrix zero_map(const AbelianGroup& from, const AbelianGroup& to) {
  return IntMatrix(to.generators(), from.generators());
}

// Integral Z, Z, Z_n at positions s, s+1, s+2 with f_s = n and f_{s+1} the
// quotient. The mod-n layer has Z_n at s-1 .. s+2 with maps 1, 0, 1; rho
// reduces at s, s+1 and is the identity at s+2; beta_{s-1} is the identity
// onto G_{s+2}.
TotalSixInvariant dimension_drop_block(unsigned long n, std::size_t s) {
  const Integer nn(n);
  const AbelianGroup z = AbelianGroup::free(1);
  const AbelianGroup zn = AbelianGroup::cyclic(nn);

  std::array<AbelianGroup, 6> g, m;
  g[s] = z;
  g[next_pos(s)] = z;
  g[next_pos(s, 2)] = zn;
  const std::size_t before = prev_pos(s);
  for (std::size_t p : {before, s, next_pos(s), next_pos(s, 2)}) m[p] = zn;

  std::array<IntMatrix, 6> f, fm, rho, beta;
  for (std::size_t p = 0; p < 6; ++p) {
    f[p] = zero_map(g[p], g[next_pos(p)]);
    fm[p] = zero_map(m[p], m[next_pos(p)]);
    rho[p] = zero_map(g[p], m[p]);
    beta[p] = zero_map(m[p], g[next_pos(p, 3)]);
  }
  f[s] = IntMatrix{{static_cast<long>(n)}};
  f[next_pos(s)] = IntMatrix{{1}};
  fm[before] = IntMatrix{{1}};
  fm[next_pos(s)] = IntMatrix{{1}};
  rho[s] = IntMatrix{{1}};
  rho[next_pos(s)] = IntMatrix{{1}};
  rho[next_pos(s, 2)] = IntMatrix{{1}};
  beta[before] = IntMatrix{{1}};

  SixTermComplex integral(g, f, true);
  TotalSixInvariant inv{integral, {}};
  inv.coefficients.emplace(n, make_layer(integral, SixTermComplex(m, fm, true), rho, beta));
  return inv;
}

std::string normalize_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '{' && c != '}' && c != ',')
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "e0" || s == "en0" || s == "ep0") return "e0";
  if (s == "e1" || s == "en1" || s == "ep1") return "e1";
  if (s == "se1" || s == "sen1" || s == "sep1") return "Se1";
  if (s == "se1+e1+e0" || s == "sep1⊕ep1⊕ep0" || s == "sen1⊕en1⊕en0" || s == "prop43") return "Se1+e1+e0";
  return {};
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"e0", "e1", "Se1", "Se1+e1+e0"};
  return names;
}

CatalogEntry catalog_get(const std::string& name, unsigned long n) {
  if (n < 2) throw MathError("catalog parameter n must be at least 2");
  const std::string key = normalize_name(name);
  if (key == "e0") return {key, n, dimension_drop_block(n, 2)};
  if (key == "e1") return {key, n, dimension_drop_block(n, 3)};
  if (key == "Se1") return {key, n, suspend_total(dimension_drop_block(n, 3))};
  if (key == "Se1+e1+e0") {
    TotalSixInvariant e1 = dimension_drop_block(n, 3);
    TotalSixInvariant sum = direct_sum_total(suspend_total(e1), e1);
    return {key, n, direct_sum_total(sum, dimension_drop_block(n, 2))};
  }
  throw MathError("unknown catalog entry '" + name + "' (known: e0, e1, Se1, Se1+e1+e0)");
}

}  // namespace ksix
