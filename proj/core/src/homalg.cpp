#include "ksix/homalg.hpp"

#include <algorithm>
#include <map>

#include "ksix/error.hpp"

namespace ksix {

namespace {

std::vector<std::size_t> torsion_indices(const AbelianGroup& a) {
  std::vector<std::size_t> idx;
  const IntVector& orders = a.smith_orders();
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (sgn(orders[i]) != 0) idx.push_back(i);
  return idx;
}

}  // namespace

AbelianGroup ext1(const AbelianGroup& a, const AbelianGroup& b) {
  const std::size_t h = b.generators();
  IntMatrix rel(0, 0);
  for (std::size_t i : torsion_indices(a)) {
    IntMatrix block = hstack(b.relations(), a.smith_orders()[i] * IntMatrix::identity(h));
    rel = block_diagonal(rel, block);
  }
  return AbelianGroup(std::move(rel));
}

ExtensionClass make_extension(const AbelianGroup& quotient, const AbelianGroup& sub, const IntMatrix& cocycle) {
  const std::size_t h = sub.generators();
  const IntVector& orders = quotient.smith_orders();
  const std::size_t m = orders.size();
  auto tors = torsion_indices(quotient);
  if (cocycle.rows() != h || cocycle.cols() != tors.size())
    throw MathError("cocycle must be " + std::to_string(h) + "x" + std::to_string(tors.size()));

  // Relations: those of sub, and d_i q_i = c_i for each torsion Smith generator.
  IntMatrix lower(m, tors.size());
  for (std::size_t k = 0; k < tors.size(); ++k) lower(tors[k], k) = orders[tors[k]];
  IntMatrix rel = vstack(hstack(sub.relations(), -cocycle), hstack(IntMatrix(m, sub.relations().cols()), lower));
  AbelianGroup middle(std::move(rel));

  GroupHom inclusion(sub, middle, vstack(IntMatrix::identity(h), IntMatrix(m, h)));
  GroupHom projection(middle, quotient, hstack(IntMatrix(quotient.generators(), h), quotient.smith_generators()));
  return {quotient, sub, cocycle, std::move(middle), std::move(inclusion), std::move(projection)};
}

bool ExtensionClass::is_exact() const {
  return is_injective(inclusion) && is_surjective(projection) && is_exact_at(inclusion, projection);
}

IntMatrix cocycle_from_ext(const AbelianGroup& quotient, const AbelianGroup& sub, const IntVector& ext_element) {
  const std::size_t h = sub.generators();
  const std::size_t t = torsion_indices(quotient).size();
  if (ext_element.size() != h * t) throw MathError("Ext element has the wrong length");
  IntMatrix c(h, t);
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t r = 0; r < h; ++r) c(r, k) = ext_element[k * h + r];
  return c;
}

std::vector<ExtensionMiddle> extension_middles(const AbelianGroup& quotient, const AbelianGroup& sub,
                                               std::uint64_t bound) {
  AbelianGroup ext = ext1(quotient, sub);
  Integer size = *ext.order();
  if (size > Integer(std::to_string(bound)))
    throw BoundExceeded("Ext^1 has more classes than the enumeration bound " + std::to_string(bound),
                        size.get_str());

  std::vector<ExtensionMiddle> out;
  for (const IntVector& e : ext.elements()) {
    ExtensionClass cls = make_extension(quotient, sub, cocycle_from_ext(quotient, sub, e));
    const CanonicalForm& form = cls.middle.canonical();
    auto it = std::find_if(out.begin(), out.end(), [&](const ExtensionMiddle& m) { return m.middle == form; });
    if (it == out.end())
      out.push_back({form, std::move(cls), 1});
    else
      ++it->classes;
  }
  std::sort(out.begin(), out.end(),
            [](const ExtensionMiddle& a, const ExtensionMiddle& b) { return a.middle < b.middle; });
  return out;
}

std::string to_string(SplitVerdict v) { return v == SplitVerdict::Nonsplit ? "Nonsplit" : "SplitPossible"; }

SplitVerdict split_test(const AbelianGroup& ext, const AbelianGroup& hom, const AbelianGroup& middle) {
  return is_isomorphic(middle, direct_sum(ext, hom).group) ? SplitVerdict::SplitPossible : SplitVerdict::Nonsplit;
}

bool pext_fg_is_zero(const AbelianGroup&, const AbelianGroup&) { return true; }

}  // namespace ksix
