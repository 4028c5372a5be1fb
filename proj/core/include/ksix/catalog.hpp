#pragma once

#include <string>
#include <vector>

#include "ksix/coeff.hpp"

namespace ksix {

/// Stored total invariants of the building blocks, parameterized by n.
///
///   e0         integral (0, 0, Z, Z, Z_n, 0), f_2 = n, f_3 = quotient
///   e1         integral (0, 0, 0, Z, Z, Z_n), f_3 = n, f_4 = quotient
///   Se1        suspension of e1
///   Se1+e1+e0  the direct sum of the three
///
/// Each carries its mod-n layer (universal-coefficient data with maps forced
/// by exactness) and is flagged exact.
struct CatalogEntry {
  std::string name;
  unsigned long n = 0;
  TotalSixInvariant invariant;
};

/// Canonical names, in a fixed order.
const std::vector<std::string>& catalog_names();

/// Accepts the canonical names and a few spellings ("e_{n,0}", "S e_{n,1}",
/// "prop43" for the sum).
/// Throws MathError for unknown names or n < 2.
CatalogEntry catalog_get(const std::string& name, unsigned long n);

}  // namespace ksix
