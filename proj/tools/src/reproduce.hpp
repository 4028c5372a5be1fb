#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace ksix::cli {

struct Claim {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

/// X cyclic (a quotient of Z) and 0 -> Z_n -> X -> Z_n -> 0.
json nonsplitting_diagram(unsigned long n);
/// The commuting 4x4 grid with one unknown in the second row and column.
json four_by_four_diagram(unsigned long n);

/// 'A', 'B', 'C' or 'D'.
CKMatrix named_ck_matrix(char name);
/// The expected six-term sequence for the ideal {1,2,3} of A or B.
SixTermComplex expected_ck_sequence(char name);

std::vector<Claim> reproduce_nonsplit(unsigned long n);
std::vector<Claim> reproduce_homlambda(unsigned long n);
std::vector<Claim> reproduce_ck();
std::vector<Claim> reproduce_prop43(unsigned long n);

}  // namespace ksix::cli
