#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ksix/sixcomplex.hpp"

namespace ksix {

/// The mod-n layer of a total invariant.
///
/// rho[p] : G_p -> G^(n)_p is the reduction and beta[p] : G^(n)_p -> G_{p+3}
/// the Bockstein boundary.
struct CoefficientLayer {
  SixTermComplex complex;
  std::vector<GroupHom> rho;
  std::vector<GroupHom> beta;
};

/// Builds a layer over `integral`, checking that each matrix is a
/// homomorphism between the right groups.
CoefficientLayer make_layer(const SixTermComplex& integral, SixTermComplex modn,
                            const std::array<IntMatrix, 6>& rho, const std::array<IntMatrix, 6>& beta);

struct TotalSixInvariant {
  SixTermComplex integral;
  std::map<unsigned long, CoefficientLayer> coefficients;
};

struct Violation {
  std::string kind;  // "chain", "exact", "rho-natural", "beta-natural", "bockstein"
  std::optional<unsigned long> n;
  std::size_t position = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool clean() const { return violations.empty(); }
};

ValidationReport validate(const TotalSixInvariant& inv);

/// Torsion-free complex with G^(n)_p = G_p / n, rho the reduction, beta = 0.
/// Throws MathError if some G_p has torsion.
TotalSixInvariant total_from_free(const SixTermComplex& c, const std::set<unsigned long>& coeffs);

struct LambdaHom {
  ComplexHom integral;
  std::map<unsigned long, ComplexHom> coefficients;
};

/// Hom_Λ(inv1, inv2) over the given coefficients, with an explicit basis.
class LambdaHomGroup {
 public:
  LambdaHomGroup(HomSolution solution, std::vector<unsigned long> coeffs);

  const AbelianGroup& group() const { return solution_.group(); }
  std::vector<LambdaHom> basis() const;
  const std::vector<unsigned long>& coefficients() const { return coeffs_; }

  IntVector coordinates(const LambdaHom& h) const;
  LambdaHom evaluate(const IntVector& coords) const;

 private:
  HomFamily flatten(const LambdaHom& h) const;
  LambdaHom unflatten(const HomFamily& f) const;

  HomSolution solution_;
  std::vector<unsigned long> coeffs_;
};

/// Throws MathError when a requested coefficient is missing from either side.
LambdaHomGroup hom_lambda(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2,
                          const std::set<unsigned long>& coeffs);

/// Every square (six-term, rho, beta) commutes.
bool is_lambda_hom(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2, const LambdaHom& h);

LambdaHom identity_lambda(const TotalSixInvariant& inv, const std::set<unsigned long>& coeffs);

ComplexHom restriction_to_integral(const LambdaHom& h);

/// The forgetful map Hom_Λ(inv1, inv2) -> Hom_{Z6}(integral parts).
GroupHom restriction_map(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2,
                         const std::set<unsigned long>& coeffs);

/// Elements of Hom_Λ whose integral part vanishes.
AbelianGroup kernel_of_restriction(const TotalSixInvariant& inv1, const TotalSixInvariant& inv2,
                                   const std::set<unsigned long>& coeffs);

bool is_isomorphism_lambda(const LambdaHom& h);

TotalSixInvariant suspend_total(const TotalSixInvariant& inv);
TotalSixInvariant direct_sum_total(const TotalSixInvariant& a, const TotalSixInvariant& b);

}  // namespace ksix
