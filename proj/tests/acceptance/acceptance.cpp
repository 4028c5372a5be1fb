// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Everything is exact; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "json_io.hpp"
#include "ksix/catalog.hpp"
#include "ksix/error.hpp"
#include "ksix/ck.hpp"
#include "ksix/grid.hpp"
#include "ksix/homalg.hpp"
#include "ksix/normal_form.hpp"
#include "oracles.hpp"
#include "reproduce.hpp"

using namespace ksix;

namespace {

const unsigned long kPrimes[] = {2, 3, 5};

/// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what());
  }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_;
};

CanonicalForm cyclic_form(unsigned long n) { return {0, {Integer(n)}}; }
TotalSixInvariant entry(const char* name, unsigned long n) { return catalog_get(name, n).invariant; }

std::string str(const CanonicalForm& f) { return to_string(f); }

void ac1(Check& c) {
  for (unsigned long n : kPrimes) {
    CanonicalForm got = hom_z6(entry("e0", n).integral, entry("Se1", n).integral).group().canonical();
    c.expect(got == cyclic_form(n), [&] { return "n=" + std::to_string(n) + " got " + str(got); });
  }
}

void ac2(Check& c) {
  for (unsigned long n : kPrimes) {
    CanonicalForm got = ext1_z6(entry("e0", n).integral, entry("e1", n).integral).canonical();
    c.expect(got == cyclic_form(n), [&] { return "n=" + std::to_string(n) + " got " + str(got); });
  }
}

GridSolution solve_json(const cli::json& j) { return solve(cli::diagram_from_json(j)); }

void ac3(Check& c) {
  for (unsigned long n : kPrimes) {
    GridSolution sol = solve_json(cli::nonsplitting_diagram(n));
    c.expect(sol.unique() && sol.classes[0].form == cyclic_form(n * n),
             [&] { return "grid n=" + std::to_string(n) + ": " + std::to_string(sol.classes.size()) + " classes"; });
    AbelianGroup zn = AbelianGroup::cyclic(n);
    c.expect(split_test(zn, zn, AbelianGroup::cyclic(n * n)) == SplitVerdict::Nonsplit,
             [&] { return "split verdict n=" + std::to_string(n); });
  }
}

void ac4(Check& c) {
  for (unsigned long n : kPrimes) {
    GridSolution sol = solve_json(cli::four_by_four_diagram(n));
    CanonicalForm expected{1, {Integer(n)}};
    c.expect(sol.unique() && sol.classes[0].form == expected, [&] {
      return "n=" + std::to_string(n) + ": " + (sol.classes.empty() ? "none" : str(sol.classes[0].form));
    });
  }
}

void ac5(Check& c) {
  for (unsigned long n : kPrimes) {
    AbelianGroup h = hom_lambda(entry("e1", n), entry("e0", n), {n}).group();
    CanonicalForm expected{1, {Integer(n), Integer(n)}};
    c.expect(h.canonical() == expected, [&] { return "n=" + std::to_string(n) + " got " + to_string(h); });
    AbelianGroup middle = AbelianGroup::from_invariants(1, {Integer(n)});
    c.expect(!exists_epimorphism(middle, h), [&] { return "epimorphism exists for n=" + std::to_string(n); });
  }
}

void ac6(Check& c) {
  for (unsigned long n : kPrimes) {
    Order e = exponent(hom_lambda(entry("e0", n), entry("Se1", n), {n}).group());
    c.expect(e && Integer(n) % *e == 0, [&] { return "exponent " + to_string(e) + " for n=" + std::to_string(n); });
    GridSolution sol = solve_json(cli::nonsplitting_diagram(n));
    Integer best = 0;
    if (sol.unique())
      for (const IntVector& x : sol.classes[0].group.elements()) {
        Order o = sol.classes[0].group.element_order(x);
        if (o && *o > best) best = *o;
      }
    c.expect(best == Integer(n * n), [&] { return "largest element order " + best.get_str(); });
  }
}

void ac7(Check& c) {
  for (char name : {'A', 'B', 'C', 'D'})
    c.expect(condition_check(cli::named_ck_matrix(name)), [&] { return std::string("condition fails for ") + name; });
  const HereditarySet first{0, 1, 2};
  for (char name : {'A', 'B'}) {
    CKMatrix m = cli::named_ck_matrix(name);
    auto ideals = ideal_lattice(m);
    c.expect(ideals.size() == 1 && ideals[0] == first, [&] {
      return std::string("ideals of ") + name + ": " + std::to_string(ideals.size());
    });
    SixTermComplex s = six_term(m, first);
    c.expect(check_exact(s).all_exact(), [&] { return std::string("not exact: ") + name; });
    c.expect(find_complex_isomorphism(s, cli::expected_ck_sequence(name)).has_value(),
             [&] { return std::string("no isomorphism to the displayed sequence for ") + name; });
  }
}

// Property suites.

void normal_forms(Check& c) {
  std::mt19937 rng(500);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m = testing_helpers::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    SmithDecomposition s = smith_normal_form(m);
    c.expect(s.left * m * s.right == s.diagonal && abs(oracle::determinant(s.left)) == 1 &&
                 abs(oracle::determinant(s.right)) == 1,
             [&] { return "smith contract on " + m.to_string(); });
    HermiteDecomposition h = hermite_normal_form(m);
    bool lattice_equal = abs(oracle::determinant(h.transform)) == 1 && m * h.transform == h.form;
    for (std::size_t j = 0; j < m.cols() && lattice_equal; ++j)
      lattice_equal = oracle::in_lattice_via_smith(h.form, m.column(j)) &&
                      oracle::in_lattice_via_smith(m, h.form.column(j));
    c.expect(lattice_equal, [&] { return "hermite lattice on " + m.to_string(); });
  }
}

void hom_and_epi_mono(Check& c) {
  auto groups = oracle::abelian_groups_up_to(36);
  for (const auto& fa : groups)
    for (const auto& fb : groups) {
      AbelianGroup a = oracle::to_group(fa), b = oracle::to_group(fb);
      oracle::FiniteGroup ga(fa), gb(fb);
      Order order = hom_group(a, b).group().order();
      long brute = oracle::count_homomorphisms(ga, gb);
      c.expect(order && *order == brute, [&] { return "|Hom(" + to_string(a) + ", " + to_string(b) + ")|"; });
      c.expect(exists_epimorphism(a, b) == oracle::brute_exists_epimorphism(fa, fb),
               [&] { return "epi " + to_string(a) + " -> " + to_string(b); });
      c.expect(exists_monomorphism(a, b) == oracle::brute_exists_monomorphism(fa, fb),
               [&] { return "mono " + to_string(a) + " -> " + to_string(b); });
    }
}

void extension_middles_suite(Check& c) {
  auto groups = oracle::abelian_groups_up_to(64);
  for (const auto& fa : groups)
    for (const auto& fb : groups) {
      long size = oracle::FiniteGroup(fa).size() * oracle::FiniteGroup(fb).size();
      if (size > 64) continue;
      std::set<oracle::Factors> got;
      for (const auto& m : extension_middles(oracle::to_group(fa), oracle::to_group(fb))) {
        oracle::Factors f;
        for (const auto& d : m.middle.torsion) f.push_back(d.get_si());
        got.insert(f);
        c.expect(m.representative.is_exact(), [&] { return "inexact representative"; });
      }
      c.expect(got == oracle::brute_extension_middles(fa, fb), [&] {
        return "middles of " + to_string(oracle::to_group(fa)) + " by " + to_string(oracle::to_group(fb));
      });
    }
}

void ck_suite(Check& c) {
  std::mt19937 rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial) % 5;
    CKMatrix m(testing_helpers::random_ck_matrix(rng, n, 2));
    auto ideals = ideal_lattice(m);
    c.expect(std::set<HereditarySet>(ideals.begin(), ideals.end()) == oracle::brute_hereditary_sets(m.matrix()),
             [&] { return "ideal lattice of " + m.matrix().to_string(); });
    for (const auto& h : ideals) {
      bool exact = false;
      try {
        exact = check_exact(six_term(m, h)).all_exact();
      } catch (const MathError&) {
      }
      c.expect(exact, [&] { return "six-term of " + m.matrix().to_string() + " at " + format_vertex_set(h); });
    }
  }
}

std::vector<SixTermComplex> torsion_free_complexes() {
  std::vector<SixTermComplex> out;
  for (std::size_t v = 0; v < 6; ++v) out.push_back(SixTermComplex::projective(v));
  out.push_back(SixTermComplex::concentrated(1, AbelianGroup::free(2)));
  std::mt19937 rng(7);
  while (out.size() < 12) {
    CKMatrix m(testing_helpers::random_ck_matrix(rng, 4, 2));
    for (const auto& h : ideal_lattice(m)) {
      SixTermComplex s = six_term(m, h);
      bool free = true;
      for (std::size_t p = 0; p < 6; ++p) free = free && s.group(p).is_torsion_free();
      if (free && out.size() < 12) out.push_back(s);
    }
  }
  return out;
}

void lambda_suite(Check& c) {
  for (unsigned long n : {2UL, 3UL}) {
    std::vector<TotalSixInvariant> blocks{entry("e0", n), entry("e1", n), entry("Se1", n)};
    auto hom = [&](const TotalSixInvariant& x, const TotalSixInvariant& y) { return hom_lambda(x, y, {n}).group(); };
    for (const auto& a : blocks)
      for (const auto& b : blocks)
        for (const auto& d : blocks) {
          CanonicalForm left = hom(direct_sum_total(a, b), d).canonical();
          CanonicalForm right = direct_sum(hom(a, d), hom(b, d)).group.canonical();
          c.expect(left == right, [&] { return "additivity in the first slot: " + str(left) + " vs " + str(right); });
          left = hom(d, direct_sum_total(a, b)).canonical();
          right = direct_sum(hom(d, a), hom(d, b)).group.canonical();
          c.expect(left == right, [&] { return "additivity in the second slot: " + str(left) + " vs " + str(right); });
        }
  }
  auto free = torsion_free_complexes();
  for (const auto& x : free)
    for (const auto& y : free) {
      TotalSixInvariant tx = total_from_free(x, {2, 3}), ty = total_from_free(y, {2, 3});
      c.expect(hom_lambda(tx, ty, {2, 3}).group().canonical() == hom_z6(x, y).group().canonical() &&
                   is_bijective(restriction_map(tx, ty, {2, 3})),
               [&] { return std::string("torsion-free collapse"); });
    }
}

void suspend_suite(Check& c) {
  std::vector<SixTermComplex> complexes = torsion_free_complexes();
  for (unsigned long n : {2UL, 3UL, 5UL})
    for (const auto& name : catalog_names()) {
      TotalSixInvariant inv = catalog_get(name, n).invariant;
      complexes.push_back(inv.integral);
      complexes.push_back(inv.coefficients.at(n).complex);
      TotalSixInvariant twice = suspend_total(suspend_total(inv));
      bool same = same_complex(twice.integral, inv.integral) &&
                  same_complex(twice.coefficients.at(n).complex, inv.coefficients.at(n).complex);
      for (std::size_t p = 0; p < 6 && same; ++p)
        same = twice.coefficients.at(n).rho[p].matrix() == inv.coefficients.at(n).rho[p].matrix() &&
               twice.coefficients.at(n).beta[p].matrix() == inv.coefficients.at(n).beta[p].matrix();
      c.expect(same, [&] { return "total suspension twice: " + name; });
    }
  for (const auto& s : complexes)
    c.expect(same_complex(suspend(suspend(s)), s), [&] { return std::string("complex suspension twice"); });
}

struct Criterion {
  const char* id;
  const char* description;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const std::vector<Criterion> criteria{
      {"AC1", "Hom_Z6(e_{n,0}, S e_{n,1}) = Z_n for n = 2, 3, 5", ac1},
      {"AC2", "Ext_Z6(e_{n,0}, e_{n,1}) = Z_n for n = 2, 3, 5", ac2},
      {"AC3", "cyclic extension of Z_n by Z_n is Z_{n^2} and Nonsplit", ac3},
      {"AC4", "4x4 grid has the unique middle Z + Z_n", ac4},
      {"AC5", "Hom_Lambda(e_{n,1}, e_{n,0}) = Z + Z_n + Z_n and no epimorphism from Z + Z_n", ac5},
      {"AC6", "exponent of Hom_Lambda(e_{n,0}, S e_{n,1}) divides n; middle has order n^2 element", ac6},
      {"AC7", "Cuntz-Krieger matrices A-D: condition, one ideal, displayed six-term sequences", ac7},
      {"AC8", "property suites against brute-force oracles",
       [](Check& c) {
         normal_forms(c);
         hom_and_epi_mono(c);
         extension_middles_suite(c);
         ck_suite(c);
         lambda_suite(c);
         suspend_suite(c);
       }},
  };

  const auto start = clock::now();
  bool all = true;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    all = all && check.passed();
    std::printf("[%s] %s %s (%zu checks, %.2fs)\n", check.passed() ? "PASS" : "FAIL", cr.id, cr.description,
                check.checks(), secs);
    for (const auto& note : check.notes()) std::printf("       %s\n", note.c_str());
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%s in %.2fs\n", all ? "all criteria passed" : "some criteria FAILED", total);
  return all ? 0 : 1;
}
