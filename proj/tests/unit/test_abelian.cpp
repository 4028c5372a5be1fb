#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ksix/abelian.hpp"
#include "ksix/error.hpp"
#include "oracles.hpp"

using namespace ksix;
using testing_helpers::form;
using testing_helpers::group;
using testing_helpers::Z;
using testing_helpers::Zn;

TEST(CanonicalForm, FromPresentations) {
  EXPECT_EQ(AbelianGroup(IntMatrix{{5}, {0}}).canonical(), form(1, {5}));
  EXPECT_EQ(AbelianGroup(IntMatrix{{2, 0, 0}, {0, 4, 0}, {0, 0, 0}}).canonical(), form(1, {2, 4}));
  EXPECT_EQ(AbelianGroup(IntMatrix{{2, 0}, {0, 3}}).canonical(), form(0, {6}));
  EXPECT_EQ(AbelianGroup().canonical(), form(0));
  EXPECT_TRUE(AbelianGroup(IntMatrix{{1}}).is_trivial());
}

TEST(CanonicalForm, QuotientBlockOfFirstCuntzKriegerMatrix) {
  // I - M^T for the all-ones 3x3 block.
  IntMatrix t{{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}};
  EXPECT_EQ(AbelianGroup(t).canonical(), form(0, {2}));
}

TEST(CanonicalForm, Rendering) {
  EXPECT_EQ(to_string(form(0)), "0");
  EXPECT_EQ(to_string(form(1)), "Z");
  EXPECT_EQ(to_string(form(3)), "Z^3");
  EXPECT_EQ(to_string(form(1, {2, 4})), "Z ⊕ Z_2 ⊕ Z_4");
}

TEST(CanonicalForm, InvariantUnderPresentationChange) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    IntMatrix rel = testing_helpers::random_matrix(rng, 3, 3, -4, 4);
    AbelianGroup g(rel);
    // Redundant relation: the sum of two existing ones.
    IntMatrix extra = hstack(rel, IntMatrix(3, 1));
    IntVector sum(3);
    for (std::size_t i = 0; i < 3; ++i) sum[i] = rel(i, 0) + rel(i, 1);
    extra.set_column(3, sum);
    EXPECT_EQ(AbelianGroup(extra).canonical(), g.canonical());
    // Permuted generators.
    std::vector<std::size_t> perm{2, 0, 1};
    EXPECT_EQ(AbelianGroup(rel.select_rows(perm)).canonical(), g.canonical());
  }
}

TEST(Elements, EqualityModuloRelations) {
  AbelianGroup g = group(1, {4});
  EXPECT_TRUE(g.is_zero({4, 0}));
  EXPECT_FALSE(g.is_zero({2, 0}));
  EXPECT_TRUE(g.equal({1, 3}, {5, 3}));
  EXPECT_EQ(g.element_order({2, 0}), Order(2));
  EXPECT_EQ(g.element_order({0, 1}), Order());
}

TEST(Elements, EnumerationOfFiniteGroup) {
  EXPECT_EQ(group(0, {2, 4}).elements().size(), 8U);
  EXPECT_THROW(Z().elements(), MathError);
}

TEST(HomGroup, Examples) {
  HomGroup zz(Z(), Z());
  EXPECT_EQ(zz.group().canonical(), form(1));
  ASSERT_EQ(zz.basis().size(), 1U);
  EXPECT_TRUE(zz.basis()[0] == GroupHom::identity(Z()));
  EXPECT_EQ(hom_group(Zn(4), Zn(6)).group().canonical(), form(0, {2}));
  EXPECT_EQ(hom_group(Zn(2), Zn(8)).group().canonical(), form(0, {2}));
  EXPECT_TRUE(hom_group(Zn(3), Zn(5)).group().is_trivial());
  EXPECT_TRUE(hom_group(Zn(7), AbelianGroup()).group().is_trivial());
  EXPECT_TRUE(hom_group(Zn(7), Z()).group().is_trivial());
  EXPECT_EQ(hom_group(Z(), Zn(7)).group().canonical(), form(0, {7}));
}

TEST(HomGroup, OrdersAlignWithBasis) {
  HomGroup h(AbelianGroup::free(2), group(1, {3}));
  ASSERT_EQ(h.orders().size(), h.basis().size());
  for (std::size_t k = 0; k < h.basis().size(); ++k) {
    if (h.orders()[k] == 0) continue;
    EXPECT_TRUE((h.orders()[k] * h.basis()[k]).is_zero());
  }
}

TEST(HomGroup, CoordinatesRoundTrip) {
  const std::vector<AbelianGroup> gs{Z(), Zn(4), group(1, {2}), group(0, {2, 6}), AbelianGroup(IntMatrix{{2, 1}, {0, 3}})};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      HomGroup h(a, b);
      for (std::size_t k = 0; k < h.basis().size(); ++k) {
        IntVector c = h.coordinates(h.basis()[k]);
        IntVector e(h.basis().size());
        e[k] = 1;
        EXPECT_TRUE(h.group().equal(c, e));
        EXPECT_TRUE(h.evaluate(c) == h.basis()[k]);
      }
    }
}

TEST(HomGroup, OrderMatchesBruteForceCount) {
  for (const auto& fa : oracle::abelian_groups_up_to(24))
    for (const auto& fb : oracle::abelian_groups_up_to(24)) {
      if (oracle::FiniteGroup(fa).size() * oracle::FiniteGroup(fb).size() > 200) continue;
      HomGroup h(oracle::to_group(fa), oracle::to_group(fb));
      EXPECT_EQ(*h.group().order(), oracle::count_homomorphisms(oracle::FiniteGroup(fa), oracle::FiniteGroup(fb)));
    }
}

TEST(GroupHom, RejectsIllDefinedMatrix) {
  EXPECT_THROW(GroupHom(Zn(4), Zn(6), IntMatrix{{1}}), MathError);
  EXPECT_NO_THROW(GroupHom(Zn(4), Zn(6), IntMatrix{{3}}));
  EXPECT_THROW(GroupHom(Z(), Z(), IntMatrix{{1, 2}}), MathError);
}

TEST(GroupHom, Arithmetic) {
  GroupHom f(Z(), Zn(6), IntMatrix{{1}});
  EXPECT_TRUE((Integer(6) * f).is_zero());
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_TRUE(f + f == GroupHom(Z(), Zn(6), IntMatrix{{8}}));
  GroupHom g(Zn(6), Zn(3), IntMatrix{{1}});
  EXPECT_TRUE(compose(g, f) == GroupHom(Z(), Zn(3), IntMatrix{{1}}));
}

TEST(KernelImageCokernel, MultiplicationByN) {
  GroupHom f = GroupHom::multiplication(Z(), 5);
  auto kic = kernel_image_cokernel(f);
  EXPECT_TRUE(kic.kernel.group.is_trivial());
  EXPECT_EQ(kic.image.group.canonical(), form(1));
  EXPECT_EQ(kic.cokernel.group.canonical(), form(0, {5}));
}

TEST(KernelImageCokernel, QuotientMap) {
  GroupHom f(Z(), Zn(5), IntMatrix{{1}});
  EXPECT_EQ(kernel(f).group.canonical(), form(1));
  EXPECT_TRUE(cokernel(f).group.is_trivial());
  EXPECT_TRUE(is_surjective(f));
  EXPECT_FALSE(is_injective(f));
}

TEST(KernelImageCokernel, Reduction) {
  GroupHom f(Zn(4), Zn(2), IntMatrix{{1}});
  EXPECT_EQ(kernel(f).group.canonical(), form(0, {2}));
  EXPECT_TRUE(cokernel(f).group.is_trivial());
  // Brute force: elements of Z_4 mapping to 0.
  int count = 0;
  for (const auto& x : Zn(4).elements()) count += Zn(2).is_zero(f.apply(x));
  EXPECT_EQ(count, 2);
}

TEST(KernelImageCokernel, OrdersMultiplyOnFiniteDomains) {
  std::mt19937 rng(3);
  const std::vector<AbelianGroup> gs{group(0, {2, 4}), group(0, {6}), group(0, {3, 3}), group(0, {2, 2, 2})};
  for (const auto& a : gs)
    for (const auto& b : gs) {
      HomGroup h(a, b);
      for (int t = 0; t < 5; ++t) {
        IntVector c(h.basis().size());
        for (auto& x : c) x = static_cast<long>(rng() % 7);
        GroupHom f = h.evaluate(c);
        auto kic = kernel_image_cokernel(f);
        EXPECT_EQ(*kic.kernel.group.order() * *kic.image.group.order(), *a.order());
        EXPECT_TRUE(is_exact_at(kic.kernel.inclusion, f));
        EXPECT_TRUE(is_exact_at(f, kic.cokernel.projection));
      }
    }
}

TEST(Isomorphism, Examples) {
  for (long n : {2, 3, 5}) {
    EXPECT_FALSE(is_isomorphic(Zn(n * n), group(0, {n, n})));
    EXPECT_TRUE(is_isomorphic(group(1, {n}), AbelianGroup(IntMatrix{{0}, {n}})));
  }
  std::mt19937 rng(2);
  for (int t = 0; t < 30; ++t) {
    IntMatrix u = IntMatrix::identity(4);
    for (int s = 0; s < 12; ++s) {
      std::size_t i = rng() % 4, j = rng() % 4;
      if (i != j) u.add_row_multiple(i, j, static_cast<long>(rng() % 5) - 2);
    }
    ASSERT_EQ(abs(Integer(oracle::determinant(u))), 1);
    EXPECT_TRUE(is_isomorphic(AbelianGroup(u), AbelianGroup()));
  }
}

TEST(EpiMono, CertificateAndIdentity) {
  for (long n : {2, 3, 5}) {
    EXPECT_FALSE(exists_epimorphism(group(1, {n}), group(1, {n, n})));
    EXPECT_TRUE(exists_epimorphism(group(1, {n}), group(1, {n})));
  }
  EXPECT_TRUE(exists_epimorphism(Z(), Zn(12)));
  EXPECT_FALSE(exists_epimorphism(Zn(12), Z()));
  EXPECT_FALSE(exists_monomorphism(Zn(4), Z()));
  EXPECT_TRUE(exists_monomorphism(Zn(2), group(1, {4})));
  EXPECT_FALSE(exists_monomorphism(Zn(4), group(0, {2, 2})));
  EXPECT_TRUE(exists_monomorphism(Z(), Z()));
  EXPECT_FALSE(exists_monomorphism(AbelianGroup::free(2), Z()));
}

TEST(EpiMono, AgreesWithSubgroupSearchUpTo16) {
  auto groups = oracle::abelian_groups_up_to(16);
  for (const auto& g : groups)
    for (const auto& h : groups) {
      EXPECT_EQ(exists_epimorphism(oracle::to_group(g), oracle::to_group(h)), oracle::brute_exists_epimorphism(g, h));
      EXPECT_EQ(exists_monomorphism(oracle::to_group(g), oracle::to_group(h)),
                oracle::brute_exists_monomorphism(g, h));
    }
}

TEST(EpiMono, MutualEpimorphismsMeanIsomorphic) {
  auto groups = oracle::abelian_groups_up_to(16);
  for (const auto& g : groups)
    for (const auto& h : groups) {
      AbelianGroup a = oracle::to_group(g), b = oracle::to_group(h);
      EXPECT_EQ(exists_epimorphism(a, b) && exists_epimorphism(b, a), is_isomorphic(a, b));
    }
}

TEST(Exponent, Examples) {
  for (long n : {2, 3, 5}) {
    EXPECT_EQ(exponent(Zn(n * n)), Order(n * n));
    EXPECT_EQ(exponent(group(0, {n, n})), Order(n));
  }
  EXPECT_EQ(exponent(group(1, {2})), Order());
  EXPECT_EQ(exponent(AbelianGroup()), Order(1));
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(Z(), AbelianGroup()).group.canonical(), form(1));
  EXPECT_EQ(direct_sum(Zn(2), Zn(3)).group.canonical(), form(0, {6}));
  EXPECT_EQ(direct_sum(direct_sum(Z(), Zn(5)).group, Zn(5)).group.canonical(), form(1, {5, 5}));
  DirectSum s = direct_sum(Zn(4), Z());
  EXPECT_TRUE(compose(s.project_first, s.inject_first) == GroupHom::identity(Zn(4)));
  EXPECT_TRUE(compose(s.project_second, s.inject_first).is_zero());
  EXPECT_TRUE(is_exact_at(s.inject_first, s.project_second));
}
