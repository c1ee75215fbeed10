#include <gtest/gtest.h>

#include "gentle/fp.hpp"
#include "gentle/generate.hpp"
#include "gentle/resolve.hpp"

using namespace gentle;

namespace {

fp::Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int p) {
  std::uniform_int_distribution<int> entry(0, p - 1);
  fp::Mat m = fp::zeros(rows, cols);
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  return m;
}

}  // namespace

TEST(Fp, Scalars) {
  EXPECT_TRUE(fp::is_prime(2));
  EXPECT_TRUE(fp::is_prime(3));
  EXPECT_FALSE(fp::is_prime(4));
  EXPECT_FALSE(fp::is_prime(1));
  EXPECT_EQ(fp::mod(-1, 3), 2);
  EXPECT_EQ(fp::mod(7, 3), 1);
  EXPECT_EQ(fp::inverse(2, 3), 2);
  EXPECT_EQ(fp::inverse(3, 7), 5);
}

TEST(Fp, RankOfTransposeMatchesRank) {
  Rng rng(1);
  for (int p : {2, 3, 5}) {
    for (int k = 0; k < 200; ++k) {
      fp::Mat m = random_matrix(rng, 1 + k % 5, 1 + (k / 5) % 6, p);
      EXPECT_EQ(fp::rank(m, p), fp::rank(fp::transpose(m), p));
    }
  }
}

TEST(Fp, RrefIsReducedAndSpansTheSameSpace) {
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    fp::Mat m = random_matrix(rng, 4, 5, 3), r = m;
    auto pivots = fp::rref(r, 3);
    EXPECT_EQ(pivots.size(), fp::rank(m, 3));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      EXPECT_EQ(r[i][pivots[i]], 1);
      for (std::size_t j = 0; j < r.size(); ++j)
        if (j != i) EXPECT_EQ(r[j][pivots[i]], 0);
    }
    if (!pivots.empty()) {
      fp::Mat nonzero(r.begin(), r.begin() + static_cast<long>(pivots.size()));
      EXPECT_TRUE(fp::same_row_space(m, nonzero, 3));
    }
  }
}

TEST(Fp, InverseAndNullspace) {
  Rng rng(3);
  for (int p : {2, 3}) {
    for (int k = 0; k < 100; ++k) {
      fp::Mat m = random_matrix(rng, 3, 3, p);
      auto inv = fp::inverse(m, p);
      EXPECT_EQ(inv.has_value(), fp::rank(m, p) == 3);
      if (inv) EXPECT_EQ(fp::multiply(m, *inv, p), fp::identity(3));
      fp::Mat a = random_matrix(rng, 2, 4, p);
      fp::Mat ns = fp::nullspace(a, 4, p);
      EXPECT_EQ(ns.size(), 4 - fp::rank(a, p));
      for (const auto& v : ns) {
        fp::Mat col = fp::transpose(fp::Mat{v});
        EXPECT_TRUE(fp::is_zero(fp::multiply(a, col, p)));
      }
    }
  }
}

TEST(Fp, RowSpaceContainment) {
  fp::Mat a{{1, 0, 1}, {0, 1, 1}};
  EXPECT_TRUE(fp::row_space_contains(a, fp::Mat{{1, 1, 0}}, 2));
  EXPECT_FALSE(fp::row_space_contains(a, fp::Mat{{1, 0, 0}}, 2));
  EXPECT_FALSE(fp::same_row_space(a, fp::Mat{{1, 1, 0}}, 2));
}

TEST(Fp, Polynomials) {
  fp::Poly f{1, 1, 1};  // T^2 + T + 1
  fp::Poly g{1, 1};     // T + 1
  fp::Poly q, r;
  fp::poly_divmod(f, g, 2, q, r);
  EXPECT_EQ(fp::poly_sub(f, fp::poly_mul(q, g, 2), 2), r);
  EXPECT_LT(fp::degree(r), fp::degree(g));
  EXPECT_EQ(fp::degree(f), 2);
  EXPECT_EQ(fp::monic(fp::Poly{2, 2}, 3), (fp::Poly{1, 1}));
  fp::Poly z{0, 0};
  fp::trim(z);
  EXPECT_TRUE(z.empty());
}

TEST(Fp, InvariantFactors) {
  EXPECT_EQ(fp::invariant_factors(fp::identity(2), 2), (std::vector<fp::Poly>{{1, 1}, {1, 1}}));
  EXPECT_EQ(fp::invariant_factors(fp::Mat{{0, 1}, {1, 1}}, 2), (std::vector<fp::Poly>{{1, 1, 1}}));
  EXPECT_EQ(fp::invariant_factors(fp::Mat{{1, 1}, {0, 1}}, 2), (std::vector<fp::Poly>{{1, 0, 1}}));
  EXPECT_EQ(fp::invariant_factors(fp::Mat{{2}}, 3), (std::vector<fp::Poly>{{1, 1}}));
}

TEST(Fp, InvariantFactorsAreConjugationInvariantAndMultiplyToCharpoly) {
  Rng rng(4);
  for (int p : {2, 3}) {
    auto all = all_tmodules(p, 3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 60; ++k) {
      const TModule& v = all[pick(rng)];
      const TModule& c = all[pick(rng)];
      fp::Mat w = fp::multiply(fp::multiply(c.plus, v.plus, p), c.minus, p);
      auto fv = fp::invariant_factors(v.plus, p);
      EXPECT_EQ(fv, fp::invariant_factors(w, p));
      fp::Poly product{1};
      int total = 0;
      for (std::size_t i = 0; i < fv.size(); ++i) {
        product = fp::poly_mul(product, fv[i], p);
        total += fp::degree(fv[i]);
        if (i + 1 < fv.size()) {
          fp::Poly q, r;
          fp::poly_divmod(fv[i + 1], fv[i], p, q, r);
          EXPECT_TRUE(r.empty());
        }
      }
      EXPECT_EQ(total, 3);
      EXPECT_EQ(product.back(), 1);
    }
  }
}

TEST(Fp, SimilarityRepresentativeCounts) {
  // GL_1(F_2) has one class; GL_2(F_2) has three (identity, a Jordan block, the companion of T^2+T+1).
  auto reps = similarity_representatives(2, 2);
  long rank1 = 0, rank2 = 0;
  for (const auto& v : reps) (v.rank == 1 ? rank1 : rank2) += 1;
  EXPECT_EQ(rank1, 1);
  EXPECT_EQ(rank2, 3);
  EXPECT_EQ(all_tmodules(2, 2).size(), 6u);
  EXPECT_EQ(all_tmodules(3, 2).size(), 48u);
}
