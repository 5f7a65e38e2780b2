#include <gtest/gtest.h>

#include "lieq/chevalley.hpp"

using namespace lieq;

namespace {

ChevalleyData chev(char f, int n) { return build_chevalley(build_root_system(SimpleType{f, n})); }

QVec unit(int dim, int k) {
  QVec e(dim, Rational(0));
  e[k] = 1;
  return e;
}

}  // namespace

TEST(StructureConstants, A2AndG2Magnitudes) {
  auto a2 = chev('A', 2);
  int a1 = a2.rd.root_index({1, 0}), a2i = a2.rd.root_index({0, 1});
  // alpha_2 - alpha_1 is not a root, so p = 0
  EXPECT_EQ(std::abs(a2.N(a1, a2i)), 1);
  auto g2 = chev('G', 2);
  int s = g2.rd.root_index({1, 0}), t = g2.rd.root_index({1, 1});
  // (a1+a2) - a1 is a root, (a1+a2) - 2a1 is not: p = 1
  EXPECT_EQ(std::abs(g2.N(s, t)), 2);
  // a1 + 3a1 + ... : sum not a root gives 0
  int l = g2.rd.root_index({3, 2});
  EXPECT_EQ(g2.sum(l, l), -1);
  EXPECT_EQ(g2.N(l, l), 0);
}

TEST(StructureConstants, ExtraspecialPairsArePositive) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}}) {
    auto cd = chev(f, n);
    for (const auto& [r, s] : cd.extraspecial)
      if (r >= 0) EXPECT_GT(cd.N(r, s), 0);
  }
}

TEST(StructureConstants, JacobiOnChevalleyBasis) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}})
    EXPECT_EQ(count_jacobi_failures(chev(f, n)), 0) << f << n;
}

TEST(StructureConstants, SemisimpleSum) {
  auto cd = build_chevalley(build_root_system(std::vector<SimpleType>{{'C', 2}, {'A', 1}}));
  EXPECT_EQ(cd.dim, 13);
  EXPECT_EQ(count_jacobi_failures(cd), 0);
  verify_killing_identities(cd);
}

TEST(Adjoint, CartanActsDiagonally) {
  auto cd = chev('B', 3);
  for (int i = 0; i < 3; ++i) {
    QMatrix m = adjoint_matrix(cd, cd.h_index(i));
    for (int a = 0; a < cd.dim; ++a)
      for (int b = 0; b < cd.dim; ++b) {
        Rational expect = 0;
        if (a == b && a < cd.nroots) expect = cd.rd.root_to_weight(cd.rd.roots[a])[i];
        EXPECT_EQ(m(a, b), expect);
      }
  }
  int top = cd.rd.root_index(cd.rd.beta_max[0]);
  EXPECT_TRUE(is_zero_vec(adjoint_matrix(cd, top) * unit(cd.dim, top)));
}

TEST(Adjoint, MatricesRespectBrackets) {
  auto cd = chev('G', 2);
  for (int a = 0; a < cd.dim; ++a)
    for (int b = 0; b < cd.dim; ++b) {
      QMatrix ma = adjoint_matrix(cd, a), mb = adjoint_matrix(cd, b);
      QVec ab = cd.bracket(unit(cd.dim, a), unit(cd.dim, b));
      EXPECT_EQ(adjoint_matrix(cd, ab), ma * mb - mb * ma);
    }
}

TEST(Killing, A1TraceIsEight) {
  auto cd = chev('A', 1);
  QMatrix h = adjoint_matrix(cd, cd.h_index(0));
  // eigenvalues 2, -2, 0
  Rational tr = 0;
  QMatrix sq = h * h;
  for (int k = 0; k < cd.dim; ++k) tr += sq(k, k);
  EXPECT_EQ(tr, 8);
  EXPECT_EQ(killing_form(cd, unit(3, 2), unit(3, 2)), 8);
}

TEST(Killing, IdentitiesHold) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'C', 3}, {'G', 2}, {'F', 4}}) {
    auto cd = chev(f, n);
    EXPECT_NO_THROW(verify_killing_identities(cd)) << f << n;
    // vanishing off opposite root spaces
    for (int a = 0; a < cd.nroots; ++a)
      for (int b = 0; b < cd.nroots; ++b)
        if (b != cd.neg(a)) EXPECT_EQ(killing_form(cd, unit(cd.dim, a), unit(cd.dim, b)), 0);
  }
}

TEST(Killing, CartanGramIsSumOfSquaredPairings) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'G', 2}, {'E', 6}}) {
    auto cd = chev(f, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long s = 0;
        for (const auto& r : cd.rd.roots) {
          Weight w = cd.rd.root_to_weight(r);
          s += w[i] * w[j];
        }
        EXPECT_EQ(cd.killing_gram(cd.h_index(i), cd.h_index(j)), s);
      }
  }
}

TEST(Automorphism, OrderTwo) {
  auto cd = chev('C', 3);
  QMatrix phi = order_two_automorphism(cd);
  EXPECT_EQ(phi * phi, QMatrix::identity(cd.dim));
  EXPECT_EQ(phi * unit(cd.dim, cd.h_index(0)), scale(unit(cd.dim, cd.h_index(0)), Rational(-1)));
  EXPECT_NO_THROW(verify_automorphism(cd, phi));
}

TEST(CompactBasis, RelationsIntegralityAndOrthogonality) {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    auto cd = chev(f, n);
    CompactBasis cb;
    ASSERT_NO_THROW(cb = build_compact_basis(cd)) << f << n;
    EXPECT_EQ(count_jacobi_failures(cb), 0);
    for (int k = 0; k < cb.npos; ++k) {
      QVec a = unit(cb.dim, cb.A(k)), b = unit(cb.dim, cb.B(k));
      QVec tt(cb.dim, Rational(0));
      auto co = cd.coroot(cd.rd.positive[k]);
      for (int i = 0; i < n; ++i) tt[i] = co[i];
      EXPECT_EQ(cb.bracket(a, b), scale(tt, Rational(2)));
      EXPECT_EQ(cb.bracket(tt, a), scale(b, Rational(2)));
      EXPECT_EQ(cb.bracket(tt, b), scale(a, Rational(-2)));
      for (int i = 0; i < n; ++i) EXPECT_TRUE(is_zero_vec(cb.bracket(tt, unit(cb.dim, i))));
    }
  }
}

TEST(CompactBasis, A1GramAndJ0Pairing) {
  auto cd = chev('A', 1);
  auto cb = build_compact_basis(cd);
  EXPECT_EQ(cb.neg_killing, QMatrix::identity(3) * Rational(8));
  EXPECT_EQ(xb_j0xb_values(cd), std::vector<Rational>{Rational(-4)});
}

TEST(CompactBasis, CartanBlockIsCorootGram) {
  auto cd = chev('A', 2);
  auto cb = build_compact_basis(cd);
  // <tt_i, tt_j> = sum over roots of r(h_i) r(h_j): A2 gives 12 on the diagonal, -6 off it
  EXPECT_EQ(cb.neg_killing(0, 0), 12);
  EXPECT_EQ(cb.neg_killing(0, 1), -6);
  for (int a = cb.n; a < cb.dim; ++a)
    for (int b = 0; b < cb.dim; ++b)
      if (a != b) EXPECT_EQ(cb.neg_killing(a, b), 0);
}
