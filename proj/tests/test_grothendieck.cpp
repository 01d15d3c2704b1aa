#include <gtest/gtest.h>

#include "lb/grothendieck.hpp"
#include "lb/pcomplex.hpp"

using namespace lb;

namespace {
QLaurent q(int e) { return QLaurent::mono(e); }
}  // namespace

TEST(Grothendieck, QuantumNumbers) {
  EXPECT_EQ(qint(2), q(-1) + q(1));
  EXPECT_EQ(qfac(1), QLaurent(1));
  EXPECT_EQ(qfac(0), QLaurent(1));
  EXPECT_EQ(qmultinomial({1, 2}), qint(3));
  EXPECT_EQ(qmultinomial({1, 1, 1}), qint(3) * qint(2));
  EXPECT_EQ(qint(3).at_one(), 3);
  EXPECT_EQ((qint(4) * qint(2)).div_exact(qint(2)), qint(4));
  EXPECT_THROW(qint(3).div_exact(qint(2)), std::domain_error);
}

TEST(Grothendieck, ClassesOfObjects) {
  Params p2{2, 2, 2, 2}, p3{3, 3, 3, 3};
  EXPECT_EQ(class_of_W(p2, 2, {1, 1}), ClassVector::basis(2, 2, qint(2)));
  EXPECT_EQ(class_of_W(p2, 2, {2}), ClassVector::basis(2, 2));
  EXPECT_EQ(class_of_V(p2, 2), ClassVector::basis(2, 2, qfac(2)));
  EXPECT_EQ(class_of_W(p3, 3, {1, 2}), ClassVector::basis(3, 3, qint(3)));
  EXPECT_EQ(class_of_W(p3, 3, {1, 1, 1}), ClassVector::basis(3, 3, qint(3) * qint(2)));
}

TEST(Grothendieck, EulerOfOneStrand) {
  Params p{1, 1, 1, 1};
  EXPECT_EQ(euler(build_P(p, 0)).str(), "[W0]");
  EXPECT_EQ(euler(build_P(p, 3)).str(), "[W0] + (-q + q^3 - q^5)[W1]");
}

TEST(Grothendieck, StructureConstantsAgreeWithGradedRank) {
  for (Params p : {Params{1, 1, 1, 1}, Params{2, 1, 1, 2}, Params{2, 2, 2, 2}, Params{3, 3, 3, 3}})
    EXPECT_TRUE(check_class_ranks(p).pass) << p.str();
}

TEST(Grothendieck, OneStrandProduct) {
  // [W1]^2 = [2][W1] for a = b = 1.
  Params p{1, 1, 1, 1};
  ClassVector w1 = ClassVector::basis(1, 1);
  EXPECT_EQ(class_product(p, w1, w1), ClassVector::basis(1, 1, qint(2)));
}

TEST(Grothendieck, LimitPattern) {
  for (Params p : {Params{1, 1, 1, 1}, Params{2, 1, 1, 2}, Params{2, 2, 2, 2}, Params{3, 2, 2, 3}})
    for (int k = 1; k <= 6; ++k) EXPECT_TRUE(check_limit_pattern(p, k).pass) << p.str() << " k=" << k;
}

TEST(Grothendieck, RemainderShrinks) {
  Params p{2, 2, 2, 2};
  for (int k = 1; k <= 5; ++k) {
    ClassVector chi = euler(build_P(p, k));
    for (int r = 1; r <= 2; ++r) {
      QLaurent rem = limit_remainder(chi, r);
      if (!rem.is_zero()) EXPECT_GE(rem.min_exp(), 2 * k);
    }
  }
}
