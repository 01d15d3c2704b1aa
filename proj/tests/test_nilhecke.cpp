#include <gtest/gtest.h>

#include <random>

#include "lb/nilhecke.hpp"
#include "lb/symfunc.hpp"

using namespace lb;

namespace {

// Monomials in x_1..x_4 up to total degree 4 (q-degree 8).
std::vector<Poly> spanning_set() {
  std::vector<Poly> out;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (int c = 0; a + b + c <= 4; ++c)
        for (int d = 0; a + b + c + d <= 4; ++d)
          out.push_back(Poly::x(1, a) * Poly::x(2, b) * Poly::x(3, c) * Poly::x(4, d));
  return out;
}

Poly dd(const Poly& p, int i) { return divided_difference(p, i); }
Poly tr(const Poly& p, int i) { return transpose(p, i); }

}  // namespace

TEST(NilHecke, Examples) {
  EXPECT_TRUE(dd(Poly(1), 1).is_zero());
  EXPECT_EQ(dd(Poly::x(1), 1), Poly(1));
  EXPECT_EQ(dd(Poly::x(1, 2), 1), Poly::x(1) + Poly::x(2));
  EXPECT_EQ(tr(Poly::x(1), 1), Poly::x(2));
  EXPECT_EQ(tr(Poly::x(1) * Poly::x(2), 1), Poly::x(1) * Poly::x(2));
  EXPECT_EQ(tr(Poly::x(2, 2) + Poly::x(3), 2), Poly::x(3, 2) + Poly::x(2));
  EXPECT_TRUE(longest_dd(Poly(1), {1, 2}).is_zero());
  EXPECT_EQ(longest_dd(Poly::x(1), {1, 2}), Poly(1));
  EXPECT_EQ(longest_dd(Poly::x(1, 2) * Poly::x(2), {1, 2, 3}), Poly(1));
}

TEST(NilHecke, DifferenceQuotientOracle) {
  for (const auto& p : spanning_set())
    for (int i = 1; i <= 3; ++i) {
      Poly d = dd(p, i);
      EXPECT_EQ((Poly::x(i) - Poly::x(i + 1)) * d, p - tr(p, i));
      EXPECT_EQ(tr(d, i), d);
      if (!d.is_zero()) {
        EXPECT_EQ(d.qdeg(), p.qdeg() - 2);
      }
    }
}

TEST(NilHecke, Relations) {
  for (const auto& p : spanning_set()) {
    for (int i = 1; i <= 3; ++i) {
      EXPECT_TRUE(dd(dd(p, i), i).is_zero());
      EXPECT_EQ(tr(tr(p, i), i), p);
      EXPECT_EQ(tr(dd(p, i), i), dd(p, i));
      EXPECT_EQ(dd(tr(p, i), i), -dd(p, i));
      EXPECT_EQ(dd(Poly::x(i) * p, i), p + Poly::x(i + 1) * dd(p, i));
      EXPECT_EQ(dd(Poly::x(i + 1) * p, i), -p + Poly::x(i) * dd(p, i));
      EXPECT_EQ(tr(p, i), p - (Poly::x(i) - Poly::x(i + 1)) * dd(p, i));
    }
    for (int i = 1; i <= 2; ++i) {
      int j = i + 1;
      EXPECT_EQ(dd(dd(dd(p, i), j), i), dd(dd(dd(p, j), i), j));
      EXPECT_EQ(tr(tr(tr(p, i), j), i), tr(tr(tr(p, j), i), j));
      // Mixed braid relations, operators applied right to left.
      EXPECT_EQ(tr(tr(dd(p, i), j), i), dd(tr(tr(p, j), i), j));
      EXPECT_EQ(dd(tr(tr(p, i), j), i), tr(tr(dd(p, j), i), j));
      EXPECT_EQ(tr(dd(tr(p, i), j), i), tr(dd(tr(p, j), i), j));
    }
    EXPECT_EQ(dd(dd(p, 3), 1), dd(dd(p, 1), 3));
    EXPECT_EQ(tr(dd(p, 3), 1), dd(tr(p, 1), 3));
  }
}

TEST(NilHecke, TwistedLeibniz) {
  std::mt19937 rng(3);
  auto set = spanning_set();
  std::uniform_int_distribution<size_t> pick(0, set.size() - 1);
  for (int n = 0; n < 200; ++n) {
    Poly f = set[pick(rng)] + set[pick(rng)] * Int(2), g = set[pick(rng)] - set[pick(rng)];
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(dd(f * g, i), dd(f, i) * g + tr(f, i) * dd(g, i));
  }
}

TEST(NilHecke, LongestOnStaircase) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> block;
    for (int j = 1; j <= m; ++j) block.push_back(j);
    EXPECT_EQ(longest_dd(staircase(block), block), Poly(1)) << m;
    Poly out = longest_dd(Poly::x(1, 5) * Poly::x(2, 2), block);
    for (int i = 1; i < m; ++i) EXPECT_EQ(tr(out, i), out);
  }
}
