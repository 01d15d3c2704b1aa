#include <gtest/gtest.h>

#include <random>

#include "lb/symfunc.hpp"

using namespace lb;

namespace {

// Truncated power series in t with polynomial coefficients.
using Series = std::vector<Poly>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// (1 + sign*u*t)^m, m possibly negative.
Series linear_power(const Poly& u, int sign, int m, int len) {
  Series one(len);
  one[0] = 1;
  Series f(len);
  if (m >= 0) {
    f[0] = 1;
    if (len > 1) f[1] = u * Int(sign);
  } else {
    for (int n = 0; n < len; ++n) f[n] = u.pow(n) * Int(n % 2 ? -sign : 1);
    m = -m;
  }
  Series r = one;
  for (int k = 0; k < m; ++k) r = mul(r, f);
  return r;
}

// e_i of a root set by subsets.
Poly elementary(const std::vector<Poly>& roots, int i) {
  Series s(i + 1);
  s[0] = 1;
  for (const auto& u : roots) s = mul(s, linear_power(u, 1, 1, i + 1));
  return s[i];
}

struct Realized {
  std::vector<Poly> c_roots, d_roots;
};

Poly realize_boundary(const Poly& p, const Realized& r) {
  Poly out = p;
  for (size_t j = 1; j <= r.c_roots.size(); ++j) out = out.substitute(slot_c(j), elementary(r.c_roots, j));
  for (size_t j = 1; j <= r.d_roots.size(); ++j) out = out.substitute(slot_d(j), elementary(r.d_roots, j));
  return out;
}

Series brute(const AlphabetExpr& k, const Realized& r, int len, bool complete) {
  int sign = complete ? -1 : 1;
  int exp_sign = complete ? -1 : 1;
  Series s(len);
  s[0] = 1;
  for (const auto& u : r.c_roots) s = mul(s, linear_power(u, sign, exp_sign * k.cC, len));
  for (const auto& u : r.d_roots) s = mul(s, linear_power(u, sign, exp_sign * k.cD, len));
  for (auto [j, m] : k.x) s = mul(s, linear_power(Poly::x(j), sign, exp_sign * m, len));
  return s;
}

}  // namespace

TEST(Symfunc, Examples) {
  AlphabetSizes s{1, 1};
  EXPECT_EQ(elem_sym(AlphabetExpr::C(), 0, s), Poly(1));
  EXPECT_EQ(elem_sym(AlphabetExpr::C() - AlphabetExpr::X(1), 1, s), Poly::c(1) - Poly::x(1));
  AlphabetSizes s2{2, 2};
  EXPECT_EQ(elem_sym(AlphabetExpr::C() - AlphabetExpr::X(2), 2, s2),
            Poly::c(2) - Poly::c(1) * Poly::x(2) + Poly::x(2, 2));
  EXPECT_EQ(complete_sym(AlphabetExpr::C(), 1, s), Poly::c(1));
  EXPECT_EQ(complete_sym(AlphabetExpr::X(1) + AlphabetExpr::X(2), 2, s),
            Poly::x(1, 2) + Poly::x(1) * Poly::x(2) + Poly::x(2, 2));
}

TEST(Symfunc, NegatedSingleRootAlphabet) {
  // h_2(-D) = e_2(D) vanishes for a one-element D; e_2(-D) = h_2(D) = d_1^2.
  AlphabetSizes s{1, 1};
  EXPECT_TRUE(complete_sym(-AlphabetExpr::D(), 2, s).is_zero());
  EXPECT_EQ(elem_sym(-AlphabetExpr::D(), 2, s), Poly::d(1, 2));
}

TEST(Symfunc, StaircaseExamples) {
  EXPECT_EQ(staircase({1, 2}), Poly::x(1));
  EXPECT_EQ(staircase({1, 2, 3}), Poly::x(1, 2) * Poly::x(2));
}

TEST(Symfunc, AgreesWithRootExpansion) {
  std::mt19937 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 60; ++trial) {
    AlphabetSizes s{pick(1, 3), pick(1, 3)};
    Realized r;
    for (int j = 0; j < s.c; ++j) r.c_roots.push_back(Poly::x(10 + j));
    for (int j = 0; j < s.d; ++j) r.d_roots.push_back(Poly::x(20 + j));
    AlphabetExpr k;
    k.cC = pick(-1, 2);
    k.cD = pick(-1, 1);
    for (int j = 1; j <= 2; ++j)
      if (int m = pick(-1, 1)) k.x[j] = m;
    Series e = brute(k, r, 5, false), h = brute(k, r, 5, true);
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(realize_boundary(elem_sym(k, i, s), r), e[i]) << k.str() << " e" << i;
      EXPECT_EQ(realize_boundary(complete_sym(k, i, s), r), h[i]) << k.str() << " h" << i;
    }
  }
}

TEST(Symfunc, DifferenceWithItselfIsTrivial) {
  AlphabetSizes s{3, 2};
  for (AlphabetExpr k : {AlphabetExpr::C(), AlphabetExpr::D() - AlphabetExpr::X(1), AlphabetExpr::Xrange(1, 3)}) {
    EXPECT_EQ(elem_sym(k - k, 0, s), Poly(1));
    for (int i = 1; i <= 4; ++i) {
      EXPECT_TRUE(elem_sym(k - k, i, s).is_zero());
      EXPECT_TRUE(complete_sym(k - k, i, s).is_zero());
    }
  }
}

TEST(Symfunc, Convolution) {
  AlphabetSizes s{3, 3};
  std::vector<std::pair<AlphabetExpr, AlphabetExpr>> pairs = {
      {AlphabetExpr::C(), AlphabetExpr::D()},
      {AlphabetExpr::C() - AlphabetExpr::X(1), AlphabetExpr::X(1)},
      {-AlphabetExpr::D(), AlphabetExpr::Xrange(1, 2)}};
  for (const auto& [a, b] : pairs)
    for (int i = 0; i <= 6; ++i) {
      Poly e, h;
      for (int j = 0; j <= i; ++j) {
        e += elem_sym(a, i - j, s) * elem_sym(b, j, s);
        h += complete_sym(a, i - j, s) * complete_sym(b, j, s);
      }
      EXPECT_EQ(elem_sym(a + b, i, s), e);
      EXPECT_EQ(complete_sym(a + b, i, s), h);
    }
}

TEST(Symfunc, Homogeneous) {
  AlphabetSizes s{3, 2};
  AlphabetExpr k = AlphabetExpr::C() + AlphabetExpr::D() - AlphabetExpr::Xrange(1, 2);
  for (int i = 0; i <= 5; ++i) {
    Poly e = elem_sym(k, i, s);
    EXPECT_TRUE(e.homogeneous());
    if (!e.is_zero()) {
      EXPECT_EQ(e.qdeg(), 2 * i);
    }
  }
}

TEST(Symfunc, ParseRoundTrip) {
  AlphabetExpr k = AlphabetExpr::C() - AlphabetExpr::D() + AlphabetExpr::X(3) - AlphabetExpr::X(1);
  EXPECT_EQ(AlphabetExpr::parse(k.str()), k);
}
