#include <gtest/gtest.h>

#include "lb/bimodules.hpp"
#include "lb/nilhecke.hpp"
#include "lb/qlaurent.hpp"

using namespace lb;

namespace {

const std::vector<Params> kGrid = {{1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 2, 2}, {2, 2, 2, 2}, {3, 2, 3, 2}, {3, 3, 3, 3}};

Poly x_range_elem(const Params& p, const LadderModule& m, AlphabetExpr base, int from, int to, int i) {
  for (int j = from; j <= to; ++j) base -= AlphabetExpr::X(j);
  (void)p;
  return elem_sym(base, i, m.sizes());
}

}  // namespace

TEST(Bimodules, SmallExamples) {
  Params p{1, 1, 1, 1};
  auto v0 = build_V(p, 0), v1 = build_V(p, 1);
  EXPECT_EQ(v0->rank(), 1);
  EXPECT_EQ(v1->rank(), 2);
  EXPECT_EQ(v0->reduce(Poly::x(1)), Poly::c(1));
  EXPECT_EQ(v1->reduce(Poly::x(1, 2)), (Poly::c(1) + Poly::d(1)) * Poly::x(1) - Poly::c(1) * Poly::d(1));
  EXPECT_EQ(v1->hilbert_series(), QLaurent(1) + QLaurent::mono(2));
  EXPECT_EQ(v0->hilbert_series(), QLaurent(1));
}

TEST(Bimodules, RankProduct) {
  for (const auto& p : kGrid)
    for (int r = 0; r <= p.b; ++r) {
      long want = 1;
      for (int j = 0; j < p.b - r; ++j) want *= p.c - j;
      for (int j = 1; j <= r; ++j) want *= p.a + j;
      EXPECT_EQ(build_V(p, r)->rank(), want) << p.str() << " r=" << r;
    }
}

TEST(Bimodules, EliminatedRelationsVanish) {
  for (const auto& p : kGrid)
    for (int r = 0; r <= p.b; ++r) {
      auto m = build_V(p, r);
      int l = p.l();
      for (int i = l + r + 1; i <= l + r + 3; ++i)
        EXPECT_TRUE(m->reduce(x_range_elem(p, *m, AlphabetExpr::C(), r + 1, p.b, i)).is_zero()) << p.str() << r << i;
      for (int i = p.a + 1; i <= p.a + 3; ++i)
        EXPECT_TRUE(m->reduce(x_range_elem(p, *m, AlphabetExpr::C() + AlphabetExpr::D(), 1, p.b, i)).is_zero());
    }
}

TEST(Bimodules, ReduceIsIdempotentAndMultiplicative) {
  Params p{2, 2, 2, 2};
  for (int r = 0; r <= 2; ++r) {
    auto m = build_V(p, r);
    Poly f = Poly::x(1, 5) + Poly::x(2, 3) * Poly::c(1), g = Poly::x(1) * Poly::x(2, 4) - Poly::d(2);
    Poly rf = m->reduce(f);
    EXPECT_EQ(m->reduce(rf), rf);
    EXPECT_EQ(m->reduce(f + g), rf + m->reduce(g));
    EXPECT_EQ(m->reduce(f * g), m->reduce(rf * g));
    EXPECT_EQ(m->from_coords(m->coords(rf)), rf);
  }
}

TEST(Bimodules, Xi) {
  Params p{2, 2, 2, 2};
  EXPECT_EQ(xi(p, {1, 1}), 0);
  EXPECT_EQ(xi(p, {2}), 1);
  EXPECT_EQ(xi(Params{3, 3, 3, 3}, {3}), 3);
  EXPECT_EQ(xi(p, {}), 1);  // the b - r block
}

TEST(Bimodules, WViewInvariance) {
  Params p{2, 2, 2, 2};
  WView w = build_W(p, 2, {2});
  EXPECT_TRUE(w.contains(w.V->reduce(Poly::x(1) + Poly::x(2))));
  EXPECT_FALSE(w.contains(w.V->reduce(Poly::x(1))));
  WView w11 = build_W(p, 2, {1, 1});
  EXPECT_TRUE(w11.contains(w11.V->reduce(Poly::x(1))));
}

TEST(Bimodules, WCoordinates) {
  auto one = w_coordinates(Poly(1), {{1, 2}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.begin()->second, Poly(1));
  auto co = w_coordinates(Poly::x(2), {{1, 2}});
  Poly back;
  for (const auto& [alpha, coeff] : co) {
    Poly mono = 1;
    for (size_t j = 0; j < alpha.size(); ++j) mono *= Poly::x(static_cast<int>(j) + 1, alpha[j]);
    back += mono * coeff;
    EXPECT_EQ(transpose(coeff, 1), coeff);
    bool is_zero_alpha = std::all_of(alpha.begin(), alpha.end(), [](int e) { return e == 0; });
    EXPECT_EQ(coeff, is_zero_alpha ? Poly::x(1) + Poly::x(2) : Poly(-1));
  }
  EXPECT_EQ(back, Poly::x(2));
}

TEST(Bimodules, HilbertOfVIsFactorialTimesW) {
  for (const auto& p : kGrid)
    for (int r = 0; r <= p.b; ++r) {
      WView w = build_W(p, r, r ? std::vector<int>{r} : std::vector<int>{});
      QLaurent hv = w.V->hilbert_series().shifted(w.V->qshift());
      QLaurent hw = w.hilbert_series(200).shifted(w.qshift());
      EXPECT_EQ(hv, qfac(r) * qfac(p.b - r) * hw) << p.str() << " r=" << r;
    }
}
