#include <gtest/gtest.h>

#include <map>

#include "golden.hpp"
#include "lb/kcomplex.hpp"

using namespace lb;

namespace {

const std::vector<Params> kGrid = {{1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 2, 2}, {2, 2, 2, 2}, {3, 2, 3, 2}, {3, 3, 3, 3}};

std::vector<int> digits(const char* s) {
  std::vector<int> v;
  for (; *s; ++s) v.push_back(*s - '0');
  return v;
}

}  // namespace

TEST(KComplex, GridB2) {
  auto G = integrate_G(Params{2, 2, 2, 2});
  for (int e2 = 0; e2 < 4; ++e2)
    for (int e1 = 0; e1 < 4; ++e1) EXPECT_EQ(G.at({e1, e2}), golden::kG2[e2][e1]) << e1 << e2;
}

TEST(KComplex, GridB3) {
  auto G = integrate_G(Params{3, 3, 3, 3});
  ASSERT_EQ(golden::kG3.size(), 64u);
  for (const auto& e : golden::kG3) {
    EXPECT_EQ(G.at(digits(e.eps)), e.G) << e.eps;
    EXPECT_EQ(r_of_eps(digits(e.eps)), e.r) << e.eps;
  }
}

TEST(KComplex, ClosedForm) {
  for (const auto& p : kGrid) {
    auto G = integrate_G(p);
    long want = binom(p.a + 2, 2) - binom(p.a - p.b + 2, 2);
    EXPECT_EQ(G_closed_form(p), want);
    for (const auto& [eps, g] : G) {
      std::vector<int> star;
      for (int e : eps) star.push_back(3 - e);
      EXPECT_EQ(g + G.at(star), 2 * want) << p.str();
    }
  }
}

TEST(KComplex, EdgeStrings) {
  // eps^j = (1, j, 2, 0, 2, 3, 1), direction 2.
  std::vector<int> eps = {1, 0, 2, 0, 2, 3, 1};
  auto [alpha, beta_star] = edge_strings(eps, 2);
  EXPECT_EQ(word_str(alpha), "d6 s5");
  EXPECT_EQ(word_str(beta_star), "S*2 S*3 D*4");
  EXPECT_EQ(word_str(component_word(eps, 2, 0)), "d6 s5 Z45 d4 s3 s2");
  EXPECT_EQ(word_str(component_word(eps, 2, 1)), "S*2 S*3 D*4 Q5 s4 d3 d2");
  EXPECT_EQ(word_str(component_word(eps, 2, 2)), "D*2 D*3 S*4 Z54 D*5 S*6");
  auto [a0, b0] = edge_strings({0, 0}, 2);
  EXPECT_TRUE(a0.empty());
  EXPECT_TRUE(b0.empty());
  EXPECT_EQ(word_str(hat(parse_word("d8 d7 d6 s5 d4 s3"))), "s8 s7 s6 d5 s4 d3");
}

TEST(KComplex, GoldenWordsB2) {
  MultiComplex k = build_K(Params{2, 2, 2, 2});
  ASSERT_EQ(k.edges.size(), golden::kK2.size());
  for (const auto& g : golden::kK2) {
    const MCEdge* e = k.edge_between(k.index.at(g.from), k.index.at(g.to));
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(word_str(e->word), g.word);
  }
}

TEST(KComplex, OneStrand) {
  MultiComplex k = build_K(Params{1, 1, 1, 1});
  ASSERT_EQ(k.objs.size(), 4u);
  std::vector<int> shifts;
  for (int j = 0; j < 4; ++j) shifts.push_back(k.objs[k.index.at({j})].qshift);
  EXPECT_EQ(shifts, (std::vector<int>{0, 1, 3, 4}));
  EXPECT_EQ(word_str(k.edge_between(k.index.at({2}), k.index.at({1}))->word), "Q1");
}

class KGrid : public ::testing::TestWithParam<Params> {};

TEST_P(KGrid, Verifies) {
  MultiComplex k = build_K(GetParam());
  EdgeMatrices em(k, 1);
  for (auto r : {check_d2(k, em, 1), check_homogeneity(k, em), check_word_degrees(k), check_K_adjoint(k),
                 check_K_closed_form(k), check_K_psi_vanishing(k)})
    EXPECT_TRUE(r.pass) << GetParam().str() << " " << r.name;
}

INSTANTIATE_TEST_SUITE_P(Small, KGrid,
                         ::testing::Values(Params{1, 1, 1, 1}, Params{2, 1, 2, 1}, Params{3, 1, 2, 2},
                                           Params{2, 2, 2, 2}, Params{3, 2, 3, 2}));

TEST(KComplex, DetectsBrokenComponent) {
  MultiComplex k = build_K(Params{2, 2, 2, 2});
  // Negative control: flipping one sign must break d^2 = 0.
  k.edges[3].sign = -k.edges[3].sign;
  EdgeMatrices em(k, 1);
  EXPECT_FALSE(check_d2(k, em, 1).pass);
}
