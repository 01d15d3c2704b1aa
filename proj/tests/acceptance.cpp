// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "lb/cli.hpp"
#include "lb/grothendieck.hpp"
#include "lb/homotopy.hpp"
#include "lb/kcomplex.hpp"
#include "lb/pcomplex.hpp"
#include "lb/relations.hpp"

using namespace lb;

namespace {

const std::vector<Params> kGrid = {{1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 2, 2}, {2, 2, 2, 2}, {3, 2, 3, 2}, {3, 3, 3, 3}};

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
  void require(const CheckResult& r, const std::string& what) {
    require(r.pass, what + " " + r.name + (r.failures.empty() ? "" : ": " + r.failures.front()));
  }
};

std::vector<int> digits(const char* s) {
  std::vector<int> v;
  for (; *s; ++s) v.push_back(*s - '0');
  return v;
}

Outcome grids() {
  Outcome o;
  auto G2 = integrate_G(Params{2, 2, 2, 2});
  for (int e2 = 0; e2 < 4; ++e2)
    for (int e1 = 0; e1 < 4; ++e1) o.require(G2.at({e1, e2}) == golden::kG2[e2][e1], "b=2 G value");
  auto G3 = integrate_G(Params{3, 3, 3, 3});
  for (const auto& e : golden::kG3) o.require(G3.at(digits(e.eps)) == e.G, std::string("b=3 G at ") + e.eps);
  return o;
}

Outcome h_grid() {
  Outcome o;
  auto H = integrate_H(Params{2, 2, 2, 2}, 4);
  for (const auto& e : golden::kH2) o.require(H.at(e.lambda) == e.H, "H value");
  for (const auto& p : kGrid)
    for (int k = 0; k <= 5; ++k) o.require(check_P_corners(p, k), p.str());
  return o;
}

Outcome closed_form() {
  Outcome o;
  for (const auto& p : kGrid) o.require(check_K_closed_form(build_K(p)), p.str());
  return o;
}

Outcome relations() {
  Outcome o;
  for (const auto& p : kGrid) o.require(check_all_relations(p), p.str());
  return o;
}

Outcome k_d2() {
  Outcome o;
  for (const auto& p : kGrid) {
    MultiComplex k = build_K(p);
    EdgeMatrices em(k, 1);
    o.require(check_d2(k, em, 1), p.str());
  }
  return o;
}

Outcome p_d2() {
  Outcome o;
  for (const auto& p : kGrid) {
    MultiComplex P = build_P(p, p.b <= 2 ? 4 : 2);
    EdgeMatrices em(P, 1);
    o.require(check_d2(P, em, 1), p.str());
  }
  return o;
}

Outcome adjoint() {
  Outcome o;
  for (const auto& p : kGrid) o.require(check_K_adjoint(build_K(p)), p.str());
  return o;
}

Outcome counts() {
  Outcome o;
  for (const auto& p : kGrid)
    for (int k = 0; k <= 4; ++k) o.require(check_P_counts(build_P(p, k)), p.str());
  return o;
}

Outcome minimality() {
  Outcome o;
  for (const auto& p : kGrid) {
    if (p.b > 2) continue;
    for (int k = 1; k <= 3; ++k) {
      MultiComplex P = build_P(p, k);
      EdgeMatrices em(P, 1);
      o.require(check_P_minimality(P, em), p.str());
    }
  }
  return o;
}

Outcome golden_words() {
  Outcome o;
  MultiComplex k = build_K(Params{2, 2, 2, 2});
  for (const auto& g : golden::kK2) {
    const MCEdge* e = k.edge_between(k.index.at(g.from), k.index.at(g.to));
    o.require(e && word_str(e->word) == g.word, std::string("K word ") + g.word);
  }
  Params p{2, 2, 2, 2};
  MultiComplex P = build_P(p, 4);
  o.require(P.edges.size() == golden::kP2.size(), "P edge count");
  for (const auto& g : golden::kP2) {
    int from = P.index.at(g.from);
    const MCEdge* e = P.edge_between(from, P.index.at(g.to));
    o.require(e && w_level_equal(p, parse_word(golden::display_to_word(g.word)), e->word, P.objs[from].r,
                                 P.objs[from].g),
              std::string("P word ") + g.word);
  }
  return o;
}

Outcome splitting() {
  Outcome o;
  for (const auto& p : kGrid)
    for (int k = 1; k <= 3; ++k) o.require(check_P_splitting(build_P(p, k), p.b <= 2), p.str());
  return o;
}

Outcome reduction() {
  Outcome o;
  Params p{1, 1, 1, 1};
  for (int k = 1; k <= 4; ++k) {
    ReductionReport rep = reduce_rickard_power(p, k);
    for (const auto& c : rep.checks) o.require(c, "k=" + std::to_string(k));
    o.require(rep.reduced.objs.size() == static_cast<size_t>(k + 1), "object count");
    std::vector<std::pair<int, int>> tq, want;
    for (const auto& ob : rep.reduced.objs)
      if (ob.rungs() == 1) tq.push_back({ob.t, ob.shift});
    for (int j = 1; j <= k; ++j) want.push_back({-j, 2 * j - 1});
    std::sort(tq.begin(), tq.end(), [](auto x, auto y) { return x.first > y.first; });
    o.require(tq == want, "shifts t^-j q^(2j-1)");
  }
  return o;
}

Outcome grothendieck() {
  Outcome o;
  for (const auto& p : kGrid) o.require(check_class_ranks(p), p.str());
  Params p2{2, 2, 2, 2};
  ClassVector r = euler(rickard(p2));
  for (int k = 1; k <= 3; ++k) o.require(class_power(p2, r, k) == euler(build_P(p2, k)), "euler k=" + std::to_string(k));
  for (Params p : {Params{1, 1, 1, 1}, Params{2, 1, 1, 2}, Params{2, 2, 2, 2}, Params{3, 2, 2, 3}})
    for (int k = 1; k <= 6; ++k) o.require(check_limit_pattern(p, k), p.str());
  return o;
}

Outcome determinism() {
  Outcome o;
  auto once = [](const std::string& jobs) {
    std::ostringstream out, err;
    int code = run({"check", "--a", "2", "--b", "2", "--c", "2", "--d", "2", "--what", "all", "--k", "3", "--format",
                    "json", "--jobs", jobs},
                   out, err);
    return std::make_pair(code, out.str());
  };
  auto a = once("1"), b = once("1"), c = once("2");
  o.require(a.first == 0, "check exit code");
  o.require(!a.second.empty() && a.second == b.second && a.second == c.second, "report bytes differ");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> fn;
  };
  std::vector<Criterion> all = {
      {"G-grid reproduction (b=2, b=3)", 1, grids},
      {"H-grid and corner closed form", 1, h_grid},
      {"(G(e)+G(e*))/2 closed form", 5, closed_form},
      {"operator relation suite", 300, relations},
      {"d^2 = 0 for K", 900, k_d2},
      {"d^2 = 0 for F^k(P)", 900, p_d2},
      {"dual-edge adjointness", 5, adjoint},
      {"object counts 1 + k + ... + k^b", 60, counts},
      {"minimality (associated graded)", 60, minimality},
      {"golden differential words", 10, golden_words},
      {"tensor splitting", 300, splitting},
      {"homotopy reduction at b=1", 60, reduction},
      {"Grothendieck proxies", 120, grothendieck},
      {"determinism of check reports", 60, determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i].fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > all[i].budget) o.require(false, "over time budget");
    failed += !o.pass;
    std::printf("%s %2zu %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, all[i].name, dt,
                o.note.empty() ? "" : " - ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
