#include "lb/kcomplex.hpp"

#include <deque>
#include <stdexcept>

namespace lb {

int r_of_eps(const std::vector<int>& eps) {
  int r = 0;
  for (int e : eps) r += (e == 1 || e == 2);
  return r;
}

int upsilon(const Params& p, const std::vector<int>& eps, int i, int j) {
  int b = static_cast<int>(eps.size());
  int cnt = 0;
  switch (j) {
    case 0:
      for (int k = i + 1; k <= b; ++k) cnt += (eps[k - 1] == 0 || eps[k - 1] == 1);
      return 2 * cnt - p.d;
    case 1:
      for (int k = 1; k < i; ++k) cnt += (eps[k - 1] == 1 || eps[k - 1] == 2);
      return -2 * cnt - 2 - 2 * p.l();
    case 2:
      for (int k = i + 1; k <= b; ++k) cnt += (eps[k - 1] == 2 || eps[k - 1] == 3);
      return 2 * cnt - p.d;
  }
  throw std::invalid_argument("edge segment must be 0, 1 or 2");
}

namespace {

int r_with(const std::vector<int>& eps, int i, int value) {
  auto e = eps;
  e[i - 1] = value;
  return r_of_eps(e);
}

}  // namespace

std::pair<Word, Word> edge_strings(const std::vector<int>& eps, int i) {
  int b = static_cast<int>(eps.size());
  int r = r_with(eps, i, 1);
  std::vector<int> a, bs;
  for (int k = i + 1; k <= b; ++k) {
    int e = eps[k - 1];
    if (e == 0 || e == 3) a.push_back(e);
    if (e == 1 || e == 2) bs.push_back(e);
  }
  Word alpha, beta_star;
  int m = static_cast<int>(a.size());
  for (int q = 0; q < m; ++q) {
    int sub = r + m - 1 - q;
    alpha.push_back(a[q] == 0 ? Atom::dd(sub) : Atom::tr(sub));
  }
  int n = static_cast<int>(bs.size());
  for (int q = 0; q < n; ++q) {
    int sub = r - n + q;
    beta_star.push_back(bs[q] == 1 ? Atom::dd_star(sub) : Atom::tr_star(sub));
  }
  return {alpha, beta_star};
}

Word hat(const Word& w) {
  Word out = w;
  for (Atom& a : out) {
    switch (a.op) {
      case Op::Dd: a.op = Op::Tr; break;
      case Op::Tr: a.op = Op::Dd; break;
      case Op::DdStar: a.op = Op::TrStar; break;
      case Op::TrStar: a.op = Op::DdStar; break;
      default: break;
    }
  }
  return out;
}

Word component_word(const std::vector<int>& eps, int i, int j) {
  int r = r_with(eps, i, 1);
  auto [alpha, beta_star] = edge_strings(eps, i);
  Word beta = word_adjoint(beta_star);
  switch (j) {
    case 0: return concat(concat(alpha, {Atom::zdown(r - 1)}), beta);
    case 1: return concat(concat(beta_star, {Atom::q(r)}), hat(beta));
    case 2: return concat(concat(word_adjoint(hat(beta)), {Atom::zup(r - 1)}), word_adjoint(hat(alpha)));
  }
  throw std::invalid_argument("edge segment must be 0, 1 or 2");
}

namespace {

std::vector<std::vector<int>> all_eps(int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(b, 0);
  while (true) {
    out.push_back(cur);
    int k = b - 1;
    while (k >= 0 && cur[k] == 3) cur[k--] = 0;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

}  // namespace

std::map<std::vector<int>, int> integrate_G(const Params& p) {
  std::map<std::vector<int>, int> G;
  std::vector<int> origin(p.b, 0);
  G[origin] = 0;
  std::deque<std::vector<int>> todo{origin};
  while (!todo.empty()) {
    auto e = todo.front();
    todo.pop_front();
    int g = G[e];
    for (int i = 1; i <= p.b; ++i) {
      for (int step : {-1, 1}) {
        int v = e[i - 1] + step;
        if (v < 0 || v > 3) continue;
        auto f = e;
        f[i - 1] = v;
        // upsilon(edge) = G(lower) - G(upper)
        int j = std::min(v, e[i - 1]);
        int u = upsilon(p, e, i, j);
        int gf = step > 0 ? g - u : g + u;
        auto it = G.find(f);
        if (it == G.end()) {
          G[f] = gf;
          todo.push_back(f);
        } else if (it->second != gf) {
          throw std::logic_error("upsilon is not coclosed at " + Params(p).str());
        }
      }
    }
  }
  return G;
}

long G_closed_form(const Params& p) { return binom(p.a + 2, 2) - binom(p.a - p.b + 2, 2); }

MultiComplex build_K(const Params& p) {
  std::string err = p.validate();
  if (!err.empty()) throw std::invalid_argument(err);
  MultiComplex mc;
  mc.params = p;
  mc.kind = "K";
  auto G = integrate_G(p);
  for (const auto& eps : all_eps(p.b)) {
    MCObject o;
    o.coord = eps;
    o.r = r_of_eps(eps);
    o.qshift = G.at(eps);
    o.t = 0;
    for (int e : eps) o.t -= e;
    mc.objs.push_back(o);
  }
  mc.finalize();
  for (size_t v = 0; v < mc.objs.size(); ++v) {
    const auto& eps = mc.objs[v].coord;
    for (int i = 1; i <= p.b; ++i) {
      if (eps[i - 1] == 0) continue;
      auto lower = eps;
      --lower[i - 1];
      MCEdge ed;
      ed.from = static_cast<int>(v);
      ed.to = mc.index.at(lower);
      ed.dir = i;
      ed.seg = lower[i - 1];
      ed.weight = upsilon(p, eps, i, ed.seg);
      ed.word = component_word(eps, i, ed.seg);
      ed.sign = totalization_sign(eps, i);
      mc.edges.push_back(std::move(ed));
    }
  }
  mc.finalize();
  return mc;
}

CheckResult check_K_adjoint(const MultiComplex& k) {
  CheckResult res;
  res.name = "adjoint";
  for (const MCEdge& ed : k.edges) {
    // The dual of eps^[j,j+1] is (eps*)^[2-j,3-j], running from (eps^j)* to (eps^{j+1})*.
    auto from = k.objs[ed.to].coord;
    auto to = k.objs[ed.from].coord;
    for (int& e : from) e = 3 - e;
    for (int& e : to) e = 3 - e;
    const MCEdge* dual = k.edge_between(k.index.at(from), k.index.at(to));
    ++res.checked;
    if (!dual) {
      res.fail("missing dual edge");
      continue;
    }
    if (!(dual->word == word_adjoint(ed.word)))
      res.fail(word_str(dual->word) + " is not the adjoint of " + word_str(ed.word));
  }
  return res;
}

CheckResult check_K_closed_form(const MultiComplex& k) {
  CheckResult res;
  res.name = "closed-form";
  long want = G_closed_form(k.params);
  for (const MCObject& o : k.objs) {
    auto dual = o.coord;
    for (int& e : dual) e = 3 - e;
    long sum = o.qshift + k.objs[k.index.at(dual)].qshift;
    ++res.checked;
    if (sum != 2 * want) res.fail("G(eps) + G(eps*) = " + std::to_string(sum) + " != " + std::to_string(2 * want));
  }
  return res;
}

CheckResult check_K_psi_vanishing(const MultiComplex& k) {
  // Z_{(r-1)r} Q_r = Q_r Z_{(r-1)r} = 0, since Q_r vanishes on V_{r-1}.
  CheckResult res;
  res.name = "psi-vanishing";
  for (const MCEdge& ed : k.edges) {
    if (ed.seg != 1) continue;
    int r = k.objs[ed.from].r;
    ++res.checked;
    MapMatrix zq = realize(k.params, {Atom::zdown(r - 1), Atom::q(r)}, r);
    MapMatrix qz = compose(realize(k.params, {Atom::q(r)}, r - 1), realize(k.params, {Atom::zdown(r - 1)}, r));
    if (!zq.is_zero() || !qz.is_zero()) res.fail("Z Q_r does not vanish at r = " + std::to_string(r));
  }
  return res;
}

}  // namespace lb
