#include "lb/bimodules.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "lb/linalg.hpp"
#include "lb/nilhecke.hpp"

namespace lb {

std::string WebLabel::str() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind) {
    case WebKind::V:
      return "V" + std::to_string(r);
    case WebKind::W:
      return "W" + std::to_string(r) + "^(" + join(grouping) + ")";
    case WebKind::Composite: {
      std::string s;
      for (size_t i = 0; i < segments.size(); ++i) s += (i ? "∘V" : "V") + std::to_string(segments[i]);
      return s;
    }
  }
  return "";
}

LadderModule::LadderModule(WebLabel label, AlphabetSizes sizes, std::vector<Root> roots, int qshift)
    : label_(std::move(label)), sizes_(sizes), roots_(std::move(roots)), qshift_(qshift) {
  slot_root_.assign(kSlots, -1);
  for (size_t i = 0; i < roots_.size(); ++i) {
    const Root& rt = roots_[i];
    if (slot_root_[slot_x(rt.x)] != -1) throw std::invalid_argument("duplicate root");
    slot_root_[slot_x(rt.x)] = static_cast<int>(i);
  }
  // Box basis, ordered by degree then graded-lex.
  std::vector<Mono> out{Mono{}};
  for (const Root& rt : roots_) {
    std::vector<Mono> next;
    for (const Mono& m : out)
      for (int e = 0; e <= rt.bound; ++e) {
        Mono t = m;
        t.e[slot_x(rt.x)] = static_cast<uint8_t>(e);
        next.push_back(t);
      }
    out.swap(next);
  }
  std::sort(out.begin(), out.end(), grlex_less);
  basis_ = std::move(out);
  for (size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  pow_.resize(roots_.size());
}

int LadderModule::index_of(const Mono& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

bool LadderModule::has_root(int j) const { return j >= 1 && j <= kMaxX && slot_root_[slot_x(j)] >= 0; }

const Poly& LadderModule::power(int pos, int e) const {
  // x^e for e > bound, rewritten only in x itself (coefficients may involve earlier roots).
  const Root& rt = roots_[pos];
  int s = slot_x(rt.x);
  std::lock_guard<std::mutex> g(pow_mu_);
  auto& tab = pow_[pos];
  if (tab.empty()) tab.push_back(rt.rule);
  while (static_cast<int>(tab.size()) <= e - rt.bound - 1) {
    Poly next = tab.back().mul_mono(Poly::x(rt.x).terms()[0].first);
    // Replace the single overflowing power x^(bound+1).
    std::vector<Poly::Term> keep, over;
    for (const auto& t : next.terms()) {
      if (t.first.e[s] > rt.bound) {
        Mono m = t.first;
        m.e[s] = 0;
        over.emplace_back(m, t.second);
      } else {
        keep.push_back(t);
      }
    }
    Poly r = Poly::from_terms(std::move(keep));
    if (!over.empty()) r += Poly::from_terms(std::move(over)) * rt.rule;
    tab.push_back(std::move(r));
  }
  return tab[e - rt.bound - 1];
}

Poly LadderModule::reduce(const Poly& p) const {
  for (const auto& t : p.terms())
    for (int s = slot_x(1); s < kSlots; ++s)
      if (t.first.e[s] && slot_root_[s] < 0)
        throw std::invalid_argument("unknown variable " + slot_name(s) + " in " + label_.str());
  Poly cur = p;
  for (int pos = static_cast<int>(roots_.size()) - 1; pos >= 0; --pos) {
    const Root& rt = roots_[pos];
    int s = slot_x(rt.x);
    int top = cur.max_exp(s);
    if (top <= rt.bound) continue;
    std::vector<Poly::Term> keep;
    std::map<int, std::vector<Poly::Term>> over;
    for (const auto& t : cur.terms()) {
      int e = t.first.e[s];
      if (e <= rt.bound) {
        keep.push_back(t);
      } else {
        Mono m = t.first;
        m.e[s] = 0;
        over[e].emplace_back(m, t.second);
      }
    }
    Poly next = Poly::from_terms(std::move(keep));
    for (auto& [e, terms] : over) next += Poly::from_terms(std::move(terms)) * power(pos, e);
    cur = std::move(next);
  }
  return cur;
}

SparseVec LadderModule::coords(const Poly& nf) const {
  std::map<int, std::vector<Poly::Term>> acc;
  for (const auto& [m, k] : nf.terms()) {
    Mono xm, cm;
    for (int s = 0; s < kSlots; ++s) (is_x_slot(s) ? xm : cm).e[s] = m.e[s];
    int i = index_of(xm);
    if (i < 0) throw std::invalid_argument("coords: polynomial is not in normal form");
    acc[i].emplace_back(cm, k);
  }
  SparseVec v;
  for (auto& [i, terms] : acc) {
    Poly c = Poly::from_terms(std::move(terms));
    if (!c.is_zero()) v.emplace_back(i, std::move(c));
  }
  return v;
}

Poly LadderModule::from_coords(const SparseVec& v) const {
  Poly p;
  for (const auto& [i, c] : v) p += c.mul_mono(basis_[i]);
  return p;
}

QLaurent LadderModule::hilbert_series() const {
  QLaurent h;
  for (const Mono& m : basis_) h += QLaurent::mono(m.qdeg());
  return h;
}

int qshift_V(const Params& p, int r) { return -p.d * (p.l() + r) - static_cast<int>(binom(p.b, 2)); }

int xi(const Params& p, const std::vector<int>& g) {
  int r = std::accumulate(g.begin(), g.end(), 0);
  int s = static_cast<int>(binom(p.b - r, 2));
  for (int x : g) s += static_cast<int>(binom(x, 2));
  return s;
}

bool is_composition_of(const std::vector<int>& g, int r) {
  int s = 0;
  for (int x : g) {
    if (x <= 0) return false;
    s += x;
  }
  return s == r;
}

std::vector<std::vector<int>> blocks_of(const Params& p, const std::vector<int>& g) {
  std::vector<std::vector<int>> out;
  int at = 1;
  for (int x : g) {
    std::vector<int> blk;
    for (int j = 0; j < x; ++j) blk.push_back(at++);
    out.push_back(blk);
  }
  if (at <= p.b) {
    std::vector<int> blk;
    while (at <= p.b) blk.push_back(at++);
    out.push_back(blk);
  }
  return out;
}

namespace {

Poly root_rule(const AlphabetExpr& k, int j, int n, const AlphabetSizes& sz) {
  // x^n = -sum_{i>=1} (-1)^i e_i(K) x^(n-i)
  Poly rule;
  for (int i = 1; i <= n; ++i) {
    Poly t = elem_sym(k, i, sz) * Poly::x(j, n - i);
    if (i % 2)
      rule += t;
    else
      rule -= t;
  }
  return rule;
}

// Roots of one V_r segment whose roots are x_{off+1..off+b}, right boundary (Cs, Ds).
void segment_roots(const Params& p, int r, int off, const AlphabetExpr& Cs, const AlphabetExpr& Ds,
                   const AlphabetSizes& sz, std::vector<Root>& out, int& bound_sum) {
  auto xs = [&](int from, int to) { return AlphabetExpr::Xrange(off + from, off + to); };
  for (int j = p.b; j >= r + 1; --j) {
    Root rt;
    rt.x = off + j;
    rt.alphabet = Cs - xs(j + 1, p.b);
    int n = rt.alphabet.size(sz);
    rt.bound = n - 1;
    rt.rule = root_rule(rt.alphabet, rt.x, n, sz);
    bound_sum += rt.bound;
    out.push_back(std::move(rt));
  }
  for (int j = r; j >= 1; --j) {
    Root rt;
    rt.x = off + j;
    rt.alphabet = Cs + Ds - xs(j + 1, p.b);
    int n = rt.alphabet.size(sz);
    rt.bound = n - 1;
    rt.rule = root_rule(rt.alphabet, rt.x, n, sz);
    bound_sum += rt.bound;
    out.push_back(std::move(rt));
  }
}

std::mutex g_mod_mu;
std::map<std::pair<Params, std::vector<int>>, ModulePtr> g_composites;
std::map<std::pair<Params, int>, ModulePtr> g_vmods;

}  // namespace

ModulePtr build_V(const Params& p, int r) {
  std::string err = p.validate();
  if (!err.empty()) throw std::invalid_argument(err);
  if (r < 0 || r > p.b) throw std::invalid_argument("r out of range");
  if (p.b > kMaxX) throw std::invalid_argument("b too large");
  {
    std::lock_guard<std::mutex> g(g_mod_mu);
    auto it = g_vmods.find({p, r});
    if (it != g_vmods.end()) return it->second;
  }
  AlphabetSizes sz{p.c, p.d};
  std::vector<Root> roots;
  int bound_sum = 0;
  segment_roots(p, r, 0, AlphabetExpr::C(), AlphabetExpr::D(), sz, roots, bound_sum);
  WebLabel lab;
  lab.kind = WebKind::V;
  lab.params = p;
  lab.r = r;
  int qs = -(bound_sum + p.c * p.d - p.a * p.b);
  auto m = std::make_shared<const LadderModule>(lab, sz, std::move(roots), qs);
  std::lock_guard<std::mutex> g(g_mod_mu);
  return g_vmods.emplace(std::make_pair(p, r), m).first->second;
}

ModulePtr build_composite(const Params& p, const std::vector<int>& segments) {
  std::string err = p.validate();
  if (!err.empty()) throw std::invalid_argument(err);
  int m = static_cast<int>(segments.size());
  if (m == 0) throw std::invalid_argument("empty composite");
  if (m > 1 && (p.c != p.b || p.d != p.a)) throw std::invalid_argument("composite boundary mismatch");
  if (m * p.b > kMaxX) throw std::invalid_argument("composite too large");
  for (int r : segments)
    if (r < 0 || r > p.b) throw std::invalid_argument("segment r out of range");
  {
    std::lock_guard<std::mutex> g(g_mod_mu);
    auto it = g_composites.find({p, segments});
    if (it != g_composites.end()) return it->second;
  }
  AlphabetSizes sz{p.c, p.d};
  std::vector<Root> roots;
  int bound_sum = 0;
  AlphabetExpr Cs = AlphabetExpr::C(), Ds = AlphabetExpr::D();
  for (int s = m - 1; s >= 0; --s) {
    int off = s * p.b;
    segment_roots(p, segments[s], off, Cs, Ds, sz, roots, bound_sum);
    AlphabetExpr Bs = AlphabetExpr::Xrange(off + 1, off + p.b);
    AlphabetExpr As = Cs + Ds - Bs;
    Cs = Bs;
    Ds = As;
  }
  WebLabel lab;
  lab.kind = WebKind::Composite;
  lab.params = p;
  lab.r = std::accumulate(segments.begin(), segments.end(), 0);
  lab.segments = segments;
  int qs = -(bound_sum + m * (p.c * p.d - p.a * p.b));
  auto mod = std::make_shared<const LadderModule>(lab, sz, std::move(roots), qs);
  std::lock_guard<std::mutex> g(g_mod_mu);
  return g_composites.emplace(std::make_pair(p, segments), mod).first->second;
}

WView build_W(const Params& p, int r, const std::vector<int>& g) {
  if (!is_composition_of(g, r)) throw std::invalid_argument("grouping is not a composition of r");
  WView w;
  w.V = build_V(p, r);
  w.g = g;
  w.blocks = blocks_of(p, g);
  w.xi = xi(p, g);
  return w;
}

bool WView::contains(const Poly& nf) const {
  for (const auto& blk : blocks)
    for (size_t j = 0; j + 1 < blk.size(); ++j) {
      Poly t = V->reduce(nf.swap_slots(slot_x(blk[j]), slot_x(blk[j] + 1)));
      if (t != nf) return false;
    }
  return true;
}

QLaurent WView::hilbert_series(int cutoff) const {
  // Rank of the invariants in each degree of V / (c, d) V, over Q.
  std::map<int, std::vector<int>> by_deg;
  for (int i = 0; i < V->rank(); ++i) by_deg[V->basis()[i].qdeg()].push_back(i);
  std::vector<int> gens;
  for (const auto& blk : blocks)
    for (size_t j = 0; j + 1 < blk.size(); ++j) gens.push_back(blk[j]);
  QLaurent h;
  for (const auto& [deg, idx] : by_deg) {
    if (deg > cutoff) break;
    int n = static_cast<int>(idx.size());
    std::map<int, int> local;
    for (int k = 0; k < n; ++k) local[idx[k]] = k;
    QMatrix mat(0, n);
    for (int gi : gens) {
      std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
      for (int k = 0; k < n; ++k) {
        Poly img = V->reduce(transpose(V->basis_poly(idx[k]), gi));
        rows[k][k] -= 1;  // column k: (s - 1)(b_k); rows indexed by target
        for (const auto& [ti, coef] : V->coords(img)) {
          Int c0 = coef.constant_term();
          if (c0 == 0) continue;
          rows[local.at(ti)][k] += mpq_class(c0);
        }
      }
      for (auto& row : rows) mat.append_row(row);
    }
    int nullity = n - mat.rank();
    if (nullity) h += QLaurent::mono(deg, nullity);
  }
  return h;
}

namespace {

// Expansion of a single block monomial: v^gamma = sum_alpha v^alpha f_alpha.
using BlockExpansion = std::map<std::vector<int>, Poly>;

void partitions_into(int n, int maxpart, int maxlen, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (maxlen == 0) return;
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, maxlen - 1, cur, out);
    cur.pop_back();
  }
}

void exponent_vectors(int m, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(m, deg - e, cur, out);
    cur.pop_back();
  }
}

std::mutex g_wc_mu;
std::map<std::pair<std::vector<int>, std::vector<int>>, BlockExpansion> g_wc_cache;

BlockExpansion expand_block(const std::vector<int>& block, const std::vector<int>& gamma) {
  int m = static_cast<int>(block.size());
  {
    std::lock_guard<std::mutex> g(g_wc_mu);
    auto it = g_wc_cache.find({block, gamma});
    if (it != g_wc_cache.end()) return it->second;
  }
  int deg = std::accumulate(gamma.begin(), gamma.end(), 0);
  AlphabetExpr all;
  for (int v : block) all += AlphabetExpr::X(v);
  std::vector<Poly> e(m + 1);
  for (int i = 0; i <= m; ++i) e[i] = elem_sym(all, i, {});
  // Unknowns: (alpha in box, partition lambda with parts <= m).
  std::vector<std::vector<int>> alphas;
  {
    std::vector<int> cur(m, 0);
    std::function<void(int)> rec = [&](int j) {
      if (j == m) {
        alphas.push_back(cur);
        return;
      }
      for (int a = 0; a <= m - 1 - j; ++a) {
        cur[j] = a;
        rec(j + 1);
      }
    };
    rec(0);
  }
  struct Unknown {
    std::vector<int> alpha;
    Poly sym;
  };
  std::vector<Unknown> unk;
  for (const auto& a : alphas) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    if (da > deg) continue;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_into(deg - da, m, deg, cur, parts);
    for (const auto& lam : parts) {
      Poly s(1);
      for (int part : lam) s *= e[part];
      unk.push_back({a, s});
    }
  }
  std::vector<std::vector<int>> monos;
  {
    std::vector<int> cur;
    exponent_vectors(m, deg, cur, monos);
  }
  std::map<std::vector<int>, int> row_of;
  for (size_t i = 0; i < monos.size(); ++i) row_of[monos[i]] = static_cast<int>(i);
  auto mono_key = [&](const Mono& mm) {
    std::vector<int> k(m);
    for (int j = 0; j < m; ++j) k[j] = mm.e[slot_x(block[j])];
    return k;
  };
  int rows = static_cast<int>(monos.size()), cols = static_cast<int>(unk.size());
  if (rows != cols) throw std::logic_error("w_coordinates: non-square system");
  std::vector<std::vector<mpq_class>> A(rows, std::vector<mpq_class>(cols));
  std::vector<mpq_class> rhs(rows);
  for (int c = 0; c < cols; ++c) {
    Poly col = unk[c].sym;
    for (int j = 0; j < m; ++j)
      if (unk[c].alpha[j]) col *= Poly::x(block[j], unk[c].alpha[j]);
    for (const auto& [mm, k] : col.terms()) A[row_of.at(mono_key(mm))][c] += mpq_class(k);
  }
  rhs[row_of.at(gamma)] = 1;
  std::vector<mpq_class> sol = solve_unique(A, rhs);
  BlockExpansion out;
  for (int c = 0; c < cols; ++c) {
    if (sol[c] == 0) continue;
    if (sol[c].get_den() != 1) throw std::logic_error("w_coordinates: non-integral coefficient");
    out[unk[c].alpha] += unk[c].sym * Int(sol[c].get_num());
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  std::lock_guard<std::mutex> g(g_wc_mu);
  g_wc_cache.emplace(std::make_pair(block, gamma), out);
  return out;
}

}  // namespace

std::map<std::vector<int>, Poly> w_coordinates(const Poly& p, const std::vector<std::vector<int>>& blocks) {
  std::map<std::vector<int>, Poly> out;
  for (const auto& [m, k] : p.terms()) {
    Mono rest = m;
    std::map<std::vector<int>, Poly> acc{{{}, Poly(1)}};
    for (const auto& blk : blocks) {
      std::vector<int> gamma;
      for (int v : blk) {
        gamma.push_back(m.e[slot_x(v)]);
        rest.e[slot_x(v)] = 0;
      }
      BlockExpansion ex = expand_block(blk, gamma);
      std::map<std::vector<int>, Poly> next;
      for (const auto& [a1, p1] : acc)
        for (const auto& [a2, p2] : ex) {
          std::vector<int> a = a1;
          a.insert(a.end(), a2.begin(), a2.end());
          next[a] += p1 * p2;
        }
      acc.swap(next);
    }
    if (rest.has_x()) throw std::invalid_argument("w_coordinates: variable outside the blocks");
    for (auto& [a, f] : acc) out[a] += f.mul_mono(rest, k);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace lb
