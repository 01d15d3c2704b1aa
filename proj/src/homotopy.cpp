#include "lb/homotopy.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "lb/bimodules.hpp"
#include "lb/pcomplex.hpp"

namespace lb {

int FCObject::rungs() const {
  int n = 0;
  for (int r : segments) n += (r != 0);
  return n;
}

std::string FCObject::label() const {
  if (segments.size() == 1) {
    std::string s = "W" + std::to_string(segments[0]);
    if (g.size() > 1) {
      s += "^(";
      for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
      s += ")";
    }
    return s;
  }
  if (rungs() <= 1) return "W" + std::to_string(rungs());
  return mod->label().str();
}

namespace {

void require_b1(const Params& p, const char* what) {
  if (p.b != 1 || p.c != p.b || p.d != p.a)
    throw std::invalid_argument(std::string(what) + " needs b == 1, c == b and d == a");
}

MapMatrix rebind(const MapMatrix& m, ModulePtr src, ModulePtr tgt) {
  if (m.src->basis() != src->basis() || m.tgt->basis() != tgt->basis())
    throw std::logic_error("rebind: bases differ");
  MapMatrix out = m;
  out.src = std::move(src);
  out.tgt = std::move(tgt);
  return out;
}

// Simultaneous substitution of c_j and d_j slots.
Poly subst_cd(const Poly& f, const std::map<int, Poly>& vals) {
  Poly out;
  for (const auto& [m, k] : f.terms()) {
    Mono rest = m;
    Poly t(k);
    for (const auto& [s, v] : vals) {
      int e = m.e[s];
      if (!e) continue;
      rest.e[s] = 0;
      t *= v.pow(e);
    }
    out += t.mul_mono(rest);
  }
  return out;
}

Mono mono_range(const Mono& m, int from, int to, int shift) {
  // x_from..x_to of m, renamed x_j -> x_{j + shift}
  Mono out;
  for (int j = from; j <= to; ++j) out.e[slot_x(j + shift)] = m.e[slot_x(j)];
  return out;
}

Poly rename_x(const Poly& f, int n, int shift) {
  std::array<int, kSlots> to;
  to.fill(-1);
  for (int j = 1; j <= n; ++j) to[slot_x(j)] = slot_x(j + shift);
  return f.substitute_slots(to);
}

ClassVector composite_class(const Params& p, const std::vector<int>& segs) {
  ClassVector c = ClassVector::basis(p.b, 0);
  for (int r : segs) c = class_product(p, c, class_of_V(p, r));
  return c;
}

bool nonzero(const MapMatrix& m) { return !m.is_zero(); }

void put(FiniteComplex& x, int i, int j, MapMatrix m) {
  if (!nonzero(m)) return;
  auto it = x.comps.find({i, j});
  if (it == x.comps.end())
    x.comps.emplace(std::make_pair(i, j), std::move(m));
  else {
    it->second = add(it->second, m);
    if (!nonzero(it->second)) x.comps.erase(it);
  }
}

MapMatrix projector_of(const FiniteComplex& x, int i) {
  const FCObject& o = x.objs[i];
  if (!o.is_w || x.params.b == 1) return identity_matrix(o.mod);
  return rebind(realize(x.params, {Atom::pi(o.g), Atom::pg(o.g)}, o.segments[0]), o.mod, o.mod);
}

int xi_of(const FiniteComplex& x, int i) {
  const FCObject& o = x.objs[i];
  return o.is_w ? xi(x.params, o.g) : 0;
}

}  // namespace

FiniteComplex rickard(const Params& p) {
  MultiComplex P = build_P(p, 1);
  EdgeMatrices em(P, 1);
  FiniteComplex x;
  x.params = p;
  for (const MCObject& o : P.objs) {
    FCObject f;
    f.segments = {o.r};
    f.mod = build_composite(p, f.segments);
    f.is_w = o.is_w;
    f.g = o.g;
    f.shift = o.qshift;
    f.t = o.t;
    f.cls = class_of(p, o);
    x.objs.push_back(f);
  }
  for (size_t e = 0; e < P.edges.size(); ++e) {
    const MCEdge& ed = P.edges[e];
    MapMatrix m = compose(em.at(e), em.projector(ed.from));
    if (ed.sign < 0) m = scale(m, -1);
    put(x, ed.from, ed.to, rebind(m, x.objs[ed.from].mod, x.objs[ed.to].mod));
  }
  return x;
}

FiniteComplex tensor(const FiniteComplex& x, const FiniteComplex& y) {
  const Params& p = x.params;
  require_b1(p, "tensor");
  if (!(y.params == p)) throw std::invalid_argument("tensor: boundary mismatch");
  FiniteComplex z;
  z.params = p;
  int ny = static_cast<int>(y.objs.size());
  auto idx = [&](int i, int j) { return i * ny + j; };
  for (const FCObject& a : x.objs)
    for (const FCObject& b : y.objs) {
      FCObject o;
      o.segments = a.segments;
      o.segments.insert(o.segments.end(), b.segments.begin(), b.segments.end());
      o.mod = build_composite(p, o.segments);
      o.shift = a.shift + b.shift;
      o.t = a.t + b.t;
      o.cls = class_product(p, a.cls, b.cls);
      z.objs.push_back(o);
    }
  AlphabetSizes sz{p.c, p.d};
  // f (x) id: the right boundary of the left factor becomes the left boundary of the right one.
  for (const auto& [key, f] : x.comps) {
    int mx = static_cast<int>(x.objs[key.first].segments.size());
    std::map<int, Poly> vals;
    vals[slot_c(1)] = Poly::x(mx + 1);
    AlphabetExpr rest = AlphabetExpr::C() + AlphabetExpr::D() - AlphabetExpr::X(mx + 1);
    for (int i = 1; i <= p.d; ++i) vals[slot_d(i)] = elem_sym(rest, i, sz);
    for (int j = 0; j < ny; ++j) {
      const FCObject& s = z.objs[idx(key.first, j)];
      const FCObject& t = z.objs[idx(key.second, j)];
      int my = static_cast<int>(y.objs[j].segments.size());
      MapMatrix m{s.mod, t.mod, {}};
      for (const Mono& mono : s.mod->basis()) {
        int col = f.src->index_of(mono_range(mono, 1, mx, 0));
        if (col < 0) throw std::logic_error("tensor: basis split failed");
        Poly right = Poly::monomial(mono_range(mono, mx + 1, mx + my, 0));
        Poly img;
        for (const auto& [row, coef] : f.cols[col]) img += subst_cd(coef, vals) * f.tgt->basis_poly(row);
        m.cols.push_back(t.mod->coords(t.mod->reduce(img * right)));
      }
      put(z, idx(key.first, j), idx(key.second, j), std::move(m));
    }
  }
  for (const auto& [key, g] : y.comps) {
    int my = static_cast<int>(y.objs[key.first].segments.size());
    for (size_t i = 0; i < x.objs.size(); ++i) {
      int mx = static_cast<int>(x.objs[i].segments.size());
      const FCObject& s = z.objs[idx(static_cast<int>(i), key.first)];
      const FCObject& t = z.objs[idx(static_cast<int>(i), key.second)];
      MapMatrix m{s.mod, t.mod, {}};
      for (const Mono& mono : s.mod->basis()) {
        int col = g.src->index_of(mono_range(mono, mx + 1, mx + my, -mx));
        if (col < 0) throw std::logic_error("tensor: basis split failed");
        Poly left = Poly::monomial(mono_range(mono, 1, mx, 0));
        Poly img;
        for (const auto& [row, coef] : g.cols[col]) img += coef * rename_x(g.tgt->basis_poly(row), my, mx);
        m.cols.push_back(t.mod->coords(t.mod->reduce(img * left)));
      }
      if (x.objs[i].t % 2) m = scale(m, -1);
      put(z, idx(static_cast<int>(i), key.first), idx(static_cast<int>(i), key.second), std::move(m));
    }
  }
  return z;
}

FiniteComplex tensor_power(const FiniteComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("negative tensor power");
  if (k == 0) {
    FiniteComplex one;
    one.params = x.params;
    FCObject o;
    o.segments = {0};
    o.mod = build_composite(x.params, o.segments);
    o.cls = ClassVector::basis(x.params.b, 0);
    one.objs.push_back(o);
    return one;
  }
  FiniteComplex z = x;
  for (int i = 1; i < k; ++i) z = tensor(z, x);
  return z;
}

Splitting split_dumbbell(const Params& p, const std::vector<int>& segments, int v) {
  require_b1(p, "split_dumbbell");
  if (v < 0 || v >= static_cast<int>(segments.size()) || segments[v] == 0)
    throw std::invalid_argument("split_dumbbell: no rung at v");
  bool left = false;
  for (int u = 0; u < v; ++u) left = left || segments[u] != 0;
  if (!left) throw std::invalid_argument("split_dumbbell: no rung left of v");
  Splitting s;
  s.src = build_composite(p, segments);
  auto psegs = segments;
  psegs[v] = 0;
  s.piece = build_composite(p, psegs);
  int x = v + 1, bound = -1;
  for (const Root& rt : s.src->roots())
    if (rt.x == x) bound = rt.bound;
  for (int i = 0; i <= bound; ++i) {
    MapMatrix out{s.src, s.piece, {}};
    for (const Mono& m : s.src->basis()) {
      if (m.e[slot_x(x)] != i) {
        out.cols.emplace_back();
        continue;
      }
      Mono rest = m;
      rest.e[slot_x(x)] = 0;
      out.cols.push_back(s.piece->coords(s.piece->reduce(Poly::monomial(rest))));
    }
    MapMatrix in{s.piece, s.src, {}};
    for (const Mono& m : s.piece->basis())
      in.cols.push_back(s.src->coords(s.src->reduce(Poly::monomial(m) * Poly::x(x, i))));
    s.out.push_back(std::move(out));
    s.in.push_back(std::move(in));
    s.piece_shift.push_back(s.src->qshift() + 2 * i - s.piece->qshift());
  }
  return s;
}

CheckResult check_splitting(const Splitting& s) {
  CheckResult res;
  res.name = "splitting-maps";
  int n = static_cast<int>(s.out.size());
  MapMatrix sum = zero_matrix(s.src, s.src);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ++res.checked;
      MapMatrix oi = compose(s.out[i], s.in[j]);
      bool ok = i == j ? oi == identity_matrix(s.piece) : oi.is_zero();
      if (!ok) res.fail("out" + std::to_string(i) + " in" + std::to_string(j) + " is not " + (i == j ? "1" : "0"));
    }
    sum = add(sum, compose(s.in[i], s.out[i]));
  }
  ++res.checked;
  if (!(sum == identity_matrix(s.src))) res.fail("sum of in out is not the identity");
  QLaurent whole = s.src->hilbert_series().shifted(s.src->qshift()), parts;
  for (int i = 0; i < n; ++i) {
    ++res.checked;
    auto deg = s.in[i].degree(s.piece->qshift() + s.piece_shift[i], s.src->qshift());
    if (!deg || *deg != 0) res.fail("in" + std::to_string(i) + " is not homogeneous of degree 0");
    parts += s.piece->hilbert_series().shifted(s.piece->qshift() + s.piece_shift[i]);
  }
  ++res.checked;
  if (whole != parts) res.fail("graded ranks do not add up: " + whole.str() + " vs " + parts.str());
  return res;
}

FiniteComplex split_all(const FiniteComplex& x0) {
  FiniteComplex x = x0;
  while (true) {
    int target = -1;
    for (size_t i = 0; i < x.objs.size(); ++i)
      if (x.objs[i].rungs() >= 2) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) return x;
    const FCObject src = x.objs[target];
    int v = -1;
    for (size_t s = 0; s < src.segments.size(); ++s)
      if (src.segments[s]) v = static_cast<int>(s);
    Splitting sp = split_dumbbell(x.params, src.segments, v);
    int n = static_cast<int>(sp.out.size());
    // New indices: pieces take the place of the split object.
    FiniteComplex y;
    y.params = x.params;
    std::vector<int> remap(x.objs.size());
    for (size_t i = 0; i < x.objs.size(); ++i) {
      if (static_cast<int>(i) == target) {
        remap[i] = -1;
        for (int k = 0; k < n; ++k) {
          FCObject o;
          o.segments = src.segments;
          o.segments[v] = 0;
          o.mod = sp.piece;
          o.shift = src.shift + sp.piece_shift[k];
          o.t = src.t;
          o.cls = composite_class(x.params, o.segments);
          y.objs.push_back(o);
        }
      } else {
        remap[i] = static_cast<int>(y.objs.size());
        y.objs.push_back(x.objs[i]);
      }
    }
    int first = target;  // pieces occupy first .. first + n - 1
    for (const auto& [key, m] : x.comps) {
      auto [i, j] = key;
      if (i == target && j == target) throw std::logic_error("split_all: self component");
      if (j == target) {
        for (int k = 0; k < n; ++k) put(y, remap[i], first + k, compose(sp.out[k], m));
      } else if (i == target) {
        for (int k = 0; k < n; ++k) put(y, first + k, remap[j], compose(m, sp.in[k]));
      } else {
        put(y, remap[i], remap[j], m);
      }
    }
    x = std::move(y);
  }
}

namespace {

// Inverse over Z of a constant square matrix, or nullopt.
std::optional<MapMatrix> integer_inverse(const MapMatrix& f) {
  int n = f.src->rank();
  if (f.tgt->rank() != n || !f.is_constant()) return std::nullopt;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int j = 0; j < n; ++j)
    for (const auto& [i, c] : f.cols[j]) a[i][j] = mpq_class(c.constant_term());
  for (int i = 0; i < n; ++i) a[i][n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (auto& e : a[col]) e *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class k = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= k * a[col][c];
    }
  }
  MapMatrix g{f.tgt, f.src, std::vector<SparseVec>(n)};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const mpq_class& e = a[i][n + j];
      if (e == 0) continue;
      if (e.get_den() != 1) return std::nullopt;
      g.cols[j].push_back({i, Poly(Int(e.get_num()))});
    }
  return g;
}

}  // namespace

FiniteComplex gaussian_eliminate(const FiniteComplex& x0) {
  FiniteComplex x = x0;
  while (true) {
    int pi = -1, pj = -1;
    std::optional<MapMatrix> inv;
    for (const auto& [key, m] : x.comps) {
      auto [i, j] = key;
      const FCObject& s = x.objs[i];
      const FCObject& t = x.objs[j];
      if (s.label() != t.label() || s.mod->rank() != t.mod->rank()) continue;
      auto deg = m.degree(x.total_shift(i) + xi_of(x, i), x.total_shift(j) + xi_of(x, j));
      if (!deg || *deg != 0) continue;
      inv = integer_inverse(m);
      if (inv) {
        pi = i;
        pj = j;
        break;
      }
    }
    if (pi < 0) return x;
    // d'(k -> l) = d(k -> l) - d(pi -> l) d(pi -> pj)^-1 d(k -> pj)
    std::vector<std::pair<int, MapMatrix>> into, outof;
    for (const auto& [key, m] : x.comps) {
      if (key.second == pj && key.first != pi) into.push_back({key.first, m});
      if (key.first == pi && key.second != pj) outof.push_back({key.second, m});
    }
    for (const auto& [k, a] : into)
      for (const auto& [l, b] : outof) put(x, k, l, scale(compose(b, compose(*inv, a)), -1));
    FiniteComplex y;
    y.params = x.params;
    std::vector<int> remap(x.objs.size(), -1);
    for (size_t i = 0; i < x.objs.size(); ++i) {
      if (static_cast<int>(i) == pi || static_cast<int>(i) == pj) continue;
      remap[i] = static_cast<int>(y.objs.size());
      y.objs.push_back(x.objs[i]);
    }
    for (const auto& [key, m] : x.comps) {
      if (remap[key.first] < 0 || remap[key.second] < 0) continue;
      y.comps.emplace(std::make_pair(remap[key.first], remap[key.second]), m);
    }
    x = std::move(y);
  }
}

CheckResult check_d2(const FiniteComplex& x) {
  CheckResult res;
  res.name = "d2";
  int n = static_cast<int>(x.objs.size());
  std::vector<std::vector<std::pair<int, const MapMatrix*>>> out(n);
  for (const auto& [key, m] : x.comps) {
    out[key.first].push_back({key.second, &m});
    if (x.objs[key.second].t != x.objs[key.first].t + 1) res.fail("component does not raise t by one");
  }
  for (int i = 0; i < n; ++i) {
    std::map<int, std::optional<MapMatrix>> sums;
    for (const auto& [j, f] : out[i])
      for (const auto& [l, g] : out[j]) {
        MapMatrix c = compose(*g, *f);
        auto& slot = sums[l];
        slot = slot ? add(*slot, c) : c;
      }
    for (auto& [l, s] : sums) {
      ++res.checked;
      if (!compose(*s, projector_of(x, i)).is_zero())
        res.fail("d^2 != 0 from " + std::to_string(i) + " to " + std::to_string(l));
    }
  }
  return res;
}

CheckResult check_homogeneity(const FiniteComplex& x) {
  CheckResult res;
  res.name = "grading";
  for (const auto& [key, m] : x.comps) {
    ++res.checked;
    auto deg = compose(m, projector_of(x, key.first))
                   .degree(x.total_shift(key.first) + xi_of(x, key.first),
                           x.total_shift(key.second) + xi_of(x, key.second));
    if (!deg || (*deg != 0 && *deg != INT_MIN))
      res.fail("component " + std::to_string(key.first) + " -> " + std::to_string(key.second) + " is not of degree 0");
  }
  return res;
}

CheckResult check_minimal(const FiniteComplex& x) {
  CheckResult res;
  res.name = "minimal";
  for (const auto& [key, m] : x.comps) {
    const FCObject& s = x.objs[key.first];
    const FCObject& t = x.objs[key.second];
    if (s.label() != t.label()) continue;
    ++res.checked;
    int one = s.mod->index_of(Mono{});
    Poly img = t.mod->from_coords(m.cols.at(one));
    if (img.constant_term() != 0)
      res.fail("unit entry between " + std::to_string(key.first) + " and " + std::to_string(key.second));
  }
  return res;
}

CheckResult compare_minimal(const FiniteComplex& x, const MultiComplex& P, const EdgeMatrices& em) {
  CheckResult res;
  res.name = "compare";
  require_b1(x.params, "compare_minimal");
  ++res.checked;
  if (x.objs.size() != P.objs.size()) {
    res.fail("object counts differ: " + std::to_string(x.objs.size()) + " vs " + std::to_string(P.objs.size()));
    return res;
  }
  // Match objects by (t, r, shift).
  std::vector<int> match(P.objs.size(), -1);
  std::vector<bool> used(x.objs.size());
  for (size_t i = 0; i < P.objs.size(); ++i) {
    const MCObject& o = P.objs[i];
    for (size_t j = 0; j < x.objs.size(); ++j)
      if (!used[j] && x.objs[j].t == o.t && x.objs[j].rungs() == o.r && x.objs[j].shift == o.qshift) {
        match[i] = static_cast<int>(j);
        used[j] = true;
        break;
      }
    ++res.checked;
    if (match[i] < 0) res.fail("no reduced object matches t=" + std::to_string(o.t) + " shift " + std::to_string(o.qshift));
  }
  if (!res.pass) return res;
  // Basis transport from the composite to V_r: the rung variable becomes x_1.
  auto transport = [&](int pi) {
    const FCObject& o = x.objs[match[pi]];
    ModulePtr V = build_V(x.params, P.objs[pi].r);
    int rung = 0;
    for (size_t s = 0; s < o.segments.size(); ++s)
      if (o.segments[s]) rung = static_cast<int>(s) + 1;
    std::vector<int> idx;
    for (const Mono& m : o.mod->basis()) {
      Mono w;
      if (rung) w.e[slot_x(1)] = m.e[slot_x(rung)];
      idx.push_back(V->index_of(w));
      if (idx.back() < 0) throw std::logic_error("compare_minimal: basis transport failed");
    }
    return idx;
  };
  std::vector<std::vector<int>> tr(P.objs.size());
  for (size_t i = 0; i < P.objs.size(); ++i) tr[i] = transport(static_cast<int>(i));
  std::vector<int> sigma(P.objs.size(), 0);
  sigma[P.index.at(std::vector<int>(x.params.b, 0))] = 1;
  size_t nonzero_comps = 0;
  for (const auto& kv : x.comps) nonzero_comps += !kv.second.is_zero();
  ++res.checked;
  if (nonzero_comps != P.edges.size()) res.fail("reduced complex has a different number of components");
  // Edges in order of increasing source |lambda| so the target sign is known.
  std::vector<int> order(P.edges.size());
  for (size_t e = 0; e < order.size(); ++e) order[e] = static_cast<int>(e);
  std::sort(order.begin(), order.end(), [&](int u, int w) { return P.objs[P.edges[u].to].t > P.objs[P.edges[w].to].t; });
  for (int e : order) {
    const MCEdge& ed = P.edges[e];
    ++res.checked;
    auto it = x.comps.find({match[ed.from], match[ed.to]});
    if (it == x.comps.end()) {
      res.fail("missing component for an edge of P");
      continue;
    }
    const MapMatrix& red = it->second;
    const MapMatrix& want = em.at(e);
    // red, rewritten in V bases
    std::vector<SparseVec> cols(want.cols.size());
    for (size_t j = 0; j < red.cols.size(); ++j) {
      SparseVec v;
      for (const auto& [i, c] : red.cols[j]) v.push_back({tr[ed.to][i], c});
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cols[tr[ed.from][j]] = v;
    }
    MapMatrix got{want.src, want.tgt, cols};
    int base = ed.sign * sigma[ed.to];
    int s = 0;
    if (got == scale(want, base))
      s = 1;
    else if (got == scale(want, -base))
      s = -1;
    if (s == 0) {
      res.fail("component " + word_str(ed.word) + " differs beyond a sign");
      continue;
    }
    if (sigma[ed.from] != 0 && sigma[ed.from] != s)
      res.fail("inconsistent object signs");
    else
      sigma[ed.from] = s;
  }
  return res;
}

ClassVector euler(const FiniteComplex& x) {
  ClassVector chi(x.params.b);
  for (const FCObject& o : x.objs) chi += QLaurent::mono(o.shift, (o.t % 2) ? -1 : 1) * o.cls;
  return chi;
}

ReductionReport reduce_rickard_power(const Params& p, int k) {
  ReductionReport rep;
  FiniteComplex x = tensor_power(rickard(p), k);
  rep.objects_before = static_cast<int>(x.objs.size());
  auto named = [](CheckResult r, const std::string& n) {
    r.name = n;
    return r;
  };
  rep.checks.push_back(named(check_d2(x), "d2-tensor"));
  rep.checks.push_back(named(check_homogeneity(x), "grading-tensor"));
  FiniteComplex s = split_all(x);
  rep.objects_split = static_cast<int>(s.objs.size());
  rep.checks.push_back(named(check_d2(s), "d2-split"));
  rep.reduced = gaussian_eliminate(s);
  rep.checks.push_back(named(check_d2(rep.reduced), "d2-reduced"));
  rep.checks.push_back(named(check_homogeneity(rep.reduced), "grading-reduced"));
  CheckResult eu;
  eu.name = "euler-preserved";
  eu.checked = 2;
  if (euler(s) != euler(x)) eu.fail("splitting changed the Euler characteristic");
  if (euler(rep.reduced) != euler(x)) eu.fail("elimination changed the Euler characteristic");
  rep.checks.push_back(eu);
  rep.checks.push_back(check_minimal(rep.reduced));
  MultiComplex P = build_P(p, k);
  EdgeMatrices em(P, 1);
  rep.checks.push_back(compare_minimal(rep.reduced, P, em));
  return rep;
}

}  // namespace lb
