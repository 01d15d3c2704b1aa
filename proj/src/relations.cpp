#include "lb/relations.hpp"

#include <functional>

#include "lb/bimodules.hpp"

namespace lb {

namespace {

// Compositions of b as groupings of r, for every r.
void compositions(int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (r == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = 1; x <= r; ++x) {
    cur.push_back(x);
    compositions(r - x, cur, out);
    cur.pop_back();
  }
}

struct Suite {
  const Params& p;
  CheckResult res;

  MapMatrix m(const std::string& w, int r) { return realize(p, parse_word(w), r); }
  MapMatrix m(const Word& w, int r) { return realize(p, w, r); }

  void eq(const MapMatrix& f, const MapMatrix& g, const std::string& what) {
    ++res.checked;
    if (!(f == g)) res.fail(what);
  }
  void zero(const MapMatrix& f, const std::string& what) {
    ++res.checked;
    if (!f.is_zero()) res.fail(what);
  }
};

bool acts(int i, int r, int b) { return i >= 1 && i < b && i != r; }

std::string at(int r) { return " on V" + std::to_string(r); }

Atom x_atom(int j) { return Atom::mul_poly(Poly::x(j)); }

}  // namespace

CheckResult check_nilhecke_relations(const Params& p) {
  Suite s{p, {}};
  s.res.name = "nil-hecke";
  int b = p.b;
  for (int r = 0; r <= b; ++r) {
    MapMatrix id = identity_matrix(build_V(p, r));
    for (int i = 1; i < b; ++i) {
      if (!acts(i, r, b)) continue;
      Atom d = Atom::dd(i), t = Atom::tr(i);
      std::string n = std::to_string(i);
      s.zero(s.m({d, d}, r), "d" + n + "^2 != 0" + at(r));
      s.eq(s.m({t, t}, r), id, "s" + n + "^2 != 1" + at(r));
      s.eq(s.m({d, t}, r), scale(s.m({d}, r), -1), "d" + n + " s" + n + " != -d" + n + at(r));
      s.eq(s.m({t, d}, r), s.m({d}, r), "s" + n + " d" + n + " != d" + n + at(r));
      s.eq(s.m({d, x_atom(i), d}, r), s.m({d}, r), "d x d != d for i = " + n + at(r));
      s.eq(add(s.m({d, x_atom(i)}, r), scale(s.m({x_atom(i + 1), d}, r), -1)), id,
           "d" + n + " x" + n + " - x" + std::to_string(i + 1) + " d" + n + " != 1" + at(r));
      for (int j = 1; j <= b; ++j)
        if (j != i && j != i + 1) s.eq(s.m({d, x_atom(j)}, r), s.m({x_atom(j), d}, r), "d x far" + at(r));
      for (int j = i + 2; j < b; ++j) {
        if (!acts(j, r, b)) continue;
        Atom dj = Atom::dd(j), tj = Atom::tr(j);
        s.eq(s.m({d, dj}, r), s.m({dj, d}, r), "far d d" + at(r));
        s.eq(s.m({d, tj}, r), s.m({tj, d}, r), "far d s" + at(r));
        s.eq(s.m({t, dj}, r), s.m({dj, t}, r), "far s d" + at(r));
        s.eq(s.m({t, tj}, r), s.m({tj, t}, r), "far s s" + at(r));
      }
      if (acts(i + 1, r, b)) {
        Atom d2 = Atom::dd(i + 1), t2 = Atom::tr(i + 1);
        s.eq(s.m({d, d2, d}, r), s.m({d2, d, d2}, r), "braid d" + at(r));
        s.eq(s.m({t, t2, t}, r), s.m({t2, t, t2}, r), "braid s" + at(r));
      }
    }
  }
  return s.res;
}

CheckResult check_mixed_braid(const Params& p) {
  Suite s{p, {}};
  s.res.name = "mixed-braid";
  int b = p.b;
  for (int r = 0; r <= b; ++r)
    for (int i = 1; i + 1 < b; ++i) {
      if (!acts(i, r, b) || !acts(i + 1, r, b)) continue;
      Atom d = Atom::dd(i), t = Atom::tr(i), d2 = Atom::dd(i + 1), t2 = Atom::tr(i + 1);
      s.eq(s.m({t, t2, d}, r), s.m({d2, t, t2}, r), "s s d = d s s" + at(r));
      s.eq(s.m({d, t2, t}, r), s.m({t2, t, d2}, r), "d s s = s s d" + at(r));
      s.eq(s.m({t, d2, t}, r), s.m({t2, d, t2}, r), "s d s = s d s" + at(r));
    }
  return s.res;
}

CheckResult check_qz_relations(const Params& p) {
  Suite s{p, {}};
  s.res.name = "q-z";
  int b = p.b;
  for (int r = 0; r <= b; ++r) {
    for (int i = 1; i < b; ++i) {
      if (!acts(i, r, b)) continue;
      s.eq(s.m({Atom::dd_star(i)}, r), s.m({Atom::dd(i)}, r), "d* != d" + at(r));
      s.eq(s.m({Atom::tr_star(i)}, r), scale(s.m({Atom::tr(i)}, r), -1), "s* != -s" + at(r));
    }
    for (int t = 1; t <= b; ++t) {
      Atom q = Atom::q(t);
      if (t > r) s.zero(s.m({q}, r), "Q" + std::to_string(t) + " != 0" + at(r));
      for (int j = 1; j <= b; ++j) s.eq(s.m({q, x_atom(j)}, r), s.m({x_atom(j), q}, r), "Q x != x Q" + at(r));
      for (int i = 1; i < b; ++i)
        if (acts(i, r, b) && i != t - 1)
          s.eq(s.m({Atom::dd(i), q}, r), s.m({q, Atom::dd(i)}, r),
               "d" + std::to_string(i) + " Q" + std::to_string(t) + " != Q d" + at(r));
      if (r < b) {
        s.eq(s.m({Atom::zup(r), q}, r), s.m({q, Atom::zup(r)}, r), "Zup Q != Q Zup" + at(r));
        s.eq(s.m({Atom::zdown(r), q}, r + 1), s.m({q, Atom::zdown(r)}, r + 1), "Zdown Q != Q Zdown" + at(r + 1));
      }
    }
    if (r < b) {
      Atom up = Atom::zup(r), down = Atom::zdown(r);
      for (int j = 1; j <= b; ++j) {
        s.eq(s.m({up, x_atom(j)}, r), s.m({x_atom(j), up}, r), "Zup x != x Zup" + at(r));
        s.eq(s.m({down, x_atom(j)}, r + 1), s.m({x_atom(j), down}, r + 1), "Zdown x != x Zdown" + at(r + 1));
      }
      for (int i = 1; i < b; ++i) {
        if (i == r || i == r + 1) continue;
        Atom d = Atom::dd(i);
        s.eq(s.m({up, d}, r), s.m({d, up}, r), "Zup d != d Zup" + at(r));
        s.eq(s.m({down, d}, r + 1), s.m({d, down}, r + 1), "Zdown d != d Zdown" + at(r + 1));
      }
    }
    if (r >= 1 && r < b) {
      Atom d = Atom::dd(r);
      Word upup{Atom::zup(r), Atom::zup(r - 1)}, dndn{Atom::zdown(r - 1), Atom::zdown(r)};
      s.eq(s.m(concat(upup, {d}), r - 1), s.m(concat({d}, upup), r - 1), "Z Z d != d Z Z" + at(r - 1));
      s.eq(s.m(concat(dndn, {d}), r + 1), s.m(concat({d}, dndn), r + 1), "Z* Z* d != d Z* Z*" + at(r + 1));
      s.eq(s.m({Atom::zdown(r), Atom::tr(r), Atom::zup(r)}, r), s.m({Atom::zup(r - 1), Atom::tr(r), Atom::zdown(r - 1)}, r),
           "Z s Z identity fails" + at(r));
    }
  }
  return s.res;
}

namespace {

CheckResult dq(const Params& p, bool shifted) {
  Suite s{p, {}};
  int b = p.b;
  for (int r = 0; r <= b; ++r)
    for (int t = 2; t <= b; ++t) {
      int i = t - 1;
      if (!acts(i, r, b)) continue;
      int ts = shifted ? t : t - 1;
      if (!acts(ts, r, b)) {
        if (shifted) s.res.fail("s" + std::to_string(ts) + " does not act" + at(r) + " (t = " + std::to_string(t) + ")");
        continue;
      }
      MapMatrix lhs = s.m({Atom::dd(i), Atom::q(t)}, r);
      MapMatrix rhs = add(s.m({Atom::q(t - 1), Atom::tr(ts)}, r), s.m({Atom::q(t), Atom::dd(i)}, r));
      s.eq(lhs, rhs, "d" + std::to_string(i) + " Q" + std::to_string(t) + at(r));
    }
  return s.res;
}

}  // namespace

CheckResult check_dq_relation(const Params& p) {
  auto r = dq(p, false);
  r.name = "d-q";
  return r;
}

CheckResult check_dq_relation_shifted(const Params& p) {
  auto r = dq(p, true);
  r.name = "d-q-shifted";
  return r;
}

CheckResult check_projectors(const Params& p) {
  Suite s{p, {}};
  s.res.name = "projectors";
  for (int r = 0; r <= p.b; ++r) {
    std::vector<std::vector<int>> gs;
    std::vector<int> cur;
    compositions(r, cur, gs);
    for (const auto& g : gs) {
      MapMatrix pip = s.m({Atom::pi(g), Atom::pg(g)}, r);
      MapMatrix e = s.m({Atom::iota(g), Atom::pi(g), Atom::pg(g)}, r);
      s.eq(compose(e, e), e, "iota pi p is not idempotent" + at(r));
      // pi p iota = Id on W: iota pi p iota pi p = iota pi p and pi p is onto W.
      s.eq(compose(pip, e), pip, "pi p iota pi p != pi p" + at(r));
      WView w = build_W(p, r, g);
      for (int k = 0; k < w.V->rank(); ++k) {
        Poly img = w.V->from_coords(pip.cols[k]);
        ++s.res.checked;
        if (!w.contains(img)) s.res.fail("pi p does not land in W" + at(r));
      }
    }
  }
  return s.res;
}

CheckResult check_all_relations(const Params& p) {
  CheckResult all;
  all.name = "relations";
  for (const auto& r : {check_nilhecke_relations(p), check_mixed_braid(p), check_qz_relations(p), check_dq_relation(p),
                        check_projectors(p)}) {
    all.checked += r.checked;
    for (const auto& f : r.failures) all.fail(r.name + ": " + f);
    if (!r.pass && r.failures.empty()) all.fail(r.name);
  }
  return all;
}

}  // namespace lb
