#include "lb/grothendieck.hpp"

#include <stdexcept>

#include "lb/bimodules.hpp"

namespace lb {

ClassVector ClassVector::basis(int b, int r, const QLaurent& k) {
  ClassVector x(b);
  x.c.at(r) = k;
  return x;
}

bool ClassVector::is_zero() const {
  for (const auto& k : c)
    if (!k.is_zero()) return false;
  return true;
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size());
  for (size_t r = 0; r < o.c.size(); ++r) c[r] += o.c[r];
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) {
  if (c.size() < o.c.size()) c.resize(o.c.size());
  for (size_t r = 0; r < o.c.size(); ++r) c[r] -= o.c[r];
  return *this;
}

ClassVector operator*(const QLaurent& k, const ClassVector& x) {
  ClassVector y = x;
  for (auto& v : y.c) v = k * v;
  return y;
}

std::string ClassVector::str() const {
  std::string out;
  for (size_t r = 0; r < c.size(); ++r) {
    if (c[r].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (c[r] != QLaurent(1)) out += "(" + c[r].str() + ")";
    out += "[W" + std::to_string(r) + "]";
  }
  return out.empty() ? "0" : out;
}

ClassVector class_of_W(const Params& p, int r, const std::vector<int>& g) {
  if (!is_composition_of(g, r)) throw std::invalid_argument("grouping does not sum to r");
  return ClassVector::basis(p.b, r, qmultinomial(g));
}

ClassVector class_of_V(const Params& p, int r) { return ClassVector::basis(p.b, r, qfac(r) * qfac(p.b - r)); }

ClassVector class_of(const Params& p, const MCObject& o) {
  return o.is_w ? class_of_W(p, o.r, o.g) : class_of_V(p, o.r);
}

ClassVector euler(const MultiComplex& mc) {
  ClassVector chi(mc.params.b);
  for (const MCObject& o : mc.objs) {
    QLaurent k = QLaurent::mono(o.qshift, (o.t % 2) ? -1 : 1);
    chi += k * class_of(mc.params, o);
  }
  return chi;
}

namespace {

QLaurent qbinom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return qfac(n).div_exact(qfac(k) * qfac(n - k));
}

}  // namespace

ClassVector class_product(const Params& p, const ClassVector& x, const ClassVector& y) {
  if (p.c != p.b || p.d != p.a) throw std::invalid_argument("class_product needs c == b and d == a");
  int b = p.b, lam = p.a - p.b;
  ClassVector z(b);
  for (int r = 0; r <= b; ++r) {
    if (x.c[r].is_zero()) continue;
    for (int s = 0; s <= b; ++s) {
      if (y.c[s].is_zero()) continue;
      QLaurent xy = x.c[r] * y.c[s];
      // F^(r) E^(r) F^(s) E^(s) 1_lam, truncated to weights that exist.
      for (int m = std::max(r, s); m <= std::min(b, r + s); ++m)
        z.c[m] += xy * qbinom(r + s + lam, r + s - m) * qbinom(m, r) * qbinom(m, s);
    }
  }
  return z;
}

ClassVector class_power(const Params& p, const ClassVector& x, int k) {
  ClassVector z = ClassVector::basis(p.b, 0);
  for (int i = 0; i < k; ++i) z = class_product(p, z, x);
  return z;
}

QLaurent graded_rank_W(const Params& p, int r) {
  WView w = build_W(p, r, r ? std::vector<int>{r} : std::vector<int>{});
  int top = 0;
  for (const Mono& m : w.V->basis()) top = std::max(top, m.qdeg());
  return w.hilbert_series(top).shifted(w.qshift());
}

QLaurent graded_rank_V(const Params& p, int r) {
  ModulePtr V = build_V(p, r);
  return V->hilbert_series().shifted(V->qshift());
}

QLaurent graded_rank(const Params& p, const ClassVector& x) {
  QLaurent h;
  for (int r = 0; r <= x.b(); ++r)
    if (!x.c[r].is_zero()) h += x.c[r] * graded_rank_W(p, r);
  return h;
}

QLaurent limit_remainder(const ClassVector& chi, int r) {
  QLaurent k = qint(r + 1) * chi.c.at(r);
  return (r % 2 ? -k : k) - QLaurent(1);
}

CheckResult check_class_ranks(const Params& p) {
  CheckResult res;
  res.name = "class-ranks";
  for (int r = 0; r <= p.b; ++r) {
    ++res.checked;
    if (graded_rank_V(p, r) != graded_rank(p, class_of_V(p, r)))
      res.fail("graded rank of V" + std::to_string(r) + " disagrees with its class");
    if (p.c != p.b || p.d != p.a) continue;
    for (int s = 0; s <= p.b; ++s) {
      ++res.checked;
      ClassVector prod = class_product(p, ClassVector::basis(p.b, r), ClassVector::basis(p.b, s));
      if (graded_rank_W(p, r) * graded_rank_W(p, s) != graded_rank(p, prod))
        res.fail("graded rank is not multiplicative on [W" + std::to_string(r) + "][W" + std::to_string(s) + "]");
    }
  }
  return res;
}

}  // namespace lb

#include "lb/pcomplex.hpp"

namespace lb {

CheckResult check_limit_pattern(const Params& p, int k) {
  CheckResult res;
  res.name = "limit-pattern";
  for (int kk = 1; kk <= k; ++kk) {
    ClassVector chi = euler(build_P(p, kk));
    std::string tag = "k=" + std::to_string(kk);
    ++res.checked;
    if (chi.c[0] != QLaurent(1)) res.fail(tag + ": coefficient of [W0] is " + chi.c[0].str());
    for (int r = 1; r <= p.b; ++r) {
      ++res.checked;
      ClassVector killed = class_product(p, ClassVector::basis(p.b, r), chi);
      for (const QLaurent& x : killed.c)
        if (!x.is_zero() && x.min_exp() < 2 * kk) {
          res.fail(tag + ": [W" + std::to_string(r) + "] chi = " + killed.str());
          break;
        }
      if (p.a != p.b) continue;
      QLaurent rem = limit_remainder(chi, r);
      ++res.checked;
      if (!rem.is_zero() && rem.min_exp() < 2 * kk)
        res.fail(tag + " r=" + std::to_string(r) + ": remainder " + rem.str());
    }
  }
  return res;
}

}  // namespace lb
