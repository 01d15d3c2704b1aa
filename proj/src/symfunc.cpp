#include "lb/symfunc.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace lb {

AlphabetExpr AlphabetExpr::C() {
  AlphabetExpr e;
  e.cC = 1;
  return e;
}

AlphabetExpr AlphabetExpr::D() {
  AlphabetExpr e;
  e.cD = 1;
  return e;
}

AlphabetExpr AlphabetExpr::X(int j) {
  AlphabetExpr e;
  e.x[j] = 1;
  return e;
}

AlphabetExpr AlphabetExpr::Xrange(int from, int to) {
  AlphabetExpr e;
  for (int j = from; j <= to; ++j) e.x[j] = 1;
  return e;
}

AlphabetExpr AlphabetExpr::B(const Params& p) { return Xrange(1, p.b); }
AlphabetExpr AlphabetExpr::A(const Params& p) { return C() + D() - Xrange(1, p.b); }
AlphabetExpr AlphabetExpr::E(const Params& p, int r) { return C() - Xrange(r + 1, p.b); }
AlphabetExpr AlphabetExpr::F(const Params& p, int r) { return C() + D() - Xrange(r + 1, p.b); }

AlphabetExpr& AlphabetExpr::operator+=(const AlphabetExpr& o) {
  cC += o.cC;
  cD += o.cD;
  for (auto [j, k] : o.x) {
    int v = (x[j] += k);
    if (v == 0) x.erase(j);
  }
  return *this;
}

AlphabetExpr& AlphabetExpr::operator-=(const AlphabetExpr& o) { return *this += -o; }

AlphabetExpr AlphabetExpr::operator-() const {
  AlphabetExpr e = *this;
  e.cC = -e.cC;
  e.cD = -e.cD;
  for (auto& kv : e.x) kv.second = -kv.second;
  return e;
}

bool AlphabetExpr::operator<(const AlphabetExpr& o) const {
  return std::tie(cC, cD, x) < std::tie(o.cC, o.cD, o.x);
}

int AlphabetExpr::size(const AlphabetSizes& s) const {
  int n = cC * s.c + cD * s.d;
  for (auto [j, k] : x) n += k;
  return n;
}

bool AlphabetExpr::honest() const {
  if (cC < 0 || cD < 0) return false;
  for (auto [j, k] : x)
    if (k < 0) return false;
  return true;
}

std::string AlphabetExpr::str() const {
  std::string out;
  auto put = [&](int k, const std::string& name) {
    if (k == 0) return;
    if (out.empty())
      out += k < 0 ? "-" : "";
    else
      out += k < 0 ? "-" : "+";
    int a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a);
    out += name;
  };
  put(cC, "C");
  put(cD, "D");
  for (auto [j, k] : x) put(k, "x" + std::to_string(j));
  return out.empty() ? "0" : out;
}

AlphabetExpr AlphabetExpr::parse(const std::string& s) {
  AlphabetExpr e;
  if (s == "0") return e;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    int k = 0;
    bool have = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      k = k * 10 + (s[i++] - '0');
      have = true;
    }
    if (!have) k = 1;
    if (i >= s.size()) throw std::invalid_argument("bad alphabet: " + s);
    char name = s[i++];
    AlphabetExpr part;
    if (name == 'C') {
      part = C();
    } else if (name == 'D') {
      part = D();
    } else if (name == 'x') {
      int j = 0;
      bool digits = false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        j = j * 10 + (s[i++] - '0');
        digits = true;
      }
      if (!digits || j < 1) throw std::invalid_argument("bad alphabet: " + s);
      part = X(j);
    } else {
      throw std::invalid_argument("bad alphabet: " + s);
    }
    for (int t = 0; t < k; ++t) {
      if (sign > 0)
        e += part;
      else
        e -= part;
    }
  }
  return e;
}

namespace {

using Series = std::vector<Poly>;  // coefficients of t^0..t^n

Series series_mul(const Series& a, const Series& b, int n) {
  Series r(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// E(t) = sum e_j t^j for the given generating coefficients; inverse by recursion.
Series series_of(const std::vector<Poly>& gens, bool invert, int n) {
  Series s(n + 1);
  if (!invert) {
    for (int j = 0; j <= n && j < static_cast<int>(gens.size()); ++j) s[j] = gens[j];
    return s;
  }
  s[0] = Poly(1);
  for (int m = 1; m <= n; ++m) {
    Poly acc;
    for (int j = 1; j <= m && j < static_cast<int>(gens.size()); ++j) acc += gens[j] * s[m - j];
    s[m] = -acc;
  }
  return s;
}

Series series_pow(const std::vector<Poly>& gens, int k, int n) {
  Series r(n + 1);
  r[0] = Poly(1);
  if (k == 0) return r;
  Series base = series_of(gens, k < 0, n);
  int m = k < 0 ? -k : k;
  for (int i = 0; i < m; ++i) r = series_mul(r, base, n);
  return r;
}

// Generating series sum_i e_i(K) t^i truncated at degree n.
Series elem_series(const AlphabetExpr& k, int n, const AlphabetSizes& s) {
  Series r(n + 1);
  r[0] = Poly(1);
  auto fold = [&](const std::vector<Poly>& gens, int coef) {
    if (coef == 0) return;
    r = series_mul(r, series_pow(gens, coef, n), n);
  };
  std::vector<Poly> gc{Poly(1)}, gd{Poly(1)};
  for (int j = 1; j <= s.c; ++j) gc.push_back(Poly::c(j));
  for (int j = 1; j <= s.d; ++j) gd.push_back(Poly::d(j));
  fold(gc, k.cC);
  fold(gd, k.cD);
  for (auto [j, coef] : k.x) fold({Poly(1), Poly::x(j)}, coef);
  return r;
}

struct CacheKey {
  AlphabetExpr k;
  int i;
  int c, d;
  bool h;
  bool operator<(const CacheKey& o) const {
    return std::tie(k, i, c, d, h) < std::tie(o.k, o.i, o.c, o.d, o.h);
  }
};

std::mutex g_cache_mu;
std::map<CacheKey, Poly> g_cache;

}  // namespace

Poly elem_sym(const AlphabetExpr& k, int i, const AlphabetSizes& s) {
  if (i < 0) return Poly();
  if (i == 0) return Poly(1);
  CacheKey key{k, i, s.c, s.d, false};
  {
    std::lock_guard<std::mutex> g(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  Poly out = elem_series(k, i, s)[i];
  std::lock_guard<std::mutex> g(g_cache_mu);
  g_cache.emplace(key, out);
  return out;
}

Poly complete_sym(const AlphabetExpr& k, int i, const AlphabetSizes& s) {
  // h_i(K) = (-1)^i e_i(-K)
  Poly e = elem_sym(-k, i, s);
  return (i % 2) ? -e : e;
}

Poly staircase(const std::vector<int>& block) {
  Poly r(1);
  int m = static_cast<int>(block.size());
  for (int j = 0; j < m; ++j)
    if (m - 1 - j > 0) r *= Poly::x(block[j], m - 1 - j);
  return r;
}

}  // namespace lb
