#include "lb/qlaurent.hpp"

#include <stdexcept>

namespace lb {

QLaurent::QLaurent(long k) {
  if (k != 0) c_[0] = k;
}

QLaurent QLaurent::mono(int e, const Int& k) {
  QLaurent q;
  q.add(e, k);
  return q;
}

void QLaurent::add(int e, const Int& k) {
  if (k == 0) return;
  Int& v = c_[e];
  v += k;
  if (v == 0) c_.erase(e);
}

Int QLaurent::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

int QLaurent::min_exp() const {
  if (c_.empty()) throw std::domain_error("min_exp of zero");
  return c_.begin()->first;
}

int QLaurent::max_exp() const {
  if (c_.empty()) throw std::domain_error("max_exp of zero");
  return c_.rbegin()->first;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, k] : o.c_) add(e, k);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, k] : o.c_) add(e, -k);
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [e, k] : c_) r.c_[e] = -k;
  return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [e1, k1] : a.c_)
    for (const auto& [e2, k2] : b.c_) r.add(e1 + e2, k1 * k2);
  return r;
}

QLaurent QLaurent::shifted(int e) const {
  QLaurent r;
  for (const auto& [x, k] : c_) r.c_[x + e] = k;
  return r;
}

QLaurent QLaurent::bar() const {
  QLaurent r;
  for (const auto& [x, k] : c_) r.c_[-x] = k;
  return r;
}

Int QLaurent::at_one() const {
  Int s = 0;
  for (const auto& kv : c_) s += kv.second;
  return s;
}

QLaurent QLaurent::div_exact(const QLaurent& den) const {
  if (den.is_zero()) throw std::domain_error("division by zero");
  QLaurent rem = *this, quo;
  if (rem.is_zero()) return quo;
  int dlo = den.min_exp();
  int top = max_exp() - den.max_exp();
  Int lead = den.coeff(dlo);
  while (!rem.is_zero()) {
    int e = rem.min_exp() - dlo;
    Int k = rem.coeff(rem.min_exp());
    if (e > top || k % lead != 0) throw std::domain_error("inexact Laurent division");
    QLaurent t = QLaurent::mono(e, k / lead);
    quo += t;
    rem -= t * den;
  }
  return quo;
}

std::string QLaurent::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, k0] : c_) {
    Int k = k0;
    bool neg = k < 0;
    if (neg) k = -k;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string var = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    if (var.empty())
      out += k.get_str();
    else if (k == 1)
      out += var;
    else
      out += k.get_str() + var;
  }
  return out;
}

QLaurent qint(int n) {
  QLaurent r;
  for (int j = 0; j < n; ++j) r += QLaurent::mono(-n + 1 + 2 * j);
  return r;
}

QLaurent qfac(int n) {
  QLaurent r(1);
  for (int j = 2; j <= n; ++j) r = r * qint(j);
  return r;
}

QLaurent qmultinomial(const std::vector<int>& g) {
  int r = 0;
  QLaurent den(1);
  for (int x : g) {
    r += x;
    den = den * qfac(x);
  }
  return qfac(r).div_exact(den);
}

}  // namespace lb
