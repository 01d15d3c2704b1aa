#include "lb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lb {

int slot_qdeg(int s) {
  if (s < kMaxC) return 2 * (s + 1);
  if (s < kMaxC + kMaxD) return 2 * (s - kMaxC + 1);
  return 2;
}

std::string slot_name(int s) {
  if (s < kMaxC) return "c" + std::to_string(s + 1);
  if (s < kMaxC + kMaxD) return "d" + std::to_string(s - kMaxC + 1);
  return "x" + std::to_string(x_index(s));
}

int Mono::qdeg() const {
  int q = 0;
  for (int s = 0; s < kSlots; ++s) q += e[s] * slot_qdeg(s);
  return q;
}

bool Mono::is_one() const {
  for (auto v : e)
    if (v) return false;
  return true;
}

bool Mono::has_x() const {
  for (int s = kMaxC + kMaxD; s < kSlots; ++s)
    if (e[s]) return true;
  return false;
}

bool Mono::has_cd() const {
  for (int s = 0; s < kMaxC + kMaxD; ++s)
    if (e[s]) return true;
  return false;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  for (int s = 0; s < kSlots; ++s) {
    int v = e[s] + o.e[s];
    if (v > 255) throw std::overflow_error("monomial exponent overflow");
    r.e[s] = static_cast<uint8_t>(v);
  }
  return r;
}

size_t MonoHash::operator()(const Mono& m) const {
  uint64_t h = 1469598103934665603ull;
  for (auto v : m.e) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

bool grlex_less(const Mono& a, const Mono& b) {
  int da = a.qdeg(), db = b.qdeg();
  if (da != db) return da < db;
  for (int s = kSlots - 1; s >= 0; --s)
    if (a.e[s] != b.e[s]) return a.e[s] < b.e[s];
  return false;
}

Poly::Poly(long n) {
  if (n != 0) t_.emplace_back(Mono{}, Int(n));
}

Poly::Poly(const Int& n) {
  if (n != 0) t_.emplace_back(Mono{}, n);
}

Poly Poly::monomial(const Mono& m, const Int& k) {
  Poly p;
  if (k != 0) p.t_.emplace_back(m, k);
  return p;
}

Poly Poly::slot(int s, int pow) {
  Mono m;
  m.e[s] = static_cast<uint8_t>(pow);
  return monomial(m);
}

Poly Poly::c(int j, int pow) { return slot(slot_c(j), pow); }
Poly Poly::d(int j, int pow) { return slot(slot_d(j), pow); }
Poly Poly::x(int j, int pow) {
  if (j < 1 || j > kMaxX) throw std::out_of_range("root variable index");
  return slot(slot_x(j), pow);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first) {
      p.t_.back().second += t.second;
      if (p.t_.back().second == 0) p.t_.pop_back();
    } else if (t.second != 0) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.second = -t.second;
  return p;
}

namespace {

template <bool Sub>
void merge_into(std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, Sub ? Int(-b[j].second) : b[j].second);
      ++j;
    } else {
      Int k = Sub ? Int(a[i].second - b[j].second) : Int(a[i].second + b[j].second);
      if (k != 0) out.emplace_back(a[i].first, std::move(k));
      ++i;
      ++j;
    }
  }
  a.swap(out);
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  merge_into<false>(t_, o.t_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  merge_into<true>(t_, o.t_);
  return *this;
}

Poly& Poly::operator*=(const Int& k) {
  if (k == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.second *= k;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::mul_mono(const Mono& m, const Int& k) const {
  // Adding a fixed exponent vector preserves the byte-lexicographic order.
  Poly p;
  if (k == 0) return p;
  p.t_.reserve(t_.size());
  for (const auto& t : t_) p.t_.emplace_back(t.first * m, t.second * k);
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  if (a.t_.size() == 1) return b.mul_mono(a.t_[0].first, a.t_[0].second);
  if (b.t_.size() == 1) return a.mul_mono(b.t_[0].first, b.t_[0].second);
  const Poly& small = a.t_.size() <= b.t_.size() ? a : b;
  const Poly& big = a.t_.size() <= b.t_.size() ? b : a;
  if (small.t_.size() <= 8) {
    Poly acc;
    for (const auto& t : small.t_) acc += big.mul_mono(t.first, t.second);
    return acc;
  }
  std::vector<Poly::Term> terms;
  terms.reserve(a.t_.size() * b.t_.size());
  for (const auto& s : a.t_)
    for (const auto& t : b.t_) terms.emplace_back(s.first * t.first, s.second * t.second);
  return Poly::from_terms(std::move(terms));
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
  return true;
}

Poly Poly::pow(int n) const {
  Poly r(1), base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

int Poly::qdeg() const { return t_.empty() ? -1 : t_[0].first.qdeg(); }

bool Poly::homogeneous() const {
  if (t_.empty()) return true;
  int q = t_[0].first.qdeg();
  for (const auto& t : t_)
    if (t.first.qdeg() != q) return false;
  return true;
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }

Int Poly::constant_term() const {
  if (!t_.empty() && t_[0].first.is_one()) return t_[0].second;
  return 0;
}

bool Poly::has_x() const {
  for (const auto& t : t_)
    if (t.first.has_x()) return true;
  return false;
}

int Poly::max_exp(int s) const {
  int m = 0;
  for (const auto& t : t_) m = std::max<int>(m, t.first.e[s]);
  return m;
}

Poly Poly::substitute_slots(const std::array<int, kSlots>& to) const {
  std::vector<Term> terms;
  terms.reserve(t_.size());
  for (const auto& t : t_) {
    Mono m;
    for (int s = 0; s < kSlots; ++s) {
      if (!t.first.e[s]) continue;
      int dst = to[s] < 0 ? s : to[s];
      int v = m.e[dst] + t.first.e[s];
      if (v > 255) throw std::overflow_error("monomial exponent overflow");
      m.e[dst] = static_cast<uint8_t>(v);
    }
    terms.emplace_back(m, t.second);
  }
  return from_terms(std::move(terms));
}

Poly Poly::swap_slots(int s1, int s2) const {
  std::vector<Term> terms = t_;
  for (auto& t : terms) std::swap(t.first.e[s1], t.first.e[s2]);
  return from_terms(std::move(terms));
}

Poly Poly::substitute(int s, const Poly& v) const {
  // Group by the exponent of s and use a power table of v.
  int top = max_exp(s);
  if (top == 0) return *this;
  std::vector<Poly> pw(top + 1);
  pw[0] = Poly(1);
  for (int i = 1; i <= top; ++i) pw[i] = pw[i - 1] * v;
  std::vector<std::vector<Term>> bucket(top + 1);
  for (const auto& t : t_) {
    Mono m = t.first;
    int e = m.e[s];
    m.e[s] = 0;
    bucket[e].emplace_back(m, t.second);
  }
  Poly out;
  for (int e = 0; e <= top; ++e) {
    if (bucket[e].empty()) continue;
    out += from_terms(std::move(bucket[e])) * pw[e];
  }
  return out;
}

std::string int_str(const Int& k) { return k.get_str(); }

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : t_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const Term* a, const Term* b) { return grlex_less(a->first, b->first); });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    Int k = t->second;
    bool neg = k < 0;
    if (neg) k = -k;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (int s = 0; s < kSlots; ++s) {
      int e = t->first.e[s];
      if (!e) continue;
      if (!mono.empty()) mono += "·";
      mono += slot_name(s);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += k.get_str();
    else if (k == 1)
      out += mono;
    else
      out += k.get_str() + "·" + mono;
  }
  return out;
}

}  // namespace lb
