#pragma once

#include <map>
#include <string>
#include <vector>

#include "lb/poly.hpp"

namespace lb {

// Laurent polynomial in q with integer coefficients.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long k);  // NOLINT
  static QLaurent mono(int e, const Int& k = 1);

  const std::map<int, Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int e) const;
  int min_exp() const;
  int max_exp() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent operator-() const;
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  bool operator==(const QLaurent& o) const { return c_ == o.c_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  QLaurent shifted(int e) const;
  QLaurent bar() const;
  Int at_one() const;
  // Exact division; throws std::domain_error if the quotient is not Laurent.
  QLaurent div_exact(const QLaurent& den) const;
  std::string str() const;

 private:
  void add(int e, const Int& k);
  std::map<int, Int> c_;
};

QLaurent qint(int n);
QLaurent qfac(int n);
QLaurent qmultinomial(const std::vector<int>& g);

}  // namespace lb
