#pragma once

#include <string>
#include <vector>

#include "lb/multicomplex.hpp"
#include "lb/qlaurent.hpp"

namespace lb {

// Element of the split Grothendieck group: coefficient of [W_r] for r = 0..b.
struct ClassVector {
  std::vector<QLaurent> c;

  ClassVector() = default;
  explicit ClassVector(int b) : c(b + 1) {}
  static ClassVector basis(int b, int r, const QLaurent& k = 1);

  int b() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;
  ClassVector& operator+=(const ClassVector& o);
  ClassVector& operator-=(const ClassVector& o);
  friend ClassVector operator+(ClassVector x, const ClassVector& y) { return x += y; }
  friend ClassVector operator-(ClassVector x, const ClassVector& y) { return x -= y; }
  friend ClassVector operator*(const QLaurent& k, const ClassVector& x);
  bool operator==(const ClassVector& o) const { return c == o.c; }
  bool operator!=(const ClassVector& o) const { return !(*this == o); }

  // "[W0] + (-q + q^3 - q^5)[W1]"
  std::string str() const;
};

// Class of W^g_r (is_w) or V_r, without the object's own q-shift.
ClassVector class_of(const Params& p, const MCObject& o);
ClassVector class_of_W(const Params& p, int r, const std::vector<int>& g);
ClassVector class_of_V(const Params& p, int r);

ClassVector euler(const MultiComplex& mc);

// Structure constants of [W_r][W_s] for square boundary data (c == b, d == a).
ClassVector class_product(const Params& p, const ClassVector& x, const ClassVector& y);
ClassVector class_power(const Params& p, const ClassVector& x, int k);

// Graded rank over the right boundary ring of q^{shift} W_r.
QLaurent graded_rank_W(const Params& p, int r);
QLaurent graded_rank_V(const Params& p, int r);
QLaurent graded_rank(const Params& p, const ClassVector& x);

// [r+1] (-1)^r coeff_r(chi) - 1, the remainder of the truncated idempotent pattern (a == b).
QLaurent limit_remainder(const ClassVector& chi, int r);

CheckResult check_class_ranks(const Params& p);
// Needs c == b and d == a: [W0] has coefficient 1 and [W_r] chi = O(q^{2k}) for r >= 1.
// When also a == b, the remainders above are O(q^{2k}).
CheckResult check_limit_pattern(const Params& p, int k);

}  // namespace lb
