#pragma once

#include <map>
#include <string>
#include <vector>

#include "lb/params.hpp"
#include "lb/poly.hpp"

namespace lb {

// Sizes of the two boundary alphabets whose e-generators are c_j and d_j.
struct AlphabetSizes {
  int c = 0, d = 0;
};

// A Z-linear combination of C, D and singleton root alphabets {x_j}.
struct AlphabetExpr {
  int cC = 0;
  int cD = 0;
  std::map<int, int> x;  // root index -> coefficient, no zeros

  static AlphabetExpr C();
  static AlphabetExpr D();
  static AlphabetExpr X(int j);
  static AlphabetExpr Xrange(int from, int to);  // x_from + ... + x_to

  // Aliases for a two-strand ladder with right boundary (d, c).
  static AlphabetExpr B(const Params& p);
  static AlphabetExpr A(const Params& p);
  static AlphabetExpr E(const Params& p, int r);
  static AlphabetExpr F(const Params& p, int r);

  AlphabetExpr& operator+=(const AlphabetExpr& o);
  AlphabetExpr& operator-=(const AlphabetExpr& o);
  AlphabetExpr operator-() const;
  friend AlphabetExpr operator+(AlphabetExpr a, const AlphabetExpr& b) { return a += b; }
  friend AlphabetExpr operator-(AlphabetExpr a, const AlphabetExpr& b) { return a -= b; }
  bool operator==(const AlphabetExpr& o) const { return cC == o.cC && cD == o.cD && x == o.x; }
  bool operator<(const AlphabetExpr& o) const;

  int size(const AlphabetSizes& s) const;
  bool honest() const;
  std::string str() const;
  // Inverse of str(); throws std::invalid_argument.
  static AlphabetExpr parse(const std::string& s);
};

Poly elem_sym(const AlphabetExpr& k, int i, const AlphabetSizes& s);
Poly complete_sym(const AlphabetExpr& k, int i, const AlphabetSizes& s);

// Product of v_j^{m-j} over the block (v_1..v_m), given as root indices.
Poly staircase(const std::vector<int>& block);

}  // namespace lb
