#pragma once

#include <string>

namespace lb {

struct Params {
  int a = 1, b = 1, c = 1, d = 1;

  int n() const { return a + b; }
  int l() const { return c - b; }
  // Empty string when valid, otherwise the reason.
  std::string validate() const;
  bool valid() const { return validate().empty(); }
  std::string str() const;
  bool operator==(const Params& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const Params& o) const;
};

long binom(long n, long k);

}  // namespace lb
