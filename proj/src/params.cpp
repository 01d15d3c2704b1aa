#include "lb/params.hpp"

#include <algorithm>
#include <tuple>

#include "lb/poly.hpp"

namespace lb {

std::string Params::validate() const {
  if (a < 1 || b < 1 || c < 1 || d < 1) return "a, b, c, d must be positive";
  if (a + b != c + d) return "a + b must equal c + d";
  if (b != std::min({a, b, c, d})) return "b must equal min(a, b, c, d)";
  if (c > kMaxC || d > kMaxD) return "c and d are limited to " + std::to_string(kMaxC);
  return "";
}

std::string Params::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + ")";
}

bool Params::operator<(const Params& o) const {
  return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
}

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace lb
