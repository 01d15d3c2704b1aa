#include "lb/nilhecke.hpp"

#include <stdexcept>

namespace lb {

Poly divided_difference_slots(const Poly& p, int su, int sv) {
  std::vector<Poly::Term> out;
  for (const auto& [m, k] : p.terms()) {
    int a = m.e[su], b = m.e[sv];
    if (a == b) continue;
    int lo = a < b ? a : b;
    int span = (a > b ? a - b : b - a) - 1;
    Int coef = a > b ? k : Int(-k);
    Mono base = m;
    base.e[su] = static_cast<uint8_t>(lo);
    base.e[sv] = static_cast<uint8_t>(lo);
    for (int j = 0; j <= span; ++j) {
      Mono t = base;
      t.e[su] += static_cast<uint8_t>(span - j);
      t.e[sv] += static_cast<uint8_t>(j);
      out.emplace_back(t, coef);
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly divided_difference(const Poly& p, int i) {
  if (i < 1 || i + 1 > kMaxX) throw std::out_of_range("divided difference index");
  return divided_difference_slots(p, slot_x(i), slot_x(i + 1));
}

Poly transpose(const Poly& p, int i) {
  if (i < 1 || i + 1 > kMaxX) throw std::out_of_range("transposition index");
  return p.swap_slots(slot_x(i), slot_x(i + 1));
}

Poly longest_dd(const Poly& p, const std::vector<int>& block) {
  int m = static_cast<int>(block.size());
  for (int j = 1; j < m; ++j)
    if (block[j] != block[j - 1] + 1) throw std::invalid_argument("block must be contiguous");
  Poly r = p;
  for (int f = m - 1; f >= 1; --f)
    for (int j = 1; j <= f; ++j) r = divided_difference(r, block[0] + j - 1);
  return r;
}

}  // namespace lb
