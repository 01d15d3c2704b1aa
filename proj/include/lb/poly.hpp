#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lb {

using Int = mpz_class;

// Global variable slots: c_1..c_8, d_1..d_8, x_1..x_32.
constexpr int kMaxC = 8;
constexpr int kMaxD = 8;
constexpr int kMaxX = 32;
constexpr int kSlots = kMaxC + kMaxD + kMaxX;

enum class VarKind : uint8_t { C, D, X };

constexpr int slot_c(int j) { return j - 1; }
constexpr int slot_d(int j) { return kMaxC + j - 1; }
constexpr int slot_x(int j) { return kMaxC + kMaxD + j - 1; }
constexpr bool is_x_slot(int s) { return s >= kMaxC + kMaxD; }
constexpr int x_index(int s) { return s - kMaxC - kMaxD + 1; }

int slot_qdeg(int s);
std::string slot_name(int s);

struct Mono {
  std::array<uint8_t, kSlots> e{};

  bool operator==(const Mono& o) const { return std::memcmp(e.data(), o.e.data(), kSlots) == 0; }
  bool operator!=(const Mono& o) const { return !(*this == o); }
  bool operator<(const Mono& o) const { return std::memcmp(e.data(), o.e.data(), kSlots) < 0; }

  int qdeg() const;
  bool is_one() const;
  bool has_x() const;
  bool has_cd() const;
  Mono operator*(const Mono& o) const;
};

struct MonoHash {
  size_t operator()(const Mono& m) const;
};

// Graded-lex comparison used for printing: lower degree first, then by the
// exponent of the largest variable (x_32 > ... > x_1 > d_* > c_*).
bool grlex_less(const Mono& a, const Mono& b);

class Poly {
 public:
  using Term = std::pair<Mono, Int>;

  Poly() = default;
  Poly(long n);  // NOLINT: implicit constant promotion is convenient
  Poly(const Int& n);  // NOLINT

  static Poly monomial(const Mono& m, const Int& k = 1);
  static Poly c(int j, int pow = 1);
  static Poly d(int j, int pow = 1);
  static Poly x(int j, int pow = 1);
  static Poly slot(int s, int pow = 1);

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }

  // Builds from an unsorted term list, combining duplicates.
  static Poly from_terms(std::vector<Term> terms);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Int& k);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Int& k) { return a *= k; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly mul_mono(const Mono& m, const Int& k = 1) const;
  Poly pow(int n) const;

  // -1 for the zero polynomial; degree of the first term otherwise.
  int qdeg() const;
  bool homogeneous() const;
  bool is_constant() const;
  Int constant_term() const;
  bool has_x() const;
  int max_exp(int s) const;

  // Applies a slot map to every monomial (entries -1 mean "keep").
  Poly substitute_slots(const std::array<int, kSlots>& to) const;
  Poly swap_slots(int s1, int s2) const;
  // Replaces variable slot s by the polynomial v.
  Poly substitute(int s, const Poly& v) const;

  std::string str() const;

 private:
  std::vector<Term> t_;  // sorted by Mono::operator<, no zero coefficients
};

std::string int_str(const Int& k);

}  // namespace lb
