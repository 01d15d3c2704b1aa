#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lb/params.hpp"
#include "lb/poly.hpp"
#include "lb/qlaurent.hpp"
#include "lb/symfunc.hpp"

namespace lb {

// Coordinates over R_R: basis index -> coefficient polynomial in c_*, d_*.
using SparseVec = std::vector<std::pair<int, Poly>>;

enum class WebKind { V, W, Composite };

struct WebLabel {
  WebKind kind = WebKind::V;
  Params params;
  int r = 0;
  std::vector<int> grouping;  // W only
  std::vector<int> segments;  // Composite only: r of each V-segment, left to right
  std::string str() const;
};

// One root of the tower: x is a root of `alphabet`, exponents bounded by `bound`.
struct Root {
  int x = 0;
  AlphabetExpr alphabet;
  int bound = 0;
  Poly rule;  // x^(bound+1) == rule
};

class LadderModule {
 public:
  LadderModule(WebLabel label, AlphabetSizes sizes, std::vector<Root> roots, int qshift);

  const WebLabel& label() const { return label_; }
  const AlphabetSizes& sizes() const { return sizes_; }
  const std::vector<Root>& roots() const { return roots_; }  // introduction order
  int qshift() const { return qshift_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mono>& basis() const { return basis_; }
  int index_of(const Mono& m) const;
  bool has_root(int j) const;

  Poly reduce(const Poly& p) const;
  // p must already be reduced.
  SparseVec coords(const Poly& nf) const;
  Poly from_coords(const SparseVec& v) const;
  Poly basis_poly(int i) const { return Poly::monomial(basis_[i]); }

  // Graded rank over R_R in powers of q (unnormalized: q^0 is the basis element 1).
  QLaurent hilbert_series() const;

 private:
  const Poly& power(int root_pos, int e) const;

  WebLabel label_;
  AlphabetSizes sizes_;
  std::vector<Root> roots_;
  int qshift_;
  std::vector<Mono> basis_;
  std::unordered_map<Mono, int, MonoHash> index_;
  std::vector<int> slot_root_;  // slot -> position in roots_, or -1
  mutable std::mutex pow_mu_;
  mutable std::vector<std::vector<Poly>> pow_;  // per root: x^(bound+1+k) in x-reduced form
};

using ModulePtr = std::shared_ptr<const LadderModule>;

int qshift_V(const Params& p, int r);
int xi(const Params& p, const std::vector<int>& g);
// Blocks (g_1, ..., g_m, b - r) as lists of consecutive root indices.
std::vector<std::vector<int>> blocks_of(const Params& p, const std::vector<int>& g);
bool is_composition_of(const std::vector<int>& g, int r);

ModulePtr build_V(const Params& p, int r);

// Composite of V-segments (left to right), glued along equal boundary colors.
// Requires c == b and d == a whenever there is more than one segment.
ModulePtr build_composite(const Params& p, const std::vector<int>& segments);

// W^g_r as the parabolic-invariant view of V_r.
struct WView {
  ModulePtr V;
  std::vector<int> g;
  std::vector<std::vector<int>> blocks;
  int xi = 0;
  int qshift() const { return V->qshift() + xi; }
  bool contains(const Poly& nf) const;
  QLaurent hilbert_series(int cutoff) const;
};

WView build_W(const Params& p, int r, const std::vector<int>& g);

// Expansion of a polynomial in the root variables over Artin monomials of the
// given blocks with block-symmetric coefficients.
std::map<std::vector<int>, Poly> w_coordinates(const Poly& p, const std::vector<std::vector<int>>& blocks);

}  // namespace lb
