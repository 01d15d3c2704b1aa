#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lb/grothendieck.hpp"
#include "lb/multicomplex.hpp"

namespace lb {

struct FCObject {
  std::vector<int> segments;  // r of each ladder segment, left to right
  ModulePtr mod;              // composite module of the segments
  bool is_w = false;          // W view of a single segment
  std::vector<int> g;         // its grouping
  int shift = 0;              // q-shift on top of mod->qshift()
  int t = 0;
  ClassVector cls;            // class without the shift

  // Number of segments with a rung; objects with at most one are indecomposable.
  int rungs() const;
  std::string label() const;
};

// Components raise t by one.
struct FiniteComplex {
  Params params;
  std::vector<FCObject> objs;
  std::map<std::pair<int, int>, MapMatrix> comps;

  int total_shift(int i) const { return objs[i].shift + objs[i].mod->qshift(); }
};

// F^1 of the P complex, as a finite complex.
FiniteComplex rickard(const Params& p);
// Needs b == 1 and composable boundary data (c == b, d == a).
FiniteComplex tensor(const FiniteComplex& x, const FiniteComplex& y);
FiniteComplex tensor_power(const FiniteComplex& x, int k);

// The splitting of a composite along the rung at segment v: one out map and one in
// map per power x_v^i, i = 0..bound. Needs b == 1 and another rung left of v.
struct Splitting {
  ModulePtr src, piece;
  std::vector<MapMatrix> out, in;
  std::vector<int> piece_shift;  // shift of each summand relative to the source shift
};
Splitting split_dumbbell(const Params& p, const std::vector<int>& segments, int v);
CheckResult check_splitting(const Splitting& s);

// Splits every object into indecomposable pieces.
FiniteComplex split_all(const FiniteComplex& x);
FiniteComplex gaussian_eliminate(const FiniteComplex& x);

CheckResult check_d2(const FiniteComplex& x);
CheckResult check_homogeneity(const FiniteComplex& x);
// No component between equal labels has a unit entry on the generator.
CheckResult check_minimal(const FiniteComplex& x);
// Same objects as the P complex and differentials equal after rescaling objects by +-1.
CheckResult compare_minimal(const FiniteComplex& x, const MultiComplex& p, const EdgeMatrices& em);

ClassVector euler(const FiniteComplex& x);

struct ReductionReport {
  int objects_before = 0;
  int objects_split = 0;
  FiniteComplex reduced;
  std::vector<CheckResult> checks;
};
// Tensor power of the Rickard complex, split, eliminated and compared with F^k(P).
ReductionReport reduce_rickard_power(const Params& p, int k);

}  // namespace lb
