#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lb/foamops.hpp"

namespace lb {

struct MCObject {
  std::vector<int> coord;
  int r = 0;
  bool is_w = false;        // W^g_r (P complexes) or V_r (K complexes)
  std::vector<int> g;       // grouping when is_w
  int qshift = 0;           // G or H
  int t = 0;                // t-degree = -|coord|
  std::string label() const;
};

struct MCEdge {
  int from = 0, to = 0;     // differential goes from -> to
  int dir = 0;              // 1-based coordinate
  int seg = 0;              // j in the edge [j, j+1]
  int weight = 0;           // upsilon (K) or omega (P): shift(to) - shift(from)
  Word word;
  int sign = 1;
};

struct MultiComplex {
  Params params;
  std::string kind;  // "K" or "P"
  int k = 0;         // filtration level for P
  std::vector<MCObject> objs;
  std::vector<MCEdge> edges;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> out_edges;  // per object

  void finalize();
  const MCEdge* edge_between(int from, int to) const;
};

// Sign rule: negate if the sum of the first dir-1 coordinates is odd.
int totalization_sign(const std::vector<int>& coord, int dir);

struct CheckResult {
  std::string name;
  bool pass = true;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few, deterministic order
  void fail(const std::string& why);
};

// Realized component matrices (V-level), computed once with `jobs` workers.
class EdgeMatrices {
 public:
  EdgeMatrices(const MultiComplex& mc, int jobs);
  const MapMatrix& at(int edge) const { return mats_[edge]; }
  // pi p of an object's grouping (identity for V objects).
  const MapMatrix& projector(int obj) const { return proj_[obj]; }

 private:
  std::vector<MapMatrix> mats_;
  std::vector<MapMatrix> proj_;
};

CheckResult check_d2(const MultiComplex& mc, const EdgeMatrices& em, int jobs);
CheckResult check_homogeneity(const MultiComplex& mc, const EdgeMatrices& em);
CheckResult check_word_degrees(const MultiComplex& mc);

// Runs fn(i) for i in [0, n) on `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace lb
