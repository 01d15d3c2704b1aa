#include "lb/multicomplex.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

namespace lb {

std::string MCObject::label() const {
  if (!is_w) return "V" + std::to_string(r);
  std::string s = "W" + std::to_string(r) + "^(";
  for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

void MultiComplex::finalize() {
  index.clear();
  for (size_t i = 0; i < objs.size(); ++i) index[objs[i].coord] = static_cast<int>(i);
  out_edges.assign(objs.size(), {});
  for (size_t e = 0; e < edges.size(); ++e) out_edges[edges[e].from].push_back(static_cast<int>(e));
}

const MCEdge* MultiComplex::edge_between(int from, int to) const {
  for (int e : out_edges[from])
    if (edges[e].to == to) return &edges[e];
  return nullptr;
}

int totalization_sign(const std::vector<int>& coord, int dir) {
  int s = 0;
  for (int k = 0; k < dir - 1; ++k) s += coord[k];
  return (s % 2) ? -1 : 1;
}

void CheckResult::fail(const std::string& why) {
  pass = false;
  ++failed;
  if (failures.size() < 8) failures.push_back(why);
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (int w = 0; w < std::min(jobs, n); ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

EdgeMatrices::EdgeMatrices(const MultiComplex& mc, int jobs) {
  mats_.resize(mc.edges.size());
  parallel_for(static_cast<int>(mc.edges.size()), jobs, [&](int e) {
    const MCEdge& ed = mc.edges[e];
    mats_[e] = realize(mc.params, ed.word, mc.objs[ed.from].r);
  });
  proj_.resize(mc.objs.size());
  parallel_for(static_cast<int>(mc.objs.size()), jobs, [&](int o) {
    const MCObject& ob = mc.objs[o];
    if (ob.is_w)
      proj_[o] = realize(mc.params, {Atom::pi(ob.g), Atom::pg(ob.g)}, ob.r);
    else
      proj_[o] = identity_matrix(build_V(mc.params, ob.r));
  });
}

namespace {

std::string coord_str(const std::vector<int>& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

CheckResult check_d2(const MultiComplex& mc, const EdgeMatrices& em, int jobs) {
  CheckResult res;
  res.name = "d2";
  int n = static_cast<int>(mc.objs.size());
  std::vector<std::vector<std::string>> fails(n);
  std::vector<long> counts(n);
  parallel_for(n, jobs, [&](int v) {
    std::map<int, std::optional<MapMatrix>> sums;
    for (int e1 : mc.out_edges[v]) {
      int u = mc.edges[e1].to;
      for (int e2 : mc.out_edges[u]) {
        int w = mc.edges[e2].to;
        MapMatrix c = compose(em.at(e2), em.at(e1));
        if (mc.edges[e1].sign * mc.edges[e2].sign < 0) c = scale(c, -1);
        auto& slot = sums[w];
        slot = slot ? add(*slot, c) : c;
      }
    }
    for (auto& [w, s] : sums) {
      ++counts[v];
      MapMatrix restricted = compose(*s, em.projector(v));
      if (!restricted.is_zero())
        fails[v].push_back("d^2 != 0 from " + coord_str(mc.objs[v].coord) + " to " + coord_str(mc.objs[w].coord));
    }
  });
  for (int v = 0; v < n; ++v) {
    res.checked += counts[v];
    for (auto& f : fails[v]) res.fail(f);
  }
  return res;
}

CheckResult check_homogeneity(const MultiComplex& mc, const EdgeMatrices& em) {
  CheckResult res;
  res.name = "grading";
  for (size_t e = 0; e < mc.edges.size(); ++e) {
    const MCEdge& ed = mc.edges[e];
    const MCObject& s = mc.objs[ed.from];
    const MCObject& t = mc.objs[ed.to];
    int ss = em.at(e).src->qshift() + (s.is_w ? xi(mc.params, s.g) : 0) + s.qshift;
    int ts = em.at(e).tgt->qshift() + (t.is_w ? xi(mc.params, t.g) : 0) + t.qshift;
    ++res.checked;
    auto deg = compose(em.at(e), em.projector(ed.from)).degree(ss, ts);
    if (!deg || (*deg != 0 && *deg != INT_MIN))
      res.fail("edge " + coord_str(s.coord) + " -> " + coord_str(t.coord) + " is not homogeneous of degree 0");
  }
  return res;
}

CheckResult check_word_degrees(const MultiComplex& mc) {
  CheckResult res;
  res.name = "word-degrees";
  for (const MCEdge& ed : mc.edges) {
    ++res.checked;
    int want = mc.objs[ed.from].qshift - mc.objs[ed.to].qshift;
    if (word_degree(mc.params, ed.word) != want || -ed.weight != want)
      res.fail("edge " + coord_str(mc.objs[ed.from].coord) + " word " + word_str(ed.word) + " has degree " +
               std::to_string(word_degree(mc.params, ed.word)) + ", expected " + std::to_string(want));
  }
  return res;
}

}  // namespace lb
