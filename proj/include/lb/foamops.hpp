#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lb/bimodules.hpp"

namespace lb {

enum class Op { Mul, MulPoly, Dd, DdStar, Tr, TrStar, Zup, Zdown, Q, Iota, Pi, Pg };

struct Atom {
  Op op = Op::Dd;
  int i = 0;               // index for Dd/Tr/Q, r for Zup/Zdown, degree for Mul
  std::vector<int> g;      // grouping for Iota/Pi/Pg
  AlphabetExpr alpha;      // Mul
  Poly poly;               // MulPoly

  static Atom dd(int i) { return {Op::Dd, i, {}, {}, {}}; }
  static Atom dd_star(int i) { return {Op::DdStar, i, {}, {}, {}}; }
  static Atom tr(int i) { return {Op::Tr, i, {}, {}, {}}; }
  static Atom tr_star(int i) { return {Op::TrStar, i, {}, {}, {}}; }
  static Atom zup(int r) { return {Op::Zup, r, {}, {}, {}}; }
  static Atom zdown(int r) { return {Op::Zdown, r, {}, {}, {}}; }
  static Atom q(int t) { return {Op::Q, t, {}, {}, {}}; }
  static Atom iota(std::vector<int> g) { return {Op::Iota, 0, std::move(g), {}, {}}; }
  static Atom pi(std::vector<int> g) { return {Op::Pi, 0, std::move(g), {}, {}}; }
  static Atom pg(std::vector<int> g) { return {Op::Pg, 0, std::move(g), {}, {}}; }
  static Atom mul(AlphabetExpr a, int i) { return {Op::Mul, i, {}, std::move(a), {}}; }
  static Atom mul_poly(Poly p) { return {Op::MulPoly, 0, {}, {}, std::move(p)}; }

  bool operator==(const Atom& o) const;
  std::string str() const;
};

// Applied right to left, as written.
using Word = std::vector<Atom>;

std::string word_str(const Word& w);
Word parse_word(const std::string& s);  // throws std::invalid_argument
Word word_adjoint(const Word& w);
Word concat(const Word& left, const Word& right);

// W-level declared degrees (Iota/Pi carry -xi, Pg carries 2 xi).
int atom_degree(const Params& p, const Atom& a);
int word_degree(const Params& p, const Word& w);
// r of the target web for a word starting at V_r; throws on a kind mismatch.
int word_target_r(const Params& p, const Word& w, int src_r);

// Image of a normal form of V_r under one atom, as a normal form of the target.
Poly apply_atomic(const Params& p, const Atom& a, int r, const Poly& nf);
Poly apply_word(const Params& p, const Word& w, int r, const Poly& nf);

struct MapMatrix {
  ModulePtr src, tgt;
  std::vector<SparseVec> cols;  // image of each source basis element

  bool operator==(const MapMatrix& o) const;
  bool is_zero() const;
  // Normalized degree given endpoint q-shifts; nullopt when inhomogeneous,
  // and INT_MIN for the zero map.
  std::optional<int> degree(int src_shift, int tgt_shift) const;
  std::optional<int> degree() const { return degree(src->qshift(), tgt->qshift()); }
  // True when every coefficient is a constant integer.
  bool is_constant() const;
};

MapMatrix identity_matrix(ModulePtr m);
MapMatrix zero_matrix(ModulePtr src, ModulePtr tgt);
MapMatrix compose(const MapMatrix& f, const MapMatrix& g);  // f after g
MapMatrix add(const MapMatrix& f, const MapMatrix& g);
MapMatrix scale(const MapMatrix& f, const Int& k);
SparseVec apply_matrix(const MapMatrix& f, const SparseVec& v);

// Memoized realization of a word on the basis of V_{src_r}.
MapMatrix realize(const Params& p, const Word& w, int src_r);
size_t realize_cache_size();

// W-level equality: iota f pi p versus iota g pi p on V-bases, where the
// source W-view has grouping src_g (f, g are already W-to-W words).
bool w_level_equal(const Params& p, const Word& f, const Word& g, int src_r, const std::vector<int>& src_g);

}  // namespace lb
