#include "lb/foamops.hpp"

#include <cctype>
#include <climits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "lb/nilhecke.hpp"

namespace lb {

bool Atom::operator==(const Atom& o) const {
  return op == o.op && i == o.i && g == o.g && alpha == o.alpha && poly == o.poly;
}

namespace {

std::string group_str(const std::vector<int>& g) {
  std::string s = "(";
  for (size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k]);
  return s + ")";
}

std::string z_str(int a, int b) {
  if (a >= 10 || b >= 10) return "Z" + std::to_string(a) + "," + std::to_string(b);
  return "Z" + std::to_string(a) + std::to_string(b);
}

}  // namespace

std::string Atom::str() const {
  switch (op) {
    case Op::Dd: return "d" + std::to_string(i);
    case Op::DdStar: return "D*" + std::to_string(i);
    case Op::Tr: return "s" + std::to_string(i);
    case Op::TrStar: return "S*" + std::to_string(i);
    case Op::Zup: return z_str(i + 1, i);
    case Op::Zdown: return z_str(i, i + 1);
    case Op::Q: return "Q" + std::to_string(i);
    case Op::Iota: return "iota" + group_str(g);
    case Op::Pi: return "pi" + group_str(g);
    case Op::Pg: return "p" + group_str(g);
    case Op::Mul: return "e" + std::to_string(i) + "[" + alpha.str() + "]";
    case Op::MulPoly: return "m[" + poly.str() + "]";
  }
  return "?";
}

std::string word_str(const Word& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + w[k].str();
  return s;
}

namespace {

int parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("expected integer in '" + s + "'");
  return std::stoi(s.substr(start, pos - start));
}

std::vector<int> parse_group(const std::string& s, size_t& pos) {
  if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected '(' in '" + s + "'");
  ++pos;
  std::vector<int> g;
  while (pos < s.size() && s[pos] != ')') {
    g.push_back(parse_int(s, pos));
    if (pos < s.size() && s[pos] == ',') ++pos;
  }
  if (pos >= s.size()) throw std::invalid_argument("unterminated grouping in '" + s + "'");
  ++pos;
  return g;
}

Atom parse_atom(const std::string& s) {
  size_t pos = 0;
  auto rest_int = [&](size_t from) {
    pos = from;
    int v = parse_int(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return v;
  };
  if (s.rfind("D*", 0) == 0) return Atom::dd_star(rest_int(2));
  if (s.rfind("S*", 0) == 0) return Atom::tr_star(rest_int(2));
  if (s.rfind("iota", 0) == 0 || s.rfind("pi", 0) == 0 || (s.size() > 1 && s[0] == 'p' && s[1] == '(')) {
    Op op = s[0] == 'i' ? Op::Iota : (s[1] == 'i' ? Op::Pi : Op::Pg);
    pos = op == Op::Iota ? 4 : (op == Op::Pi ? 2 : 1);
    auto g = parse_group(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return Atom{op, 0, g, {}, {}};
  }
  if (s.empty()) throw std::invalid_argument("empty atom");
  switch (s[0]) {
    case 'd': return Atom::dd(rest_int(1));
    case 's': return Atom::tr(rest_int(1));
    case 'Q': return Atom::q(rest_int(1));
    case 'Z': {
      int a, b;
      if (s.find(',') != std::string::npos) {
        pos = 1;
        a = parse_int(s, pos);
        if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("bad Z atom '" + s + "'");
        ++pos;
        b = parse_int(s, pos);
        if (pos != s.size()) throw std::invalid_argument("bad Z atom '" + s + "'");
      } else {
        if (s.size() != 3 || !std::isdigit(static_cast<unsigned char>(s[1])) ||
            !std::isdigit(static_cast<unsigned char>(s[2])))
          throw std::invalid_argument("bad Z atom '" + s + "'");
        a = s[1] - '0';
        b = s[2] - '0';
      }
      if (a == b + 1) return Atom::zup(b);
      if (b == a + 1) return Atom::zdown(a);
      throw std::invalid_argument("Z indices must differ by one in '" + s + "'");
    }
    case 'e': {
      pos = 1;
      int i = parse_int(s, pos);
      if (pos >= s.size() || s[pos] != '[' || s.back() != ']') throw std::invalid_argument("bad e atom '" + s + "'");
      return Atom::mul(AlphabetExpr::parse(s.substr(pos + 1, s.size() - pos - 2)), i);
    }
    default:
      throw std::invalid_argument("unknown atom '" + s + "'");
  }
}

}  // namespace

Word parse_word(const std::string& s) {
  std::istringstream in(s);
  std::string tok;
  Word w;
  while (in >> tok) w.push_back(parse_atom(tok));
  return w;
}

Word word_adjoint(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Atom& a : out) {
    switch (a.op) {
      case Op::Dd: a.op = Op::DdStar; break;
      case Op::DdStar: a.op = Op::Dd; break;
      case Op::Tr: a.op = Op::TrStar; break;
      case Op::TrStar: a.op = Op::Tr; break;
      case Op::Zup: a.op = Op::Zdown; break;
      case Op::Zdown: a.op = Op::Zup; break;
      case Op::Iota: a.op = Op::Pi; break;
      case Op::Pi: a.op = Op::Iota; break;
      default: break;
    }
  }
  return out;
}

Word concat(const Word& left, const Word& right) {
  Word w = left;
  w.insert(w.end(), right.begin(), right.end());
  return w;
}

int atom_degree(const Params& p, const Atom& a) {
  switch (a.op) {
    case Op::Dd:
    case Op::DdStar: return -2;
    case Op::Tr:
    case Op::TrStar: return 0;
    case Op::Zup:
    case Op::Zdown: return p.d;
    case Op::Q: return 2 * p.l() + 2 * a.i;
    case Op::Iota:
    case Op::Pi: return -xi(p, a.g);
    case Op::Pg: return 2 * xi(p, a.g);
    case Op::Mul: return 2 * a.i;
    case Op::MulPoly: return a.poly.qdeg();
  }
  return 0;
}

int word_degree(const Params& p, const Word& w) {
  int s = 0;
  for (const Atom& a : w) s += atom_degree(p, a);
  return s;
}

namespace {

void check_index(const Params& p, int i, int r) {
  if (i < 1 || i >= p.b) throw std::invalid_argument("operator index out of range");
  if (i == r) throw std::invalid_argument("s_r and d_r do not act on V_r");
}

int step_r(const Params& p, const Atom& a, int r) {
  switch (a.op) {
    case Op::Dd:
    case Op::DdStar:
    case Op::Tr:
    case Op::TrStar: check_index(p, a.i, r); return r;
    case Op::Zup:
      if (a.i != r || r + 1 > p.b) throw std::invalid_argument("Zup source mismatch");
      return r + 1;
    case Op::Zdown:
      if (a.i + 1 != r) throw std::invalid_argument("Zdown source mismatch");
      return r - 1;
    case Op::Q:
      if (a.i < 1 || a.i > p.b) throw std::invalid_argument("Q index out of range");
      return r;
    case Op::Iota:
    case Op::Pi:
    case Op::Pg:
      if (!is_composition_of(a.g, r)) throw std::invalid_argument("grouping does not match r");
      return r;
    default: return r;
  }
}

}  // namespace

int word_target_r(const Params& p, const Word& w, int src_r) {
  int r = src_r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = step_r(p, *it, r);
  return r;
}

Poly apply_atomic(const Params& p, const Atom& a, int r, const Poly& nf) {
  int r2 = step_r(p, a, r);
  ModulePtr tgt = build_V(p, r2);
  AlphabetSizes sz{p.c, p.d};
  switch (a.op) {
    case Op::Dd:
    case Op::DdStar: return tgt->reduce(divided_difference(nf, a.i));
    case Op::Tr: return tgt->reduce(transpose(nf, a.i));
    case Op::TrStar: return tgt->reduce(-transpose(nf, a.i));
    case Op::Zup: return tgt->reduce(nf * elem_sym(AlphabetExpr::D() - AlphabetExpr::X(r + 1), p.d, sz));
    case Op::Zdown: return tgt->reduce(nf);
    case Op::Q: return tgt->reduce(nf * elem_sym(AlphabetExpr::C() - AlphabetExpr::Xrange(a.i, p.b), p.l() + a.i, sz));
    case Op::Iota: return nf;
    case Op::Pi: {
      Poly t = nf;
      for (const auto& blk : blocks_of(p, a.g))
        if (blk.size() > 1) t = longest_dd(t, blk);
      return tgt->reduce(t);
    }
    case Op::Pg: {
      Poly st(1);
      for (const auto& blk : blocks_of(p, a.g)) st *= staircase(blk);
      return tgt->reduce(nf * st);
    }
    case Op::Mul: return tgt->reduce(nf * elem_sym(a.alpha, a.i, sz));
    case Op::MulPoly: return tgt->reduce(nf * a.poly);
  }
  return nf;
}

Poly apply_word(const Params& p, const Word& w, int r, const Poly& nf) {
  Poly cur = nf;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    cur = apply_atomic(p, *it, r, cur);
    r = step_r(p, *it, r);
    if (cur.is_zero()) break;
  }
  return cur;
}

bool MapMatrix::operator==(const MapMatrix& o) const {
  if (src.get() != o.src.get() || tgt.get() != o.tgt.get()) return false;
  return cols == o.cols;
}

bool MapMatrix::is_zero() const {
  for (const auto& c : cols)
    if (!c.empty()) return false;
  return true;
}

std::optional<int> MapMatrix::degree(int src_shift, int tgt_shift) const {
  std::optional<int> deg;
  for (size_t j = 0; j < cols.size(); ++j) {
    int sdeg = src->basis()[j].qdeg() + src_shift;
    for (const auto& [i, c] : cols[j]) {
      int base = tgt->basis()[i].qdeg() + tgt_shift - sdeg;
      for (const auto& t : c.terms()) {
        int dd = base + t.first.qdeg();
        if (!deg)
          deg = dd;
        else if (*deg != dd)
          return std::nullopt;
      }
    }
  }
  if (!deg) return INT_MIN;
  return deg;
}

bool MapMatrix::is_constant() const {
  for (const auto& c : cols)
    for (const auto& e : c)
      if (!e.second.is_constant()) return false;
  return true;
}

MapMatrix identity_matrix(ModulePtr m) {
  MapMatrix f{m, m, {}};
  for (int i = 0; i < m->rank(); ++i) f.cols.push_back({{i, Poly(1)}});
  return f;
}

MapMatrix zero_matrix(ModulePtr src, ModulePtr tgt) {
  MapMatrix f{src, tgt, {}};
  f.cols.resize(src->rank());
  return f;
}

namespace {

void axpy(SparseVec& acc, const Poly& k, const SparseVec& v) {
  SparseVec out;
  out.reserve(acc.size() + v.size());
  size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      Poly t = k * v[j].second;
      if (!t.is_zero()) out.emplace_back(v[j].first, std::move(t));
      ++j;
    } else {
      Poly t = acc[i].second + k * v[j].second;
      if (!t.is_zero()) out.emplace_back(acc[i].first, std::move(t));
      ++i;
      ++j;
    }
  }
  acc.swap(out);
}

}  // namespace

SparseVec apply_matrix(const MapMatrix& f, const SparseVec& v) {
  SparseVec acc;
  for (const auto& [i, c] : v) axpy(acc, c, f.cols[i]);
  return acc;
}

MapMatrix compose(const MapMatrix& f, const MapMatrix& g) {
  if (f.src.get() != g.tgt.get()) throw std::invalid_argument("compose: endpoint mismatch");
  MapMatrix h{g.src, f.tgt, {}};
  h.cols.reserve(g.cols.size());
  for (const auto& col : g.cols) h.cols.push_back(apply_matrix(f, col));
  return h;
}

MapMatrix add(const MapMatrix& f, const MapMatrix& g) {
  if (f.src.get() != g.src.get() || f.tgt.get() != g.tgt.get()) throw std::invalid_argument("add: endpoint mismatch");
  MapMatrix h = f;
  for (size_t j = 0; j < h.cols.size(); ++j) axpy(h.cols[j], Poly(1), g.cols[j]);
  return h;
}

MapMatrix scale(const MapMatrix& f, const Int& k) {
  MapMatrix h = f;
  if (k == 0) {
    for (auto& c : h.cols) c.clear();
    return h;
  }
  for (auto& c : h.cols)
    for (auto& e : c) e.second *= k;
  return h;
}

namespace {

std::mutex g_real_mu;
std::map<std::tuple<Params, std::string, int>, MapMatrix> g_real;

}  // namespace

MapMatrix realize(const Params& p, const Word& w, int src_r) {
  auto key = std::make_tuple(p, word_str(w), src_r);
  bool cacheable = true;
  for (const Atom& a : w)
    if (a.op == Op::MulPoly) cacheable = false;
  if (cacheable) {
    std::lock_guard<std::mutex> g(g_real_mu);
    auto it = g_real.find(key);
    if (it != g_real.end()) return it->second;
  }
  int tr = word_target_r(p, w, src_r);
  ModulePtr src = build_V(p, src_r), tgt = build_V(p, tr);
  MapMatrix f{src, tgt, {}};
  f.cols.reserve(src->rank());
  for (int j = 0; j < src->rank(); ++j) f.cols.push_back(tgt->coords(apply_word(p, w, src_r, src->basis_poly(j))));
  if (cacheable) {
    std::lock_guard<std::mutex> g(g_real_mu);
    g_real.emplace(key, f);
  }
  return f;
}

size_t realize_cache_size() {
  std::lock_guard<std::mutex> g(g_real_mu);
  return g_real.size();
}

bool w_level_equal(const Params& p, const Word& f, const Word& g, int src_r, const std::vector<int>& src_g) {
  Word tail{Atom::pi(src_g), Atom::pg(src_g)};
  return realize(p, concat(f, tail), src_r) == realize(p, concat(g, tail), src_r);
}

}  // namespace lb
