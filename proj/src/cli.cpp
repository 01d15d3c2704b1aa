#include "lb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "lb/grothendieck.hpp"
#include "lb/homotopy.hpp"
#include "lb/kcomplex.hpp"
#include "lb/pcomplex.hpp"
#include "lb/relations.hpp"

namespace lb {

using nlohmann::json;

namespace {

json params_json(const Params& p) { return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}}; }

Params params_from(const json& j) { return {j.at("a"), j.at("b"), j.at("c"), j.at("d")}; }

json result_json(const CheckResult& r) {
  return {{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}};
}

}  // namespace

std::string export_json(const MultiComplex& mc) {
  bool is_p = mc.kind == "P";
  json j;
  j["schema"] = 1;
  j["kind"] = mc.kind;
  j["params"] = params_json(mc.params);
  if (is_p) {
    j["k"] = mc.k;
    j["object_count"] = object_count(mc).get_str();
  }
  json vs = json::array();
  for (const auto& o : mc.objs) {
    json v;
    v[is_p ? "lambda" : "eps"] = o.coord;
    v["r"] = o.r;
    v[is_p ? "H" : "G"] = o.qshift;
    v["t"] = o.t;
    if (is_p) v["grouping"] = o.g;
    vs.push_back(v);
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& e : mc.edges)
    es.push_back({{"from", e.from}, {"to", e.to}, {"dir", e.dir}, {"seg", e.seg}, {"word", word_str(e.word)},
                  {"degree", e.weight}, {"sign", e.sign}});
  j["edges"] = es;
  return j.dump(2) + "\n";
}

MultiComplex import_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported schema");
  MultiComplex mc;
  mc.kind = j.at("kind");
  mc.params = params_from(j.at("params"));
  bool is_p = mc.kind == "P";
  if (is_p) mc.k = j.at("k");
  for (const auto& v : j.at("vertices")) {
    MCObject o;
    o.coord = v.at(is_p ? "lambda" : "eps").get<std::vector<int>>();
    o.r = v.at("r");
    o.qshift = v.at(is_p ? "H" : "G");
    o.t = v.at("t");
    o.is_w = is_p;
    if (is_p) o.g = v.at("grouping").get<std::vector<int>>();
    mc.objs.push_back(o);
  }
  for (const auto& e : j.at("edges")) {
    MCEdge ed;
    ed.from = e.at("from");
    ed.to = e.at("to");
    ed.dir = e.at("dir");
    ed.seg = e.at("seg");
    ed.weight = e.at("degree");
    ed.sign = e.at("sign");
    ed.word = parse_word(e.at("word").get<std::string>());
    mc.edges.push_back(ed);
  }
  mc.finalize();
  return mc;
}

CheckResult check_roundtrip(const MultiComplex& mc, int jobs) {
  CheckResult res;
  res.name = "roundtrip-" + mc.kind;
  MultiComplex back = import_json(export_json(mc));
  ++res.checked;
  if (back.objs.size() != mc.objs.size() || back.edges.size() != mc.edges.size()) {
    res.fail("object or edge count differs");
    return res;
  }
  for (size_t i = 0; i < mc.objs.size(); ++i) {
    const auto &x = mc.objs[i], &y = back.objs[i];
    ++res.checked;
    if (x.coord != y.coord || x.r != y.r || x.qshift != y.qshift || x.t != y.t || x.is_w != y.is_w || x.g != y.g)
      res.fail("object " + x.label());
  }
  EdgeMatrices em(mc, jobs), em2(back, jobs);
  for (size_t e = 0; e < mc.edges.size(); ++e) {
    ++res.checked;
    if (!(mc.edges[e].word == back.edges[e].word) || mc.edges[e].sign != back.edges[e].sign ||
        !(em.at(static_cast<int>(e)) == em2.at(static_cast<int>(e))))
      res.fail("edge " + std::to_string(e));
  }
  return res;
}

namespace {

const std::vector<std::string> kGroups = {"d2",        "grading", "adjoint",  "minimality",
                                          "relations", "counts",  "splitting", "roundtrip"};

struct Session {
  Params p;
  int k = 2;
  int jobs = 1;
  std::unique_ptr<MultiComplex> K, P;
  std::unique_ptr<EdgeMatrices> emK, emP;

  const MultiComplex& kc() {
    if (!K) {
      K = std::make_unique<MultiComplex>(build_K(p));
      emK = std::make_unique<EdgeMatrices>(*K, jobs);
    }
    return *K;
  }
  const MultiComplex& pc() {
    if (!P) {
      P = std::make_unique<MultiComplex>(build_P(p, k));
      emP = std::make_unique<EdgeMatrices>(*P, jobs);
    }
    return *P;
  }

  static CheckResult named(CheckResult r, const std::string& n) {
    r.name = n;
    return r;
  }

  std::vector<CheckResult> run(const std::string& g) {
    std::vector<CheckResult> rs;
    // Build before dereferencing the matrix caches below.
    kc();
    pc();
    if (g == "d2") {
      rs.push_back(named(check_d2(kc(), *emK, jobs), "d2-K"));
      rs.push_back(named(check_d2(pc(), *emP, jobs), "d2-P"));
    } else if (g == "grading") {
      rs.push_back(named(check_homogeneity(kc(), *emK), "grading-K"));
      rs.push_back(named(check_homogeneity(pc(), *emP), "grading-P"));
      rs.push_back(named(check_word_degrees(kc()), "word-degrees-K"));
      rs.push_back(named(check_word_degrees(pc()), "word-degrees-P"));
      rs.push_back(check_K_closed_form(kc()));
      rs.push_back(check_P_corners(p, k));
      rs.push_back(check_class_ranks(p));
    } else if (g == "adjoint") {
      rs.push_back(check_K_adjoint(kc()));
    } else if (g == "minimality") {
      rs.push_back(check_P_minimality(pc(), *emP));
    } else if (g == "relations") {
      rs.push_back(check_all_relations(p));
      rs.push_back(check_K_psi_vanishing(kc()));
      rs.push_back(check_P_factorization(pc()));
      rs.push_back(check_P_annihilation(pc()));
    } else if (g == "counts") {
      rs.push_back(check_P_counts(pc()));
    } else if (g == "splitting") {
      rs.push_back(check_P_splitting(pc(), p.b <= 2));
    } else if (g == "roundtrip") {
      rs.push_back(check_roundtrip(kc(), jobs));
      rs.push_back(check_roundtrip(pc(), jobs));
    }
    return rs;
  }
};

bool write_to(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << text;
  return true;
}

std::string text_report(const Params& p, int k, const std::vector<CheckResult>& rs) {
  std::ostringstream s;
  s << "params " << p.str() << " k " << k << "\n";
  for (const auto& r : rs) {
    s << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked";
    if (r.failed) s << ", " << r.failed << " failed";
    s << ")\n";
    for (const auto& f : r.failures) s << "    " << f << "\n";
  }
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ladder complexes: build, verify and reduce"};
  app.set_config("--config", "", "TOML-style file with any of the flags below");
  app.require_subcommand(1);

  Params p;
  int k = -1, power = 1, jobs = 1;
  std::string what = "all", format, outfile;
  for (auto [name, ptr] : {std::pair{"--a", &p.a}, {"--b", &p.b}, {"--c", &p.c}, {"--d", &p.d}})
    app.add_option(name, *ptr)->required();
  app.add_option("--k", k, "filtration level of the P complex");
  app.add_option("--power", power, "tensor power for reduce");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--what", what)->check(CLI::IsMember([] {
    auto v = kGroups;
    v.insert(v.begin(), "all");
    return v;
  }()));
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", outfile, "write to a file instead of standard output");

  auto* build_k = app.add_subcommand("build-k", "export the K complex as JSON");
  auto* build_p = app.add_subcommand("build-p", "export the P complex up to level k as JSON");
  auto* check = app.add_subcommand("check", "run verification checks");
  auto* euler_cmd = app.add_subcommand("euler", "class of the P complex in the Grothendieck group");
  auto* reduce = app.add_subcommand("reduce", "reduce a tensor power of the Rickard complex");
  auto* report = app.add_subcommand("report", "run all checks and emit a report");
  for (auto* s : {build_k, build_p, check, euler_cmd, reduce, report}) s->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (std::string why = p.validate(); !why.empty()) {
    err << "invalid parameters " << p.str() << ": " << why << "\n";
    return 2;
  }
  if (k < -1 || power < 0 || (k == -1 && build_p->parsed())) {
    err << (k == -1 ? "build-p needs --k\n" : "k must be >= 0\n");
    return 2;
  }

  try {
    if (build_k->parsed()) return write_to(outfile, export_json(build_K(p)), out, err) ? 0 : 2;
    if (build_p->parsed()) return write_to(outfile, export_json(build_P(p, k)), out, err) ? 0 : 2;

    if (euler_cmd->parsed()) {
      ClassVector chi = euler(build_P(p, k < 0 ? 1 : k));
      if (format == "json") {
        json j{{"schema", 1}, {"params", params_json(p)}, {"k", k < 0 ? 1 : k}, {"euler", chi.str()}};
        out << j.dump(2) << "\n";
      } else {
        out << chi.str() << "\n";
      }
      return 0;
    }

    if (check->parsed() || report->parsed()) {
      Session s;
      s.p = p;
      s.k = k < 0 ? 2 : k;
      s.jobs = jobs;
      std::vector<std::string> groups = kGroups;
      if (check->parsed() && what != "all") groups = {what};
      std::vector<CheckResult> rs;
      for (const auto& g : groups)
        for (auto& r : s.run(g)) rs.push_back(std::move(r));
      bool pass = std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.pass; });
      std::string fmt = format.empty() ? (report->parsed() ? "json" : "text") : format;
      std::string text;
      if (fmt == "json") {
        json j{{"schema", 1}, {"params", params_json(p)}, {"k", s.k}, {"what", check->parsed() ? what : "all"},
               {"pass", pass}};
        j["checks"] = json::array();
        for (const auto& r : rs) j["checks"].push_back(result_json(r));
        text = j.dump(2) + "\n";
      } else {
        text = text_report(p, s.k, rs) + (pass ? "all checks passed\n" : "some checks failed\n");
      }
      if (!write_to(outfile, text, out, err)) return 2;
      return pass ? 0 : 1;
    }

    if (reduce->parsed()) {
      if (p.c != p.b || p.d != p.a) {
        err << "reduce needs c == b and d == a\n";
        return 2;
      }
      if (p.b != 1) {
        // Only the class-level comparison is available here.
        ClassVector lhs = class_power(p, euler(rickard(p)), power);
        ClassVector rhs = euler(build_P(p, power));
        out << "euler(rickard^" << power << ") = " << lhs.str() << "\n";
        out << "euler(F^" << power << " P)   = " << rhs.str() << "\n";
        out << (lhs == rhs ? "PASS" : "FAIL") << " class-level comparison\n";
        return lhs == rhs ? 0 : 1;
      }
      ReductionReport rep = reduce_rickard_power(p, power);
      out << "objects before " << rep.objects_before << ", after splitting " << rep.objects_split
          << ", after elimination " << rep.reduced.objs.size() << "\n";
      out << "reduced objects (t, q, label):\n";
      for (size_t i = 0; i < rep.reduced.objs.size(); ++i)
        out << "  " << rep.reduced.objs[i].t << " " << rep.reduced.objs[i].shift << " "
            << rep.reduced.objs[i].label() << "\n";
      bool pass = true;
      for (const auto& r : rep.checks) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        pass = pass && r.pass;
      }
      return pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace lb
