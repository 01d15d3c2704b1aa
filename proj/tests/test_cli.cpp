#include <gtest/gtest.h>

#include <sstream>

#include "lb/cli.hpp"
#include "lb/kcomplex.hpp"
#include "lb/pcomplex.hpp"

using namespace lb;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

}  // namespace

TEST(Cli, EulerExample) {
  Out r = call({"euler", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[W0] + (-q + q^3 - q^5)[W1]\n");
}

TEST(Cli, InvalidParameters) {
  EXPECT_EQ(call({"build-k", "--a", "1", "--b", "2", "--c", "2", "--d", "1"}).code, 2);
  EXPECT_EQ(call({"build-k", "--a", "1", "--b", "1", "--c", "1", "--d", "2"}).code, 2);
  EXPECT_EQ(call({"build-p", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--k", "-1"}).code, 2);
  EXPECT_EQ(call({"check", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--what", "bogus"}).code, 2);
}

TEST(Cli, CheckAllPasses) {
  Out r = call({"check", "--a", "2", "--b", "2", "--c", "2", "--d", "2", "--what", "all", "--k", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  std::vector<std::string> args = {"report", "--a", "2", "--b", "1", "--c", "2", "--d", "1", "--k", "3"};
  Out a = call(args);
  args.insert(args.end(), {"--jobs", "3"});
  Out b = call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"schema\": 1"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  for (Params p : {Params{1, 1, 1, 1}, Params{2, 2, 2, 2}, Params{3, 2, 3, 2}}) {
    EXPECT_TRUE(check_roundtrip(build_K(p), 1).pass);
    EXPECT_TRUE(check_roundtrip(build_P(p, 3), 1).pass);
    MultiComplex back = import_json(export_json(build_P(p, 2)));
    EXPECT_EQ(export_json(back), export_json(build_P(p, 2)));
  }
}

TEST(Cli, ExportShape) {
  Out r = call({"build-p", "--a", "2", "--b", "2", "--c", "2", "--d", "2", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"object_count\": \"7\""), std::string::npos);
  EXPECT_NE(r.out.find("\"grouping\""), std::string::npos);
}

TEST(Cli, Reduce) {
  Out r = call({"reduce", "--a", "1", "--b", "1", "--c", "1", "--d", "1", "--power", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("after elimination 3"), std::string::npos);
  EXPECT_NE(r.out.find("PASS compare"), std::string::npos);
}
