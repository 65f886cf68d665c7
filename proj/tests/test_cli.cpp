#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "figure_cases.hpp"
#include "serreku/cli.hpp"

using namespace serreku;

namespace {

struct CliRun {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ChiGram) {
  CliRun r = run({"chi", "--left", "@b1", "--right", "@b2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-3\n");
  r = run({"--json", "chi", "--left", "@b2", "--right", "@b2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["schema"], "1");
  EXPECT_EQ(r.j()["command"], "chi");
  EXPECT_EQ(r.j()["chi"], "-5");
}

TEST(Cli, ClassJsonRoundTrip) {
  CliRun r = run({"--json", "class", "--of", "@U"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string literal = r.j()["class"].dump();
  CliRun chi = run({"chi", "--left", literal, "--right", "@U"});
  EXPECT_EQ(chi.code, 0) << chi.err;
  CliRun ref = run({"chi", "--left", "@U", "--right", "@U"});
  EXPECT_EQ(chi.out, ref.out);
  EXPECT_EQ(ref.out, "1\n");
  CliRun comma = run({"chi", "--left", "2,-1,1/10,1/30", "--right", "@U"});
  EXPECT_EQ(comma.out, ref.out);
}

TEST(Cli, ClassOfCurve) {
  CliRun r = run({"--json", "class", "--curve", "3,0", "--integrated"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["integrated_ch3"], "1/2");
  EXPECT_EQ(run({"class", "--curve", "x,0"}).code, 2);
  EXPECT_EQ(run({"class"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"chi", "--left", "@nosuch", "--right", "@b2"}).code, 2);
  EXPECT_EQ(run({"chi", "--left", "1,2", "--right", "@b2"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--genus", "7", "chi", "--left", "@O", "--right", "@O"}).code, 2);
  EXPECT_EQ(run({"region", "--s", "1/0", "--q", "0", "--region", "2"}).code, 2);
  EXPECT_EQ(run({"region", "--s", "0", "--q", "0", "--region", "4"}).code, 2);
  EXPECT_EQ(run({"mutate", "--functor", "XY", "--class", "@O"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  CliRun j = run({"--json", "chi", "--left", "@nosuch", "--right", "@b2"});
  EXPECT_EQ(j.j()["error"]["code"], "Usage");
}

TEST(Cli, DomainErrors) {
  CliRun r = run({"region", "--s", "0", "--q", "-1", "--region", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("below Li boundary"), std::string::npos);
  CliRun j = run({"--json", "coords", "--class", "@O"});
  EXPECT_EQ(j.code, 1);
  EXPECT_EQ(j.j()["error"]["code"], "NotInLattice");
  EXPECT_EQ(run({"--genus", "8", "mutate", "--functor", "LU", "--class", "1,0,0,0"}).code, 1);
}

TEST(Cli, RegionInside) {
  CliRun r = run({"--json", "region", "--s", "-7/10", "--q", "9/40", "--region", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.j()["inside"], true);
}

TEST(Cli, MutateAndCoords) {
  CliRun r = run({"--json", "mutate", "--functor", "LO", "--class", "@d1"});
  ASSERT_EQ(r.code, 0) << r.err;
  CliRun c1 = run({"--json", "class", "--of", "@c1"});
  EXPECT_EQ(r.j()["class"], c1.j()["class"]);
  CliRun s = run({"--json", "mutate", "--functor", "serre", "--class", "@d2"});
  CliRun d2 = run({"--json", "class", "--of", "@d2"});
  EXPECT_EQ(s.j()["class"], d2.j()["class"]);
  CliRun co = run({"--json", "coords", "--class", "-1,1,-3/10,-1/30", "--lattice", "1"});
  ASSERT_EQ(co.code, 0) << co.err;
  EXPECT_EQ(co.j()["a"], "-1");
  EXPECT_EQ(co.j()["b"], "1");
}

TEST(Cli, Ell) {
  CliRun r = run({"--json", "ell"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["max"], "-1");
}

TEST(Cli, SerreCheck) {
  CliRun r = run({"--json", "serre-check", "--p3", "1/4,1/50", "--p2", "-2/5,1/40", "--p1", "-51/100,57/1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["passes"], true);
  EXPECT_EQ(r.j()["steps"].size(), 5u);
  EXPECT_EQ(r.j()["composite"]["det"], "1");
  CliRun bad = run({"serre-check", "--p3", "1/4,1/50", "--p2", "-2/5,1/40", "--p1", "-51/100,2651/50000"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("step 2"), std::string::npos);
}

TEST(Cli, OrbitSolve) {
  CliRun r = run({"--json", "orbit-solve", "--lattice-a", "3", "--ab-a", "1/100,1/40000", "--lattice-b", "2", "--ab-b",
               "-1/100,1/40000", "--mu-a", "0", "--mu-b", "0", "--phi", "LO"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.j()["det"], "1");
  CliRun same = run({"--json", "orbit-solve", "--region", "1", "--pa", "-7/10,9/40", "--pb", "-3/5,3/25"});
  ASSERT_EQ(same.code, 0) << same.err;
  CliRun outside = run({"orbit-solve", "--region", "1", "--pa", "-7/10,9/40", "--pb", "-3/5,1/10"});
  EXPECT_EQ(outside.code, 1);
  EXPECT_EQ(run({"orbit-solve", "--pa", "0,1"}).code, 2);
}

TEST(Cli, SlopeWindowWallCharge) {
  CliRun s = run({"--json", "slope", "--s", "-7/10", "--q", "9/40", "--class", "@O", "--class", "@U"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.j()["order"][0], "@U");
  EXPECT_EQ(run({"window", "--s", "-7/10", "--q", "9/40", "--region", "1"}).code, 0);
  EXPECT_EQ(run({"window", "--s", "0", "--q", "-1", "--region", "1"}).code, 1);
  EXPECT_EQ(run({"wall", "--s", "0", "--q", "1/8", "--class", "@U"}).code, 0);
  CliRun c = run({"--json", "charge", "--s", "-1/2", "--q", "1/20", "--basis", "b"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.j()["det"], "5");
}

TEST(Cli, FigureOut) {
  auto path = std::filesystem::temp_directory_path() / "serreku_cli_regions.svg";
  std::filesystem::remove(path);
  CliRun r = run({"figure", "--kind", "regions", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  auto var = make_variety(6);
  EXPECT_EQ(ss.str(), render(FigureSpec{RegionsFigure{}, default_window(RegionsFigure{})}, var));
  std::filesystem::remove(path);
  CliRun so = run({"figure", "--kind", "wall", "--s", "0", "--q", "1/8", "--class", "@U"});
  EXPECT_EQ(so.code, 0);
  EXPECT_EQ(so.out, render(figcase::golden_cases(var)[2].spec, var));
  EXPECT_EQ(run({"figure", "--kind", "wall"}).code, 2);
  EXPECT_EQ(run({"figure", "--kind", "regions", "--window", "1,1,0,1"}).code, 1);
}

TEST(Cli, ConfigFile) {
  auto path = std::filesystem::temp_directory_path() / "serreku_cfg.json";
  std::ofstream(path) << R"({"genus": 10, "todd": ["1", "1/2", "1/3", "1/7"], "e2_ch3": "1/9"})";
  CliRun r = run({"--config", path.string(), "class", "--of", "@E2"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ofstream(path) << R"({"genus": 10, "todd": ["2", "1/2", "1/3", "1/7"]})";
  EXPECT_EQ(run({"--config", path.string(), "class", "--of", "@O"}).code, 2);
  std::filesystem::remove(path);
}
