#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "wogsym/cli.hpp"
#include "wogsym/exec.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = wogsym::cli::run(args, out, err);
  wogsym::set_default_exec(wogsym::Exec::Parallel);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(WOGSYM_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::string(::testing::TempDir()) + name;
  std::ofstream(path) << contents;
  return path;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, CompareListsWitness) {
  auto r = run({"compare", "--n", "2", data("triangle_heavy_middle.wog")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "witnesses: t1*t2^2*t3")) << r.out;
  EXPECT_TRUE(has_line(r.out, "I^2 == I^(2): no")) << r.out;
}

TEST(Cli, PolyVerticesOnIdeal) {
  auto path = temp_file("four_cycle.ideal", "t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2\n");
  auto r = run({"poly-vertices", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "vertices: 2\n  (0,1/2,0,1/2)\n  (1,0,1,0)\n");
}

TEST(Cli, PolyVerticesOnConstraintBlock) {
  auto r = run({"poly-vertices", "--normaliz-format", data("four_cycle_constraints.in")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("VerticesOfPolyhedron\n0 1/2 0 1/2\n1 0 1 0\n"), std::string::npos) << r.out;
}

TEST(Cli, SymbolicFlags) {
  auto min = run({"symbolic", "--n", "1", "--min", data("heavy_directed_triangle.wog")});
  auto ass = run({"symbolic", "--n", "1", "--ass", data("heavy_directed_triangle.wog")});
  EXPECT_EQ(min.code, 0);
  EXPECT_EQ(ass.out, "I^<1>: (t1^2*t3, t1*t2^2, t2*t3^2)\n");
  EXPECT_NE(min.out.find("I^(1): "), std::string::npos);
  EXPECT_NE(min.out, "I^(1): (t1^2*t3, t1*t2^2, t2*t3^2)\n");
  EXPECT_EQ(run({"symbolic", "--min", "--ass", data("heavy_directed_triangle.wog")}).code, 2);
}

TEST(Cli, DualFlag) {
  auto r = run({"decompose", "--dual", data("four_cycle_heavy_sinks.wog")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "ideal: (t1*t3, t2^2*t4^2)")) << r.out;
  EXPECT_TRUE(has_line(r.out, "components: 4")) << r.out;
}

TEST(Cli, NormalizesSources) {
  auto path = temp_file("heavy_source.wog", "vertices 2\nweights 5 2\nedge 1 2\n");
  auto r = run({"wog-ideal", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "I(D): (t1*t2^2)\n");
  EXPECT_NE(r.err.find("normalized"), std::string::npos);
}

TEST(Cli, JsonMirror) {
  auto r = run({"ass", "--json", data("path_heavy_middle.wog")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"embedded\""), std::string::npos);
  EXPECT_LT(r.out.find("\"associated\""), r.out.find("\"minimal\""));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"decompose", temp_file("bad.ideal", "t1*q2\n")}).code, 2);
  EXPECT_EQ(run({"wog-ideal", temp_file("loop.wog", "vertices 2\nedge 1 1\n")}).code, 2);
  EXPECT_EQ(run({"decompose", data("does_not_exist.ideal")}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"symbolic", "--n", "0", data("path_heavy_middle.wog")}).code, 2);
  EXPECT_EQ(run({"wog-covers", "--max-covers", "5", data("directed_7_cycle.wog")}).code, 3);
  EXPECT_EQ(run({"poly-vertices", "--max-vars", "3", data("four_cycle_dual.ideal")}).code, 3);
  EXPECT_EQ(run({"wog-classify", temp_file("plain.ideal", "t1*t2\n")}).code, 2);
  auto r = run({"wog-covers", "--max-covers", "5", data("directed_7_cycle.wog")});
  EXPECT_NE(r.err.find("--max-covers"), std::string::npos);
}

TEST(Cli, ExamplesPass) {
  auto r = run({"examples"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  for (const char* cmd : {"wog-covers", "poly-vertices", "ntf", "polyhedral-check", "wog-classify"}) {
    auto serial = run({cmd, "--serial", data("four_cycle_heavy_sinks.wog")});
    auto one = run({cmd, "--threads", "1", data("four_cycle_heavy_sinks.wog")});
    auto many = run({cmd, "--threads", "4", data("four_cycle_heavy_sinks.wog")});
    EXPECT_EQ(serial.code, 0) << cmd << serial.err;
    EXPECT_EQ(serial.out, one.out) << cmd;
    EXPECT_EQ(serial.out, many.out) << cmd;
  }
}
