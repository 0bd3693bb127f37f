#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "multireg/cli.hpp"
#include "multireg/groebner.hpp"
#include "multireg/io.hpp"
#include "multireg/resolution.hpp"
#include "multireg/truncation.hpp"

using namespace multireg;
using namespace testing_support;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "multireg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string path(const std::string& name) { return std::string(MULTIREG_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("cli: Betti table of the hyperelliptic truncation") {
  auto r = run({"betti", "--truncate-at", "2,1", path("hyperelliptic.mr")});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "F0  rank   9 : S(-2,-1)^9\n"));
  CHECK(contains(r.out, "F1  rank  19 : S(-3,-1)^7 S(-2,-2)^10 S(-2,-3)^2\n"));
  CHECK(contains(r.out, "F2  rank  12 : S(-3,-2)^6 S(-3,-3)^3 S(-2,-3)^3\n"));
  CHECK(contains(r.out, "F3  rank   2 : S(-3,-3)^2\n"));

  auto j = run({"betti", "--truncate-at", "2,1", path("hyperelliptic.mr"), "--format", "json"});
  REQUIRE(j.code == 0);
  auto js = nlohmann::json::parse(j.out);
  CHECK(js["schema"] == "multireg.betti/1");
  CHECK(js["rows"].size() == 4);
  CHECK(js["rows"][3]["twists"][0]["degree"] == nlohmann::json::array({3, 3}));
  CHECK(js["rows"][3]["twists"][0]["multiplicity"] == 2);
}

TEST_CASE("cli: regularity of the hyperelliptic curve") {
  auto r = run({"regularity", "--box", "0,0:9,9", path("hyperelliptic.mr")});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "minimal generators (3): (1,5) (2,2) (4,1)\n"));
  CHECK_FALSE(contains(r.out, "warning"));

  auto l = run({"linear-truncations", "--box", "0,0:9,9", path("hyperelliptic.mr"), "--format", "json"});
  REQUIRE(l.code == 0);
  auto js = nlohmann::json::parse(l.out);
  CHECK(js["schema"] == "multireg.region/1");
  CHECK(js["generators"] == nlohmann::json::parse("[[1,5],[2,2],[5,1]]"));

  auto m = run({"regularity", "--mode", "L", "--box", "0,0:9,9", path("hyperelliptic.mr"), "--format", "json"});
  CHECK(nlohmann::json::parse(m.out)["generators"] == js["generators"]);

  auto b = run({"betti-bounds", path("hyperelliptic.mr"), "--format", "json"});
  js = nlohmann::json::parse(b.out);
  CHECK(js["L"] == nlohmann::json::parse("[[2,7]]"));
  CHECK(js["Q"] == nlohmann::json::parse("[[2,7]]"));
}

TEST_CASE("cli: regions") {
  auto r = run({"region", "Q", "2", "1,2"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "Q_2(1,2)\nminimal generators (2): (-1,1) (0,0)\n"));
  auto l = run({"region", "L", "1", "1,2", "--format", "json"});
  CHECK(nlohmann::json::parse(l.out)["generators"] == nlohmann::json::parse("[[0,2],[1,1]]"));
  auto s = run({"region", "Q", "2", "1,2", "--format", "svg"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("<svg", 0) == 0);
  CHECK(contains(s.out, "</svg>"));
  // Three coordinates: no picture, the list instead.
  auto t = run({"region", "Q", "1", "1,1,1", "--format", "svg"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "minimal generators (1): (0,0,0)"));
  CHECK(run({"region", "P", "1", "1,2"}).code == 2);
}

TEST_CASE("cli: classification, truncation and complete intersections") {
  auto c = run({"classify", "--truncate-at", "1,0", path("not_linear.mr")});
  REQUIRE(c.code == 0);
  CHECK(contains(c.out, "verdict: quasilinear (not linear)"));
  CHECK(contains(c.out, "(-2,-1) not in L_1(-1,0)"));

  auto t = run({"truncate", "--truncate-at", "1,0", path("not_linear.mr")});
  REQUIRE(t.code == 0);
  ModuleInput T = parse_input(t.out);
  CHECK(betti_numbers(T.module) == betti_numbers(truncate_module(load("not_linear.mr").module, D({1, 0}))));

  auto ci = run({"ci-regularity", path("ci.mr")});
  REQUIRE(ci.code == 0);
  CHECK(contains(ci.out, "minimal generators (2): (0,2) (1,1)"));
  auto deg = run({"ci-regularity", "--degrees", "1,1;1,2", "--format", "json"});
  CHECK(nlohmann::json::parse(deg.out)["generators"] == nlohmann::json::parse("[[0,2],[1,1]]"));
  CHECK(run({"ci-regularity", "--degrees", "1,0"}).code == 2);
}

TEST_CASE("cli: saturation round trip") {
  auto s = run({"saturate", path("hyperelliptic_raw.mr")});
  REQUIRE(s.code == 0);
  ModuleInput sat = parse_input(s.out);
  ModuleInput expect = load("hyperelliptic.mr");
  CHECK(same_submodule(ideal_matrix(sat.ideal, sat.ring), ideal_matrix(expect.ideal, expect.ring), sat.ring));
  // A saturated input prints back unchanged.
  auto again = run({"saturate", path("hyperelliptic.mr")});
  CHECK(parse_input(again.out).ideal == expect.ideal);
}

TEST_CASE("cli: parse and print round trip on the data files") {
  for (const char* name : {"not_linear.mr", "same_betti.mr", "hyperelliptic.mr", "ci.mr", "two_points.mr", "irrelevant_p1p2.mr"}) {
    const ModuleInput a = load(name);
    const std::string printed = print_input(a);
    const ModuleInput b = parse_input(printed);
    CHECK(print_input(b) == printed);
  }
}

TEST_CASE("cli: exit codes and errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"betti", path("no_such_file.mr")}).code == 2);
  CHECK(run({"betti", "--format", "xml", path("ci.mr")}).code == 2);
  CHECK(run({"betti", "--truncate-at", "1,2,3", path("ci.mr")}).code == 2);
  CHECK(run({"regularity", "--box", "3,3:0,0", path("ci.mr")}).code == 2);
  CHECK(run({"betti", "--format", "svg", path("ci.mr")}).code == 2);

  auto ns = run({"regularity", path("irrelevant_p1p2.mr")});
  CHECK(ns.code == 1);
  CHECK(contains(ns.err, "B-torsion"));
  auto js = run({"regularity", path("irrelevant_p1p2.mr"), "--format", "json"});
  CHECK(js.code == 1);
  auto e = nlohmann::json::parse(js.out);
  CHECK(e["schema"] == "multireg.error/1");
  CHECK(e["kind"] == "not_saturated");

  const std::string bad = std::string(MULTIREG_TEST_DATA) + "/../bad_input.tmp";
  std::ofstream(bad) << "ring p=32003 n=[1,1]\nideal x0*y1 - x1\n";
  auto p = run({"betti", bad, "--format", "json"});
  std::remove(bad.c_str());
  CHECK(p.code == 2);
  CHECK(nlohmann::json::parse(p.out)["kind"] == "usage");

  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "regularity"));
}

TEST_CASE("cli: output is deterministic") {
  const std::vector<std::vector<std::string>> cmds = {
      {"betti", path("two_points.mr")},
      {"regularity", path("two_points.mr"), "--box", "0,0,0:2,2,2"},
      {"regularity", path("hyperelliptic.mr"), "--threads", "1"},
      {"regularity", path("hyperelliptic.mr"), "--threads", "4"},
      {"cohomology", path("not_linear.mr"), "--box", "-2,-2:2,2", "--regular-at", "1,0"},
  };
  std::vector<std::string> first;
  for (const auto& c : cmds) first.push_back(run(c).out);
  for (std::size_t k = 0; k < cmds.size(); ++k) CHECK(run(cmds[k]).out == first[k]);
  CHECK(first[2] == first[3]);
  CHECK(contains(first[4], "M is (1,0)-regular"));
}

TEST_CASE("cli: cohomology json") {
  auto r = run({"cohomology", path("not_linear.mr"), "--box", "-2,-2:2,2", "--regular-at", "0,1", "--format", "json"});
  REQUIRE(r.code == 0);
  auto js = nlohmann::json::parse(r.out);
  CHECK(js["schema"] == "multireg.cohomology/1");
  CHECK(js["stabilized"] == true);
  CHECK(js["regular_at"]["regular"] == false);
  // Too small a box for the corners of d-regularity.
  CHECK(run({"cohomology", path("not_linear.mr"), "--box", "0,0:1,1", "--regular-at", "0,0"}).code == 1);
}
