#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "polyspace/cli.hpp"
#include "testsupport.hpp"

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = polyspace::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basic invariant commands") {
  Run r = cli({"betti", "--m", "1,1,1,1,1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "b: 1 5 1\n");
  CHECK(r.err.empty());

  r = cli({"poincare", "--m", "3,1,1,1,1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1 + q + q^2\n");

  r = cli({"validate", "--m", "1,1,1,3/2"});
  CHECK(r.rc == 0);
  CHECK(r.out == "ok n=4 total=9/2\n");
}

TEST_CASE("walls exit with code 3 and name the wall") {
  Run r = cli({"betti", "--m", "1,1,1,1"});
  CHECK(r.rc == 3);
  CHECK(r.out.empty());
  CHECK(r.err.find("{1 2}") != std::string::npos);
}

TEST_CASE("invalid weight vectors exit with code 2") {
  for (const char* bad : {"1,1,5", "1,1,x", "0,1,1", "1,1"}) {
    Run r = cli({"validate", "--m", bad});
    CHECK(r.rc == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
}

TEST_CASE("argument errors exit with code 4") {
  CHECK(cli({"betti"}).rc == 4);
  CHECK(cli({"betti", "--m", "1,1,1,2", "--file", "x"}).rc == 4);
  CHECK(cli({"frobnicate"}).rc == 4);
  CHECK(cli({"betti", "--nope", "--m", "1,1,1,2"}).rc == 4);
  CHECK(cli({"intersect", "--m", "1,1,1,1,1", "--J", "1"}).rc == 4);
  CHECK(cli({"intersect", "--m", "1,1,1,1,1", "--p", "1", "--oracle", "guess"})
            .rc == 4);
  CHECK(cli({"ample", "--m", "1,1,1,1,1"}).rc == 4);
  CHECK(cli({"evaluate", "p", "--m", "1,1,1,2"}).rc == 4);
  CHECK(cli({"betti", "--m", "1,1,1,2", "--threads", "0"}).rc == 4);
}

TEST_CASE("intersection numbers") {
  CHECK(cli({"intersect", "--m", "1,1,1,1,1", "--J", "1,2"}).out == "1\n");
  CHECK(cli({"intersect", "--m", "1,1,1,1,1", "--p", "1"}).out == "-3\n");
  CHECK(cli({"intersect", "--m", "1,1,1,1,1", "--p", "1", "--oracle",
             "cycles"}).out == "-3\n");
  Run both = cli({"intersect", "--m", "1,1,1,1,1", "--p", "1", "--oracle",
                  "both"});
  CHECK(both.rc == 0);
  CHECK(both.out == "-3\n");

  Run j = cli({"intersect", "--m", "1,1,1,1,1", "--J", "1,2", "--json"});
  CHECK(j.rc == 0);
  nlohmann::json obj = nlohmann::json::parse(j.out);
  CHECK(obj["value"] == "1");
  CHECK(obj["J"] == nlohmann::json::array({1, 2}));
  CHECK(obj["p"] == 0);
}

TEST_CASE("evaluating ring elements") {
  CHECK(cli({"evaluate", "l1 + l2 + l3 + l4", "--m", "1,1,1,2"}).out == "2\n");
  CHECK(cli({"evaluate", "p", "--m", "1,1,1,1,1"}).out == "-3\n");
  CHECK(cli({"evaluate", "1/2*l1 + 1/2*l2", "--m", "1,1,1,2"}).out == "1\n");
}

TEST_CASE("ampleness and Fano verdicts") {
  Run r = cli({"ample", "--m", "1,1,1,1,1,2", "--coeffs", "1,1,1,1,1,1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "not ample: STAR center={1 2 3} parts={1 2 3|4|5|6}\n");
  CHECK(cli({"ample", "--m", "1,1,1,1,1", "--coeffs", "1,1,1,1,1"}).out ==
        "ample\n");

  CHECK(cli({"fano", "--m", "1,1,1,1,1"}).out == "fano\n");
  CHECK(cli({"fano", "--m", "1,1,1,1,1,2"}).out ==
        "not fano: STAR center={1 2 3} parts={1 2 3|4|5|6}; "
        "maximal {1 2 3} dim=1\n");

  Run j = cli({"fano", "--m", "1,1,1,1,1,2", "--json"});
  nlohmann::json obj = nlohmann::json::parse(j.out);
  CHECK(obj["fano"] == false);
  CHECK(obj["m"] == nlohmann::json::array({"1", "1", "1", "1", "1", "2"}));
  CHECK(obj["witnesses"][0]["center"] == nlohmann::json::array({1, 2, 3}));
}

TEST_CASE("degeneration listings") {
  CHECK(cli({"maximal", "--m", "1,1,1,2"}).out ==
        "{1 2} dim=0\n{1 3} dim=0\n{2 3} dim=0\n{4} dim=1\n");

  Run q = cli({"quadrangles", "--m", "1,1,1,1,1"});
  CHECK(q.rc == 0);
  int lines = 0;
  for (char c : q.out)
    if (c == '\n') ++lines;
  CHECK(lines == 10);
  CHECK(q.out.find("STAR center={4 5} parts={1|2|3|4 5}") !=
        std::string::npos);
}

TEST_CASE("chamber signatures are scale invariant on stdout") {
  Run a = cli({"chamber", "--m", "1,1,1,1,1"});
  Run b = cli({"chamber", "--m", "2,2,2,2,2"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n=5 short=", 0) == 0);
}

TEST_CASE("ring presentation listing") {
  Run r = cli({"relations", "--m", "1,1,1,2"});
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("{1 2 3}: l1*l2 + l1*l3 + l2*l3 + p\n", 0) == 0);
  CHECK(r.out.find("{1 4}: l1 + l4\n") != std::string::npos);
}

TEST_CASE("weight vector files") {
  const char* path = "cli_test_weights.txt";
  {
    std::ofstream f(path);
    f << "# comment\n1,1,1,2\n\n1,1,1,1,1\n";
  }
  Run r = cli({"betti", "--file", path});
  CHECK(r.rc == 0);
  CHECK(r.out == "1,1,1,2:\nb: 1 1\n1,1,1,1,1:\nb: 1 5 1\n");

  Run j = cli({"betti", "--file", path, "--json"});
  CHECK(j.rc == 0);
  std::istringstream lines(j.out);
  std::string line;
  std::vector<nlohmann::json> objs;
  while (std::getline(lines, line)) objs.push_back(nlohmann::json::parse(line));
  REQUIRE(objs.size() == 2);
  CHECK(objs[0]["betti"] == nlohmann::json::array({"1", "1"}));
  CHECK(objs[1]["betti"] == nlohmann::json::array({"1", "5", "1"}));
  CHECK(objs[0].contains("m"));

  {
    std::ofstream f(path);
    f << "1,1,1,1\n1,1,1,2\n";
  }
  Run wall = cli({"betti", "--file", path});
  CHECK(wall.rc == 3);
  CHECK(wall.err.rfind("line 1:", 0) == 0);
  std::remove(path);

  CHECK(cli({"betti", "--file", "does_not_exist.txt"}).rc == 4);
}

TEST_CASE("thread count flag") {
  Run r = cli({"betti", "--m", "1,1,1,1,1,1,1", "--threads", "4"});
  CHECK(r.rc == 0);
  CHECK(r.out == cli({"betti", "--m", "1,1,1,1,1,1,1"}).out);
}
