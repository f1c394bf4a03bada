#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "vact/edge_list.hpp"
#include "vact/error.hpp"
#include "vact/families.hpp"
#include "vact/report.hpp"
#include "vact/verify.hpp"

using namespace vact;

namespace {

std::string data(const std::string &name) {
  return std::string(VACT_TEST_DATA_DIR) + "/" + name + ".txt";
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse the Figure-1 edge list") {
  const Graph g = parse_edge_list("5 5\n3 4\n2 3\n2 4\n2 5\n1 5");
  CHECK(g == fixtures::fig1());
  CHECK(parse_edge_list("1 0") == Graph(1));
  CHECK(parse_edge_list("# comment\n\n3 1\n  # another\n1 2\n") == new_graph(3, {{1, 2}}));
  CHECK(parse_edge_list("3 1\r\n1\t3\r\n") == new_graph(3, {{1, 3}}));
}

TEST_CASE("edge list diagnostics carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 4"), doctest::Contains("line 2"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 4"), doctest::Contains("out of range"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n# c\n2 2"), doctest::Contains("line 3: self-loop"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_edge_list("three 1\n"), doctest::Contains("line 1"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n1 2\n"), doctest::Contains("expected 2 edges"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 2\n2 3\n"), doctest::Contains("line 3"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 2 3\n"), doctest::Contains("line 2"),
                       InvalidInput);
  CHECK_THROWS_AS(parse_edge_list(""), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("65 0"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("3 4"), InvalidInput);
}

TEST_CASE("emit and parse round-trip") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, trial % 20, 0.3);
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
  }
  CHECK(emit_edge_list(fixtures::fig1()) == "5 5\n1 5\n2 3\n2 4\n2 5\n3 4\n");
}

TEST_CASE("data files match the fixtures") {
  CHECK(read_edge_list_file(data("fig1")) == fixtures::fig1());
  CHECK(read_edge_list_file(data("table1")) == fixtures::table1());
  CHECK(read_edge_list_file(data("table2")) == fixtures::table2());
  CHECK(read_edge_list_file(data("example4_a")) == fixtures::example4_a());
  CHECK(read_edge_list_file(data("example4_b")) == fixtures::example4_b());
  CHECK(read_edge_list_file(data("example4_c")) == fixtures::example4_c());
  CHECK(read_edge_list_file(data("fig14")) == fixtures::fig14());
  CHECK(read_edge_list_file(data("fig15")) == fixtures::fig15());
  CHECK(read_edge_list_file(data("fig8_tree")) == fixtures::fig8_tree());
  CHECK(read_edge_list_file(data("fig9_host")) == fixtures::fig9_host());
  CHECK(read_edge_list_file(data("overlap_tree")) == fixtures::overlap_tree());
  CHECK(read_edge_list_file(data("overlap_host")) == fixtures::overlap_host());
  CHECK_THROWS_WITH_AS(read_edge_list_file("/nonexistent/graph.txt"),
                       doctest::Contains("cannot open"), InvalidInput);
}

TEST_CASE("cover command") {
  const Outcome o = invoke({"cover", data("fig1")});
  REQUIRE(o.code == 0);
  const Json j = o.json();
  CHECK(j["n"] == 5);
  bool seen = false;
  for (const Json &e : j["entries"]) {
    if (e["mis"] == Json::array({3, 5})) {
      CHECK(e["int"] == Json::array({5}));
      CHECK(e["ext"] == Json::array({4}));
      CHECK(e["lower"] == Json::array({3}));
      CHECK(e["upper"] == Json::array({3, 4, 5}));
      seen = true;
    }
  }
  CHECK(seen);
  const std::vector<std::string> keys{"n", "entries", "is_partition", "repeated_subsets",
                                      "witness"};
  std::vector<std::string> actual;
  for (auto it = j.begin(); it != j.end(); ++it) actual.push_back(it.key());
  CHECK(actual == keys);

  const Json aug = invoke({"cover", "--augment", data("fig1")}).json();
  CHECK(aug["entries"][0].contains("larger_independent"));
  CHECK(invoke({"cover", "--reversed", data("fig1")}).json()["mode"] == "reversed");
}

TEST_CASE("partition-check command") {
  const Outcome o = invoke({"partition-check", data("table1")});
  REQUIRE(o.code == 0);
  const Json j = o.json();
  CHECK(j["is_partition"] == false);
  CHECK(j["repeated_subsets"] == 2);
  CHECK(j["repeated"] == Json::array({Json::array({4}), Json::array({4, 5})}));
  CHECK(j["witness"]["subset"] == Json::array({4}));
  CHECK(invoke({"partition-check", data("table2")}).json()["is_partition"] == true);
}

TEST_CASE("complete-sets command") {
  const Json j = invoke({"complete-sets", data("fig14")}).json();
  CHECK(j["complete"] == Json::array({1, 4, 5, 6, 8, 10}));
  CHECK(j["obstructions"][0]["kind"] == "complete_set_exists");
  CHECK(j["is_partition"] == false);
}

TEST_CASE("generate and predict commands") {
  const Outcome gen = invoke({"generate", "lex", "--n", "5", "--m", "6"});
  REQUIRE(gen.code == 0);
  CHECK(parse_edge_list(gen.out) == parse_edge_list("5 6\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n"));

  const Outcome pend = invoke({"generate", "pendant", "--sizes", "1,0,2"});
  CHECK(parse_edge_list(pend.out).order() == 6);

  const Outcome pred = invoke({"predict", "colex", "--n", "6", "--m", "7"});
  REQUIRE(pred.code == 0);
  const Json j = pred.json();
  CHECK(j["verified"] == true);
  CHECK(j["entries"].size() == 4);
  CHECK(j["family"] == "colex");

  CHECK(invoke({"predict", "tree", "--n", "3"}).code == cli::kExitInvalidInput);
  CHECK(invoke({"generate", "lex", "--n", "3", "--m", "9"}).code == cli::kExitInvalidInput);
}

TEST_CASE("generate writes to --out") {
  const auto path = std::filesystem::temp_directory_path() / "vact_generate_kn4.txt";
  const Outcome o = invoke({"generate", "kn", "--n", "4", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(read_edge_list_file(path.string()) == complete_graph(4));
  std::filesystem::remove(path);
}

TEST_CASE("verify command") {
  const Outcome lex = invoke({"verify", "--family", "lex", "--n", "5", "--m", "6"});
  CHECK(lex.code == 0);
  const Json j = lex.json();
  CHECK(j["passed"] == true);
  bool family_checked = false;
  for (const Json &c : j["checks"]) family_checked |= c["name"] == "family_prediction";
  CHECK(family_checked);

  const Outcome random = invoke({"verify", "--random-n", "12", "--p", "0.3", "--seed", "42"});
  CHECK(random.code == 0);
  CHECK(random.json()["random"]["seed"] == 42);
  CHECK(invoke({"verify", data("table1")}).code == 0);
  CHECK(invoke({"verify", "--family", "pendant", "--sizes", "0,1"}).code == 0);
  CHECK(invoke({"verify"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", data("fig1"), "--random-n", "4"}).code == cli::kExitUsage);
}

TEST_CASE("pruned command") {
  const Outcome ok =
      invoke({"pruned", "--tree", data("fig8_tree"), "--host", data("fig9_host"), "--root", "1"});
  CHECK(ok.code == 0);
  const Json j = ok.json();
  CHECK(j["is_partition"] == true);
  CHECK(j["entries"].size() == 9);
  CHECK(j["leaf_sets"]["differ"] == true);
  CHECK(j["bijection"]["is_bijection"] == true);
  CHECK(j["relabelling"].is_null());

  // Host leaves: the report is produced but the bijection claim fails.
  const Outcome host = invoke({"pruned", "--tree", data("fig8_tree"), "--host",
                               data("fig9_host"), "--leaf-mode", "host"});
  CHECK(host.code == cli::kExitVerificationFailed);
  CHECK(host.json()["bijection"]["is_bijection"] == false);

  const Outcome overlap = invoke({"pruned", "--tree", data("overlap_tree"), "--host",
                                  data("overlap_host"), "--root", "1"});
  CHECK(overlap.code == cli::kExitVerificationFailed);
  CHECK(overlap.json()["is_partition"] == false);

  CHECK(invoke({"pruned", "--tree", data("fig1"), "--host", data("fig1")}).code ==
        cli::kExitInvalidInput);
}

TEST_CASE("pruned command relabels to a level labelling") {
  const auto dir = std::filesystem::temp_directory_path();
  const Permutation scramble({5, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14});
  const auto tree_path = dir / "vact_scrambled_tree.txt";
  const auto host_path = dir / "vact_scrambled_host.txt";
  std::ofstream(tree_path) << emit_edge_list(relabel(fixtures::fig8_tree(), scramble));
  std::ofstream(host_path) << emit_edge_list(relabel(fixtures::fig9_host(), scramble));
  const Outcome o = invoke({"pruned", "--tree", tree_path.string(), "--host", host_path.string()});
  CHECK(o.code == 0);
  const Json j = o.json();
  CHECK(j["root"] == 1);
  CHECK(j["relabelling"].is_array());
  CHECK(j["is_partition"] == true);
  std::filesystem::remove(tree_path);
  std::filesystem::remove(host_path);
}

TEST_CASE("search-labelling and polynomial commands") {
  const Json s = invoke({"search-labelling", data("example4_b")}).json();
  CHECK(s["found_partition"] == true);
  CHECK(s["best_labelling"] == Json::array({1, 3, 4, 5, 2}));
  const Json r = invoke({"search-labelling", "--mode", "random", data("example4_a")}).json();
  CHECK(r["seed"] == 42);

  const Json p = invoke({"polynomial", data("table2")}).json();
  CHECK(p["value_at_ones"] == 4);
  CHECK(p["mis_count"] == 4);
}

TEST_CASE("usage errors and domain errors") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"cover"}).code == cli::kExitUsage);
  CHECK(invoke({"cover", data("fig1"), "--nope"}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == 0);
  const Outcome missing = invoke({"cover", "/nonexistent.txt"});
  CHECK(missing.code == cli::kExitInvalidInput);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("reports are byte-for-byte deterministic") {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"cover", data("table1")},
        std::vector<std::string>{"verify", "--random-n", "10", "--seed", "7"},
        std::vector<std::string>{"search-labelling", "--mode", "random", "--budget", "20",
                                 data("example4_c")}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("verify_all flags a bad family prediction") {
  // The Figure-1 graph is not K_3.
  const VerifyReport r = verify_all(fixtures::fig1(), kDefaultOracleBound,
                                    FamilySpec{Family::kn, 3, 0, {}});
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("family_prediction"));
  CHECK_FALSE(r.find("family_prediction")->passed);

  const VerifyReport big = verify_all(Graph(20), 10);
  CHECK(big.passed());
  CHECK(big.find("coverage")->skipped);
}
