#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "singgraph/gen.hpp"
#include "singgraph/report.hpp"

using namespace sg;
using namespace sg::test;

namespace {

std::string read_golden(const std::string& name) {
  const std::string path = std::string(SINGGRAPH_SOURCE_DIR) + "/tests/golden/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json report_for(const std::string& text, bool tower = false) {
  auto p = run_pipeline(parse_graph(text));
  return build_report(p, text, {tower});
}

}  // namespace

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("report golden: single -4 vertex") {
  const std::string input = R"({"vertices":[{"id":"v","sq":-4}],"edges":[]})";
  const auto report = report_for(input);
  CHECK(dump_json(report) == read_golden("report_single_m4.json"));

  CHECK(report["invariants"]["e"] == 5);
  CHECK(report["c"]["exact"] == true);
  CHECK(report["c"]["hi"] == 0);
  CHECK(report["dT1"]["lo"] == 1);
  CHECK(report["dT2"]["lo"] == 3);
  CHECK(report["configurations"].empty());
}

TEST_CASE("report is byte-identical across runs") {
  const std::string input = R"({"vertices":[{"id":"v","sq":-4}],"edges":[]})";
  CHECK(dump_json(report_for(input, true)) == dump_json(report_for(input, true)));

  for (const auto& entry : catalog_instantiations(6)) {
    const std::string text = serialize_graph(entry.g);
    if (!check_graph_text(text).ok) continue;
    CAPTURE(entry.name);
    CHECK(dump_json(report_for(text, true)) == dump_json(report_for(text, true)));
  }
}

TEST_CASE("report top-level schema: fixed key set, increments only") {
  const std::string input = R"({"vertices":[{"id":"v","sq":-4}],"edges":[]})";
  const auto report = report_for(input, true);
  const std::set<std::string> expected{
      "blowdown", "c",       "c_reason",          "configurations",
      "configurations_reason", "dT1",  "dT2",     "fundamental_cycle",
      "graph",    "h1_a",    "h1_a_reason",       "input",
      "invariants", "profile", "rdp",             "tool",
      "tower"};
  std::set<std::string> actual;
  for (auto it = report.begin(); it != report.end(); ++it) actual.insert(it.key());
  CHECK(actual == expected);

  // Absolute cotangent dimensions are not derivable from the graph alone and
  // must not appear anywhere in the document.
  const std::string text = dump_json(report);
  for (const std::string forbidden : {"dim_t1", "dimT1", "T1_abs", "\"t1\"", "\"t2\""}) {
    CHECK(text.find(forbidden) == std::string::npos);
  }
  const std::set<std::string> inv_keys{"almost_reduced", "e", "mult", "pa_z", "rational",
                                       "z_self"};
  std::set<std::string> inv_actual;
  for (auto it = report["invariants"].begin(); it != report["invariants"].end(); ++it)
    inv_actual.insert(it.key());
  CHECK(inv_actual == inv_keys);
}

TEST_CASE("report: A5 chain is a terminal rational double point") {
  const auto g = gen_ade('A', 5);
  const auto report = report_for(serialize_graph(g));
  CHECK(report["invariants"]["e"] == 3);
  CHECK(report["c"].is_null());
  CHECK(report["c_reason"] == "embedding_dimension_below_4");
  CHECK(report["dT1"].is_null());
  REQUIRE(!report["rdp"].is_null());
  CHECK(report["rdp"]["name"] == "A5");
  CHECK(report["rdp"]["tau"] == 5);
  CHECK(report["rdp"]["dim_t2"] == 0);
  CHECK(report["configurations"].size() == 1);
  CHECK(report["configurations"][0]["class"] == "0-A_5");
  CHECK(report["h1_a"]["sum_s_minus_1"] == 0);
}

TEST_CASE("report: not almost reduced skips classification and c") {
  const std::string input =
      R"({"vertices":[{"id":"c","sq":-3},{"id":"l1","sq":-2},{"id":"l2","sq":-2},)"
      R"({"id":"l3","sq":-2},{"id":"l4","sq":-2}],)"
      R"("edges":[["c","l1"],["c","l2"],["c","l3"],["c","l4"]]})";
  const auto report = report_for(input);
  CHECK(report["invariants"]["rational"] == true);
  CHECK(report["invariants"]["almost_reduced"] == false);
  CHECK(report["configurations"].is_null());
  CHECK(report["configurations_reason"] == "not_almost_reduced");
  CHECK(report["h1_a"].is_null());
  CHECK(report["c"].is_null());
  CHECK(report["c_reason"] == "not_almost_reduced");
}

TEST_CASE("report: tower of (-2,-2,-3)") {
  const auto g = gen_chain({-2, -2, -3});
  const auto report = report_for(serialize_graph(g), true);
  REQUIRE(report["tower"].is_array());
  REQUIRE(report["tower"].size() == 1);
  const auto& level = report["tower"][0];
  CHECK(level["level"] == 0);
  REQUIRE(level["fibers"].size() == 1);
  const auto& fiber = level["fibers"][0];
  CHECK(fiber["rdp"]["name"] == "A1");
  CHECK(fiber["rdp"]["tau"] == 1);
  CHECK(fiber["report"].is_null());

  // Without --tower the field stays null.
  CHECK(report_for(serialize_graph(g), false)["tower"].is_null());
}

TEST_CASE("report: tower recursion reports non-RDP fibers") {
  // Root: 3-A plateau with deep attachments; contracted fibers include -2
  // chains only, but build one with a non-RDP fiber: attach a -3 inside a
  // contracted region. Use 2-AL^2_3 with a (-3,-4) pair: fiber {c1,c2} of the
  // first contraction contains only -2s, so instead check a handmade graph:
  // x(-4) -- m(-2) -- y(-4) chain plus leaf l(-2) on m? Simpler: verify on
  // the corpus that any fiber with e >= 4 recurses with a report.
  int recursed = 0;
  for (const auto& entry : full_corpus()) {
    if (!check_graph_text(serialize_graph(entry.g)).ok) continue;
    const auto report = report_for(serialize_graph(entry.g), true);
    if (!report["tower"].is_array()) continue;
    for (const auto& level : report["tower"]) {
      for (const auto& fiber : level["fibers"]) {
        if (!fiber["report"].is_null()) {
          ++recursed;
          CHECK(fiber["report"]["invariants"]["e"].get<long long>() >= 4);
          CHECK(fiber["rdp"].is_null());
        }
      }
    }
  }
  CHECK(recursed > 0);
}

TEST_CASE("dot golden: D4") {
  const auto g = gen_ade('D', 4);
  auto p = run_pipeline(parse_graph(serialize_graph(g)));
  CHECK(emit_dot(p) == read_golden("d4.dot"));
}

TEST_CASE("dot: frozen fill conventions") {
  {
    const auto p = run_pipeline(gen_chain({-4}));
    const auto dot = emit_dot(p);
    CHECK(dot.find("\"c1\" [label=\"c1:-4:1\", style=filled") != std::string::npos);
  }
  {
    const auto p = run_pipeline(gen_ade('A', 3));
    const auto dot = emit_dot(p);
    CHECK(dot.find("\"c1\" [label=\"c1:-2:1\", style=filled") != std::string::npos);
    CHECK(dot.find("\"c3\" [label=\"c3:-2:1\", style=filled") != std::string::npos);
    CHECK(dot.find("\"c2\" [label=\"c2:-2:1\"];") != std::string::npos);
  }
}

TEST_CASE("check_graph_text: first failing predicate") {
  CHECK(check_graph_text(R"({"vertices":[{"id":"v","sq":-2}],"edges":[]})").ok);
  CHECK(check_graph_text("{").diagnostic == "schema_error");
  CHECK(check_graph_text(R"({"vertices":[{"id":"v","sq":-1}],"edges":[]})").diagnostic ==
        "weight_above_minus_two");
  const std::string affine =
      R"({"vertices":[{"id":"c","sq":-2},{"id":"l1","sq":-2},{"id":"l2","sq":-2},)"
      R"({"id":"l3","sq":-2},{"id":"l4","sq":-2}],)"
      R"("edges":[["c","l1"],["c","l2"],["c","l3"],["c","l4"]]})";
  CHECK(check_graph_text(affine).diagnostic == "not_negative_definite");
  const std::string star =
      R"({"vertices":[{"id":"c","sq":-2},{"id":"l1","sq":-3},{"id":"l2","sq":-3},)"
      R"({"id":"l3","sq":-3},{"id":"l4","sq":-3}],)"
      R"("edges":[["c","l1"],["c","l2"],["c","l3"],["c","l4"]]})";
  CHECK(check_graph_text(star).diagnostic == "not_rational");
  const std::string witness =
      R"({"vertices":[{"id":"c","sq":-3},{"id":"l1","sq":-2},{"id":"l2","sq":-2},)"
      R"({"id":"l3","sq":-2},{"id":"l4","sq":-2}],)"
      R"("edges":[["c","l1"],["c","l2"],["c","l3"],["c","l4"]]})";
  CHECK(check_graph_text(witness).diagnostic == "not_almost_reduced");
}

TEST_CASE("run_pipeline rejects non-rational and non-definite graphs") {
  const auto affine = DualGraph::from_parts(
      {"c", "l1", "l2", "l3", "l4"}, {-2, -2, -2, -2, -2},
      {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
  CHECK_THROWS_AS(run_pipeline(affine), DomainError);

  const auto star = DualGraph::from_parts(
      {"c", "l1", "l2", "l3", "l4"}, {-2, -3, -3, -3, -3},
      {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
  CHECK_THROWS_AS(run_pipeline(star), DomainError);
}

TEST_CASE("reports are stable under relabeling") {
  std::mt19937_64 rng(seed_from_env(91));
  const auto corpus = full_corpus();
  int compared = 0;
  for (size_t i = 0; i < corpus.size(); i += 11) {
    const auto& entry = corpus[i];
    if (!check_graph_text(serialize_graph(entry.g)).ok) continue;
    CAPTURE(entry.name);
    ++compared;
    const auto relabeled = relabel(rng, entry.g);
    const auto r1 = report_for(serialize_graph(entry.g));
    const auto r2 = report_for(serialize_graph(relabeled.g));
    CHECK(r1["invariants"] == r2["invariants"]);
    CHECK(r1["c"] == r2["c"]);
    CHECK(r1["dT1"] == r2["dT1"]);
    CHECK(r1["dT2"] == r2["dT2"]);
    CHECK(r1["h1_a"] == r2["h1_a"]);

    auto classes = [](const nlohmann::json& r) {
      std::multiset<std::string> out;
      if (r["configurations"].is_array()) {
        for (const auto& c : r["configurations"]) out.insert(c["class"].get<std::string>());
      }
      return out;
    };
    CHECK(classes(r1) == classes(r2));
  }
  CHECK(compared >= 20);
}

TEST_CASE("integration: E7 configuration plus a hanging -2 curve") {
  // 1-E7 core (c1..c7), its -4 attachment a1, and one more -2 curve d1 on
  // a1. Two configurations arise: the 1-E7 and a 1-A^1_1 at d1. The
  // contraction drops a1 (Z*a1 = 0) as its own non-RDP fiber.
  const std::string input = R"({"vertices":[
    {"id":"c1","sq":-2},{"id":"c2","sq":-2},{"id":"c3","sq":-2},{"id":"c4","sq":-2},
    {"id":"c5","sq":-2},{"id":"c6","sq":-2},{"id":"c7","sq":-2},
    {"id":"a1","sq":-4},{"id":"d1","sq":-2}],
    "edges":[["c1","c2"],["c2","c3"],["c3","c4"],["c4","c5"],["c5","c6"],["c4","c7"],
             ["c1","a1"],["a1","d1"]]})";
  const auto report = report_for(input, true);

  CHECK(report["invariants"]["e"] == 5);
  CHECK(report["invariants"]["mult"] == 4);
  CHECK(report["invariants"]["z_self"] == -4);
  CHECK(report["invariants"]["rational"] == true);
  CHECK(report["invariants"]["almost_reduced"] == true);

  const nlohmann::json expected_z = {{"c1", 3}, {"c2", 4}, {"c3", 5}, {"c4", 6}, {"c5", 4},
                                     {"c6", 2}, {"c7", 3}, {"a1", 1}, {"d1", 1}};
  CHECK(report["fundamental_cycle"] == expected_z);
  CHECK(report["profile"]["a1"] == 0);
  CHECK(report["profile"]["c1"] == -1);
  CHECK(report["profile"]["d1"] == -1);

  REQUIRE(report["configurations"].size() == 2);
  CHECK(report["configurations"][0]["class"] == "1-E_7");
  CHECK(report["configurations"][0]["s"] == 3);
  CHECK(report["configurations"][1]["class"] == "1-A^1_1");
  CHECK(report["configurations"][1]["core"] == nlohmann::json::array({"d1"}));
  CHECK(report["configurations"][1]["s"] == 1);
  CHECK(report["h1_a"]["sum_s_minus_1"] == 2);

  CHECK(report["c"] == nlohmann::json({{"lo", 0}, {"hi", 0}, {"exact", true}}));
  CHECK(report["dT1"] == nlohmann::json({{"lo", 1}, {"hi", 1}}));
  CHECK(report["dT2"] == nlohmann::json({{"lo", 3}, {"hi", 3}}));

  // Blowdown: whites are c2..c7 (arms 1,2,2 around c4: an E6 tree) and the
  // -4 curve a1 on its own.
  const auto& blowdown = report["blowdown"];
  REQUIRE(blowdown["fibers"].size() == 2);
  CHECK(blowdown["fibers"][0]["vertices"].size() == 6);
  CHECK(blowdown["fibers"][1]["vertices"][0]["id"] == "a1");
  CHECK(blowdown["surviving"] == nlohmann::json::array({"c1", "d1"}));

  // Tower level 0: the E6 fiber is a terminal RDP; the a1 fiber is a cone
  // singularity (e = 5) whose own contraction is empty.
  REQUIRE(report["tower"].size() == 1);
  const auto& fibers = report["tower"][0]["fibers"];
  REQUIRE(fibers.size() == 2);
  CHECK(fibers[0]["rdp"]["name"] == "E6");
  CHECK(fibers[0]["rdp"]["tau"] == 6);
  CHECK(fibers[1]["rdp"].is_null());
  CHECK(fibers[1]["report"]["invariants"]["e"] == 5);
  CHECK(fibers[1]["report"]["c"] == nlohmann::json({{"lo", 0}, {"hi", 0}, {"exact", true}}));
  CHECK(fibers[1]["report"]["contracted"].empty());
}
