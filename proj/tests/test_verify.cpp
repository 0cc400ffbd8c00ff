#include "totdom/report_io.hpp"
#include "totdom/verify.hpp"

#include "support/random_graphs.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace totdom;

namespace {

std::vector<VerificationRecord> failing(const std::vector<VerificationRecord>& records) {
  std::vector<VerificationRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [](const auto& r) { return r.fails(); });
  return out;
}

} // namespace

TEST_CASE("judge", "[verify]") {
  REQUIRE(judge(Value::of(3), Value::of(3)) == Status::match);
  REQUIRE(judge(Value::of(3), Value::of(4)) == Status::mismatch);
  REQUIRE(judge(Value::non_compliant(), Value::of(Tdd{})) == Status::match);
  REQUIRE(judge(Value::at_most(4), Value::of(4)) == Status::bound_satisfied);
  REQUIRE(judge(Value::at_most(4), Value::of(5)) == Status::bound_violated);
  REQUIRE(judge(Value::at_least(4), Value::non_compliant()) == Status::bound_violated);
  REQUIRE(judge(Value{}, Value::of(1)) == Status::no_oracle);
  REQUIRE(Value::at_most(6).str() == "<=6");
  REQUIRE(Value::tdi(std::nullopt).str() == "undefined");
}

TEST_CASE("path and cycle families verify cleanly", "[verify]") {
  const auto paths = verify_family(family_range(Family::path, 2, 14));
  REQUIRE(failing(paths).empty());
  // P_4 records carry agreeing non-compliance on both endpoints.
  std::size_t agreeing = 0;
  for (const auto& r : paths)
    if (r.params == "4" && r.quantity == Quantity::tdd &&
        r.expected == Value::non_compliant() && r.status == Status::match)
      ++agreeing;
  REQUIRE(agreeing == 2);
  REQUIRE(failing(verify_family(family_range(Family::cycle, 3, 14))).empty());
}

TEST_CASE("Petersen verification yields ten matching TDD records", "[verify]") {
  const auto records = verify_family_instance({Family::petersen, {}});
  std::size_t tdd_matches = 0;
  for (const auto& r : records)
    if (r.quantity == Quantity::tdd) {
      REQUIRE(r.status == Status::match);
      REQUIRE(r.observed == Value::of(4));
      ++tdd_matches;
    }
  REQUIRE(tdd_matches == 10);
}

TEST_CASE("instances above the cap are skipped", "[verify]") {
  const auto records = verify_family_instance(path_spec(30));
  REQUIRE(records.size() == 1);
  REQUIRE(records[0].status == Status::skipped);
}

TEST_CASE("verification results do not depend on jobs", "[verify][property]") {
  FamilySuite small;
  small.path_hi = 9;
  small.cycle_hi = 9;
  const auto specs = family_suite_specs(small);
  const auto serial = records_to_csv(verify_family(specs, {24, 1}));
  REQUIRE(records_to_csv(verify_family(specs, {24, 4})) == serial);
}

TEST_CASE("construct fixtures", "[verify]") {
  using C = Construct;
  const auto corona = verify_construct_instance({C::corona, {cycle_spec(3), complete_spec(2)}});
  for (const auto& r : corona)
    if (r.quantity == Quantity::tdd)
      REQUIRE(r.status == Status::match);

  const auto comp =
      verify_construct_instance({C::composition, {path_spec(4), complete_spec(2)}});
  std::size_t bounds = 0;
  for (const auto& r : comp) {
    if (r.quantity == Quantity::bound) {
      REQUIRE(r.status == Status::bound_satisfied);
      ++bounds;
    }
    if (r.quantity == Quantity::compliance)
      REQUIRE(r.observed == Value::flag(true));
  }
  REQUIRE(bounds == 8);

  const auto sub = verify_construct_instance({C::subdivision, {complete_spec(5)}});
  for (const auto& r : sub)
    if (r.quantity == Quantity::tdd)
      REQUIRE(r.observed == Value::of(7));
  REQUIRE(failing(sub).empty());
}

TEST_CASE("corona formula fails where a base vertex hangs only on a_i", "[verify][finding]") {
  // corona(P_3, K_2): copies on the middle vertex need 6, not 2 + (3 - 1).
  const auto records =
      verify_construct_instance({Construct::corona, {path_spec(3), complete_spec(2)}});
  const auto bad = failing(records);
  REQUIRE(bad.size() == 2);
  REQUIRE(bad[0].vertex == Vertex{5});
  REQUIRE(bad[0].expected == Value::of(4));
  REQUIRE(bad[0].observed == Value::of(6));
}

// The two domination-degree claims fail on stars, wheels and the like; every
// other claim is checked on arbitrary connected graphs.
TEST_CASE("propositions hold on random connected graphs", "[verify][property]") {
  const auto dd_claim = [](const VerificationRecord& r) {
    return r.claim == "tdd-at-least-domination-degree" ||
           r.claim == "tdi-at-least-domination-index";
  };
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testgen::connected_graph(rng, 4 + testgen::below(rng, 7), 0.3);
    const auto records = check_propositions(g, "random");
    REQUIRE_FALSE(records.empty());
    for (const auto& r : failing(records))
      REQUIRE(dd_claim(r));
  }
}

TEST_CASE("domination degree can exceed tdd", "[verify]") {
  const auto records = check_propositions(generate(star_spec(6)), "star(6)");
  bool saw_leaf = false;
  for (const auto& r : failing(records))
    if (r.claim == "tdd-at-least-domination-degree" && r.vertex == Vertex{1}) {
      REQUIRE(r.expected == Value::at_least(6));
      REQUIRE(r.observed == Value::of(2));
      saw_leaf = true;
    }
  REQUIRE(saw_leaf);
}

TEST_CASE("proposition examples", "[verify]") {
  const auto p5 = check_propositions(generate(path_spec(5)), "path(5)");
  REQUIRE(failing(p5).empty());
  bool saw_dd = false;
  for (const auto& r : p5)
    if (r.claim == "tdd-at-least-domination-degree" && r.vertex == Vertex{2}) {
      REQUIRE(r.expected == Value::at_least(3));
      REQUIRE(r.observed == Value::of(3));
      saw_dd = true;
    }
  REQUIRE(saw_dd);

  const auto k6 = check_propositions(generate(complete_spec(6)), "complete(6)", 3);
  for (const auto& r : k6)
    if (r.claim == "relabel-invariant-tdi")
      REQUIRE(r.observed == Value::of(12));
}

TEST_CASE("conjecture harness on C_6 versus P_6", "[verify]") {
  ConjectureReport out;
  compare_spanning(generate(cycle_spec(6)), generate(path_spec(6)), "cycle(6)", "delete=5-0", out);
  // C_6 is uniform at 4; P_6 is uniform at 4 as well.
  REQUIRE(out.records.size() == 7);
  for (const auto& r : out.records)
    REQUIRE(r.status == Status::bound_satisfied);
  REQUIRE(out.counterexamples.empty());
}

TEST_CASE("conjecture harness on K_4 versus a spanning path", "[verify]") {
  ConjectureReport out;
  compare_spanning(generate(complete_spec(4)), generate(path_spec(4)), "complete(4)", "p", out);
  // P_4 is not compliant, so no comparison is possible.
  REQUIRE(out.records.size() == 1);
  REQUIRE(out.records[0].status == Status::no_oracle);
}

TEST_CASE("conjecture records never fail a run and are reproducible", "[verify]") {
  const auto g = generate(wheel_spec(5));
  const auto a = check_conjectures(g, "wheel(5)", 8, 7);
  const auto b = check_conjectures(g, "wheel(5)", 8, 7);
  REQUIRE(records_to_csv(a.records) == records_to_csv(b.records));
  for (const auto& r : a.records)
    REQUIRE_FALSE(r.fails());
  REQUIRE(counterexamples_to_json(a.counterexamples).dump() ==
          counterexamples_to_json(b.counterexamples).dump());
}

TEST_CASE("counterexamples replay from the report alone", "[verify]") {
  // Whatever violations the sampler finds must be reproducible from the text.
  std::mt19937_64 rng(3);
  std::size_t replayed = 0;
  for (int trial = 0; trial < 40 && replayed < 3; ++trial) {
    const auto g = testgen::connected_graph(rng, 6 + testgen::below(rng, 4), 0.4);
    const auto rep = check_conjectures(g, "random", 4, 1000 + trial);
    for (const auto& c : rep.counterexamples) {
      const auto G = parse_edge_list(std::string_view(c.graph));
      const auto H = parse_edge_list(std::string_view(c.subgraph));
      REQUIRE(G == g);
      const auto rg = sweep_minimal_tds(G);
      const auto rh = sweep_minimal_tds(H);
      if (c.vertex) {
        REQUIRE(rg.per_vertex_tdd[*c.vertex] == c.value_in_graph);
        REQUIRE(rh.per_vertex_tdd[*c.vertex] == c.value_in_subgraph);
        REQUIRE(*c.value_in_graph > *c.value_in_subgraph);
        VertexSet w(H.order());
        for (auto v : c.witness_in_subgraph)
          w.insert(v);
        REQUIRE(is_minimal_tds(H, w));
      } else {
        REQUIRE(rg.tdi == c.value_in_graph);
        REQUIRE(rh.tdi == c.value_in_subgraph);
      }
      ++replayed;
    }
  }
  SUCCEED("replayed " << replayed << " counterexamples");
}
