// Acceptance suite: one PASS/FAIL line per criterion.
//
// Expected values are computed here from the criterion statements, not from
// the oracles module. Three criteria are known to be red because the stated
// closed forms disagree with exhaustive search; they are listed in
// `expected_red` with the observed counterexample, and the process exit code
// is nonzero only when some criterion's outcome differs from that list.

#include "totdom/totdom.hpp"

#include "support/naive_oracle.hpp"
#include "support/random_graphs.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace totdom;

namespace {

// Time budgets in seconds.
constexpr double path_matrix_budget = 10.0;
constexpr double named_graph_budget = 5.0;
constexpr double subdivision_k5_budget = 60.0;

// Criteria whose stated closed form is contradicted by exhaustive search.
const std::map<int, std::string> expected_red{
    {4, "page vertices of B_n have TDD n+1 for n >= 2, witness {0} + one vertex per page"},
    {8, "copies on the middle vertex of P_3 (.) K_2 have TDD 6: D + {a_k : k != i} leaves an "
        "end vertex of P_3 undominated"},
    {11, "tdd >= domination degree fails: a minimal TDS need not be a minimal DS, e.g. a leaf "
         "of K_{1,6} has TDD 2 but domination degree 6; TDI >= DI fails with it"},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 6)
        notes.push_back(what);
    }
  }
};

// Every graph solved by the criteria, for the property sweep.
std::vector<std::pair<std::string, Graph>> solved;

DominationReport solve(const std::string& label, const Graph& g) {
  solved.emplace_back(label, g);
  return sweep_minimal_tds(g);
}

std::string show(const Tdd& t) { return t ? std::to_string(*t) : "nc"; }

Graph fam(const FamilySpec& s) { return generate(s); }

// Path TDD as stated: position i is 1-based.
std::size_t path_formula(std::size_t n, std::size_t i) {
  if (n == 2)
    return 2;
  const auto r = n % 4;
  if (r == 0)
    return n / 2 + ((i % 4 == 0 || i % 4 == 1) ? 1 : 0);
  if (r == 1)
    return (n + 1) / 2 + (i % 4 == 1 ? 1 : 0);
  if (r == 2)
    return n / 2 + 1;
  return (n + 1) / 2 + (i % 4 == 0 ? 1 : 0);
}

std::size_t gamma_formula(std::size_t n) {
  if (n % 4 == 0)
    return n / 2;
  if (n % 4 == 2)
    return n / 2 + 1;
  return (n + 1) / 2;
}

std::size_t path_tdi_formula(std::size_t n) {
  const auto k = n / 4;
  switch (n % 4) {
  case 0:
    return 2 * k * (4 * k + 1);
  case 1:
    return 8 * k * k + 7 * k + 2;
  case 2:
    return 4 * (2 * k + 1) * (k + 1);
  default:
    return 8 * k * k + 15 * k + 6;
  }
}

void all_equal(Check& c, const std::string& label, const DominationReport& r, std::size_t want) {
  for (Vertex v = 0; v < r.order(); ++v)
    c.require(r.per_vertex_tdd[v] == want, label + " v" + std::to_string(v) + " tdd " +
                                               show(r.per_vertex_tdd[v]) + " != " +
                                               std::to_string(want));
}

// ---------------------------------------------------------------------------

Check ac1() {
  Check c;
  const auto t0 = Clock::now();
  for (std::size_t n : {2, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14}) {
    const auto r = solve("path(" + std::to_string(n) + ")", fam(path_spec(int(n))));
    for (Vertex v = 0; v < n; ++v)
      c.require(r.per_vertex_tdd[v] == path_formula(n, v + 1),
                "P_" + std::to_string(n) + " v" + std::to_string(v) + " observed " +
                    show(r.per_vertex_tdd[v]) + " formula " +
                    std::to_string(path_formula(n, v + 1)));
  }
  const auto p4 = solve("path(4)", fam(path_spec(4)));
  c.require(p4.non_compliant_vertices() == std::vector<Vertex>{0, 3}, "P_4 non-compliant set");
  const auto p7 = solve("path(7)", fam(path_spec(7)));
  c.require(p7.non_compliant_vertices() == std::vector<Vertex>{3}, "P_7 non-compliant set");
  const auto t = seconds_since(t0);
  c.require(t < path_matrix_budget, "runtime " + std::to_string(t) + "s");
  c.notes.push_back("time " + std::to_string(t) + "s");
  return c;
}

Check ac2() {
  Check c;
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto gp = gamma_t(fam(path_spec(int(n))));
    const auto gc = gamma_t(fam(cycle_spec(int(n))));
    solved.emplace_back("path(" + std::to_string(n) + ")", fam(path_spec(int(n))));
    solved.emplace_back("cycle(" + std::to_string(n) + ")", fam(cycle_spec(int(n))));
    c.require(gp == gamma_formula(n), "gamma_t(P_" + std::to_string(n) + ") = " +
                                          std::to_string(gp));
    c.require(gc == gamma_formula(n), "gamma_t(C_" + std::to_string(n) + ") = " +
                                          std::to_string(gc));
  }
  return c;
}

Check ac3() {
  Check c;
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto label = "cycle(" + std::to_string(n) + ")";
    const auto r = solve(label, fam(cycle_spec(int(n))));
    all_equal(c, label, r, gamma_formula(n));
    c.require(r.compliant, label + " not compliant");
    c.require(r.is_tdr, label + " not TDR");
  }
  return c;
}

Check ac4() {
  Check c;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto label = "book(" + std::to_string(n) + ")";
    const auto r = solve(label, fam(book_spec(int(n))));
    c.require(r.per_vertex_tdd[0] == 2u && r.per_vertex_tdd[1] == 2u, label + " centers");
    bool pages_ok = true;
    for (Vertex v = 2; v < r.order(); ++v)
      pages_ok = pages_ok && r.per_vertex_tdd[v] == 2 * n;
    c.require(pages_ok, label + " page tdd observed " + show(r.per_vertex_tdd[2]) + ", stated " +
                            std::to_string(2 * n));
    c.require(r.tdi == 4 * (1 + n * n), label + " TDI observed " +
                                            (r.tdi ? std::to_string(*r.tdi) : "undefined") +
                                            ", stated " + std::to_string(4 * (1 + n * n)));
  }
  return c;
}

Check ac5() {
  Check c;
  auto uniform_two = [&](const FamilySpec& s, std::size_t tdi) {
    const auto r = solve(s.label(), fam(s));
    all_equal(c, s.label(), r, 2);
    c.require(r.tdi == tdi, s.label() + " TDI " + (r.tdi ? std::to_string(*r.tdi) : "undefined") +
                                " != " + std::to_string(tdi));
  };
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t q = 2; q <= 3; ++q)
      uniform_two(windmill_spec(int(p), int(q)), 2 * (q * (p - 1) + 1));
  for (std::size_t n = 2; n <= 8; ++n)
    uniform_two(complete_spec(int(n)), 2 * n);
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      uniform_two(complete_bipartite_spec(int(m), int(n)), 2 * (m + n));
  for (std::size_t n = 1; n <= 6; ++n)
    uniform_two(star_spec(int(n)), 2 * (1 + n));
  for (std::size_t n = 3; n <= 8; ++n)
    uniform_two(wheel_spec(int(n)), 2 * (1 + n));
  return c;
}

Check ac6() {
  Check c;
  for (auto f : {Family::petersen, Family::grotzsch, Family::herschel}) {
    const std::string label(to_string(f));
    const auto t0 = Clock::now();
    const auto r = solve(label, fam({f, {}}));
    const auto t = seconds_since(t0);
    all_equal(c, label, r, 4);
    if (f == Family::petersen)
      c.require(r.is_tdr, "petersen not TDR");
    c.require(t < named_graph_budget, label + " runtime " + std::to_string(t) + "s");
  }
  return c;
}

Check ac7() {
  Check c;
  for (std::size_t n = 2; n <= 14; ++n) {
    if (n == 4 || n == 7)
      continue;
    const auto r = solve("path(" + std::to_string(n) + ")", fam(path_spec(int(n))));
    c.require(r.tdi == path_tdi_formula(n), "P_" + std::to_string(n) + " solver TDI");
  }
  // Symbolic self-check: closed form against the per-vertex sum, no solver.
  for (std::size_t n = 2; n <= 40; ++n) {
    if (n == 4 || n == 7)
      continue;
    std::size_t sum = 0;
    for (std::size_t i = 1; i <= n; ++i)
      sum += path_formula(n, i);
    c.require(sum == path_tdi_formula(n), "P_" + std::to_string(n) + " sum " +
                                              std::to_string(sum) + " != closed form");
    c.require(path_tdi(n) == path_tdi_formula(n), "library path_tdi(" + std::to_string(n) + ")");
  }
  return c;
}

Check ac8() {
  Check c;
  const auto P = [](int n) { return fam(path_spec(n)); };
  const auto K = [](int n) { return fam(complete_spec(n)); };

  // Union: tdd of the component plus gamma_t of the other.
  {
    const auto r = solve("union(P5,P5)", disjoint_union(P(5), P(5)));
    const std::vector<std::size_t> p5{4, 3, 3, 3, 4};
    for (Vertex v = 0; v < 10; ++v)
      c.require(r.per_vertex_tdd[v] == p5[v % 5] + 3, "union(P5,P5) v" + std::to_string(v));
  }
  all_equal(c, "join(P3,P3)", solve("join(P3,P3)", join(P(3), P(3))), 2);
  // Composition with K_m copies the base TDD.
  {
    const auto r = solve("composition(C4,K2)", composition(fam(cycle_spec(4)), K(2)));
    all_equal(c, "composition(C4,K2)", r, 2);
    const auto q = solve("composition(P5,K2)", composition(P(5), K(2)));
    const std::vector<std::size_t> p5{4, 3, 3, 3, 4};
    for (Vertex v = 0; v < 10; ++v)
      c.require(q.per_vertex_tdd[v] == p5[v / 2], "composition(P5,K2) v" + std::to_string(v));
  }
  // Corona: base vertices n1, copy vertices tdd_G2 + n1 - 1.
  for (const auto& [label, base] : {std::pair{std::string("corona(C3,K2)"), fam(cycle_spec(3))},
                                    std::pair{std::string("corona(P3,K2)"), P(3)}}) {
    const auto r = solve(label, corona(base, K(2)));
    for (Vertex v = 0; v < r.order(); ++v) {
      const std::size_t want = v < 3 ? 3 : 2 + 3 - 1;
      c.require(r.per_vertex_tdd[v] == want, label + " v" + std::to_string(v) + " observed " +
                                                 show(r.per_vertex_tdd[v]) + ", stated " +
                                                 std::to_string(want));
    }
  }
  // Subdivided complete graphs: ceil(3n/2) - 1.
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto label = "subdivision(K" + std::to_string(n) + ")";
    const auto t0 = Clock::now();
    const auto r = solve(label, subdivision(K(int(n))));
    const auto t = seconds_since(t0);
    all_equal(c, label, r, (3 * n + 1) / 2 - 1);
    if (n == 5) {
      c.require(r.order() == 15, "S(K5) order");
      c.require(t < subdivision_k5_budget, "S(K5) runtime " + std::to_string(t) + "s");
    }
  }
  // Degree splitting of paths.
  for (int n = 4; n <= 10; ++n) {
    const auto label = "degree_splitting(P" + std::to_string(n) + ")";
    const auto r = solve(label, degree_splitting(P(n)));
    if (n == 4) {
      std::size_t threes = 0, fours = 0;
      for (const auto& t : r.per_vertex_tdd) {
        threes += t == 3u;
        fours += t == 4u;
      }
      c.require(threes == 5 && fours == 1, label + " counts");
    } else {
      all_equal(c, label, r, 4);
    }
  }
  return c;
}

Check ac9() {
  Check c;
  const auto K2 = fam(complete_spec(2));
  for (int n : {4, 7}) {
    const auto base = fam(path_spec(n));
    const auto dd = domination_degrees(base);
    const auto label = "composition(P" + std::to_string(n) + ",K2)";
    const auto r = solve(label, composition(base, K2));
    c.require(r.compliant, label + " not compliant");
    for (Vertex v = 0; v < r.order(); ++v)
      c.require(r.per_vertex_tdd[v] && *r.per_vertex_tdd[v] <= 2 * dd.per_vertex[v / 2],
                label + " v" + std::to_string(v) + " bound");
  }
  {
    const auto g2 = fam(path_spec(4));
    const auto bound = 2 + (3 - 1) * gamma_t(g2);
    const auto r = solve("corona(P3,P4)", corona(fam(path_spec(3)), g2));
    c.require(r.compliant, "corona(P3,P4) not compliant");
    for (Vertex v = 3; v < r.order(); ++v)
      c.require(r.per_vertex_tdd[v] && *r.per_vertex_tdd[v] <= bound,
                "corona(P3,P4) v" + std::to_string(v) + " observed " + show(r.per_vertex_tdd[v]));
  }
  // The same fixtures through the verifier: no bound-violated records.
  ConstructSuite suite;
  suite.include_large = false;
  std::size_t violated = 0;
  for (const auto& d : construct_suite_descriptors(suite))
    if (d.op == Construct::composition || d.op == Construct::corona)
      for (const auto& rec : verify_construct_instance(d))
        violated += rec.status == Status::bound_violated;
  c.require(violated == 0, std::to_string(violated) + " bound-violated records");
  return c;
}

Check ac10() {
  Check c;
  const auto g = fam(kragujevac_spec({2, 2}));
  const auto r = solve("kragujevac(2,2)", g);
  c.require(r.non_compliant_vertices() == std::vector<Vertex>{0}, "non-compliant set");
  // Layout: branch roots 1 and 6; middles 2, 4, 7, 9; leaves 3, 5, 8, 10.
  for (Vertex v : {1, 2, 4, 6, 7, 9})
    c.require(r.per_vertex_tdd[v] == 6u, "v" + std::to_string(v) + " observed " +
                                             show(r.per_vertex_tdd[v]));
  for (Vertex v : {3, 5, 8, 10})
    c.require(r.per_vertex_tdd[v] == 7u, "v" + std::to_string(v) + " observed " +
                                             show(r.per_vertex_tdd[v]));
  // The worked witness: both roots and all four middles.
  const VertexSet worked(11, {1, 2, 4, 6, 7, 9});
  c.require(is_minimal_tds(g, worked), "worked witness not a minimal TDS");
  for (Vertex v = 1; v < 11; ++v) {
    const auto& cert = r.certificates[v];
    c.require(cert && is_minimal_tds(g, cert->witness) && cert->witness.contains(v) &&
                  cert->witness.count() == *r.per_vertex_tdd[v],
              "certificate for v" + std::to_string(v));
  }
  return c;
}

Check ac11() {
  Check c;
  std::set<std::string> seen;
  std::map<std::string, std::pair<std::size_t, std::set<std::string>>> violations;
  std::size_t graphs = 0, records = 0;
  for (const auto& [label, g] : solved) {
    if (!seen.insert(serialize_edge_list(g)).second)
      continue;
    ++graphs;
    for (const auto& rec : check_propositions(g, label)) {
      ++records;
      if (rec.fails()) {
        auto& v = violations[rec.claim];
        ++v.first;
        v.second.insert(label);
      }
    }
  }
  c.notes.push_back(std::to_string(graphs) + " graphs, " + std::to_string(records) + " records");
  for (const auto& [claim, v] : violations) {
    std::string sample;
    for (const auto& label : v.second) {
      if (sample.size() > 60)
        break;
      sample += (sample.empty() ? "" : " ") + label;
    }
    c.require(false, claim + ": " + std::to_string(v.first) + " violations on " +
                         std::to_string(v.second.size()) + " graphs, e.g. " + sample);
  }
  return c;
}

Check ac12() {
  Check c;
  std::mt19937_64 rng(20240);
  for (int i = 0; i < 50; ++i) {
    const auto n = 4 + testgen::below(rng, 7);
    const auto g = testgen::connected_graph(rng, n, 0.3);
    solved.emplace_back("random-" + std::to_string(i), g);
    const auto fast = sweep_minimal_tds(g, {24, 4});
    const auto slow = naive::report(g);
    const auto tag = "graph " + std::to_string(i);
    c.require(fast.per_vertex_tdd == slow.per_vertex_tdd, tag + " per_vertex_tdd");
    c.require(fast.certificates == slow.certificates, tag + " certificates");
    c.require(fast.gamma_t == slow.gamma_t, tag + " gamma_t");
    c.require(fast.upper_gamma_t == slow.upper_gamma_t, tag + " upper_gamma_t");
    c.require(fast.delta_td == slow.delta_td && fast.Delta_td == slow.Delta_td, tag + " extremes");
    c.require(fast.compliant == slow.compliant, tag + " compliant");
    c.require(fast.tdi == slow.tdi, tag + " tdi");
    c.require(fast.is_tdr == slow.is_tdr, tag + " is_tdr");
    c.require(fast == slow, tag + " report");
  }
  return c;
}

std::string conjecture_run() {
  std::vector<VerificationRecord> records;
  std::vector<Counterexample> counterexamples;
  const std::vector<FamilySpec> subjects{cycle_spec(6),   complete_spec(4), wheel_spec(5),
                                         {Family::petersen, {}}, book_spec(3), windmill_spec(3, 3)};
  for (const auto& s : subjects) {
    auto rep = check_conjectures(generate(s), s.label(), 6, default_seed);
    records.insert(records.end(), rep.records.begin(), rep.records.end());
    counterexamples.insert(counterexamples.end(), rep.counterexamples.begin(),
                           rep.counterexamples.end());
  }
  return verify_report_json("conjectures", default_seed, records, counterexamples).dump(2);
}

Check ac13() {
  Check c;
  const auto first = conjecture_run();
  const auto second = conjecture_run();
  c.require(!first.empty(), "empty report");
  c.require(first == second, "reports differ between runs");
  const auto j = nlohmann::json::parse(first);
  c.notes.push_back(std::to_string(j["records"].size()) + " records, " +
                    std::to_string(j["counterexamples"].size()) + " counterexamples");
  return c;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"path TDD matrix and P_4/P_7 non-compliance", ac1},
      {"gamma_t of paths and cycles", ac2},
      {"cycle TDD, compliance and TDR", ac3},
      {"book TDD and TDI", ac4},
      {"windmill/complete/bipartite/star/wheel TDD 2 and TDI", ac5},
      {"Petersen, Grotzsch, Herschel TDD 4", ac6},
      {"path TDI closed form", ac7},
      {"construct exact cases", ac8},
      {"construct bound cases", ac9},
      {"Kragujevac fixture", ac10},
      {"proposition sweep over every solved graph", ac11},
      {"optimized sweep equals naive oracle on 50 random graphs", ac12},
      {"conjecture harness reproducibility", ac13},
  };

  int surprises = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto& [title, run] = criteria[i];
    const auto t0 = Clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    const auto red = expected_red.find(id);
    const bool expected_ok = red == expected_red.end();
    std::ostringstream line;
    line << "AC" << id << (id < 10 ? "  " : " ") << (c.ok ? "PASS" : "FAIL") << "  " << title
         << " [" << seconds_since(t0) << "s]";
    if (!c.ok && !expected_ok)
      line << " (known: " << red->second << ")";
    if (c.ok != expected_ok) {
      line << (c.ok ? " (UNEXPECTED PASS)" : " (UNEXPECTED FAIL)");
      ++surprises;
    }
    std::puts(line.str().c_str());
    for (const auto& note : c.notes)
      std::printf("      %s\n", note.c_str());
  }
  std::printf("%d criteria differ from the expected outcome\n", surprises);
  return surprises == 0 ? 0 : 1;
}
