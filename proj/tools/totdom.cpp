// totdom: generate graphs, solve total domination degrees, apply graph
// operations and run the verification suites.
//
//   totdom gen path 6 -o p6.txt
//   totdom solve p6.txt --per-vertex --witness
//   totdom ops corona p3.txt k2.txt
//   totdom verify all --out reports
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error.

#include "totdom/totdom.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace totdom;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  if (path == "-")
    return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected a..b");
  }
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const auto f = family_from_string(a.family);
  if (!f)
    throw UsageError("unknown family '" + a.family + "'");
  const FamilySpec spec{*f, a.params};
  const Graph g = generate(spec);
  write_text(a.output, serialize_edge_list(g));
  std::cerr << spec.label() << ": n=" << g.order() << " m=" << g.size() << '\n';
  return exit_ok;
}

struct SolveArgs {
  std::string input = "-";
  bool per_vertex = false;
  bool witness = false;
  bool json = false;
  bool csv = false;
  std::size_t max_n = default_max_order;
  unsigned jobs = 1;
};

int run_solve(const SolveArgs& a) {
  const Graph g = read_graph(a.input);
  const auto r = sweep_minimal_tds(g, {a.max_n, a.jobs});
  if (a.json)
    std::cout << report_to_json(r, a.witness).dump(2) << '\n';
  else if (a.csv)
    std::cout << report_to_csv(r);
  else
    std::cout << report_to_table(r, a.per_vertex, a.witness);
  return exit_ok;
}

struct OpsArgs {
  std::string op;
  std::vector<std::string> inputs;
  std::string output;
};

int run_ops(const OpsArgs& a) {
  static const std::map<std::string, Construct> ops{
      {"union", Construct::disjoint_union},
      {"join", Construct::join},
      {"composition", Construct::composition},
      {"corona", Construct::corona},
      {"cartesian", Construct::cartesian_product},
      {"subdivision", Construct::subdivision},
      {"degree_splitting", Construct::degree_splitting},
  };
  const auto it = ops.find(a.op);
  if (it == ops.end())
    throw UsageError("unknown operation '" + a.op + "'");
  const auto want = arity(it->second);
  if (a.inputs.size() != want)
    throw UsageError(a.op + " takes " + std::to_string(want) + " input graph(s)");
  const Graph g1 = read_graph(a.inputs[0]);
  Graph h;
  if (want == 1) {
    h = it->second == Construct::subdivision ? subdivision(g1) : degree_splitting(g1);
  } else {
    const Graph g2 = read_graph(a.inputs[1]);
    switch (it->second) {
    case Construct::disjoint_union:
      h = disjoint_union(g1, g2);
      break;
    case Construct::join:
      h = join(g1, g2);
      break;
    case Construct::composition:
      h = composition(g1, g2);
      break;
    case Construct::corona:
      h = corona(g1, g2);
      break;
    default:
      h = cartesian_product(g1, g2);
      break;
    }
  }
  write_text(a.output, serialize_edge_list(h));
  std::cerr << a.op << ": n=" << h.order() << " m=" << h.size() << '\n';
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string paths = "2..14";
  std::string cycles = "3..16";
  std::string books = "1..4";
  std::uint64_t seed = default_seed;
  std::string out;
  std::string graph;
  std::size_t samples = 6;
  std::size_t max_n = default_max_order;
  unsigned jobs = 1;
};

struct SuiteResult {
  std::vector<VerificationRecord> records;
  std::vector<Counterexample> counterexamples;
};

std::vector<FamilySpec> family_specs(const VerifyArgs& a) {
  FamilySuite s;
  std::tie(s.path_lo, s.path_hi) = parse_range(a.paths);
  std::tie(s.cycle_lo, s.cycle_hi) = parse_range(a.cycles);
  std::tie(s.book_lo, s.book_hi) = parse_range(a.books);
  return family_suite_specs(s);
}

// Graphs for the proposition and conjecture suites.
std::vector<std::pair<std::string, Graph>> subjects(const VerifyArgs& a, bool wide) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!a.graph.empty()) {
    out.emplace_back(a.graph == "-" ? "stdin" : fs::path(a.graph).filename().string(),
                     read_graph(a.graph));
    return out;
  }
  if (!wide) {
    for (const auto& s : std::vector<FamilySpec>{cycle_spec(6), complete_spec(4), wheel_spec(5),
                                                 {Family::petersen, {}}, book_spec(3),
                                                 windmill_spec(3, 3)})
      out.emplace_back(s.label(), generate(s));
    return out;
  }
  const SolveOptions opts{a.max_n, 1};
  for (const auto& s : family_specs(a)) {
    auto g = generate(s);
    if (detail::solvable(g, opts))
      out.emplace_back(s.label(), std::move(g));
  }
  ConstructSuite cs;
  cs.include_large = false;
  for (const auto& d : construct_suite_descriptors(cs)) {
    auto g = build(d);
    if (detail::solvable(g, opts))
      out.emplace_back(d.label(), std::move(g));
  }
  return out;
}

SuiteResult run_suite(const std::string& suite, const VerifyArgs& a) {
  const SolveOptions opts{a.max_n, a.jobs};
  SuiteResult res;
  if (suite == "families") {
    res.records = verify_family(family_specs(a), opts);
  } else if (suite == "constructs") {
    res.records = verify_constructs(construct_suite_descriptors(), opts);
  } else if (suite == "propositions") {
    const auto graphs = subjects(a, true);
    auto batches = detail::parallel_map<std::vector<VerificationRecord>>(
        graphs.size(), a.jobs, [&](std::size_t i) {
          return check_propositions(graphs[i].second, graphs[i].first, a.seed, {a.max_n, 1});
        });
    for (auto& b : batches)
      res.records.insert(res.records.end(), b.begin(), b.end());
  } else if (suite == "conjectures") {
    for (const auto& [label, g] : subjects(a, false)) {
      auto rep = check_conjectures(g, label, a.samples, a.seed, opts);
      res.records.insert(res.records.end(), rep.records.begin(), rep.records.end());
      res.counterexamples.insert(res.counterexamples.end(), rep.counterexamples.begin(),
                                 rep.counterexamples.end());
    }
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return res;
}

int run_verify(const VerifyArgs& a) {
  const std::vector<std::string> suites =
      a.suite == "all" ? std::vector<std::string>{"families", "constructs", "propositions",
                                                  "conjectures"}
                       : std::vector<std::string>{a.suite};
  if (!a.out.empty())
    fs::create_directories(a.out);
  bool failed = false;
  for (const auto& suite : suites) {
    const auto res = run_suite(suite, a);
    const auto s = summarize(res.records);
    std::cout << suite << ": " << s.total << " records, " << s.match << " match, " << s.mismatch
              << " mismatch, " << s.bound_satisfied << " bound-satisfied, " << s.bound_violated
              << " bound-violated, " << s.no_oracle << " no-oracle, " << s.skipped << " skipped";
    if (!res.counterexamples.empty())
      std::cout << ", " << res.counterexamples.size() << " counterexamples";
    std::cout << '\n';
    for (const auto& r : res.records)
      if (r.fails())
        std::cerr << "  " << to_string(r.status) << ' ' << r.subject << '(' << r.params << ')'
                  << (r.vertex ? " v" + std::to_string(*r.vertex) : "") << ' '
                  << to_string(r.quantity) << " expected " << r.expected.str() << " observed "
                  << r.observed.str() << " [" << r.claim << "]\n";
    failed = failed || !s.ok();
    if (!a.out.empty()) {
      write_text((fs::path(a.out) / (suite + ".csv")).string(), records_to_csv(res.records));
      write_text((fs::path(a.out) / (suite + ".json")).string(),
                 verify_report_json(suite, a.seed, res.records, res.counterexamples).dump(2) +
                     "\n");
    }
  }
  return failed ? exit_mismatch : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total domination degree toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family graph as an edge list");
  gen_cmd->add_option("family", gen.family, "Family name")->required();
  gen_cmd->add_option("params", gen.params, "Integer parameters");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Total domination report for a graph");
  solve_cmd->add_option("input", solve.input, "Edge-list file, or - for stdin");
  solve_cmd->add_flag("--per-vertex", solve.per_vertex, "Print the per-vertex TDD table");
  solve_cmd->add_flag("--witness", solve.witness, "Print one minimum witness per vertex");
  auto* json_flag = solve_cmd->add_flag("--json", solve.json, "JSON output");
  solve_cmd->add_flag("--csv", solve.csv, "CSV output (per vertex)")->excludes(json_flag);
  solve_cmd->add_option("--max-n", solve.max_n, "Solver order cap")->capture_default_str();
  solve_cmd->add_option("--jobs", solve.jobs, "Worker threads")->capture_default_str();

  OpsArgs ops;
  auto* ops_cmd = app.add_subcommand("ops", "Apply a graph operation");
  ops_cmd->add_option("op", ops.op,
                      "union, join, composition, corona, cartesian, subdivision, degree_splitting")
      ->required();
  ops_cmd->add_option("inputs", ops.inputs, "Input edge-list files")->required();
  ops_cmd->add_option("-o,--output", ops.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("suite", verify.suite, "families, constructs, propositions, conjectures, all")
      ->required()
      ->check(CLI::IsMember({"families", "constructs", "propositions", "conjectures", "all"}));
  verify_cmd->add_option("--paths", verify.paths, "Path orders a..b")->capture_default_str();
  verify_cmd->add_option("--cycles", verify.cycles, "Cycle orders a..b")->capture_default_str();
  verify_cmd->add_option("--books", verify.books, "Book page counts a..b")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for sampled checks")->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "Subgraph samples per conjecture subject")
      ->capture_default_str();
  verify_cmd->add_option("--graph", verify.graph,
                         "Edge-list file for propositions/conjectures instead of the built-in set");
  verify_cmd->add_option("--out", verify.out, "Directory for CSV and JSON reports");
  verify_cmd->add_option("--max-n", verify.max_n, "Solver order cap")->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*gen_cmd)
      return run_gen(gen);
    if (*solve_cmd)
      return run_solve(solve);
    if (*ops_cmd)
      return run_ops(ops);
    return run_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_usage;
}
