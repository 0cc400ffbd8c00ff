#pragma once

/**
 * Oracle-vs-solver verification.
 *
 * Each check produces VerificationRecords. Proven claims are asserted: a
 * mismatch, or a violated bound on an asserted record, fails the run.
 * Claims without proofs (subgraph monotonicity of TDD and TDI) are logged
 * with asserted = false, and their violations become counterexamples that
 * carry enough data to be replayed.
 */

#include "totdom/constructs.hpp"
#include "totdom/edge_list.hpp"
#include "totdom/families.hpp"
#include "totdom/graph.hpp"
#include "totdom/oracles.hpp"
#include "totdom/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace totdom {

inline constexpr std::uint64_t default_seed = 20240;

enum class Quantity { tdd, gamma_t, upper_gamma_t, tdi, compliance, bound };
enum class Status { match, mismatch, bound_satisfied, bound_violated, no_oracle, skipped };

inline std::string_view to_string(Quantity q) {
  switch (q) {
  case Quantity::tdd:
    return "tdd";
  case Quantity::gamma_t:
    return "gamma_t";
  case Quantity::upper_gamma_t:
    return "upper_gamma_t";
  case Quantity::tdi:
    return "tdi";
  case Quantity::compliance:
    return "compliance";
  case Quantity::bound:
    return "bound";
  }
  return "?";
}

inline std::string_view to_string(Status s) {
  switch (s) {
  case Status::match:
    return "match";
  case Status::mismatch:
    return "mismatch";
  case Status::bound_satisfied:
    return "bound-satisfied";
  case Status::bound_violated:
    return "bound-violated";
  case Status::no_oracle:
    return "no-oracle";
  case Status::skipped:
    return "skipped";
  }
  return "?";
}

/// Expected or observed value in a record.
struct Value {
  enum class Kind { none, number, non_compliant, undefined, at_most, at_least, flag };

  Kind kind = Kind::none;
  std::size_t number = 0;

  static Value of(std::size_t v) { return {Kind::number, v}; }
  static Value of(const Tdd& t) { return t ? of(*t) : non_compliant(); }
  static Value non_compliant() { return {Kind::non_compliant, 0}; }
  static Value undefined() { return {Kind::undefined, 0}; }
  static Value at_most(std::size_t v) { return {Kind::at_most, v}; }
  static Value at_least(std::size_t v) { return {Kind::at_least, v}; }
  static Value flag(bool b) { return {Kind::flag, b ? 1U : 0U}; }
  static Value tdi(const std::optional<std::size_t>& t) { return t ? of(*t) : undefined(); }

  bool is_bound() const { return kind == Kind::at_most || kind == Kind::at_least; }

  std::string str() const {
    switch (kind) {
    case Kind::none:
      return "";
    case Kind::number:
      return std::to_string(number);
    case Kind::non_compliant:
      return "non_compliant";
    case Kind::undefined:
      return "undefined";
    case Kind::at_most:
      return "<=" + std::to_string(number);
    case Kind::at_least:
      return ">=" + std::to_string(number);
    case Kind::flag:
      return number ? "true" : "false";
    }
    return "";
  }

  friend bool operator==(const Value&, const Value&) = default;
};

/// Status for an expectation/observation pair.
inline Status judge(const Value& expected, const Value& observed) {
  using K = Value::Kind;
  if (expected.kind == K::none)
    return Status::no_oracle;
  if (expected.kind == K::at_most)
    return observed.kind == K::number && observed.number <= expected.number
               ? Status::bound_satisfied
               : Status::bound_violated;
  if (expected.kind == K::at_least)
    return observed.kind == K::number && observed.number >= expected.number
               ? Status::bound_satisfied
               : Status::bound_violated;
  return expected == observed ? Status::match : Status::mismatch;
}

struct VerificationRecord {
  std::string subject;
  std::string params;
  std::optional<Vertex> vertex;
  Quantity quantity = Quantity::tdd;
  Value expected;
  Value observed;
  Status status = Status::no_oracle;
  /// Which closed form or property the record checks.
  std::string claim;
  bool asserted = true;

  bool fails() const {
    return status == Status::mismatch || (asserted && status == Status::bound_violated);
  }
};

struct Summary {
  std::size_t total = 0;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t bound_satisfied = 0;
  std::size_t bound_violated = 0;
  std::size_t no_oracle = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;

  bool ok() const { return failures == 0; }
};

inline Summary summarize(const std::vector<VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.total;
    switch (r.status) {
    case Status::match:
      ++s.match;
      break;
    case Status::mismatch:
      ++s.mismatch;
      break;
    case Status::bound_satisfied:
      ++s.bound_satisfied;
      break;
    case Status::bound_violated:
      ++s.bound_violated;
      break;
    case Status::no_oracle:
      ++s.no_oracle;
      break;
    case Status::skipped:
      ++s.skipped;
      break;
    }
    if (r.fails())
      ++s.failures;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Deterministic randomness and worker fan-out.

namespace detail {

// Rejection sampling on raw engine output; stable across standard libraries,
// unlike std::uniform_int_distribution.
inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x = rng();
  while (x >= limit)
    x = rng();
  return static_cast<std::size_t>(x % b);
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; output order is by i.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<T> out(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        out[i] = fn(i);
    });
  workers.clear();
  return out;
}

inline std::string join_params(const std::vector<int>& params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(params[i]);
  }
  return s;
}

inline std::string construct_params(const ConstructDescriptor& d) {
  std::string s;
  for (std::size_t i = 0; i < d.operands.size(); ++i) {
    if (i)
      s += ',';
    s += d.operands[i].label();
  }
  return s;
}

struct Emitter {
  std::string subject;
  std::string params;
  std::vector<VerificationRecord>* out;

  void emit(std::optional<Vertex> vertex, Quantity q, Value expected, Value observed,
            std::string claim, bool asserted = true) const {
    VerificationRecord r;
    r.subject = subject;
    r.params = params;
    r.vertex = vertex;
    r.quantity = q;
    r.status = judge(expected, observed);
    r.expected = expected;
    r.observed = observed;
    r.claim = std::move(claim);
    r.asserted = asserted;
    out->push_back(std::move(r));
  }

  void note(Status status, std::string reason) const {
    VerificationRecord r;
    r.subject = subject;
    r.params = params;
    r.quantity = Quantity::compliance;
    r.status = status;
    r.claim = std::move(reason);
    out->push_back(std::move(r));
  }
};

// Records every oracle field against a report.
inline void compare_expectation(const Emitter& em, const OracleExpectation& e,
                                const DominationReport& r) {
  for (Vertex v = 0; v < r.order(); ++v) {
    const auto& x = e.per_vertex[v];
    const auto observed = Value::of(r.per_vertex_tdd[v]);
    switch (x.kind) {
    case Expect::Kind::exact:
      em.emit(v, Quantity::tdd, Value::of(x.value), observed, e.claim);
      break;
    case Expect::Kind::non_compliant:
      em.emit(v, Quantity::tdd, Value::non_compliant(), observed, e.claim);
      break;
    case Expect::Kind::at_most:
      // Bound claims are reported, not asserted.
      em.emit(v, Quantity::bound, Value::at_most(x.value), observed, e.claim, false);
      break;
    case Expect::Kind::unknown:
      em.emit(v, Quantity::tdd, Value{}, observed, e.claim);
      break;
    }
  }
  em.emit(std::nullopt, Quantity::gamma_t, e.gamma_t ? Value::of(*e.gamma_t) : Value{},
          Value::of(r.gamma_t), e.claim);
  em.emit(std::nullopt, Quantity::upper_gamma_t, Value{}, Value::of(r.upper_gamma_t), e.claim);
  em.emit(std::nullopt, Quantity::compliance, e.compliant ? Value::flag(*e.compliant) : Value{},
          Value::flag(r.compliant), e.claim);
}

inline bool solvable(const Graph& g, const SolveOptions& opts) {
  return g.order() > 0 && g.order() <= opts.max_order && !has_isolated_vertex(g);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Families.

/// Oracle-vs-solver records for one family instance.
inline std::vector<VerificationRecord> verify_family_instance(const FamilySpec& spec,
                                                              const SolveOptions& opts = {}) {
  std::vector<VerificationRecord> out;
  const detail::Emitter em{std::string(to_string(spec.family)), detail::join_params(spec.params),
                           &out};
  const Graph g = generate(spec);
  if (g.order() > opts.max_order) {
    em.note(Status::skipped, "order " + std::to_string(g.order()) + " above solver cap " +
                                 std::to_string(opts.max_order));
    return out;
  }
  const auto oracle = expected_tdd(spec);
  if (const auto* none = std::get_if<NoOracle>(&oracle)) {
    em.note(Status::no_oracle, none->reason);
    return out;
  }
  const auto report = sweep_minimal_tds(g, opts);
  detail::compare_expectation(em, std::get<OracleExpectation>(oracle), report);

  const auto tdi = expected_tdi(spec);
  Value expected_tdi_value;
  if (const auto* v = std::get_if<std::size_t>(&tdi))
    expected_tdi_value = Value::of(*v);
  else if (std::holds_alternative<TdiUndefined>(tdi))
    expected_tdi_value = Value::undefined();
  em.emit(std::nullopt, Quantity::tdi, expected_tdi_value, Value::tdi(report.tdi),
          std::string(to_string(spec.family)) + "-tdi");
  return out;
}

inline std::vector<VerificationRecord> verify_family(const std::vector<FamilySpec>& specs,
                                                     const SolveOptions& opts = {}) {
  auto inner = opts;
  inner.jobs = 1;
  auto per_instance = detail::parallel_map<std::vector<VerificationRecord>>(
      specs.size(), opts.jobs, [&](std::size_t i) { return verify_family_instance(specs[i], inner); });
  std::vector<VerificationRecord> out;
  for (auto& batch : per_instance)
    out.insert(out.end(), batch.begin(), batch.end());
  return out;
}

/// One-parameter family over an inclusive range.
inline std::vector<FamilySpec> family_range(Family f, int lo, int hi) {
  std::vector<FamilySpec> out;
  for (int n = lo; n <= hi; ++n)
    out.push_back({f, {n}});
  return out;
}

struct FamilySuite {
  int path_lo = 2, path_hi = 14;
  int cycle_lo = 3, cycle_hi = 16;
  int complete_lo = 2, complete_hi = 8;
  int book_lo = 1, book_hi = 4;
  int wheel_lo = 3, wheel_hi = 8;
};

inline std::vector<FamilySpec> family_suite_specs(const FamilySuite& s = {}) {
  std::vector<FamilySpec> specs;
  auto append = [&](std::vector<FamilySpec> more) {
    specs.insert(specs.end(), more.begin(), more.end());
  };
  append(family_range(Family::path, s.path_lo, s.path_hi));
  append(family_range(Family::cycle, s.cycle_lo, s.cycle_hi));
  append(family_range(Family::complete, s.complete_lo, s.complete_hi));
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      specs.push_back(complete_bipartite_spec(m, n));
  append(family_range(Family::star, 1, 6));
  append(family_range(Family::wheel, s.wheel_lo, s.wheel_hi));
  append(family_range(Family::book, s.book_lo, s.book_hi));
  for (int p = 2; p <= 4; ++p)
    for (int q = 2; q <= 3; ++q)
      specs.push_back(windmill_spec(p, q));
  specs.push_back(kragujevac_spec({1, 1}));
  specs.push_back(kragujevac_spec({1, 2}));
  specs.push_back(kragujevac_spec({2, 2}));
  specs.push_back(kragujevac_spec({1, 1, 1}));
  specs.push_back({Family::petersen, {}});
  specs.push_back({Family::grotzsch, {}});
  specs.push_back({Family::herschel, {}});
  return specs;
}

// ---------------------------------------------------------------------------
// Constructs.

inline std::vector<VerificationRecord> verify_construct_instance(const ConstructDescriptor& d,
                                                                 const SolveOptions& opts = {}) {
  std::vector<VerificationRecord> out;
  const detail::Emitter em{std::string(to_string(d.op)), detail::construct_params(d), &out};
  const Graph h = build(d);
  if (h.order() > opts.max_order) {
    em.note(Status::skipped, "order " + std::to_string(h.order()) + " above solver cap " +
                                 std::to_string(opts.max_order));
    return out;
  }
  std::vector<std::optional<ComponentFacts>> facts;
  for (const auto& operand : d.operands) {
    const Graph g = generate(operand);
    if (!detail::solvable(g, opts)) {
      facts.emplace_back();
      continue;
    }
    facts.push_back(ComponentFacts{sweep_minimal_tds(g, opts), domination_degrees(g, opts)});
  }
  const auto oracle = expected_construct(d, facts);
  if (const auto* none = std::get_if<NoOracle>(&oracle)) {
    em.note(Status::no_oracle, none->reason);
    return out;
  }
  const auto& e = std::get<OracleExpectation>(oracle);
  const auto report = sweep_minimal_tds(h, opts);
  detail::compare_expectation(em, e, report);
  em.emit(std::nullopt, Quantity::tdi, e.tdi ? Value::of(*e.tdi) : Value{},
          Value::tdi(report.tdi), e.claim);
  return out;
}

inline std::vector<VerificationRecord> verify_constructs(
    const std::vector<ConstructDescriptor>& descriptors, const SolveOptions& opts = {}) {
  auto inner = opts;
  inner.jobs = 1;
  auto per_instance = detail::parallel_map<std::vector<VerificationRecord>>(
      descriptors.size(), opts.jobs,
      [&](std::size_t i) { return verify_construct_instance(descriptors[i], inner); });
  std::vector<VerificationRecord> out;
  for (auto& batch : per_instance)
    out.insert(out.end(), batch.begin(), batch.end());
  return out;
}

struct ConstructSuite {
  int subdivision_lo = 3, subdivision_hi = 5;
  int splitting_lo = 4, splitting_hi = 10;
  /// Adds the 22- and 24-vertex bound fixtures built on kragujevac(2,2).
  bool include_large = true;
};

inline std::vector<ConstructDescriptor> construct_suite_descriptors(const ConstructSuite& s = {}) {
  using C = Construct;
  const auto P = path_spec;
  const auto K = complete_spec;
  std::vector<ConstructDescriptor> d{
      {C::disjoint_union, {P(5), P(5)}},
      {C::disjoint_union, {cycle_spec(4), P(3)}},
      {C::disjoint_union, {K(3), P(6)}},
      {C::join, {P(3), P(3)}},
      {C::join, {K(1), cycle_spec(4)}},
      {C::join, {P(2), cycle_spec(5)}},
      {C::composition, {cycle_spec(4), K(2)}},
      {C::composition, {P(5), K(2)}},
      {C::composition, {P(3), K(3)}},
      {C::composition, {P(4), K(2)}},
      {C::composition, {P(7), K(2)}},
      {C::corona, {cycle_spec(3), K(2)}},
      {C::corona, {P(3), K(2)}},
      {C::corona, {P(2), cycle_spec(4)}},
      {C::corona, {P(3), P(4)}},
      {C::corona, {P(2), P(7)}},
  };
  if (s.include_large) {
    d.push_back({C::composition, {kragujevac_spec({2, 2}), K(2)}});
    d.push_back({C::corona, {P(2), kragujevac_spec({2, 2})}});
  }
  for (int n = s.subdivision_lo; n <= s.subdivision_hi; ++n)
    d.push_back({C::subdivision, {K(n)}});
  for (int n = s.splitting_lo; n <= s.splitting_hi; ++n)
    d.push_back({C::degree_splitting, {P(n)}});
  return d;
}

// ---------------------------------------------------------------------------
// Proven propositions on an arbitrary graph.

inline std::vector<VerificationRecord> check_propositions(const Graph& g, const std::string& label,
                                                          std::uint64_t seed = default_seed,
                                                          const SolveOptions& opts = {}) {
  std::vector<VerificationRecord> out;
  const detail::Emitter em{label, "n=" + std::to_string(g.order()), &out};
  const auto report = sweep_minimal_tds(g, opts);
  const auto dd = domination_degrees(g, opts);
  const auto n = g.order();

  std::optional<std::size_t> metric_floor;
  if (is_connected(g)) {
    const auto rd = radius_diameter(g);
    const auto delta = g.max_degree();
    metric_floor = std::max({(n + delta - 1) / delta, rd.radius, (rd.diameter + 2) / 2});
  }

  for (Vertex v = 0; v < n; ++v) {
    const auto& t = report.per_vertex_tdd[v];
    if (!t)
      continue;
    const auto obs = Value::of(*t);
    em.emit(v, Quantity::bound, Value::at_least(report.gamma_t), obs, "tdd-at-least-gamma-t");
    em.emit(v, Quantity::bound, Value::at_most(report.upper_gamma_t), obs,
            "tdd-at-most-upper-gamma-t");
    em.emit(v, Quantity::bound, Value::at_least(dd.per_vertex[v]), obs,
            "tdd-at-least-domination-degree");
    if (metric_floor)
      em.emit(v, Quantity::bound, Value::at_least(*metric_floor), obs, "tdd-metric-lower-bound");
  }

  if (report.tdi) {
    em.emit(std::nullopt, Quantity::tdi, Value::at_least(report.gamma_t * n),
            Value::of(*report.tdi), "tdi-at-least-n-gamma-t");
    em.emit(std::nullopt, Quantity::tdi, Value::at_most(report.upper_gamma_t * n),
            Value::of(*report.tdi), "tdi-at-most-n-upper-gamma-t");
    em.emit(std::nullopt, Quantity::tdi, Value::at_least(dd.index()), Value::of(*report.tdi),
            "tdi-at-least-domination-index");
  }

  std::mt19937_64 rng(seed);

  // Edge deletion never lowers gamma_t, on up to three sampled edges.
  auto edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[detail::uniform_below(rng, i)]);
  std::size_t sampled = 0;
  for (const auto& e : edges) {
    if (sampled == 3)
      break;
    const Graph smaller = without_edge(g, e);
    if (has_isolated_vertex(smaller))
      continue;
    ++sampled;
    const detail::Emitter edge_em{label,
                                  "n=" + std::to_string(n) + ";deleted=" +
                                      std::to_string(e.first) + "-" + std::to_string(e.second),
                                  &out};
    edge_em.emit(std::nullopt, Quantity::gamma_t, Value::at_least(report.gamma_t),
                 Value::of(gamma_t(smaller, opts)), "edge-deletion-gamma-t");
  }

  // Relabeling leaves TDI and every TDD unchanged.
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v)
      perm[v] = v;
    for (std::size_t i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[detail::uniform_below(rng, i)]);
    const auto permuted = sweep_minimal_tds(relabel(g, perm), opts);
    const detail::Emitter perm_em{label, "n=" + std::to_string(n) + ";perm=" + std::to_string(trial),
                                  &out};
    perm_em.emit(std::nullopt, Quantity::tdi, Value::tdi(report.tdi), Value::tdi(permuted.tdi),
                 "relabel-invariant-tdi");
    std::size_t moved = 0;
    for (Vertex v = 0; v < n; ++v)
      if (permuted.per_vertex_tdd[perm[v]] != report.per_vertex_tdd[v])
        ++moved;
    perm_em.emit(std::nullopt, Quantity::tdd, Value::of(std::size_t{0}), Value::of(moved),
                 "relabel-invariant-tdd-changes");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unproven subgraph claims.

/// Replayable evidence for a violated subgraph claim.
struct Counterexample {
  std::string subject;
  std::string claim;
  std::optional<Vertex> vertex;
  std::string graph;    // edge-list text of G
  std::string subgraph; // edge-list text of the spanning subgraph H
  std::optional<std::size_t> value_in_graph;
  std::optional<std::size_t> value_in_subgraph;
  std::vector<Vertex> witness_in_graph;
  std::vector<Vertex> witness_in_subgraph;
};

struct ConjectureReport {
  std::vector<VerificationRecord> records;
  std::vector<Counterexample> counterexamples;
};

/// Compares G against one spanning subgraph H: TDD_G(v) <= TDD_H(v) for every
/// vertex and TDI(G) <= TDI(H), both only when G and H are compliant.
inline void compare_spanning(const Graph& g, const Graph& h, const std::string& label,
                             const std::string& params, ConjectureReport& out,
                             const SolveOptions& opts = {}) {
  const detail::Emitter em{label, params, &out.records};
  if (h.order() != g.order() || has_isolated_vertex(h)) {
    em.note(Status::no_oracle, "subgraph is not spanning or has an isolated vertex");
    return;
  }
  const auto rg = sweep_minimal_tds(g, opts);
  const auto rh = sweep_minimal_tds(h, opts);
  if (!rg.compliant || !rh.compliant) {
    em.note(Status::no_oracle, !rg.compliant ? "graph not compliant" : "subgraph not compliant");
    return;
  }
  auto witness = [](const DominationReport& r, Vertex v) {
    return r.certificates[v] ? r.certificates[v]->witness.members() : std::vector<Vertex>{};
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    em.emit(v, Quantity::bound, Value::at_most(*rh.per_vertex_tdd[v]),
            Value::of(*rg.per_vertex_tdd[v]), "subgraph-tdd-monotone", false);
    if (out.records.back().status == Status::bound_violated)
      out.counterexamples.push_back({label, "subgraph-tdd-monotone", v, serialize_edge_list(g),
                                     serialize_edge_list(h), rg.per_vertex_tdd[v],
                                     rh.per_vertex_tdd[v], witness(rg, v), witness(rh, v)});
  }
  em.emit(std::nullopt, Quantity::tdi, Value::at_most(*rh.tdi), Value::of(*rg.tdi),
          "spanning-subgraph-tdi", false);
  if (out.records.back().status == Status::bound_violated)
    out.counterexamples.push_back({label, "spanning-subgraph-tdi", std::nullopt,
                                   serialize_edge_list(g), serialize_edge_list(h), rg.tdi, rh.tdi,
                                   {}, {}});
}

/// Samples spanning subgraphs by deleting one to three random non-bridge
/// edges (so minimum degree stays >= 1) and logs the subgraph claims.
inline ConjectureReport check_conjectures(const Graph& g, const std::string& label,
                                          std::size_t samples, std::uint64_t seed = default_seed,
                                          const SolveOptions& opts = {}) {
  ConjectureReport out;
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Graph h = g;
    std::string deleted;
    const auto target = 1 + detail::uniform_below(rng, 3);
    for (std::size_t step = 0; step < target; ++step) {
      std::vector<Edge> candidates;
      for (const auto& e : h.edges())
        if (!is_bridge(h, e))
          candidates.push_back(e);
      if (candidates.empty())
        break;
      const auto e = candidates[detail::uniform_below(rng, candidates.size())];
      h = without_edge(h, e);
      deleted += (deleted.empty() ? "" : " ") + std::to_string(e.first) + "-" +
                 std::to_string(e.second);
    }
    const std::string params = "sample=" + std::to_string(s) + ";deleted=" + deleted;
    if (deleted.empty()) {
      detail::Emitter{label, params, &out.records}.note(Status::no_oracle,
                                                        "no non-bridge edge to delete");
      continue;
    }
    compare_spanning(g, h, label, params, out, opts);
  }
  return out;
}

} // namespace totdom
