#pragma once

/**
 * Exact total-domination engine.
 *
 * Everything here is enumeration over single-word vertex masks, so the
 * solver accepts graphs of order at most SolveOptions::max_order (default
 * 24, hard limit 63). Results are defined by the order
 *
 *     (cardinality ascending, mask value ascending)
 *
 * over minimal total dominating sets: the TDD witness of a vertex is the
 * first minimal TDS containing it in that order. The full sweep splits the
 * mask range across workers and merges partial results by that same
 * (size, mask) minimum, so reports do not depend on the worker count.
 */

#include "totdom/error.hpp"
#include "totdom/graph.hpp"
#include "totdom/vertex_set.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace totdom {

inline constexpr std::size_t default_max_order = 24;
inline constexpr std::size_t hard_max_order = 63;

struct SolveOptions {
  std::size_t max_order = default_max_order;
  unsigned jobs = 1;
};

/// Total domination degree of one vertex; nullopt marks a non-compliant vertex.
using Tdd = std::optional<std::size_t>;

/// A minimal TDS containing `vertex` whose cardinality is the vertex's TDD.
struct Certificate {
  Vertex vertex = 0;
  VertexSet witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct DominationReport {
  std::vector<Tdd> per_vertex_tdd;
  std::vector<std::optional<Certificate>> certificates;
  std::size_t gamma_t = 0;
  std::size_t upper_gamma_t = 0;
  /// Min / max TDD over compliant vertices.
  std::optional<std::size_t> delta_td;
  std::optional<std::size_t> Delta_td;
  bool compliant = false;
  /// Sum of TDDs; only defined on compliant graphs.
  std::optional<std::size_t> tdi;
  bool is_tdr = false;

  std::size_t order() const noexcept { return per_vertex_tdd.size(); }

  std::vector<Vertex> non_compliant_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < per_vertex_tdd.size(); ++v)
      if (!per_vertex_tdd[v])
        out.push_back(v);
    return out;
  }

  friend bool operator==(const DominationReport&, const DominationReport&) = default;
};

// ---------------------------------------------------------------------------
// Predicates on arbitrary-order graphs.

inline void require_no_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).empty())
      throw IsolatedVertexError("total domination undefined: vertex " + std::to_string(v) +
                                " is isolated");
}

/// Every vertex (members included) has a neighbor in s.
inline bool is_tds(const Graph& g, const VertexSet& s) {
  require_no_isolated_vertex(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.neighbors(v).intersects(s))
      return false;
  return true;
}

namespace detail {

// True iff every u in s has some w in rows(u) whose row meets s only in u.
template <typename RowFn>
bool every_member_has_private(const VertexSet& s, RowFn row) {
  bool ok = true;
  s.for_each([&](Vertex u) {
    if (!ok)
      return;
    bool found = false;
    row(u).for_each([&](Vertex w) {
      if (found)
        return;
      const auto hit = row(w) & s;
      if (hit.count() == 1 && hit.contains(u))
        found = true;
    });
    ok = found;
  });
  return ok;
}

} // namespace detail

/// is_tds(s) and no u in s can be dropped; checked through open private
/// neighbors (some w with N(w) & s == {u}).
inline bool is_minimal_tds(const Graph& g, const VertexSet& s) {
  if (!is_tds(g, s))
    return false;
  return detail::every_member_has_private(
      s, [&](Vertex v) -> const VertexSet& { return g.neighbors(v); });
}

/// N[s] = V. Isolated vertices are fine.
inline bool is_ds(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!s.contains(v) && !g.neighbors(v).intersects(s))
      return false;
  return true;
}

/// is_ds(s) and every u in s has a closed private neighbor.
inline bool is_minimal_ds(const Graph& g, const VertexSet& s) {
  if (!is_ds(g, s))
    return false;
  return detail::every_member_has_private(s, [&](Vertex v) { return g.closed_neighbors(v); });
}

// ---------------------------------------------------------------------------
// Mask engine.

namespace detail {

inline Mask low_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Accepts exactly the minimal covers: sets s whose rows cover the universe and
// where every member owns a vertex covered by it alone. With open rows this
// is "minimal TDS"; with closed rows it is "minimal DS".
class MinimalCover {
public:
  MinimalCover(std::vector<Mask> rows, std::size_t n) : rows_(std::move(rows)), full_(low_mask(n)) {}

  bool covers(Mask s) const {
    Mask once = 0;
    for_each_bit(s, [&](Vertex u) { once |= rows_[u]; });
    return once == full_;
  }

  bool accepts(Mask s) const {
    Mask once = 0;
    Mask twice = 0;
    for_each_bit(s, [&](Vertex u) {
      twice |= once & rows_[u];
      once |= rows_[u];
    });
    if (once != full_)
      return false;
    const Mask exact = once & ~twice;
    Mask rest = s;
    while (rest) {
      const auto u = static_cast<Vertex>(std::countr_zero(rest));
      if ((rows_[u] & exact) == 0)
        return false;
      rest &= rest - 1;
    }
    return true;
  }

private:
  std::vector<Mask> rows_;
  Mask full_;
};

inline MinimalCover total_cover(const Graph& g) { return {g.adjacency_masks(), g.order()}; }

inline MinimalCover closed_cover(const Graph& g) {
  auto rows = g.adjacency_masks();
  for (Vertex v = 0; v < rows.size(); ++v)
    rows[v] |= Mask{1} << v;
  return {std::move(rows), g.order()};
}

inline void check_cap(const Graph& g, const SolveOptions& opts) {
  if (opts.max_order > hard_max_order)
    throw ParameterError("solver cap " + std::to_string(opts.max_order) +
                         " exceeds the hard limit of " + std::to_string(hard_max_order));
  if (g.order() > opts.max_order)
    throw CapExceededError("graph has " + std::to_string(g.order()) +
                           " vertices, above the solver cap of " +
                           std::to_string(opts.max_order) + " (raise it with --max-n)");
}

inline void check_total(const Graph& g, const SolveOptions& opts) {
  if (g.order() == 0)
    throw GraphError("total domination needs at least one vertex");
  require_no_isolated_vertex(g);
  check_cap(g, opts);
}

struct Best {
  std::size_t size = 0; // 0: none seen
  Mask witness = 0;

  bool improves_on(const Best& other) const {
    if (size == 0)
      return false;
    if (other.size == 0)
      return true;
    return size < other.size || (size == other.size && witness < other.witness);
  }
};

// Per-worker partial result. Merging is a pointwise (size, mask) minimum plus
// global min / max cardinality, hence associative and commutative.
struct SweepPartial {
  std::size_t min_size = std::numeric_limits<std::size_t>::max();
  std::size_t max_size = 0;
  std::vector<Best> best;

  explicit SweepPartial(std::size_t n) : best(n) {}

  void record(Mask s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    min_size = std::min(min_size, k);
    max_size = std::max(max_size, k);
    const Best candidate{k, s};
    for_each_bit(s, [&](Vertex u) {
      if (candidate.improves_on(best[u]))
        best[u] = candidate;
    });
  }

  void merge(const SweepPartial& other) {
    min_size = std::min(min_size, other.min_size);
    max_size = std::max(max_size, other.max_size);
    for (std::size_t v = 0; v < best.size(); ++v)
      if (other.best[v].improves_on(best[v]))
        best[v] = other.best[v];
  }
};

// Visits every nonempty mask of an n-bit universe, in parallel chunks.
inline SweepPartial sweep_all(const MinimalCover& cover, std::size_t n, unsigned jobs) {
  const Mask end = n == 0 ? 1 : (n >= 64 ? ~Mask{0} : Mask{1} << n);
  jobs = std::max(1U, jobs);
  const Mask chunk_count = std::min<Mask>(end, Mask{jobs} * 16);
  const Mask chunk_len = (end + chunk_count - 1) / chunk_count;

  auto scan = [&](Mask lo, Mask hi, SweepPartial& acc) {
    for (Mask s = std::max<Mask>(lo, 1); s < hi; ++s)
      if (cover.accepts(s))
        acc.record(s);
  };

  SweepPartial total(n);
  if (jobs == 1) {
    scan(0, end, total);
    return total;
  }
  std::vector<SweepPartial> partials(jobs, SweepPartial(n));
  std::atomic<Mask> next_chunk{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (Mask c = next_chunk++; c < chunk_count; c = next_chunk++) {
          const Mask lo = c * chunk_len;
          const Mask hi = std::min(end, lo + chunk_len);
          scan(lo, hi, partials[w]);
        }
      });
  }
  for (const auto& p : partials)
    total.merge(p);
  return total;
}

// Inserts a fixed bit at position v into a mask over the other n-1 positions.
// Order preserving, so lexicographic order of the (k-1)-subsets carries over.
inline Mask insert_bit(Mask x, Vertex v) {
  const Mask low = x & low_mask(v);
  return low | ((x >> v) << (v + 1)) | (Mask{1} << v);
}

// First k-subset containing v (k ascending, mask ascending) accepted by pred.
template <typename Pred>
std::optional<Mask> first_containing(std::size_t n, Vertex v, std::size_t min_k, Pred&& pred) {
  for (std::size_t k = std::max<std::size_t>(min_k, 1); k <= n; ++k) {
    if (k == 1) {
      const Mask s = Mask{1} << v;
      if (pred(s))
        return s;
      continue;
    }
    for (Mask x = low_mask(k - 1); x != 0; x = next_same_popcount(x, n - 1)) {
      const Mask s = insert_bit(x, v);
      if (pred(s))
        return s;
    }
  }
  return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Public solver API.

/// Enumerates every vertex subset and aggregates the minimal TDSs into a
/// full report with per-vertex certificates.
inline DominationReport sweep_minimal_tds(const Graph& g, const SolveOptions& opts = {}) {
  detail::check_total(g, opts);
  const auto n = g.order();
  const auto partial = detail::sweep_all(detail::total_cover(g), n, opts.jobs);

  DominationReport r;
  r.per_vertex_tdd.resize(n);
  r.certificates.resize(n);
  r.gamma_t = partial.min_size;
  r.upper_gamma_t = partial.max_size;
  r.compliant = true;
  std::size_t sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& b = partial.best[v];
    if (b.size == 0) {
      r.compliant = false;
      continue;
    }
    r.per_vertex_tdd[v] = b.size;
    r.certificates[v] = Certificate{v, VertexSet::from_mask(n, b.witness)};
    sum += b.size;
    r.delta_td = std::min(r.delta_td.value_or(b.size), b.size);
    r.Delta_td = std::max(r.Delta_td.value_or(b.size), b.size);
  }
  if (r.compliant) {
    r.tdi = sum;
    r.is_tdr = r.delta_td == r.Delta_td;
  }
  return r;
}

struct TddResult {
  Tdd value;
  std::optional<Certificate> certificate;
};

/// TDD of one vertex, stopping at the first size that admits a minimal TDS
/// containing it. Agrees with sweep_minimal_tds, witness included.
inline TddResult tdd(const Graph& g, Vertex v, const SolveOptions& opts = {}) {
  detail::check_total(g, opts);
  g.neighbors(v); // range check
  const auto cover = detail::total_cover(g);
  const auto n = g.order();
  const auto hit = detail::first_containing(n, v, 2, [&](Mask s) { return cover.accepts(s); });
  if (!hit)
    return {};
  return {static_cast<std::size_t>(std::popcount(*hit)),
          Certificate{v, VertexSet::from_mask(n, *hit)}};
}

/// Minimum cardinality of a TDS.
inline std::size_t gamma_t(const Graph& g, const SolveOptions& opts = {}) {
  detail::check_total(g, opts);
  const auto n = g.order();
  const auto cover = detail::total_cover(g);
  for (std::size_t k = 2; k <= n; ++k)
    for (Mask s = detail::low_mask(k); s != 0; s = next_same_popcount(s, n))
      if (cover.covers(s))
        return k;
  return n; // unreachable for graphs without isolated vertices
}

/// Maximum cardinality of a minimal TDS.
inline std::size_t upper_gamma_t(const Graph& g, const SolveOptions& opts = {}) {
  detail::check_total(g, opts);
  const auto n = g.order();
  const auto cover = detail::total_cover(g);
  for (std::size_t k = n; k >= 2; --k)
    for (Mask s = detail::low_mask(k); s != 0; s = next_same_popcount(s, n))
      if (cover.accepts(s))
        return k;
  return 0;
}

struct DominationDegreeResult {
  std::size_t value = 0;
  VertexSet witness;
};

/// Size of the smallest minimal dominating set containing v. Always defined.
inline DominationDegreeResult domination_degree(const Graph& g, Vertex v,
                                                const SolveOptions& opts = {}) {
  detail::check_cap(g, opts);
  g.neighbors(v);
  const auto cover = detail::closed_cover(g);
  const auto hit =
      detail::first_containing(g.order(), v, 1, [&](Mask s) { return cover.accepts(s); });
  // A maximal independent set through v is a minimal dominating set.
  return {static_cast<std::size_t>(std::popcount(*hit)), VertexSet::from_mask(g.order(), *hit)};
}

struct DominationDegrees {
  std::vector<std::size_t> per_vertex;
  std::size_t gamma = 0;

  /// Domination index: sum of domination degrees.
  std::size_t index() const {
    std::size_t s = 0;
    for (auto d : per_vertex)
      s += d;
    return s;
  }
};

/// Domination degree of every vertex from one sweep.
inline DominationDegrees domination_degrees(const Graph& g, const SolveOptions& opts = {}) {
  detail::check_cap(g, opts);
  const auto n = g.order();
  DominationDegrees out;
  if (n == 0)
    return out;
  const auto partial = detail::sweep_all(detail::closed_cover(g), n, opts.jobs);
  out.gamma = partial.min_size;
  for (const auto& b : partial.best)
    out.per_vertex.push_back(b.size);
  return out;
}

} // namespace totdom
