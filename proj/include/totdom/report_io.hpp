#pragma once

// Text, CSV and JSON renderings of solver reports and verification records.
// All output is deterministic: fixed key order, no timestamps.

#include "totdom/solver.hpp"
#include "totdom/verify.hpp"

#include <json.hpp>

#include <cstddef>
#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace totdom {

namespace detail {

inline std::string join_vertices(const std::vector<Vertex>& vs, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(vs[i]);
  }
  return s;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + '"';
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace detail

inline nlohmann::ordered_json report_to_json(const DominationReport& r, bool with_witnesses) {
  nlohmann::ordered_json j;
  j["order"] = r.order();
  j["gamma_t"] = r.gamma_t;
  j["upper_gamma_t"] = r.upper_gamma_t;
  j["delta_td"] = detail::optional_json(r.delta_td);
  j["Delta_td"] = detail::optional_json(r.Delta_td);
  j["compliant"] = r.compliant;
  j["tdi"] = r.tdi ? nlohmann::ordered_json(*r.tdi) : nlohmann::ordered_json("undefined");
  j["is_tdr"] = r.is_tdr;
  auto tdd = nlohmann::ordered_json::array();
  for (const auto& t : r.per_vertex_tdd)
    tdd.push_back(t ? nlohmann::ordered_json(*t) : nlohmann::ordered_json("non_compliant"));
  j["per_vertex_tdd"] = std::move(tdd);
  j["non_compliant_vertices"] = r.non_compliant_vertices();
  if (with_witnesses) {
    auto w = nlohmann::ordered_json::array();
    for (const auto& c : r.certificates)
      w.push_back(c ? nlohmann::ordered_json(c->witness.members()) : nlohmann::ordered_json(nullptr));
    j["witnesses"] = std::move(w);
  }
  return j;
}

/// One row per vertex: vertex,tdd,compliant,witness (witness members space-separated).
inline std::string report_to_csv(const DominationReport& r) {
  std::string out = "vertex,tdd,compliant,witness\n";
  for (Vertex v = 0; v < r.order(); ++v) {
    const auto& t = r.per_vertex_tdd[v];
    out += std::to_string(v) + ',' + (t ? std::to_string(*t) : "non_compliant") + ',' +
           (t ? "true" : "false") + ',' +
           (r.certificates[v] ? detail::join_vertices(r.certificates[v]->witness.members(), " ")
                              : "") +
           '\n';
  }
  return out;
}

inline std::string report_to_table(const DominationReport& r, bool per_vertex, bool witnesses) {
  std::ostringstream os;
  os << "order          " << r.order() << '\n';
  os << "gamma_t        " << r.gamma_t << '\n';
  os << "upper_gamma_t  " << r.upper_gamma_t << '\n';
  os << "delta_td       " << (r.delta_td ? std::to_string(*r.delta_td) : "-") << '\n';
  os << "Delta_td       " << (r.Delta_td ? std::to_string(*r.Delta_td) : "-") << '\n';
  os << "compliant      " << (r.compliant ? "true" : "false") << '\n';
  if (r.tdi)
    os << "TDI            " << *r.tdi << '\n';
  else
    os << "TDI            undefined (non-compliant vertices: "
       << detail::join_vertices(r.non_compliant_vertices(), ", ") << ")\n";
  os << "is_tdr         " << (r.is_tdr ? "true" : "false") << '\n';
  if (per_vertex || witnesses) {
    os << "\nvertex  tdd";
    if (witnesses)
      os << "  witness";
    os << '\n';
    for (Vertex v = 0; v < r.order(); ++v) {
      const auto& t = r.per_vertex_tdd[v];
      std::string cell = t ? std::to_string(*t) : "non_compliant";
      os << std::to_string(v) << std::string(8 - std::min<std::size_t>(7, std::to_string(v).size()), ' ')
         << cell;
      if (witnesses && r.certificates[v])
        os << "  {" << detail::join_vertices(r.certificates[v]->witness.members(), ",") << '}';
      os << '\n';
    }
  }
  return os.str();
}

inline std::string records_to_csv(const std::vector<VerificationRecord>& records) {
  std::string out = "subject,params,vertex,quantity,expected,observed,status,claim\n";
  for (const auto& r : records) {
    out += detail::csv_field(r.subject) + ',' + detail::csv_field(r.params) + ',' +
           (r.vertex ? std::to_string(*r.vertex) : "") + ',' + std::string(to_string(r.quantity)) +
           ',' + detail::csv_field(r.expected.str()) + ',' + detail::csv_field(r.observed.str()) +
           ',' + std::string(to_string(r.status)) + ',' + detail::csv_field(r.claim) + '\n';
  }
  return out;
}

inline nlohmann::ordered_json summary_to_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["total"] = s.total;
  j["match"] = s.match;
  j["mismatch"] = s.mismatch;
  j["bound_satisfied"] = s.bound_satisfied;
  j["bound_violated"] = s.bound_violated;
  j["no_oracle"] = s.no_oracle;
  j["skipped"] = s.skipped;
  j["failures"] = s.failures;
  return j;
}

inline nlohmann::ordered_json records_to_json(const std::vector<VerificationRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["subject"] = r.subject;
    j["params"] = r.params;
    j["vertex"] = detail::optional_json(r.vertex);
    j["quantity"] = to_string(r.quantity);
    j["expected"] = r.expected.str();
    j["observed"] = r.observed.str();
    j["status"] = to_string(r.status);
    j["claim"] = r.claim;
    j["asserted"] = r.asserted;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline nlohmann::ordered_json counterexamples_to_json(const std::vector<Counterexample>& cs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cs) {
    nlohmann::ordered_json j;
    j["subject"] = c.subject;
    j["claim"] = c.claim;
    j["vertex"] = detail::optional_json(c.vertex);
    j["graph"] = c.graph;
    j["subgraph"] = c.subgraph;
    j["value_in_graph"] = detail::optional_json(c.value_in_graph);
    j["value_in_subgraph"] = detail::optional_json(c.value_in_subgraph);
    j["witness_in_graph"] = c.witness_in_graph;
    j["witness_in_subgraph"] = c.witness_in_subgraph;
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Full verify report: {"suite", "seed", "summary", "records", "counterexamples"}.
inline nlohmann::ordered_json verify_report_json(const std::string& suite, std::uint64_t seed,
                                                 const std::vector<VerificationRecord>& records,
                                                 const std::vector<Counterexample>& counterexamples) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["summary"] = summary_to_json(summarize(records));
  j["records"] = records_to_json(records);
  j["counterexamples"] = counterexamples_to_json(counterexamples);
  return j;
}

} // namespace totdom
