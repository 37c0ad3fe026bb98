#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hyturan/io.hpp"

namespace hyturan {

using json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::size_t as_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ValidationError(std::string("hypergraph JSON: '") + what + "' must be a nonnegative integer");
  return j.get<std::size_t>();
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json vertex_list(std::span<const Vertex> vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

void emit(const json& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string inner(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(it.key()).dump() + ": ";
        emit(it.value(), out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
      if (j.empty() || flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          emit(j[i], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        emit(j[i], out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Hypergraph hypergraph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(column),
                     line, column);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("r") || !doc.contains("edges"))
    throw ValidationError("hypergraph JSON needs an object with n, r and edges");
  const std::size_t n = as_count(doc["n"], "n");
  const std::size_t r = as_count(doc["r"], "r");
  if (!doc["edges"].is_array()) throw ValidationError("hypergraph JSON: 'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array()) throw ValidationError("hypergraph JSON: every edge must be an array");
    Edge edge;
    for (const auto& v : e) edge.push_back(static_cast<Vertex>(as_count(v, "vertex")));
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, r, std::move(edges));
}

json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (std::size_t j = 0; j < h.size(); ++j) edges.push_back(vertex_list(h.edge(j)));
  return {{"n", h.order()}, {"r", h.uniformity()}, {"edges", std::move(edges)}};
}

json to_json(const SolverResult& res) {
  json vec = json::array();
  for (double v : res.vector.values) vec.push_back(number(v));
  return {{"lambda", number(res.lambda)},
          {"vector", std::move(vec)},
          {"p", number(res.vector.p)},
          {"residual", number(res.residual)},
          {"iterations", res.iterations},
          {"status", status_name(res.status)},
          {"restart_spread", number(res.restart_spread)},
          {"restarts_agree", res.restarts_agree}};
}

json to_json(const Witness& w) {
  json out = {{"status", status_name(w.status)}, {"nodes", w.nodes}};
  if (w.found()) {
    out["vertices"] = vertex_list(w.vertices);
    if (!w.edges.empty()) out["edges"] = w.edges;
  }
  return out;
}

json to_json(const SearchRecord& rec) {
  json out = {{"n", rec.n},
              {"r", rec.r},
              {"pattern", rec.pattern},
              {"objective", objective_name(rec.objective)},
              {"mode", mode_name(rec.mode)},
              {"best_value", number(rec.best_value)},
              {"explored", rec.explored}};
  if (rec.objective == Objective::lambda) out["p"] = number(rec.p);
  json ws = json::array();
  for (const auto& w : rec.witnesses) {
    json item = {{"graph", to_json(w.graph)}, {"value", number(w.value)}, {"verified_free", w.verified_free}};
    if (rec.objective == Objective::lambda) item["solver_status"] = status_name(w.status);
    ws.push_back(std::move(item));
  }
  out["witnesses"] = std::move(ws);
  if (rec.turan)
    out["turan_comparison"] = {{"k", rec.turan->k},
                               {"value", number(rec.turan->value)},
                               {"among_witnesses", rec.turan->among_witnesses}};
  if (!rec.trace.empty()) {
    json tr = json::array();
    for (const auto& s : rec.trace)
      tr.push_back({{"evaluation", s.evaluation}, {"move", s.move}, {"lambda", number(s.lambda)}, {"edges", s.edges}});
    out["trace"] = std::move(tr);
  }
  return out;
}

json to_json(const StabilityReport& rep) {
  json pairs = json::array();
  for (auto [u, v] : rep.sparse_pairs) pairs.push_back({u, v});
  return {{"k", rep.k},
          {"epsilon", number(rep.epsilon)},
          {"best_partition", rep.best_partition.assignment},
          {"exact", rep.exact},
          {"score", rep.score},
          {"missing", rep.missing},
          {"bad", rep.bad},
          {"edit_distance_to_turan", rep.edit_distance_to_turan},
          {"codegree_threshold", rep.codegree_threshold},
          {"threshold_l", number(rep.threshold_l)},
          {"threshold_m", number(rep.threshold_m)},
          {"sparse_pairs", std::move(pairs)},
          {"heavy_sparse_vertices", rep.heavy_sparse_vertices},
          {"heavy_missing_vertices", rep.heavy_missing_vertices}};
}

std::string dump(const json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace hyturan
