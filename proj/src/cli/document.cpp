#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "fiedler/cli.hpp"
#include "fiedler/error.hpp"

namespace fiedler::cli {

namespace {

[[noreturn]] void parse_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, field.empty() ? what : "field '" + field + "': " + what);
}

std::size_t read_count(const Json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_error(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Vertex read_label(const Json& v, const std::string& field, std::size_t n, int base) {
  if (!v.is_number_integer()) parse_error(field, "expected an integer vertex label");
  const long long raw = v.get<long long>();
  if (raw < base || raw >= static_cast<long long>(n) + base)
    parse_error(field, "vertex " + std::to_string(raw) + " outside " + std::to_string(base) + ".." +
                           std::to_string(static_cast<long long>(n) - 1 + base));
  return static_cast<Vertex>(raw - base);
}

Vertex read_key_label(const std::string& text, const std::string& field, std::size_t n, int base) {
  std::size_t used = 0;
  long long raw = 0;
  try {
    raw = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) parse_error(field, "weight keys look like \"i-j\"");
  return read_label(Json(raw), field, n, base);
}

void dump(const Json& v, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      // nlohmann's default object is a std::map, so iteration is key-sorted.
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        dump(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          dump(v[i], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(v[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", d == 0.0 ? 0.0 : d);
      out += buf;
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

Graph GraphDocument::graph() const {
  switch (kind) {
    case GraphKind::Tree: return Tree(n, edges).graph();
    case GraphKind::Cycle: return Cycle(n).graph();
    case GraphKind::Complete: return Graph::complete(n);
  }
  return Graph(n, edges);
}

std::string GraphDocument::edge_key(const Edge& e) const {
  return std::to_string(label(e.u)) + "-" + std::to_string(label(e.v));
}

GraphDocument parse_graph_document(const Json& doc) {
  if (!doc.is_object()) parse_error("", "graph document must be a JSON object");
  GraphDocument g;

  if (doc.contains("index_base")) {
    const Json& b = doc["index_base"];
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
      parse_error("index_base", "must be 0 or 1");
    g.index_base = b.get<int>();
  }

  if (!doc.contains("kind") || !doc["kind"].is_string()) parse_error("kind", "expected \"tree\", \"cycle\" or \"complete\"");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "tree") g.kind = GraphKind::Tree;
  else if (kind == "cycle") g.kind = GraphKind::Cycle;
  else if (kind == "complete") g.kind = GraphKind::Complete;
  else parse_error("kind", "unknown graph kind \"" + kind + "\"");

  if (!doc.contains("n")) parse_error("n", "missing");
  g.n = read_count(doc["n"], "n");
  if (g.n == 0) parse_error("n", "graph needs at least one vertex");

  if (g.kind == GraphKind::Tree) {
    if (!doc.contains("edges") || !doc["edges"].is_array()) parse_error("edges", "a tree needs an edge list");
    std::vector<Edge> edges;
    const Json& list = doc["edges"];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "edges[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) parse_error(field, "expected a pair [i, j]");
      const Vertex a = read_label(list[i][0], field, g.n, g.index_base);
      const Vertex b = read_label(list[i][1], field, g.n, g.index_base);
      if (a == b) parse_error(field, "self-loop");
      edges.emplace_back(a, b);
    }
    try {
      const Tree tree(g.n, edges);
      g.edges.assign(tree.edges().begin(), tree.edges().end());
    } catch (const Error& e) {
      parse_error("edges", e.what());
    }
  } else {
    if (doc.contains("edges")) parse_error("edges", "only trees list their edges");
    try {
      const Graph built = g.graph();
      g.edges.assign(built.edges().begin(), built.edges().end());
    } catch (const Error& e) {
      parse_error("n", e.what());
    }
  }

  if (doc.contains("weights")) {
    const Json& w = doc["weights"];
    if (!w.is_object()) parse_error("weights", "expected an object mapping \"i-j\" to positive numbers");
    const Graph built(g.n, g.edges);
    std::vector<double> values(g.edges.size(), 0.0);
    std::vector<bool> seen(g.edges.size(), false);
    for (auto it = w.begin(); it != w.end(); ++it) {
      const std::string field = "weights[\"" + it.key() + "\"]";
      const auto dash = it.key().find('-', 1);
      if (dash == std::string::npos) parse_error(field, "weight keys look like \"i-j\"");
      const Vertex a = read_key_label(it.key().substr(0, dash), field, g.n, g.index_base);
      const Vertex b = read_key_label(it.key().substr(dash + 1), field, g.n, g.index_base);
      const auto e = a == b ? std::nullopt : built.edge_between(a, b);
      if (!e) parse_error(field, "no such edge");
      if (seen[*e]) parse_error(field, "edge given twice");
      if (!it.value().is_number()) parse_error(field, "expected a number");
      const double v = it.value().get<double>();
      if (!(v > 0.0) || !std::isfinite(v)) parse_error(field, "weights must be positive and finite");
      values[*e] = v;
      seen[*e] = true;
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
      if (!seen[e]) parse_error("weights", "missing edge \"" + g.edge_key(g.edges[e]) + "\"");
    g.weights = std::move(values);
  }

  if (doc.contains("labels")) {
    const Json& l = doc["labels"];
    if (!l.is_array() || l.size() != g.n) parse_error("labels", "expected " + std::to_string(g.n) + " strings");
    std::vector<std::string> labels;
    for (const auto& s : l) {
      if (!s.is_string()) parse_error("labels", "expected strings");
      labels.push_back(s.get<std::string>());
    }
    g.labels = std::move(labels);
  }
  return g;
}

Json to_json(const GraphDocument& doc) {
  Json out = Json::object();
  out["kind"] = doc.kind == GraphKind::Tree ? "tree" : doc.kind == GraphKind::Cycle ? "cycle" : "complete";
  out["n"] = doc.n;
  out["index_base"] = doc.index_base;
  if (doc.kind == GraphKind::Tree) {
    Json edges = Json::array();
    for (const Edge& e : doc.edges) edges.push_back({doc.label(e.u), doc.label(e.v)});
    out["edges"] = std::move(edges);
  }
  if (doc.weights) {
    Json w = Json::object();
    for (std::size_t e = 0; e < doc.edges.size(); ++e) w[doc.edge_key(doc.edges[e])] = (*doc.weights)[e];
    out["weights"] = std::move(w);
  }
  if (doc.labels) out["labels"] = *doc.labels;
  return out;
}

std::vector<double> parse_vector(const Json& doc, std::size_t n) {
  const Json* arr = &doc;
  if (doc.is_object() && doc.contains("vector")) arr = &doc["vector"];
  if (!arr->is_array()) parse_error("", "vector must be a JSON array of numbers");
  if (arr->size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "vector has " + std::to_string(arr->size()) + " entries but the graph has " + std::to_string(n) +
                    " vertices");
  std::vector<double> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& v = (*arr)[i];
    if (!v.is_number()) parse_error("vector[" + std::to_string(i) + "]", "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) parse_error("vector[" + std::to_string(i) + "]", "not finite");
    x.push_back(d);
  }
  return x;
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Report line and column rather than a byte offset.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse, path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string dump_canonical(const Json& value) {
  std::string out;
  dump(value, out, 0);
  out += "\n";
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotFiedlerLike:
    case ErrorKind::NotInDomain:
    case ErrorKind::NotRealizable:
    case ErrorKind::DegenerateInput:
    case ErrorKind::WrongCase:
    case ErrorKind::NumericalAmbiguity:
    case ErrorKind::DegeneratePerron:
      return 3;
    default:
      return 2;
  }
}

}  // namespace fiedler::cli
