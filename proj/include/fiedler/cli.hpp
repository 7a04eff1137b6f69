#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fiedler/error.hpp"
#include "fiedler/graph.hpp"
#include "json.hpp"

namespace fiedler::cli {

using Json = nlohmann::json;

enum class GraphKind { Tree, Cycle, Complete };

/// On-disk graph description. Labels in files are offset by index_base
/// (default 1); everything in memory is 0-based.
struct GraphDocument {
  GraphKind kind = GraphKind::Tree;
  std::size_t n = 0;
  std::vector<Edge> edges;                     ///< canonical edge order of the built graph
  std::optional<std::vector<double>> weights;  ///< aligned with edges
  std::optional<std::vector<std::string>> labels;
  int index_base = 1;

  Graph graph() const;
  std::string edge_key(const Edge& e) const;  ///< "i-j", i < j, in file labels
  std::size_t label(Vertex v) const { return v + static_cast<std::size_t>(index_base); }
};

GraphDocument parse_graph_document(const Json& doc);
Json to_json(const GraphDocument& doc);

std::vector<double> parse_vector(const Json& doc, std::size_t n);

/// Reads a file ("-" for stdin) and parses it as JSON; failures raise Parse
/// errors naming the file and position.
Json read_json_file(const std::string& path);

/// Deterministic rendering: sorted keys, two-space indent, doubles as %.17g.
std::string dump_canonical(const Json& value);

/// Exit status for a library error: 2 for malformed input or parameters,
/// 3 for mathematically inadmissible input.
int exit_code_for(const Error& e);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fiedler::cli
