#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rind/decomposition.hpp"
#include "rind/errors.hpp"
#include "rind/graph.hpp"

namespace rind {

using json = nlohmann::json;

/// Graph text format: first non-comment line "n m", then m lines "u v" with
/// 0 <= u < v < n. Lines starting with '#' are comments. The parser rejects
/// duplicate edges, loops, reversed or out-of-range labels.
Graph parse_graph_text(std::istream& in);
Graph load_graph(const std::string& path);
std::string graph_to_text(const Graph& g);

/// Complex document: {"vertices": [...], "facets": [[...], ...]} with the
/// void complex encoded as facets null and the empty complex as [[]].
json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& doc);
SimplicialComplex load_complex(const std::string& path);

/// Certificate document: a tree of nodes tagged simplex | join | shed. When a
/// complex is supplied, every node also records the facets it certifies.
json certificate_to_json(const Certificate& cert, const SimplicialComplex* complex = nullptr);
Certificate certificate_from_json(const json& doc);
Certificate load_certificate(const std::string& path);

json witness_to_json(const NonVdWitness& w);
NonVdWitness witness_from_json(const json& doc);

/// Recursion tree of a certificate in DOT format, one node per state.
std::string certificate_to_dot(const Certificate& cert);

std::string dump_json(const json& doc);

/// Writes via a temporary file and an atomic rename, so failures never leave
/// partial output behind.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace rind
