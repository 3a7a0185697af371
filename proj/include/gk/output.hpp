#pragma once

#include <string>

#include "gk/cocliques.hpp"

namespace gk::output {

// Stable JSON document for a compact graph. Keys: group, vertices, edges,
// classes, unresolved. With explicit primes, vertices carry the factored
// prime lists.
std::string graph_json(const cocliques::CompactGraph& g, bool explicit_primes);
std::string graph_dot(const cocliques::CompactGraph& g, bool explicit_primes);
std::string graph_text(const cocliques::CompactGraph& g, bool explicit_primes);

// Round-trip reader for graph_json (vertices and edges).
cocliques::CompactGraph read_graph_json(const std::string& doc);

std::string report_json(const cocliques::CocliqueReport& rep, bool all);
std::string report_text(const cocliques::CocliqueReport& rep, bool all);

}  // namespace gk::output
