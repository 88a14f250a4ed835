#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hatkit/graph.hpp"
#include "hatkit/serialize.hpp"

namespace hat {

struct CensusEntry {
    std::string name;
    std::string graph6;
    /// Claims to re-derive; null when absent.
    json expected_properties;
    Graph graph;
};

/// Entries compiled into the library, sorted by name.
std::vector<CensusEntry> builtin_census();

/// "builtin", a JSON manifest (list of {name, graph6, expected_properties}) or
/// a graph6 file with one graph per line (named after the file and line).
/// Parse failures raise UnknownInput or MalformedGraph6 naming the line.
std::vector<CensusEntry> load_census(const std::string& source);

/// Resolves a census name, cN (cycle), kN (complete), kA,B (complete
/// bipartite), wreathN, or a graph6 file path. Throws UnknownInput.
std::vector<CensusEntry> resolve_input(const std::string& input, const std::vector<CensusEntry>& census);

/// Recomputes every expected property of the entry and returns one message
/// per mismatch or unknown key.
std::vector<std::string> check_expected_properties(const CensusEntry& entry);

} // namespace hat
