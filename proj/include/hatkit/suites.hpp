#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hatkit/census.hpp"
#include "hatkit/serialize.hpp"

namespace hat {

std::string_view version();

enum class Suite { DartTheorem, CoverTheorem, Divisibility, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct Violation {
    std::string entry;
    std::string stage;
    std::string invariant;
    friend bool operator==(const Violation&, const Violation&) = default;
};
void to_json(json& j, const Violation& v);

struct RunOptions {
    std::size_t jobs = 1;
    /// Disagreement between the two arc-transitivity readings on the
    /// alternating-cycle graph counts as a violation.
    bool strict = false;
};

/// Group order, transitivity and, for half-arc-transitive tetravalent graphs,
/// the alternating-cycle parameters, divisibility record and antipodal check.
json analyze_graph(const std::string& name, const Graph& g, const RunOptions& options,
                   std::vector<Violation>& violations);

struct EntryReport {
    std::string name;
    json result;
    std::vector<Violation> violations;
    double seconds = 0;
};

struct RunReport {
    std::string suite;
    std::string census;
    std::vector<EntryReport> entries;
    /// Census-independent boundary checks (order guard, degenerate wreath).
    json boundary = json::array();
    std::vector<Violation> boundary_violations;
    double seconds = 0;

    bool passed() const;
    std::vector<Violation> violations() const;
    /// Everything except the "timing" member is deterministic.
    json to_json(bool with_timing = true) const;
};

/// Runs a suite over every entry; entries are processed by `jobs` workers
/// and reported in name order.
RunReport run_suite(Suite suite, const std::vector<CensusEntry>& census, const std::string& census_label,
                    const RunOptions& options);

} // namespace hat
