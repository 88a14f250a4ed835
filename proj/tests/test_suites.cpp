#include <doctest.h>

#include "hatkit/census.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/suites.hpp"

using namespace hat;

namespace {

const CensusEntry& entry(const std::vector<CensusEntry>& census, const std::string& name)
{
    for (const auto& e : census)
        if (e.name == name)
            return e;
    throw std::runtime_error(name + " missing");
}

} // namespace

TEST_CASE("suite names")
{
    CHECK(parse_suite("dart-theorem") == Suite::DartTheorem);
    CHECK(parse_suite("cover-theorem") == Suite::CoverTheorem);
    CHECK(parse_suite("divisibility") == Suite::Divisibility);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_FALSE(parse_suite("everything").has_value());
    for (Suite s : {Suite::DartTheorem, Suite::CoverTheorem, Suite::Divisibility, Suite::All})
        CHECK(parse_suite(to_string(s)) == s);
}

TEST_CASE("every suite passes on the builtin census")
{
    auto census = builtin_census();
    for (Suite s : {Suite::DartTheorem, Suite::CoverTheorem, Suite::Divisibility, Suite::All}) {
        CAPTURE(to_string(s));
        RunReport r = run_suite(s, census, "builtin", {});
        for (const auto& v : r.violations())
            MESSAGE(v.entry << " / " << v.stage << ": " << v.invariant);
        CHECK(r.passed());
        CHECK(r.entries.size() == census.size());
        json j = r.to_json();
        CHECK(j["passed"] == true);
        CHECK(j["violation_count"] == 0);
        CHECK(j.contains("timing"));
        CHECK_FALSE(r.to_json(false).contains("timing"));
    }
}

TEST_CASE("reports are deterministic across runs and worker counts")
{
    auto census = builtin_census();
    std::string first = run_suite(Suite::All, census, "builtin", {1, false}).to_json(false).dump();
    std::string again = run_suite(Suite::All, census, "builtin", {1, false}).to_json(false).dump();
    std::string parallel = run_suite(Suite::All, census, "builtin", {3, false}).to_json(false).dump();
    CHECK(first == again);
    CHECK(first == parallel);
}

TEST_CASE("dart suite covers the 2-arc-transitive cubic entries")
{
    auto census = builtin_census();
    RunReport r = run_suite(Suite::DartTheorem, census, "builtin", {});
    std::size_t checked = 0;
    for (const auto& e : r.entries) {
        const json& d = e.result["dart_theorem"];
        if (d.contains("skipped"))
            continue;
        ++checked;
        CAPTURE(e.name);
        CHECK(d["forward"]["radius"] == 3);
        CHECK(d["forward"]["attachment"] == 2);
    }
    CHECK(checked == 11);
    CHECK(entry(census, "holt").graph.order() == 27);
}

TEST_CASE("analyze_graph on the Holt graph")
{
    auto census = builtin_census();
    std::vector<Violation> violations;
    json j = analyze_graph("holt", entry(census, "holt").graph, {}, violations);
    CHECK(violations.empty());
    CHECK(j["aut_order"] == "54");
    const json& h = j["half_arc_analysis"];
    CHECK(h["radius"] == 9);
    CHECK(h["attachment"] == 9);
    CHECK(h["ell"] == 2);
    CHECK(h["cycle_count"] == 3);
    CHECK(h["antipodal"] == "odd attachment");
    CHECK(h["divisibility"]["full_group_r_odd"] == true);
    CHECK(h["divisibility"]["a_divides_r_when_required"] == true);

    json k = analyze_graph("petersen", entry(census, "petersen").graph, {}, violations);
    CHECK_FALSE(k.contains("half_arc_analysis"));
    CHECK(k["transitivity"]["two_arc_transitive"] == true);
}

TEST_CASE("a census entry with a false claim produces a violation")
{
    auto census = builtin_census();
    std::vector<CensusEntry> one{entry(census, "petersen")};
    one[0].expected_properties["girth"] = 4;
    RunReport r = run_suite(Suite::DartTheorem, one, "edited", {});
    CHECK_FALSE(r.passed());
    REQUIRE(r.violations().size() == 1);
    CHECK(r.violations()[0].entry == "petersen");
}
