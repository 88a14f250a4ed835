#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hatkit/automorphism.hpp"
#include "hatkit/census.hpp"
#include "hatkit/error.hpp"
#include "oracles.hpp"

using namespace hat;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& contents)
{
    fs::path dir = fs::temp_directory_path() / "hatkit_test_census";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << contents;
    return p;
}

} // namespace

TEST_CASE("builtin census")
{
    auto census = builtin_census();
    std::vector<std::string> names;
    for (const auto& e : census)
        names.push_back(e.name);
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* required : {"k4", "k33", "cube", "petersen", "heawood", "mobius-kantor", "pappus", "desargues",
                                 "dodecahedron", "nauru", "coxeter", "holt"})
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    for (const auto& e : census) {
        CAPTURE(e.name);
        CHECK(write_graph6(e.graph) == e.graph6);
        CHECK(check_expected_properties(e).empty());
    }
}

TEST_CASE("census properties are re-derived")
{
    // Girth and bipartiteness against the slow oracles; the automorphism
    // order of small entries against brute force.
    for (const auto& e : builtin_census()) {
        CAPTURE(e.name);
        const auto& props = e.expected_properties;
        CHECK(props["bipartite"].get<bool>() == oracle::bipartite(e.graph));
        CHECK(props["girth"].get<std::size_t>() == *oracle::girth(e.graph));
        if (e.graph.order() <= 8)
            CHECK(props["aut_order"].get<std::string>() == std::to_string(oracle::brute_force_aut_count(e.graph)));
    }
}

TEST_CASE("wrong expected properties are reported")
{
    CensusEntry e = builtin_census().front();
    e.expected_properties["girth"] = 3;
    e.expected_properties["aut_order"] = "1";
    e.expected_properties["colour"] = "blue";
    auto messages = check_expected_properties(e);
    REQUIRE(messages.size() == 3);
    CHECK(messages[0].find("girth") != std::string::npos);
    CHECK(messages[1].find("aut_order") != std::string::npos);
    CHECK(messages[2].find("unknown property colour") != std::string::npos);
}

TEST_CASE("load_census from a JSON manifest")
{
    auto p = write_temp("two.json", R"([{"name": "tri", "graph6": "Bw", "expected_properties": {"order": 3}},
                                       {"name": "k4", "graph6": "C~"}])");
    auto census = load_census(p.string());
    REQUIRE(census.size() == 2);
    CHECK(census[0].name == "k4");
    CHECK(census[0].expected_properties.is_null());
    CHECK(census[1].graph.size() == 3);
    CHECK(check_expected_properties(census[1]).empty());

    auto dup = write_temp("dup.json", R"([{"name": "a", "graph6": "C~"}, {"name": "a", "graph6": "Bw"}])");
    CHECK_THROWS_AS(load_census(dup.string()), Error);
    auto bad = write_temp("bad.json", R"([{"name": "a"}])");
    CHECK_THROWS_AS(load_census(bad.string()), Error);
    auto broken = write_temp("broken.json", "[{");
    CHECK_THROWS_AS(load_census(broken.string()), Error);
    CHECK_THROWS_AS(load_census((fs::temp_directory_path() / "hatkit_test_census" / "missing.json").string()), Error);
}

TEST_CASE("load_census from a graph6 file")
{
    auto p = write_temp("small.g6", ">>graph6<<C~\n# comment\n\nBw\n");
    auto census = load_census(p.string());
    REQUIRE(census.size() == 2);
    CHECK(census[0].name == "small:1");
    CHECK(census[0].graph.order() == 4);
    CHECK(census[1].name == "small:4");

    auto bad = write_temp("bad.g6", "C~\nC~~\n");
    try {
        load_census(bad.string());
        FAIL("expected MalformedGraph6");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedGraph6);
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }

    auto bundled = load_census(HATKIT_DATA_DIR "/census.g6");
    CHECK(bundled.size() == builtin_census().size());
}

TEST_CASE("resolve_input")
{
    auto census = builtin_census();
    CHECK(resolve_input("petersen", census).at(0).graph.order() == 10);
    CHECK(resolve_input("c7", census).at(0).graph.size() == 7);
    CHECK(resolve_input("K5", census).at(0).graph.size() == 10);
    CHECK(resolve_input("k3,4", census).at(0).graph.size() == 12);
    CHECK(resolve_input("wreath5", census).at(0).graph.order() == 10);
    auto p = write_temp("one.g6", "Bw\n");
    CHECK(resolve_input(p.string(), census).at(0).graph.order() == 3);
    for (const char* bad : {"c2", "nonsense", "k", "wreath"}) {
        CAPTURE(bad);
        try {
            resolve_input(bad, census);
            FAIL("expected UnknownInput");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnknownInput);
        }
    }
}
