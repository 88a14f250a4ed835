#include "hatkit/census.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "census_data.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/error.hpp"

namespace hat {

namespace {

std::vector<CensusEntry> entries_from_json(const json& doc, const std::string& source)
{
    if (!doc.is_array())
        throw Error(ErrorKind::UnknownInput, source + ": census manifest must be a JSON array");
    std::vector<CensusEntry> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& item = doc[i];
        const std::string where = source + ": entry " + std::to_string(i);
        if (!item.is_object() || !item.contains("name") || !item.contains("graph6"))
            throw Error(ErrorKind::UnknownInput, where + " needs name and graph6");
        CensusEntry e;
        e.name = item.at("name").get<std::string>();
        e.graph6 = item.at("graph6").get<std::string>();
        if (item.contains("expected_properties"))
            e.expected_properties = item.at("expected_properties");
        try {
            e.graph = parse_graph6(e.graph6);
        } catch (const Error& err) {
            throw Error(err.kind(), where + " (" + e.name + "): " + err.what());
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].name == out[i - 1].name)
            throw Error(ErrorKind::UnknownInput, source + ": duplicate entry name " + out[i].name);
    return out;
}

std::vector<CensusEntry> entries_from_graph6(std::istream& in, const std::string& source)
{
    const std::string stem = std::filesystem::path(source).stem().string();
    std::vector<CensusEntry> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (line.rfind(">>graph6<<", 0) == 0)
            line.erase(0, 10);
        CensusEntry e;
        e.name = stem + ":" + std::to_string(lineno);
        e.graph6 = line;
        try {
            e.graph = parse_graph6(line);
        } catch (const Error& err) {
            throw Error(err.kind(), source + ":" + std::to_string(lineno) + ": " + err.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<std::size_t> parse_size(std::string_view s)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return value;
}

CensusEntry named(std::string name, Graph g)
{
    CensusEntry e;
    e.name = std::move(name);
    e.graph6 = write_graph6(g);
    e.graph = std::move(g);
    return e;
}

} // namespace

std::vector<CensusEntry> builtin_census()
{
    return entries_from_json(json::parse(detail::builtin_census_json), "builtin");
}

std::vector<CensusEntry> load_census(const std::string& source)
{
    if (source == "builtin")
        return builtin_census();
    std::ifstream in(source);
    if (!in)
        throw Error(ErrorKind::UnknownInput, "cannot open census " + source);
    if (std::filesystem::path(source).extension() == ".json") {
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& err) {
            throw Error(ErrorKind::UnknownInput, source + ": " + err.what());
        }
        return entries_from_json(doc, source);
    }
    return entries_from_graph6(in, source);
}

std::vector<CensusEntry> resolve_input(const std::string& input, const std::vector<CensusEntry>& census)
{
    for (const auto& e : census)
        if (e.name == input)
            return {e};

    std::string lower = input;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    auto suffix = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (lower.size() > prefix.size() && lower.compare(0, prefix.size(), prefix) == 0)
            return std::string_view(lower).substr(prefix.size());
        return std::nullopt;
    };
    if (auto s = suffix("wreath"); s && parse_size(*s))
        return {named(lower, wreath_graph(*parse_size(*s)))};
    if (auto s = suffix("c"); s && parse_size(*s) && *parse_size(*s) >= 3)
        return {named(lower, cycle_graph(*parse_size(*s)))};
    if (auto s = suffix("k")) {
        if (auto n = parse_size(*s); n && *n >= 1)
            return {named(lower, complete_graph(*n))};
        if (auto comma = s->find(','); comma != std::string_view::npos) {
            auto a = parse_size(s->substr(0, comma));
            auto b = parse_size(s->substr(comma + 1));
            if (a && b)
                return {named(lower, complete_bipartite_graph(*a, *b))};
        }
    }
    if (std::filesystem::is_regular_file(input))
        return load_census(input);
    throw Error(ErrorKind::UnknownInput, "'" + input + "' is not a census name, generator name or file");
}

std::vector<std::string> check_expected_properties(const CensusEntry& entry)
{
    std::vector<std::string> out;
    if (!entry.expected_properties.is_object())
        return out;
    const Graph& g = entry.graph;
    std::optional<PermGroup> aut;
    std::optional<TransitivityReport> trans;
    auto group = [&]() -> const PermGroup& {
        if (!aut)
            aut = automorphism_group(g);
        return *aut;
    };
    auto report = [&]() -> const TransitivityReport& {
        if (!trans)
            trans = transitivity_report(group(), g);
        return *trans;
    };
    auto mismatch = [&](const std::string& key, const json& expected, const json& actual) {
        if (expected != actual)
            out.push_back(entry.name + ": " + key + " expected " + expected.dump() + ", derived " + actual.dump());
    };

    for (const auto& [key, expected] : entry.expected_properties.items()) {
        if (key == "order") {
            mismatch(key, expected, g.order());
        } else if (key == "valence") {
            json actual = nullptr;
            if (g.order() > 0 && is_regular(g, g.degree(0)))
                actual = g.degree(0);
            mismatch(key, expected, actual);
        } else if (key == "bipartite") {
            mismatch(key, expected, is_bipartite(g));
        } else if (key == "connected") {
            mismatch(key, expected, is_connected(g));
        } else if (key == "girth") {
            auto gi = girth(g);
            mismatch(key, expected, gi ? json(*gi) : json(nullptr));
        } else if (key == "aut_order") {
            mismatch(key, expected, to_decimal(group().order()));
        } else if (key == "vertex_transitive") {
            mismatch(key, expected, report().vertex_transitive);
        } else if (key == "edge_transitive") {
            mismatch(key, expected, report().edge_transitive);
        } else if (key == "arc_transitive") {
            mismatch(key, expected, report().arc_transitive);
        } else if (key == "two_arc_transitive") {
            mismatch(key, expected, report().two_arc_transitive);
        } else if (key == "half_arc_transitive") {
            mismatch(key, expected, report().half_arc_transitive);
        } else {
            out.push_back(entry.name + ": unknown property " + key);
        }
    }
    return out;
}

} // namespace hat
