#include "hatkit/suites.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "hatkit/alternating.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/cover.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/error.hpp"

namespace hat {

std::string_view version()
{
    return HATKIT_VERSION;
}

std::optional<Suite> parse_suite(std::string_view name)
{
    if (name == "dart-theorem")
        return Suite::DartTheorem;
    if (name == "cover-theorem")
        return Suite::CoverTheorem;
    if (name == "divisibility")
        return Suite::Divisibility;
    if (name == "all")
        return Suite::All;
    return std::nullopt;
}

std::string_view to_string(Suite suite)
{
    switch (suite) {
    case Suite::DartTheorem:
        return "dart-theorem";
    case Suite::CoverTheorem:
        return "cover-theorem";
    case Suite::Divisibility:
        return "divisibility";
    case Suite::All:
        return "all";
    }
    return "?";
}

void to_json(json& j, const Violation& v)
{
    j = json{{"entry", v.entry}, {"stage", v.stage}, {"invariant", v.invariant}};
}

namespace {

class Recorder {
public:
    Recorder(std::string entry, std::vector<Violation>& sink) : entry_(std::move(entry)), sink_(sink) {}

    void fail(std::string stage, std::string invariant) { sink_.push_back({entry_, std::move(stage), std::move(invariant)}); }

    void check(bool ok, const std::string& stage, const std::string& invariant)
    {
        if (!ok)
            fail(stage, invariant);
    }

    /// Runs f; any exception becomes a violation of this stage.
    template <class F>
    bool stage(const std::string& name, F&& f)
    {
        try {
            f();
            return true;
        } catch (const std::exception& e) {
            fail(name, e.what());
            return false;
        }
    }

private:
    std::string entry_;
    std::vector<Violation>& sink_;
};

json hat_analysis(const Graph& g, const PermGroup& group, bool is_full, bool genuine, const RunOptions& options,
                  Recorder& rec)
{
    json out = json::object();
    AltDecomposition dec;
    if (!rec.stage("alternating-cycles", [&] {
            auto oriented = induced_orientation(group, g);
            dec = alternating_cycles(g, oriented.first);
        }))
        return out;
    out["radius"] = dec.radius;
    out["attachment"] = dec.attachment;
    out["ell"] = dec.ell;
    out["cycle_count"] = dec.cycles.size();

    rec.check(dec.attachment > 0 && (2 * dec.radius) % dec.attachment == 0, "divisibility", "a divides 2r");
    rec.stage("divisibility", [&] { out["divisibility"] = divisibility_report(dec, is_full, genuine); });

    if (dec.cycles.size() < 3) {
        out["tightly_attached"] = true;
    } else {
        out["tightly_attached"] = false;
        rec.stage("alt-action", [&] {
            AltGraph altg = alt_graph(g, dec);
            AltAction action = induced_alt_action(group, dec, altg, g);
            const bool agree = action.ell_odd == action.rad_not_dividing_att;
            out["alt_action"] = {{"order", altg.graph.order()},
                                 {"group_order", to_decimal(action.group.order())},
                                 {"arc_transitive", action.arc_transitive},
                                 {"ell_odd", action.ell_odd},
                                 {"r_not_dividing_a", action.rad_not_dividing_att},
                                 {"readings_agree", agree}};
            if (!agree && options.strict)
                rec.fail("alt-action", "ell-parity and r-not-dividing-a readings of arc-transitivity disagree");
        });
    }

    if (dec.attachment % 2 == 0) {
        rec.stage("antipodal", [&] {
            Permutation tau = antipodal_involution(g, dec, group);
            out["antipodal"] = {{"fixed_point_free", true},
                                {"involution", true},
                                {"automorphism", true},
                                {"centralizes_group", true},
                                {"antipodes_agree", true},
                                {"in_group", group.contains(tau)}};
        });
    } else {
        out["antipodal"] = "odd attachment";
    }
    return out;
}

json basic_properties(const Graph& g)
{
    json out{{"order", g.order()}, {"size", g.size()}};
    out["valence"] = g.order() > 0 && is_regular(g, g.degree(0)) ? json(g.degree(0)) : json(nullptr);
    out["connected"] = is_connected(g);
    out["bipartite"] = is_bipartite(g);
    auto gi = girth(g);
    out["girth"] = gi ? json(*gi) : json(nullptr);
    return out;
}

struct EntryContext {
    const CensusEntry& entry;
    const RunOptions& options;
    Recorder& rec;
    std::optional<PermGroup> aut;
    std::optional<TransitivityReport> trans;

    const PermGroup& group()
    {
        if (!aut)
            aut = automorphism_group(entry.graph);
        return *aut;
    }
    const TransitivityReport& report()
    {
        if (!trans)
            trans = transitivity_report(group(), entry.graph);
        return *trans;
    }
    bool cubic_two_arc_transitive()
    {
        return is_regular(entry.graph, 3) && is_connected(entry.graph) && report().two_arc_transitive;
    }
};

json dart_theorem(EntryContext& ctx)
{
    const Graph& base = ctx.entry.graph;
    Recorder& rec = ctx.rec;
    json out = json::object();
    if (!is_regular(base, 3) || !is_connected(base))
        return json{{"skipped", "not a connected cubic graph"}};
    if (!ctx.cubic_two_arc_transitive())
        return json{{"skipped", "not 2-arc-transitive"}};

    rec.stage("dart-forward", [&] {
        DartForwardReport r = verify_dart_forward(base, ctx.group());
        out["forward"] = r;
        rec.check(r.half_arc_transitive, "dart-forward", "lifted action is half-arc-transitive");
        rec.check(r.radius == 3, "dart-forward", "radius is 3");
        rec.check(r.attachment == 2, "dart-forward", "attachment is 2");
        rec.check(r.alt_isomorphic_to_base, "dart-forward", "alternating-cycle graph is isomorphic to the base");
        rec.check(r.natural_orientation_induced, "dart-forward", "natural orientation is induced by the lift");
        rec.check(r.cycles_match_vertex_stars, "dart-forward", "alternating cycles match vertex stars");
    });

    rec.stage("psi", [&] {
        DartGraph dart = dart_graph(base);
        PermGroup lifted = lift_automorphisms(base, ctx.group(), dart);
        PsiReport r = psi_isomorphism(dart.graph, lifted);
        json j = r;
        j.erase("psi");
        out["psi"] = j;
        rec.check(r.bijective, "psi", "psi is a bijection");
        rec.check(r.isomorphism, "psi", "psi is a graph isomorphism");
        rec.check(r.orientation_preserving, "psi", "psi carries the natural orientation onto the induced one");
        rec.check(r.alt_two_arc_transitive, "psi", "action on alternating cycles is 2-arc-transitive");
    });

    rec.stage("dart-invariants", [&] {
        DartGraph dart = dart_graph(base);
        PermGroup lifted = lift_automorphisms(base, ctx.group(), dart);
        Permutation tau = dart_reversal(dart);
        LineGraph lg = line_graph(base);
        std::vector<Vertex> projection(dart.labeling.size());
        for (Vertex i = 0; i < projection.size(); ++i) {
            Arc a = dart.labeling.dart(i);
            projection[i] = static_cast<Vertex>(*base.edge_index(a.tail, a.head));
        }
        const bool order_ok = dart.graph.order() == 2 * base.size() && is_regular(dart.graph, 4);
        const bool bip_ok = is_bipartite(dart.graph) == is_bipartite(base);
        const bool central = centralizes(tau, lifted);
        const bool covers = is_covering(dart.graph, lg.graph, projection);
        out["invariants"] = {{"order_is_twice_size_and_tetravalent", order_ok},
                             {"bipartite_iff_base_bipartite", bip_ok},
                             {"reversal_centralizes_lift", central},
                             {"covers_line_graph", covers}};
        rec.check(order_ok, "dart-invariants", "|V(Dart)| = 2|E| and Dart is 4-regular");
        rec.check(bip_ok, "dart-invariants", "Dart bipartite iff base bipartite");
        rec.check(central, "dart-invariants", "dart reversal centralizes the lifted group");
        rec.check(covers, "dart-invariants", "(u,v) -> {u,v} covers the line graph");
    });
    return out;
}

json cover_theorem(EntryContext& ctx)
{
    const Graph& base = ctx.entry.graph;
    Recorder& rec = ctx.rec;
    json out = json::object();

    if (is_regular(base, 4) && is_connected(base)) {
        if (!ctx.report().half_arc_transitive)
            return json{{"skipped", "full group not half-arc-transitive"}};
        try {
            out["pipeline"] = cover_pipeline(base, ctx.group(), ctx.entry.name);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::WrongParameters && e.kind() != ErrorKind::OrderTooSmall)
                throw;
            return json{{"skipped", e.what()}};
        }
        return out;
    }
    if (!is_regular(base, 3) || !is_connected(base))
        return json{{"skipped", "not a connected cubic or tetravalent graph"}};
    if (!ctx.cubic_two_arc_transitive())
        return json{{"skipped", "not 2-arc-transitive"}};

    rec.stage("cover-pipeline", [&] {
        DartGraph dart = dart_graph(base);
        PermGroup lifted = lift_automorphisms(base, ctx.group(), dart);
        out["dart_order"] = dart.graph.order();
        if (dart.graph.order() <= 12) {
            try {
                cover_pipeline(dart.graph, lifted, ctx.entry.name);
                rec.fail("order-guard", "dart graph of order <= 12 accepted");
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::OrderTooSmall)
                    throw;
                out["order_guard"] = to_string(e.kind());
            }
            return;
        }
        CoverReport r = cover_pipeline(dart.graph, lifted, ctx.entry.name);
        out["pipeline"] = r;
        rec.check(r.split, "cover-pipeline", "cover is split");
        rec.check(r.sectional == is_bipartite(base), "cover-pipeline", "sectional iff base bipartite");
        rec.check(r.base_order * 2 == r.order, "cover-pipeline", "base has half the order");
        rec.check(r.base_is_line_graph_of == canonical_form(base).certificate, "cover-pipeline",
                  "quotient is the line graph of the base cubic graph");
    });
    return out;
}

json divisibility(EntryContext& ctx)
{
    const Graph& g = ctx.entry.graph;
    Recorder& rec = ctx.rec;

    if (is_regular(g, 4) && is_connected(g)) {
        if (!ctx.report().half_arc_transitive)
            return json{{"skipped", "full group not half-arc-transitive"}};
        json out{{"instance", "direct"}, {"group", "full"}};
        out["analysis"] = hat_analysis(g, ctx.group(), true, true, ctx.options, rec);
        return out;
    }
    if (!is_regular(g, 3) || !is_connected(g))
        return json{{"skipped", "not a connected cubic or tetravalent graph"}};
    if (!ctx.cubic_two_arc_transitive())
        return json{{"skipped", "not 2-arc-transitive"}};

    json out{{"instance", "dart"}};
    rec.stage("divisibility", [&] {
        DartGraph dart = dart_graph(g);
        PermGroup lifted = lift_automorphisms(g, ctx.group(), dart);
        PermGroup full = automorphism_group(dart.graph);
        const bool is_full = full.order() == lifted.order();
        const bool full_hat = transitivity_report(full, dart.graph).half_arc_transitive;
        out["group"] = is_full ? "full" : "lifted";
        out["lifted_order"] = to_decimal(lifted.order());
        out["full_order"] = to_decimal(full.order());
        out["full_group_half_arc_transitive"] = full_hat;
        out["analysis"] = hat_analysis(dart.graph, lifted, is_full, full_hat, ctx.options, rec);
    });
    return out;
}

EntryReport run_entry(Suite suite, const CensusEntry& entry, const RunOptions& options)
{
    auto start = std::chrono::steady_clock::now();
    EntryReport er;
    er.name = entry.name;
    Recorder rec(entry.name, er.violations);
    EntryContext ctx{entry, options, rec, std::nullopt, std::nullopt};

    er.result = json{{"name", entry.name}, {"graph6", entry.graph6}};
    rec.stage("properties", [&] { er.result["properties"] = basic_properties(entry.graph); });
    rec.stage("census-check", [&] {
        auto mismatches = check_expected_properties(entry);
        for (auto& m : mismatches)
            rec.fail("census-check", m);
        er.result["census_check"] = mismatches.empty() ? "ok" : "mismatch";
    });
    rec.stage("automorphisms", [&] {
        er.result["aut_order"] = to_decimal(ctx.group().order());
        er.result["transitivity"] = ctx.report();
    });

    auto run = [&](const char* key, auto&& fn) {
        rec.stage(key, [&] { er.result[key] = fn(ctx); });
    };
    if (suite == Suite::DartTheorem || suite == Suite::All)
        run("dart_theorem", dart_theorem);
    if (suite == Suite::CoverTheorem || suite == Suite::All)
        run("cover_theorem", cover_theorem);
    if (suite == Suite::Divisibility || suite == Suite::All)
        run("divisibility", divisibility);

    er.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return er;
}

void boundary_checks(RunReport& report)
{
    Recorder rec("boundary", report.boundary_violations);
    rec.stage("order-guard", [&] {
        Graph k4 = complete_graph(4);
        DartGraph dart = dart_graph(k4);
        PermGroup lifted = lift_automorphisms(k4, automorphism_group(k4), dart);
        json j{{"case", "dart(k4)"}, {"order", dart.graph.order()}, {"expected", "OrderTooSmall"}};
        try {
            cover_pipeline(dart.graph, lifted, "dart(k4)");
            j["raised"] = nullptr;
        } catch (const Error& e) {
            j["raised"] = to_string(e.kind());
        }
        j["passed"] = j["raised"] == j["expected"];
        rec.check(j["passed"].get<bool>(), "order-guard", "Dart(K4) rejected with OrderTooSmall");
        report.boundary.push_back(j);
    });
    rec.stage("degenerate-wreath", [&] {
        Graph w = wreath_graph(3);
        // Rotation of the fibres and one fibre swap: half-arc-transitive on W(3).
        std::vector<Vertex> rot(6);
        for (Vertex v = 0; v < 6; ++v)
            rot[v] = (v + 2) % 6;
        PermGroup group = schreier_sims(6, {Permutation(rot), Permutation::from_cycles(6, {{0, 1}})});
        json j{{"case", "wreath3"}, {"order", w.order()}, {"expected", "DegenerateWreath"}};
        try {
            auto oriented = induced_orientation(group, w);
            AltDecomposition dec = alternating_cycles(w, oriented.first);
            Permutation tau = antipodal_involution(w, dec, group);
            quotient_by_tau(w, tau);
            j["raised"] = nullptr;
        } catch (const Error& e) {
            j["raised"] = to_string(e.kind());
            j["message"] = e.what();
        }
        j["passed"] = j["raised"] == j["expected"];
        rec.check(j["passed"].get<bool>(), "degenerate-wreath", "wreath_graph(3) quotient raises DegenerateWreath");
        report.boundary.push_back(j);
    });
}

} // namespace

json analyze_graph(const std::string& name, const Graph& g, const RunOptions& options,
                   std::vector<Violation>& violations)
{
    Recorder rec(name, violations);
    json out{{"name", name}};
    out.update(basic_properties(g));
    PermGroup group = automorphism_group(g);
    TransitivityReport t = transitivity_report(group, g);
    out["aut_order"] = to_decimal(group.order());
    out["transitivity"] = t;
    if (t.half_arc_transitive) {
        if (is_regular(g, 4))
            out["half_arc_analysis"] = hat_analysis(g, group, true, true, options, rec);
        else
            out["half_arc_analysis"] = "valence is not 4";
    }
    return out;
}

bool RunReport::passed() const
{
    return violations().empty();
}

std::vector<Violation> RunReport::violations() const
{
    std::vector<Violation> all;
    for (const auto& e : entries)
        all.insert(all.end(), e.violations.begin(), e.violations.end());
    all.insert(all.end(), boundary_violations.begin(), boundary_violations.end());
    return all;
}

json RunReport::to_json(bool with_timing) const
{
    json j{{"tool", "hatkit"}, {"version", version()}, {"suite", suite}, {"census", census}};
    auto all = violations();
    j["passed"] = all.empty();
    j["violation_count"] = all.size();
    json list = json::array();
    for (const auto& e : entries) {
        json item = e.result;
        item["violations"] = e.violations;
        list.push_back(std::move(item));
    }
    j["entries"] = std::move(list);
    j["boundary"] = boundary;
    j["violations"] = all;
    if (with_timing) {
        json per = json::object();
        for (const auto& e : entries)
            per[e.name] = e.seconds;
        j["timing"] = {{"total_seconds", seconds}, {"entries", per}};
    }
    return j;
}

RunReport run_suite(Suite suite, const std::vector<CensusEntry>& census, const std::string& census_label,
                    const RunOptions& options)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<const CensusEntry*> order;
    for (const auto& e : census)
        order.push_back(&e);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->name < b->name; });

    RunReport report;
    report.suite = std::string(to_string(suite));
    report.census = census_label;
    report.entries.resize(order.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < order.size();)
            report.entries[i] = run_entry(suite, *order[i], options);
    };
    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(order.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    if (suite == Suite::CoverTheorem || suite == Suite::All)
        boundary_checks(report);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace hat
