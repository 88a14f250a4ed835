#include "hatkit/serialize.hpp"

#include "hatkit/error.hpp"

namespace hat {

std::string to_decimal(const BigInt& value)
{
    return value.str();
}

void to_json(json& j, const Permutation& p)
{
    j = json::array();
    for (Vertex v : p.images())
        j.push_back(v);
}

void from_json(const json& j, Permutation& p)
{
    if (!j.is_array())
        throw Error(ErrorKind::NotBijection, "permutation must be a JSON array");
    p = Permutation(j.get<std::vector<Vertex>>());
}

void to_json(json& j, const PermGroup& g)
{
    j = json{{"degree", g.degree()}, {"generators", g.generators()}, {"order", to_decimal(g.order())}};
}

void from_json(const json& j, PermGroup& g)
{
    auto degree = j.at("degree").get<std::size_t>();
    auto gens = j.at("generators").get<std::vector<Permutation>>();
    g = schreier_sims(degree, std::move(gens));
    if (j.contains("order") && j.at("order").get<std::string>() != to_decimal(g.order()))
        throw Error(ErrorKind::StructureViolation, "declared order " + j.at("order").get<std::string>() +
                                                       " differs from computed " + to_decimal(g.order()));
}

void to_json(json& j, const TransitivityReport& r)
{
    j = json{{"vertex_transitive", r.vertex_transitive},
             {"edge_transitive", r.edge_transitive},
             {"arc_transitive", r.arc_transitive},
             {"two_arc_transitive", r.two_arc_transitive},
             {"half_arc_transitive", r.half_arc_transitive},
             {"orbits", {{"vertex", r.vertex_orbit_count},
                         {"edge", r.edge_orbit_count},
                         {"arc", r.arc_orbit_count},
                         {"two_arc", r.two_arc_orbit_count}}}};
}

void to_json(json& j, const AltDecomposition& d)
{
    j = json{{"radius", d.radius},
             {"attachment", d.attachment},
             {"ell", d.ell},
             {"cycle_count", d.cycles.size()},
             {"cycles", d.cycles},
             {"attachment_sets", d.attachment_sets}};
}

void to_json(json& j, const DivisibilityRecord& r)
{
    j = json{{"radius", r.radius},
             {"attachment", r.attachment},
             {"a_divides_2r", r.a_divides_2r},
             {"a_divides_r", r.a_divides_r},
             {"r_odd", r.r_odd},
             {"a_mod_4", r.a_mod_4},
             {"full_group_r_odd", r.odd_radius_applicable},
             {"a_divides_r_when_required", r.odd_radius_satisfied}};
}

void to_json(json& j, const DartLabeling& l)
{
    j = json::array();
    for (std::size_t i = 0; i < l.size(); ++i)
        j.push_back(json::array({i, l.darts()[i].tail, l.darts()[i].head}));
}

void to_json(json& j, const DartForwardReport& r)
{
    j = json{{"base_order", r.base_order},
             {"dart_order", r.dart_order},
             {"group_order", to_decimal(r.group_order)},
             {"half_arc_transitive", r.half_arc_transitive},
             {"radius", r.radius},
             {"attachment", r.attachment},
             {"alt_isomorphic_to_base", r.alt_isomorphic_to_base},
             {"natural_orientation_induced", r.natural_orientation_induced},
             {"cycles_match_vertex_stars", r.cycles_match_vertex_stars},
             {"passed", r.passed()}};
}

void to_json(json& j, const PsiReport& r)
{
    j = json{{"alt_order", r.alt.order()},
             {"dart_order", r.dart.graph.order()},
             {"bijective", r.bijective},
             {"isomorphism", r.isomorphism},
             {"orientation_preserving", r.orientation_preserving},
             {"alt_two_arc_transitive", r.alt_two_arc_transitive},
             {"passed", r.passed()},
             {"psi", r.psi}};
}

void to_json(json& j, const CoverReport& r)
{
    j = json{{"graph", r.graph},
             {"order", r.order},
             {"bipartite", r.bipartite},
             {"radius", r.radius},
             {"attachment", r.attachment},
             {"split", r.split},
             {"sectional", r.sectional},
             {"base_order", r.base_order},
             {"base_girth", r.base_girth},
             {"base_is_line_graph_of", r.base_is_line_graph_of},
             {"group_orders", {{"G", to_decimal(r.order_g)},
                               {"G_tilde", to_decimal(r.order_g_tilde)},
                               {"H", to_decimal(r.order_h)}}}};
    if (!r.note.empty())
        j["note"] = r.note;
}

} // namespace hat
