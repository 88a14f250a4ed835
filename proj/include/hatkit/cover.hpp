#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hatkit/graph.hpp"
#include "hatkit/perm.hpp"

namespace hat {

struct CoveringMap {
    Graph total;
    Graph base;
    /// fibre_map[v] is the base vertex under total vertex v.
    std::vector<Vertex> fibre_map;
    std::size_t fold = 2;
    /// Covering transformations, here <tau>.
    PermGroup ct_group;

    /// fibres()[b] lists the total vertices over base vertex b, ascending.
    std::vector<std::vector<Vertex>> fibres() const;
};

/// Quotient of g by the orbits of a fixed-point-free involutory automorphism.
/// Base vertex b is the b-th orbit ordered by smallest element. Throws
/// FixedPoint, NotAutomorphisms, OrbitNotIndependent, or DegenerateWreath
/// naming the first pair of orbits joined by a K2,2.
CoveringMap quotient_by_tau(const Graph& g, const Permutation& tau);

/// Surjective, edge-preserving and bijective from every neighbourhood onto
/// the neighbourhood of the image.
bool is_covering(const Graph& total, const Graph& base, const std::vector<Vertex>& fibre_map);

struct SplitCertificate {
    /// G~ = <G, tau>.
    PermGroup lifted_group;
    PermGroup complement;
    bool is_split = false;
    /// Decided by total ~= bipartite_double(base).
    bool is_sectional = false;
    std::optional<std::vector<Vertex>> non_bipartite_witness;
};

/// Throws NotCentralizing or TauInG.
SplitCertificate split_certificate(const Graph& g, const PermGroup& group, const Permutation& tau,
                                   const CoveringMap& cover);

struct CoverReport {
    std::string graph;
    std::size_t order = 0;
    bool bipartite = false;
    std::size_t radius = 0;
    std::size_t attachment = 0;
    bool split = false;
    bool sectional = false;
    std::size_t base_order = 0;
    std::size_t base_girth = 0;
    /// graph6 certificate of the cubic graph whose line graph is the base.
    std::string base_is_line_graph_of;
    BigInt order_g = 0;
    BigInt order_g_tilde = 0;
    BigInt order_h = 0;
    std::string note;
};

/// Antipodal involution, quotient, split certificate and base checks for a
/// half-arc-transitive G with r = 3 and a = 2. Throws OrderTooSmall when
/// |V| <= 12, WrongParameters for other (r, a), and StructureViolation when
/// any derived claim about the base or the sectionality fails.
CoverReport cover_pipeline(const Graph& g, const PermGroup& group, const std::string& name = {});

} // namespace hat
