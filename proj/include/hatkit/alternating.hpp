#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hatkit/automorphism.hpp"
#include "hatkit/graph.hpp"
#include "hatkit/perm.hpp"

namespace hat {

/// Direction assigned to every edge of a tetravalent graph such that each
/// vertex is the head of two and the tail of two incident edges.
class Orientation {
public:
    Orientation() = default;

    /// One arc per edge, any order. Throws OrientationInvalid on a missing,
    /// repeated or unknown edge, or when some vertex lacks in/out-degree 2.
    static Orientation from_arcs(const Graph& g, std::span<const Arc> arcs);

    Orientation reversed() const;

    /// Indexed by the graph's edge index.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    Arc arc_of_edge(std::size_t edge) const { return arcs_.at(edge); }
    bool has_arc(Vertex tail, Vertex head) const;

    const std::vector<Vertex>& out_neighbours(Vertex v) const { return out_.at(v); }
    const std::vector<Vertex>& in_neighbours(Vertex v) const { return in_.at(v); }

    friend bool operator==(const Orientation& a, const Orientation& b) { return a.arcs_ == b.arcs_; }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// The two paired orientations induced by a half-arc-transitive group; the
/// first contains the arc u -> v of the lexicographically first edge {u, v}.
/// Throws NotTetravalent or NotHalfArcTransitive.
std::pair<Orientation, Orientation> induced_orientation(const PermGroup& group, const Graph& g);

/// Edge partition into alternating cycles with the derived parameters.
struct AltDecomposition {
    /// Each cycle starts at its smallest vertex and runs towards the smaller
    /// of that vertex's two cycle neighbours.
    std::vector<std::vector<Vertex>> cycles;
    std::vector<std::size_t> cycle_of_edge;
    /// (cycle through the two out-edges, cycle through the two in-edges).
    std::vector<std::pair<std::size_t, std::size_t>> cycles_at_vertex;
    std::size_t radius = 0;
    std::size_t attachment = 0;
    std::size_t ell = 0;
    std::vector<std::vector<Vertex>> attachment_sets;
};

/// Traces alternating cycles and verifies every structural invariant:
/// cycles partition the edges, share length 2r, meet pairwise in exactly a
/// vertices spaced 2r/a apart, a | 2r, and a <= r whenever there are at least
/// three cycles. Throws OrientationInvalid or StructureViolation.
AltDecomposition alternating_cycles(const Graph& g, const Orientation& d);

/// Re-checks the internal consistency of a (possibly hand-built) decomposition.
/// Throws StructureViolation.
void validate(const AltDecomposition& dec);

struct AltGraph {
    Graph graph;
    /// Vertex i of graph is cycle i of the decomposition.
    std::vector<std::size_t> vertex_cycle;
};

/// Graph of alternating cycles, adjacent when they intersect. Throws
/// TightlyAttached when there are fewer than three cycles.
AltGraph alt_graph(const Graph& g, const AltDecomposition& dec);

/// Involution swapping antipodal vertices on every alternating cycle; verifies
/// it is well defined, fixed-point-free, an automorphism and centralises G.
/// Throws OddAttachment, AntipodeMismatch or StructureViolation.
Permutation antipodal_involution(const Graph& g, const AltDecomposition& dec, const PermGroup& group);

struct DivisibilityRecord {
    std::size_t radius = 0;
    std::size_t attachment = 0;
    bool a_divides_2r = false;
    bool a_divides_r = false;
    bool r_odd = false;
    std::size_t a_mod_4 = 0;
    /// r odd and the decomposition comes from the full automorphism group.
    bool odd_radius_applicable = false;
    /// a | r when applicable; vacuously true otherwise.
    bool odd_radius_satisfied = true;
};

/// Throws TheoremViolation when a genuinely half-arc-transitive full group
/// has r odd (or a not divisible by 4) and yet a does not divide r.
DivisibilityRecord divisibility_report(const AltDecomposition& dec, bool is_full_group, bool genuinely_hat);

struct AltAction {
    PermGroup group;
    TransitivityReport transitivity;
    bool arc_transitive = false;
    /// Parity criterion: arc-transitive iff 2r/a is odd.
    bool ell_odd = false;
    /// Literal reading "r does not divide a", kept for comparison.
    bool rad_not_dividing_att = false;
};

/// Action of G on the cycles; throws NotInvariant if G does not permute them
/// and StructureViolation if arc-transitivity disagrees with the parity of ell.
AltAction induced_alt_action(const PermGroup& group, const AltDecomposition& dec, const AltGraph& altg,
                             const Graph& g);

/// Debug check only: the group induced on the 2r positions of cycle `index`
/// by its setwise stabiliser in G, found by enumerating G (TooLarge beyond
/// element_limit elements).
PermGroup cycle_restriction(const PermGroup& group, const AltDecomposition& dec, std::size_t index,
                            std::size_t element_limit = 100000);

/// Order 2r and every element preserves the cyclic order of the positions.
bool is_dihedral_on_cycle(const PermGroup& restriction);

} // namespace hat
