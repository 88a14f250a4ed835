#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hatkit/alternating.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/graph.hpp"
#include "hatkit/perm.hpp"

namespace hat {

/// Dart vertex i is the arc darts[i] of the base graph; darts are sorted
/// lexicographically so the index of (u, v) is its rank.
class DartLabeling {
public:
    DartLabeling() = default;
    explicit DartLabeling(std::vector<Arc> darts);

    std::size_t size() const noexcept { return darts_.size(); }
    const std::vector<Arc>& darts() const noexcept { return darts_; }
    Arc dart(Vertex i) const { return darts_.at(i); }
    /// Throws VertexOutOfRange when (u, v) is not a dart.
    Vertex index(Vertex u, Vertex v) const;

private:
    std::vector<Arc> darts_;
};

struct DartGraph {
    Graph graph;
    /// (u,v) -> (v,w) for every 2-arc u-v-w of the base graph.
    Orientation natural;
    DartLabeling labeling;
};

/// Throws NotCubic or NotConnected.
DartGraph dart_graph(const Graph& cubic);

/// Swaps (u,v) with (v,u); verified to be a fixed-point-free involutory
/// automorphism that reverses the natural orientation.
Permutation dart_reversal(const DartGraph& dart);

/// Generator-wise lift g(u,v) = (g(u), g(v)). Throws NotAutomorphisms when G is
/// not a group of automorphisms of the base graph.
PermGroup lift_automorphisms(const Graph& base, const PermGroup& group, const DartGraph& dart);

struct DartForwardReport {
    std::size_t base_order = 0;
    std::size_t dart_order = 0;
    BigInt group_order = 0;
    bool half_arc_transitive = false;
    std::size_t radius = 0;
    std::size_t attachment = 0;
    bool alt_isomorphic_to_base = false;
    bool natural_orientation_induced = false;
    /// Cycle of the natural orientation through vertex v of the base matches
    /// ((u,v),(v,u'),(u'',v),(v,u),(u',v),(v,u'')).
    bool cycles_match_vertex_stars = false;
    bool passed() const;
};

/// Builds Dart(base), lifts G and certifies the forward correspondence.
/// Throws Not2ArcTransitive when G is not 2-arc-transitive on the base.
DartForwardReport verify_dart_forward(const Graph& base, const PermGroup& group);

struct PsiReport {
    /// psi[i] is the vertex of the input assigned to dart i of Dart(Alt).
    std::vector<Vertex> psi;
    Graph alt;
    DartGraph dart;
    bool bijective = false;
    bool isomorphism = false;
    bool orientation_preserving = false;
    bool alt_two_arc_transitive = false;
    bool passed() const { return bijective && isomorphism && orientation_preserving && alt_two_arc_transitive; }
};

/// Reconstructs the isomorphism Dart(Alt_G(g)) -> g sending (C, C') to the
/// vertex of C and C' that is the head of both C-edges at it. Throws
/// WrongParameters unless r = 3 and a = 2.
PsiReport psi_isomorphism(const Graph& g, const PermGroup& group);

/// Cycle C_r with each vertex blown up to two independent copies; vertex
/// (i, j) has index 2i + j. Throws TooSmall for r < 3.
Graph wreath_graph(std::size_t r);

} // namespace hat
