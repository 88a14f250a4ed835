#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hatkit/graph.hpp"

namespace hat {

using BigInt = boost::multiprecision::cpp_int;

/// Bijection on 0..n-1. Permutations act on the right: compose(p, q) applies
/// p first, then q, so (p * q)(i) == q(p(i)).
class Permutation {
public:
    Permutation() = default;
    /// Throws NotBijection unless images is a permutation of 0..n-1.
    explicit Permutation(std::vector<Vertex> images);

    static Permutation identity(std::size_t n);
    /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
    static Permutation from_cycles(std::size_t n, std::initializer_list<std::initializer_list<Vertex>> cycles);

    std::size_t degree() const noexcept { return images_.size(); }
    Vertex operator()(Vertex i) const { return images_[i]; }
    std::span<const Vertex> images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    /// Smallest moved point, or degree() when this is the identity.
    Vertex first_moved() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Vertex> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// True when p maps every edge of g onto an edge of g.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Permutation group given by generators, with a base and strong generating
/// set computed by deterministic Schreier-Sims. Base points are chosen as the
/// smallest point moved by the element that forces a new level.
class PermGroup {
public:
    PermGroup() = default;

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const BigInt& order() const noexcept { return order_; }
    std::vector<Vertex> base() const;
    /// Size of the fundamental orbit at each base level.
    std::vector<std::size_t> orbit_sizes() const;

    bool contains(const Permutation& p) const;
    std::vector<Vertex> orbit(Vertex point) const;
    std::vector<std::vector<Vertex>> orbit_partition() const;

private:
    friend PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators);

    struct Level {
        Vertex base_point = 0;
        std::vector<Permutation> strong;
        // transversal[x] indexes reps for x in the basic orbit, -1 otherwise;
        // reps[k] maps base_point to orbit[k].
        std::vector<int> transversal;
        std::vector<Vertex> orbit;
        std::vector<Permutation> reps;
    };

    struct Sift {
        Permutation residue;
        std::size_t level;
    };

    Sift sift(Permutation g, std::size_t from_level) const;
    void rebuild_orbit(std::size_t level);

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
};

/// Throws DegreeMismatch when a generator has the wrong degree.
PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators);

bool membership_test(const PermGroup& g, const Permutation& p);
std::vector<Vertex> orbit(const PermGroup& g, Vertex point);
std::vector<std::vector<Vertex>> orbit_partition(const PermGroup& g);

/// True iff p commutes with every generator of g.
bool centralizes(const Permutation& p, const PermGroup& g);

struct InducedAction {
    PermGroup group;
    bool faithful = false;
};

/// Action of g on the index set of an invariant family of disjoint blocks.
/// Throws NotInvariant when a generator does not permute the blocks.
InducedAction induced_action(const PermGroup& g, std::span<const std::vector<Vertex>> blocks);

/// Orbits of the group generated by gens acting on 0..n-1 via union-find;
/// each orbit sorted, orbits ordered by their smallest element.
std::vector<std::vector<Vertex>> orbits_of(std::size_t n, std::span<const Permutation> gens);

} // namespace hat
