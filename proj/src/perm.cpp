#include "hatkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hatkit/error.hpp"

namespace hat {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images))
{
    std::vector<bool> hit(images_.size(), false);
    for (Vertex x : images_) {
        if (x >= images_.size() || hit[x])
            throw Error(ErrorKind::NotBijection, "image list is not a permutation of 0..n-1");
        hit[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{0});
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(std::size_t n, std::initializer_list<std::initializer_list<Vertex>> cycles)
{
    auto images = identity(n).images_;
    for (const auto& cycle : cycles) {
        std::vector<Vertex> c(cycle);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= n)
                throw Error(ErrorKind::VertexOutOfRange, "cycle point " + std::to_string(c[i]));
            images[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Vertex Permutation::first_moved() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return static_cast<Vertex>(i);
    return static_cast<Vertex>(images_.size());
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree())
        throw Error(ErrorKind::DegreeMismatch,
                    "compose of degrees " + std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
    std::vector<Vertex> images(p.degree());
    for (Vertex i = 0; i < p.degree(); ++i)
        images[i] = q(p(i));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p)
{
    std::vector<Vertex> images(p.degree());
    for (Vertex i = 0; i < p.degree(); ++i)
        images[p(i)] = i;
    return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p)
{
    std::ostringstream out;
    std::vector<bool> seen(p.degree(), false);
    for (Vertex i = 0; i < p.degree(); ++i) {
        if (seen[i] || p(i) == i)
            continue;
        out << '(';
        for (Vertex x = i; !seen[x]; x = p(x)) {
            seen[x] = true;
            if (x != i)
                out << ' ';
            out << x;
        }
        out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

bool is_automorphism(const Graph& g, const Permutation& p)
{
    if (p.degree() != g.order())
        return false;
    for (const Edge& e : g.edges())
        if (!g.adjacent(p(e.u), p(e.v)))
            return false;
    return true;
}

std::vector<std::vector<Vertex>> orbits_of(std::size_t n, std::span<const Permutation> gens)
{
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Permutation& s : gens) {
        for (Vertex x = 0; x < n; ++x) {
            Vertex a = find(x), b = find(s(x));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<Vertex>> cells;
    std::vector<int> cell_of(n, -1);
    for (Vertex x = 0; x < n; ++x) {
        Vertex root = find(x);
        if (cell_of[root] < 0) {
            cell_of[root] = static_cast<int>(cells.size());
            cells.emplace_back();
        }
        cells[cell_of[root]].push_back(x);
    }
    return cells;
}

// --- PermGroup -------------------------------------------------------------

std::vector<Vertex> PermGroup::base() const
{
    std::vector<Vertex> b;
    for (const Level& l : levels_)
        b.push_back(l.base_point);
    return b;
}

std::vector<std::size_t> PermGroup::orbit_sizes() const
{
    std::vector<std::size_t> sizes;
    for (const Level& l : levels_)
        sizes.push_back(l.orbit.size());
    return sizes;
}

void PermGroup::rebuild_orbit(std::size_t level)
{
    Level& l = levels_[level];
    l.transversal.assign(degree_, -1);
    l.orbit = {l.base_point};
    l.reps = {Permutation::identity(degree_)};
    l.transversal[l.base_point] = 0;
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
        Vertex x = l.orbit[k];
        for (const Permutation& s : l.strong) {
            Vertex y = s(x);
            if (l.transversal[y] < 0) {
                l.transversal[y] = static_cast<int>(l.orbit.size());
                l.orbit.push_back(y);
                l.reps.push_back(l.reps[k] * s);
            }
        }
    }
}

PermGroup::Sift PermGroup::sift(Permutation g, std::size_t from_level) const
{
    for (std::size_t i = from_level; i < levels_.size(); ++i) {
        const Level& l = levels_[i];
        int k = l.transversal[g(l.base_point)];
        if (k < 0)
            return {std::move(g), i};
        g = g * inverse(l.reps[static_cast<std::size_t>(k)]);
    }
    return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const Permutation& p) const
{
    if (p.degree() != degree_)
        throw Error(ErrorKind::DegreeMismatch, "membership test with degree " + std::to_string(p.degree()));
    auto s = sift(p, 0);
    return s.level == levels_.size() && s.residue.is_identity();
}

std::vector<Vertex> PermGroup::orbit(Vertex point) const
{
    if (point >= degree_)
        throw Error(ErrorKind::VertexOutOfRange, "orbit of point " + std::to_string(point));
    std::vector<bool> seen(degree_, false);
    std::vector<Vertex> out{point};
    seen[point] = true;
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const Permutation& s : generators_) {
            Vertex y = s(out[k]);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Vertex>> PermGroup::orbit_partition() const
{
    return orbits_of(degree_, generators_);
}

PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators)
{
    PermGroup g;
    g.degree_ = degree;
    for (const Permutation& p : generators)
        if (p.degree() != degree)
            throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(p.degree()) +
                                                       " in a group of degree " + std::to_string(degree));
    g.generators_ = std::move(generators);

    auto add_level = [&g](Vertex point) {
        PermGroup::Level l;
        l.base_point = point;
        g.levels_.push_back(std::move(l));
    };

    // Initial base: every nontrivial generator must move some base point.
    for (const Permutation& s : g.generators_) {
        if (s.is_identity())
            continue;
        bool fixes_base = std::all_of(g.levels_.begin(), g.levels_.end(),
                                      [&](const PermGroup::Level& l) { return s(l.base_point) == l.base_point; });
        if (fixes_base)
            add_level(s.first_moved());
    }
    for (std::size_t i = 0; i < g.levels_.size(); ++i) {
        for (const Permutation& s : g.generators_) {
            if (s.is_identity())
                continue;
            bool fixes_prefix = true;
            for (std::size_t j = 0; j < i && fixes_prefix; ++j)
                fixes_prefix = s(g.levels_[j].base_point) == g.levels_[j].base_point;
            if (fixes_prefix)
                g.levels_[i].strong.push_back(s);
        }
        g.rebuild_orbit(i);
    }

    // Work down from the last level; whenever a Schreier generator fails to
    // sift, extend the strong generating set and resume at the level reached.
    std::size_t i = g.levels_.size();
    while (i > 0) {
        const std::size_t level = i - 1;
        bool complete = true;
        for (std::size_t k = 0; k < g.levels_[level].orbit.size() && complete; ++k) {
            for (std::size_t si = 0; si < g.levels_[level].strong.size(); ++si) {
                const PermGroup::Level& l = g.levels_[level];
                const Permutation& s = l.strong[si];
                Vertex image = s(l.orbit[k]);
                auto h = l.reps[k] * s * inverse(l.reps[static_cast<std::size_t>(l.transversal[image])]);
                if (h.is_identity())
                    continue;
                auto [residue, reached] = g.sift(std::move(h), level + 1);
                if (reached == g.levels_.size() && residue.is_identity())
                    continue;
                if (reached == g.levels_.size())
                    add_level(residue.first_moved());
                for (std::size_t j = level + 1; j <= reached; ++j) {
                    g.levels_[j].strong.push_back(residue);
                    g.rebuild_orbit(j);
                }
                i = reached + 1;
                complete = false;
                break;
            }
        }
        if (complete)
            --i;
    }

    g.order_ = 1;
    for (const PermGroup::Level& l : g.levels_)
        g.order_ *= l.orbit.size();
    return g;
}

bool membership_test(const PermGroup& g, const Permutation& p) { return g.contains(p); }

std::vector<Vertex> orbit(const PermGroup& g, Vertex point) { return g.orbit(point); }

std::vector<std::vector<Vertex>> orbit_partition(const PermGroup& g) { return g.orbit_partition(); }

bool centralizes(const Permutation& p, const PermGroup& g)
{
    if (p.degree() != g.degree())
        throw Error(ErrorKind::DegreeMismatch, "centralizer test with degree " + std::to_string(p.degree()));
    return std::all_of(g.generators().begin(), g.generators().end(),
                       [&](const Permutation& s) { return p * s == s * p; });
}

InducedAction induced_action(const PermGroup& g, std::span<const std::vector<Vertex>> blocks)
{
    std::vector<int> block_of(g.degree(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Vertex x : blocks[b]) {
            if (x >= g.degree())
                throw Error(ErrorKind::VertexOutOfRange, "block point " + std::to_string(x));
            if (block_of[x] >= 0)
                throw Error(ErrorKind::NotInvariant, "blocks are not disjoint at point " + std::to_string(x));
            block_of[x] = static_cast<int>(b);
        }
    }
    std::vector<Permutation> images;
    for (const Permutation& s : g.generators()) {
        std::vector<Vertex> action(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty())
                throw Error(ErrorKind::NotInvariant, "empty block");
            int target = block_of[s(blocks[b].front())];
            if (target < 0 || blocks[static_cast<std::size_t>(target)].size() != blocks[b].size())
                throw Error(ErrorKind::NotInvariant, "block " + std::to_string(b) + " is not mapped onto a block");
            for (Vertex x : blocks[b])
                if (block_of[s(x)] != target)
                    throw Error(ErrorKind::NotInvariant, "block " + std::to_string(b) + " is split by a generator");
            action[b] = static_cast<Vertex>(target);
        }
        images.emplace_back(std::move(action));
    }
    InducedAction out;
    out.group = schreier_sims(blocks.size(), std::move(images));
    out.faithful = out.group.order() == g.order();
    return out;
}

} // namespace hat
