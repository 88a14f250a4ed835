#include <algorithm>
#include <numeric>

#include "hatkit/automorphism.hpp"
#include "hatkit/error.hpp"

namespace hat {

ColoredPartition ColoredPartition::unit(std::size_t n)
{
    ColoredPartition p;
    if (n > 0) {
        p.cells.emplace_back(n);
        std::iota(p.cells.front().begin(), p.cells.front().end(), Vertex{0});
    }
    return p;
}

bool ColoredPartition::is_discrete() const noexcept
{
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

ColoredPartition refine(const Graph& g, const ColoredPartition& p)
{
    std::vector<std::vector<Vertex>> cells = p.cells;
    for (auto& cell : cells)
        std::sort(cell.begin(), cell.end());
    std::vector<std::uint32_t> count(g.order(), 0);
    std::vector<std::vector<Vertex>> next;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            for (Vertex v : cells[s])
                for (Vertex w : g.neighbours(v))
                    ++count[w];
            next.clear();
            for (auto& cell : cells) {
                const std::uint32_t first = count[cell.front()];
                bool uniform = std::all_of(cell.begin(), cell.end(), [&](Vertex v) { return count[v] == first; });
                if (uniform) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::stable_sort(cell.begin(), cell.end(), [&](Vertex a, Vertex b) { return count[a] < count[b]; });
                std::size_t start = 0;
                for (std::size_t i = 1; i <= cell.size(); ++i) {
                    if (i == cell.size() || count[cell[i]] != count[cell[start]]) {
                        std::vector<Vertex> piece(cell.begin() + static_cast<std::ptrdiff_t>(start),
                                                  cell.begin() + static_cast<std::ptrdiff_t>(i));
                        std::sort(piece.begin(), piece.end());
                        next.push_back(std::move(piece));
                        start = i;
                    }
                }
                changed = true;
            }
            std::fill(count.begin(), count.end(), 0);
            cells.swap(next);
        }
    }
    return ColoredPartition{std::move(cells)};
}

ColoredPartition individualize(const ColoredPartition& p, Vertex v)
{
    ColoredPartition out;
    out.cells.reserve(p.cells.size() + 1);
    bool found = false;
    for (const auto& cell : p.cells) {
        if (!found && std::binary_search(cell.begin(), cell.end(), v)) {
            found = true;
            out.cells.push_back({v});
            std::vector<Vertex> rest;
            std::copy_if(cell.begin(), cell.end(), std::back_inserter(rest), [v](Vertex x) { return x != v; });
            if (!rest.empty())
                out.cells.push_back(std::move(rest));
        } else {
            out.cells.push_back(cell);
        }
    }
    if (!found)
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in partition");
    return out;
}

} // namespace hat
