#include <string>

#include "hatkit/error.hpp"
#include "hatkit/graph.hpp"

namespace hat {

namespace {

constexpr std::size_t short_limit = 62;
constexpr std::size_t long_limit = 258047;

std::size_t triangle_bits(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

} // namespace

Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Error(ErrorKind::MalformedGraph6, "empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(ErrorKind::MalformedGraph6, "byte " + std::to_string(static_cast<int>(c)) + " out of range");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != 126) {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126)
            throw Error(ErrorKind::MalformedGraph6, "unsupported size header");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
        if (n <= short_limit)
            throw Error(ErrorKind::MalformedGraph6, "long size header used for n <= 62");
        pos = 4;
    }

    const std::size_t bits = triangle_bits(n);
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() - pos != groups)
        throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(groups) + " data bytes for n=" +
                                                    std::to_string(n) + ", got " + std::to_string(text.size() - pos));

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int group = text[pos + k / 6] - 63;
            if (group & (1 << (5 - k % 6)))
                pairs.emplace_back(i, j);
        }
    }
    for (; k < groups * 6; ++k) {
        int group = text[pos + k / 6] - 63;
        if (group & (1 << (5 - k % 6)))
            throw Error(ErrorKind::MalformedGraph6, "nonzero padding bits");
    }
    return Graph::from_edge_list(n, pairs);
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > long_limit)
        throw Error(ErrorKind::MalformedGraph6, "n=" + std::to_string(n) + " exceeds the supported size header");
    std::string out;
    if (n <= short_limit) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    const std::size_t bits = triangle_bits(n);
    std::string data((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                data[k / 6] = static_cast<char>(data[k / 6] | (1 << (5 - k % 6)));
    for (char& c : data)
        c = static_cast<char>(c + 63);
    return out + data;
}

} // namespace hat
