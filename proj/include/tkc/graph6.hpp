#ifndef TKC_GRAPH6_HPP
#define TKC_GRAPH6_HPP

// graph6 codec (short header for n <= 62, 4-byte header up to 258047).
// Edge bits run over the upper triangle column by column:
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six to a byte, each byte + 63.

#include <cstddef>
#include <string>
#include <string_view>

#include "error.hpp"
#include "graph.hpp"

namespace tkc {

inline constexpr std::size_t graph6_max_order = 258047;

namespace detail {

inline constexpr std::string_view graph6_prefix = ">>graph6<<";

inline unsigned char graph6_byte(std::string_view text, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw parse_error("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(pos)
                          + " outside [63,126]");
    return static_cast<unsigned char>(c - 63);
}

} // namespace detail

/// Byte length of the record for an n-vertex graph (excluding newline).
inline std::size_t graph6_length(std::size_t n)
{
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    return (n <= 62 ? 1 : 4) + (bits + 5) / 6;
}

inline Graph parse_graph6(std::string_view line)
{
    if (line.starts_with(detail::graph6_prefix))
        line.remove_prefix(detail::graph6_prefix.size());
    if (line.ends_with('\n'))
        line.remove_suffix(1);
    if (line.ends_with('\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw parse_error("graph6: empty record");

    std::size_t n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw parse_error("graph6: 8-byte header (n > 258047) is not supported");
        if (line.size() < 4)
            throw parse_error("graph6: truncated 4-byte header");
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | detail::graph6_byte(line, i);
        pos = 4;
    } else {
        n = detail::graph6_byte(line, 0);
        pos = 1;
    }

    if (n > max_graph_order)
        throw parse_error("graph6: n=" + std::to_string(n) + " exceeds the order ceiling "
                          + std::to_string(max_graph_order));
    const std::size_t expected = graph6_length(n) - (n <= 62 ? 1 : 4) + pos;
    if (line.size() < expected)
        throw parse_error("graph6: record too short for n=" + std::to_string(n) + " (got "
                          + std::to_string(line.size()) + " bytes, need " + std::to_string(expected) + ")");
    if (line.size() > expected)
        throw parse_error("graph6: trailing garbage after " + std::to_string(expected) + " bytes");

    GraphBuilder b(n);
    std::size_t bit = 0;
    const std::size_t total_bits = n > 0 ? n * (n - 1) / 2 : 0;
    unsigned char cur = 0;
    for (vertex v = 1; v < n; ++v) {
        for (vertex u = 0; u < v; ++u, ++bit) {
            if (bit % 6 == 0)
                cur = detail::graph6_byte(line, pos + bit / 6);
            if ((cur >> (5 - bit % 6)) & 1u)
                b.add_edge(u, v);
        }
    }
    if (total_bits % 6) {
        const unsigned pad = 6 - total_bits % 6;
        if (cur & ((1u << pad) - 1))
            throw parse_error("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

inline std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > graph6_max_order)
        throw parameter_error("graph6: order " + std::to_string(n) + " exceeds 258047");

    std::string out;
    out.reserve(graph6_length(n));
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    unsigned cur = 0;
    std::size_t bit = 0;
    for (vertex v = 1; v < n; ++v) {
        const VertexSet& row = g.neighbors(v);
        for (vertex u = 0; u < v; ++u, ++bit) {
            cur = (cur << 1) | (row.contains(u) ? 1u : 0u);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
            }
        }
    }
    if (bit % 6) {
        cur <<= 6 - bit % 6;
        out.push_back(static_cast<char>(cur + 63));
    }
    return out;
}

} // namespace tkc

#endif
