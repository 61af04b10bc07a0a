#ifndef TKC_TESTS_SUPPORT_HPP
#define TKC_TESTS_SUPPORT_HPP

// Fixture loading and test-side reference implementations. Nothing here
// calls the library's domination or search code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tkc/tkc.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) { return std::string(TKC_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing fixture " + path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

struct Fixture {
    std::vector<std::string> records;
    std::vector<tkc::Graph> graphs;
};

inline Fixture load_fixture(const std::string& name)
{
    Fixture f;
    f.records = read_lines(fixture_path(name));
    for (const auto& r : f.records)
        f.graphs.push_back(tkc::parse_graph6(r));
    return f;
}

/// Cubic fixture, checked on load: connected, 3-regular, counts per order.
inline Fixture cubic_fixture()
{
    Fixture f = load_fixture("cubic_connected_n4-10.g6");
    std::map<std::size_t, std::size_t> by_n;
    for (const auto& g : f.graphs) {
        if (!tkc::is_connected(g) || !tkc::is_regular(g, 3))
            throw std::runtime_error("cubic fixture holds a graph that is not connected cubic");
        ++by_n[g.order()];
    }
    if (by_n != std::map<std::size_t, std::size_t>{{4, 1}, {6, 2}, {8, 5}, {10, 19}})
        throw std::runtime_error("cubic fixture counts per order are wrong");
    return f;
}

inline Fixture quartic_fixture()
{
    Fixture f = load_fixture("quartic_connected_n5-9.g6");
    std::map<std::size_t, std::size_t> by_n;
    for (const auto& g : f.graphs) {
        if (!tkc::is_connected(g) || !tkc::is_regular(g, 4))
            throw std::runtime_error("4-regular fixture holds a graph that is not connected 4-regular");
        ++by_n[g.order()];
    }
    if (by_n != std::map<std::size_t, std::size_t>{{5, 1}, {6, 1}, {7, 2}, {8, 6}, {9, 16}})
        throw std::runtime_error("4-regular fixture counts per order are wrong");
    return f;
}

inline Fixture n7_fixture()
{
    Fixture f = load_fixture("connected_n7_mindeg2.g6");
    for (const auto& g : f.graphs)
        if (g.order() != 7 || !tkc::is_connected(g) || tkc::min_degree(g) < 2)
            throw std::runtime_error("n=7 fixture holds a graph outside its class");
    if (f.graphs.size() != 507)
        throw std::runtime_error("n=7 fixture should hold 507 graphs");
    return f;
}

inline Fixture subcubic_fixture()
{
    Fixture f = load_fixture("subcubic_mindeg2_n4-8.g6");
    for (const auto& g : f.graphs) {
        const auto ds = tkc::degree_stats(g);
        if (g.order() < 4 || g.order() > 8 || !tkc::is_connected(g) || ds.min_degree < 2 || ds.max_degree > 3)
            throw std::runtime_error("subcubic fixture holds a graph outside its class");
    }
    return f;
}

// Reference domination straight from the definition.
inline bool ref_dominates(const tkc::Graph& g, const std::vector<bool>& in, bool closed, int k)
{
    for (std::size_t v = 0; v < g.order(); ++v) {
        int count = closed && in[v] ? 1 : 0;
        for (std::size_t u = 0; u < g.order(); ++u)
            if (u != v && g.adjacent(u, v) && in[u])
                ++count;
        if (count < k)
            return false;
    }
    return true;
}

/// Largest c such that some assignment V -> {0..c-1} with every block
/// nonempty forms a coalition partition. Plain c^n enumeration.
inline std::size_t ref_coalition_number(const tkc::Graph& g, bool closed, int k)
{
    const std::size_t n = g.order();
    auto block_dominates = [&](const std::vector<std::size_t>& a, std::size_t x, std::size_t y) {
        std::vector<bool> in(n);
        for (std::size_t v = 0; v < n; ++v)
            in[v] = a[v] == x || a[v] == y;
        return ref_dominates(g, in, closed, k);
    };
    for (std::size_t c = n; c >= 2; --c) {
        std::vector<std::size_t> a(n, 0);
        while (true) {
            std::vector<bool> used(c);
            for (auto x : a)
                used[x] = true;
            bool ok = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
            for (std::size_t i = 0; ok && i < c; ++i) {
                if (block_dominates(a, i, i)) {
                    ok = false;
                    break;
                }
                bool partner = false;
                for (std::size_t j = 0; j < c && !partner; ++j)
                    partner = j != i && !block_dominates(a, j, j) && block_dominates(a, i, j);
                ok = partner;
            }
            if (ok)
                return c;
            std::size_t i = 0;
            while (i < n && ++a[i] == c)
                a[i++] = 0;
            if (i == n)
                break;
        }
    }
    return 0;
}

/// Maximum number of disjoint dominating blocks covering V, by c^n enumeration.
inline std::size_t ref_domatic_number(const tkc::Graph& g, bool closed, int k)
{
    const std::size_t n = g.order();
    for (std::size_t c = n; c >= 1; --c) {
        std::vector<std::size_t> a(n, 0);
        while (true) {
            bool ok = true;
            for (std::size_t b = 0; ok && b < c; ++b) {
                std::vector<bool> in(n);
                for (std::size_t v = 0; v < n; ++v)
                    in[v] = a[v] == b;
                ok = ref_dominates(g, in, closed, k);
            }
            if (ok)
                return c;
            std::size_t i = 0;
            while (i < n && ++a[i] == c)
                a[i++] = 0;
            if (i == n)
                break;
        }
    }
    return 0;
}

/// Smallest vertex cover by trying every subset.
inline std::size_t ref_vertex_cover(const tkc::Graph& h)
{
    const std::size_t n = h.order();
    std::size_t best = n;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool covers = true;
        for (const auto& [u, v] : h.edges())
            covers = covers && (((m >> u) & 1u) || ((m >> v) & 1u));
        if (covers)
            best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(m)));
    }
    return best;
}

/// Isomorphism class key: least upper-triangle bit string over all n! labelings.
inline std::string ref_canonical(const tkc::Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                bits += g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || bits < best)
            best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

/// Bell numbers from the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(std::size_t upto)
{
    std::vector<std::uint64_t> out{1};
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 1; i <= upto; ++i) {
        out.push_back(row.back());
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row)
            next.push_back(next.back() + x);
        row = next;
    }
    return out;
}

inline tkc::Graph c5_plus_chord() { return tkc::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}}); }

} // namespace support

#endif
