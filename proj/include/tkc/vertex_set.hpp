#ifndef TKC_VERTEX_SET_HPP
#define TKC_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "error.hpp"

namespace tkc {

using vertex = std::size_t;

/// Subset of {0, ..., universe-1} packed into 64-bit words.
///
/// Bits beyond the universe are always zero, so popcounts and comparisons
/// work word by word. Binary operations require equal universes.
class VertexSet {
public:
    using word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0)
    {
    }

    VertexSet(std::size_t universe, std::initializer_list<vertex> members)
        : VertexSet(universe)
    {
        for (vertex v : members)
            insert(v);
    }

    VertexSet(std::size_t universe, std::span<const vertex> members)
        : VertexSet(universe)
    {
        for (vertex v : members)
            insert(v);
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (auto& w : s.words_)
            w = ~word{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(vertex v) const noexcept
    {
        return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1u);
    }

    void insert(vertex v)
    {
        check(v);
        words_[v / word_bits] |= word{1} << (v % word_bits);
    }

    void erase(vertex v)
    {
        check(v);
        words_[v / word_bits] &= ~(word{1} << (v % word_bits));
    }

    std::size_t size() const noexcept
    {
        std::size_t c = 0;
        for (word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](word w) { return w == 0; });
    }

    /// |*this ∩ other| without materializing the intersection.
    std::size_t intersection_size(const VertexSet& other) const noexcept
    {
        std::size_t c = 0;
        const std::size_t m = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < m; ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool disjoint(const VertexSet& other) const noexcept { return intersection_size(other) == 0; }

    bool subset_of(const VertexSet& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            word o = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~o)
                return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o)
    {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const
    {
        VertexSet s(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    /// Smallest member, or universe() when empty.
    vertex first() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return universe_;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            word w = words_[i];
            while (w) {
                fn(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    /// Members in increasing order.
    std::vector<vertex> members() const
    {
        std::vector<vertex> out;
        out.reserve(size());
        for_each([&](vertex v) { out.push_back(v); });
        return out;
    }

    std::span<const word> words() const noexcept { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic order on the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b)
    {
        auto ma = a.members();
        auto mb = b.members();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    }

private:
    void check(vertex v) const
    {
        if (v >= universe_)
            throw parameter_error("vertex " + std::to_string(v) + " outside universe of size "
                                  + std::to_string(universe_));
    }

    void same_universe(const VertexSet& o) const
    {
        if (o.universe_ != universe_)
            throw parameter_error("vertex sets over different universes");
    }

    void trim() noexcept
    {
        if (universe_ % word_bits && !words_.empty())
            words_.back() &= (word{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<word> words_;
};

} // namespace tkc

#endif
