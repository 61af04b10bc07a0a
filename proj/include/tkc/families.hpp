#ifndef TKC_FAMILIES_HPP
#define TKC_FAMILIES_HPP

#include <cctype>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace tkc {

struct FamilySpec;

namespace family {

/// C_n on 0-1-...-(n-1)-0.
struct Cycle {
    std::size_t n;
};
struct Complete {
    std::size_t n;
};
/// Parts in the given order, vertices numbered part by part.
struct CompleteMultipartite {
    std::vector<std::size_t> parts;
};
/// K_{1,leaves}; the center is vertex 0.
struct Star {
    std::size_t leaves;
};
/// Left block numbered first.
struct Join {
    std::shared_ptr<const FamilySpec> left;
    std::shared_ptr<const FamilySpec> right;
};

} // namespace family

struct FamilySpec {
    std::variant<family::Cycle, family::Complete, family::CompleteMultipartite, family::Star, family::Join> shape;

    static FamilySpec cycle(std::size_t n) { return {family::Cycle{n}}; }
    static FamilySpec complete(std::size_t n) { return {family::Complete{n}}; }
    static FamilySpec complete_multipartite(std::vector<std::size_t> parts)
    {
        return {family::CompleteMultipartite{std::move(parts)}};
    }
    static FamilySpec star(std::size_t leaves) { return {family::Star{leaves}}; }
    static FamilySpec join(FamilySpec l, FamilySpec r)
    {
        return {family::Join{std::make_shared<const FamilySpec>(std::move(l)),
                             std::make_shared<const FamilySpec>(std::move(r))}};
    }
};

namespace detail {

inline std::size_t require_positive(std::size_t v, const char* what)
{
    if (v < 1)
        throw parameter_error(std::string(what) + " size must be at least 1");
    return v;
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

} // namespace detail

inline Graph generate(const FamilySpec& spec)
{
    return std::visit(
        detail::overloaded{
            [](const family::Cycle& c) {
                if (c.n < 3)
                    throw parameter_error("cycle needs at least 3 vertices");
                GraphBuilder b(c.n);
                for (vertex v = 0; v < c.n; ++v)
                    b.add_edge(v, (v + 1) % c.n);
                return std::move(b).build();
            },
            [](const family::Complete& c) {
                detail::require_positive(c.n, "complete graph");
                std::vector<vertex> all(c.n);
                std::iota(all.begin(), all.end(), vertex{0});
                GraphBuilder b(c.n);
                b.add_clique(all);
                return std::move(b).build();
            },
            [](const family::CompleteMultipartite& m) {
                if (m.parts.empty())
                    throw parameter_error("complete multipartite graph needs at least one part");
                std::vector<std::vector<vertex>> parts;
                vertex next = 0;
                for (std::size_t p : m.parts) {
                    detail::require_positive(p, "partite set");
                    auto& part = parts.emplace_back(p);
                    std::iota(part.begin(), part.end(), next);
                    next += p;
                }
                GraphBuilder b(next);
                for (std::size_t i = 0; i < parts.size(); ++i)
                    for (std::size_t j = i + 1; j < parts.size(); ++j)
                        b.add_biclique(parts[i], parts[j]);
                return std::move(b).build();
            },
            [](const family::Star& s) {
                detail::require_positive(s.leaves, "star");
                GraphBuilder b(s.leaves + 1);
                for (vertex v = 1; v <= s.leaves; ++v)
                    b.add_edge(0, v);
                return std::move(b).build();
            },
            [](const family::Join& j) {
                if (!j.left || !j.right)
                    throw parameter_error("join operands must be present");
                return join(generate(*j.left), generate(*j.right));
            },
        },
        spec.shape);
}

namespace detail {

class FamilyParser {
public:
    explicit FamilyParser(std::string_view text) : text_(text) {}

    FamilySpec parse()
    {
        FamilySpec spec = term();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing text");
        return spec;
    }

private:
    FamilySpec term()
    {
        const std::string name = identifier();
        expect('(');
        if (name == "join") {
            FamilySpec l = term();
            expect(',');
            FamilySpec r = term();
            expect(')');
            return FamilySpec::join(std::move(l), std::move(r));
        }
        std::vector<std::size_t> args{number()};
        while (peek() == ',') {
            ++pos_;
            args.push_back(number());
        }
        expect(')');
        if (name == "multipartite" || name == "completeMultipartite")
            return FamilySpec::complete_multipartite(std::move(args));
        if (args.size() != 1)
            fail(name + " takes exactly one argument");
        if (name == "cycle")
            return FamilySpec::cycle(args[0]);
        if (name == "complete")
            return FamilySpec::complete(args[0]);
        if (name == "star")
            return FamilySpec::star(args[0]);
        fail("unknown family '" + name + "'");
    }

    std::string identifier()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a family name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t number()
    {
        skip_ws();
        std::size_t start = pos_;
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > max_graph_order)
                fail("size parameter too large");
            ++pos_;
        }
        if (start == pos_)
            fail("expected a number");
        return v;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what)
    {
        throw parse_error("family spec at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses e.g. "join(complete(2),multipartite(1,1,1))".
inline FamilySpec parse_family(std::string_view text) { return detail::FamilyParser(text).parse(); }

} // namespace tkc

#endif
