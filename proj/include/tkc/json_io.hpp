#ifndef TKC_JSON_IO_HPP
#define TKC_JSON_IO_HPP

// JSON and CSV forms of the library's reports. Requires nlohmann/json.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bounds.hpp"
#include "coalition.hpp"
#include "constructions.hpp"
#include "graph6.hpp"
#include "scan.hpp"
#include "solver.hpp"

namespace tkc::io {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

inline json to_json(const Partition& p) { return p.to_lists(); }

/// Blocks as a JSON array of vertex arrays, checked against the graph order.
inline Partition partition_from_json(std::size_t n, const json& j)
{
    if (!j.is_array())
        throw parse_error("partition: expected an array of blocks");
    Partition p;
    for (const auto& block : j) {
        if (!block.is_array())
            throw parse_error("partition: every block must be an array of vertices");
        VertexSet s(n);
        for (const auto& v : block) {
            if (!v.is_number_unsigned())
                throw parse_error("partition: vertices must be nonnegative integers");
            const auto x = v.get<std::size_t>();
            if (x >= n)
                throw parse_error("partition: vertex " + std::to_string(x) + " outside 0.." + std::to_string(n) + "-1");
            s.insert(x);
        }
        p.blocks.push_back(std::move(s));
    }
    return p;
}

inline Partition partition_from_text(std::size_t n, const std::string& text)
{
    try {
        return partition_from_json(n, json::parse(text));
    } catch (const json::exception& e) {
        throw parse_error(std::string("partition JSON: ") + e.what());
    }
}

inline json to_json(const CoalitionMode& m)
{
    return {{"semantics", m.semantics()}, {"k", m.k}};
}

inline json to_json(const VerificationReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations) {
        json e = {{"kind", to_string(v.kind)}, {"blocks", v.blocks}};
        if (!v.vertices.empty())
            e["vertices"] = v.vertices;
        violations.push_back(std::move(e));
    }
    return {{"schemaVersion", schema_version},
            {"valid", r.valid},
            {"violations", std::move(violations)},
            {"partnerMatrix", r.partner}};
}

inline json to_json(const CertifiedInstance& c)
{
    return {{"schemaVersion", schema_version},
            {"graph6", write_graph6(c.graph)},
            {"mode", c.mode.semantics()},
            {"k", c.mode.k},
            {"blocks", to_json(c.partition)},
            {"claimedValue", c.claimed_value},
            {"provenance", c.provenance}};
}

/// An instance document as read, before any verification.
struct InstanceDocument {
    Graph graph;
    CoalitionMode mode;
    Partition partition;
    std::size_t claimed_value = 0;
    std::string provenance;
};

inline CoalitionMode mode_from_json(const std::string& semantics, int k)
{
    if (semantics == "OpenTotal")
        return CoalitionMode::open_total(k);
    if (semantics == "ClosedTuple")
        return CoalitionMode::closed_tuple(k);
    throw parse_error("unknown mode '" + semantics + "'");
}

inline InstanceDocument read_instance(const json& j)
{
    try {
        Graph g = parse_graph6(j.at("graph6").get<std::string>());
        CoalitionMode mode = mode_from_json(j.at("mode").get<std::string>(), j.at("k").get<int>());
        Partition p = partition_from_json(g.order(), j.at("blocks"));
        return {std::move(g), mode, std::move(p), j.at("claimedValue").get<std::size_t>(),
                j.value("provenance", std::string{})};
    } catch (const json::exception& e) {
        throw parse_error(std::string("instance JSON: ") + e.what());
    }
}

inline InstanceDocument read_instance(const std::string& text)
{
    try {
        return read_instance(json::parse(text));
    } catch (const json::exception& e) {
        throw parse_error(std::string("instance JSON: ") + e.what());
    }
}

/// Re-verifies the witness; a tampered instance throws certification_failure.
inline CertifiedInstance instance_from_json(const json& j)
{
    InstanceDocument d = read_instance(j);
    return make_certified(std::move(d.graph), std::move(d.partition), d.mode, d.claimed_value,
                          std::move(d.provenance));
}

inline json to_json(const SolveResult& r)
{
    return {{"schemaVersion", schema_version},
            {"value", r.value},
            {"witness", to_json(r.witness)},
            {"certifiedBy", to_string(r.certified_by)},
            {"stats",
             {{"nodes", r.stats.nodes},
              {"prunes", r.stats.prunes()},
              {"prunesByKind",
               {{"dominatingBlock", r.stats.pruned_dominating_block},
                {"tooFewVertices", r.stats.pruned_too_few_vertices},
                {"partnerUnreachable", r.stats.pruned_partner_unreachable}}},
              {"millis", r.stats.millis}}}};
}

inline json to_json(const BoundEntry& e)
{
    json j = {{"name", e.name}, {"kind", to_string(e.kind)}, {"value", e.value}, {"applicable", e.applicable}};
    if (!e.reason.empty())
        j["reason"] = e.reason;
    return j;
}

inline json to_json(const std::vector<BoundEntry>& entries)
{
    json a = json::array();
    for (const auto& e : entries)
        a.push_back(to_json(e));
    return a;
}

inline json to_json(const Certificate& c)
{
    json j = {{"lower", c.lower}, {"upper", c.upper}, {"status", c.exact() ? "Exact" : "Interval"}};
    if (c.exact())
        j["value"] = c.lower;
    return j;
}

inline json to_json(const ScanRecord& r)
{
    json j = {{"graph6", r.graph6}, {"n", r.n}, {"delta", r.delta}, {"Delta", r.Delta},
              {"verdict", to_string(r.verdict)}};
    if (r.has_value) {
        if (r.exact())
            j["value"] = r.value_lower;
        else
            j["value"] = json::array({r.value_lower, r.value_upper});
    } else {
        j["value"] = nullptr;
    }
    j["bound"] = r.has_bound ? json(r.bound) : json(nullptr);
    if (!r.reason.empty())
        j["reason"] = r.reason;
    return j;
}

inline json to_json(const ScanSummary& s, ScanCheck check)
{
    return {{"summary",
             {{"schemaVersion", schema_version},
              {"check", to_string(check)},
              {"total", s.total},
              {"satisfies", s.satisfies},
              {"violates", s.violates},
              {"skipped", s.skipped},
              {"fatal", s.fatal}}}};
}

inline json to_json(const CatalogRecord& r)
{
    json j = {{"graph6", r.graph6}, {"n", r.n}, {"edges", r.edges}, {"delta", r.delta}, {"Delta", r.Delta}};
    j["tc2"] = r.tc2 ? json(*r.tc2) : json(nullptr);
    if (!r.skipped.empty())
        j["skipped"] = r.skipped;
    return j;
}

namespace csv {

/// Quotes a field when it contains a comma, quote or newline.
inline std::string field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

inline constexpr const char* scan_header = "graph6,n,delta,Delta,value,bound,verdict,reason";

inline std::string row(const ScanRecord& r)
{
    std::ostringstream o;
    o << field(r.graph6) << ',' << r.n << ',' << r.delta << ',' << r.Delta << ',';
    if (r.has_value) {
        if (r.exact())
            o << r.value_lower;
        else
            o << '[' << r.value_lower << ';' << r.value_upper << ']';
    }
    o << ',';
    if (r.has_bound)
        o << r.bound;
    o << ',' << to_string(r.verdict) << ',' << field(r.reason);
    return o.str();
}

inline std::string footer(const ScanSummary& s, ScanCheck check)
{
    std::ostringstream o;
    o << "# summary check=" << to_string(check) << " total=" << s.total << " satisfies=" << s.satisfies
      << " violates=" << s.violates << " skipped=" << s.skipped << " fatal=" << (s.fatal ? "true" : "false");
    return o.str();
}

inline constexpr const char* catalog_header = "graph6,n,edges,delta,Delta,tc2,skipped";

inline std::string row(const CatalogRecord& r)
{
    std::ostringstream o;
    o << field(r.graph6) << ',' << r.n << ',' << r.edges << ',' << r.delta << ',' << r.Delta << ',';
    if (r.tc2)
        o << *r.tc2;
    o << ',' << field(r.skipped);
    return o.str();
}

} // namespace csv

} // namespace tkc::io

#endif
