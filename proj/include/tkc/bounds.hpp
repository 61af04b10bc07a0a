#ifndef TKC_BOUNDS_HPP
#define TKC_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace tkc {

using bound_value = std::int64_t;

struct BoundEntry {
    enum class Kind { Lower, Upper, ConjecturedUpper, ExactRule };

    std::string name;
    Kind kind;
    bound_value value = 0;
    bool applicable = false;
    std::string reason; // violated precondition when !applicable

    friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

inline const char* to_string(BoundEntry::Kind k)
{
    switch (k) {
    case BoundEntry::Kind::Lower: return "Lower";
    case BoundEntry::Kind::Upper: return "Upper";
    case BoundEntry::Kind::ConjecturedUpper: return "ConjecturedUpper";
    case BoundEntry::Kind::ExactRule: return "ExactRule";
    }
    return "?";
}

namespace bound_names {
inline constexpr const char* min_degree_lower = "min_degree_lower";       // δ − k + 2
inline constexpr const char* order_upper = "order_upper";                 // n − k + 1 (open), n (closed)
inline constexpr const char* domatic_lower = "domatic_lower";             // 2·d_{×k,t}
inline constexpr const char* mixed_degree_upper = "mixed_degree_upper";   // max{Δ, ⌊δ/2⌋(Δ−4)+δ}
inline constexpr const char* gated_degree_upper = "gated_degree_upper";   // needs Δ ≥ 4⌊δ/2⌋−2
inline constexpr const char* conjectured_upper = "conjectured_upper";     // same formula, ungated
inline constexpr const char* cubic_exact = "cubic_exact";
inline constexpr const char* quartic_exact = "quartic_exact";
inline constexpr const char* double_gated_upper = "double_gated_upper";   // needs Δ ≥ 4⌈δ/2⌉−3
inline constexpr const char* pair_lower = "pair_lower";                   // 2
} // namespace bound_names

inline bound_value floor_half(bound_value x) { return x / 2; }
inline bound_value ceil_half(bound_value x) { return (x + 1) / 2; }

/// max{Δ, ⌊δ/2⌋(Δ−4)+δ}; an upper bound on TC_2 for δ >= 2.
inline bound_value mixed_degree_tc2(bound_value delta, bound_value Delta)
{
    return std::max(Delta, floor_half(delta) * (Delta - 4) + delta);
}

/// ⌊δ/2⌋(Δ−2⌊δ/2⌋+1)+⌈δ/2⌉.
inline bound_value degree_formula_tc2(bound_value delta, bound_value Delta)
{
    const bound_value h = floor_half(delta);
    return h * (Delta - 2 * h + 1) + ceil_half(delta);
}

/// Gate under which degree_formula_tc2 is a proven upper bound.
inline bool degree_formula_tc2_gate(bound_value delta, bound_value Delta)
{
    return delta >= 2 && Delta >= 4 * floor_half(delta) - 2;
}

/// The degree formula evaluated as a conjectured bound (no Δ gate).
inline bound_value conjectured_tc2(bound_value delta, bound_value Delta)
{
    if (delta < 2 || Delta < delta)
        throw parameter_error("conjectured_tc2 requires Delta >= delta >= 2");
    return degree_formula_tc2(delta, Delta);
}

/// ⌈δ/2⌉(Δ−2⌈δ/2⌉+2)+1+⌊δ/2⌋; upper bound on DC under its gate.
inline bound_value degree_formula_dc(bound_value delta, bound_value Delta)
{
    const bound_value h = ceil_half(delta);
    return h * (Delta - 2 * h + 2) + 1 + floor_half(delta);
}

inline bool degree_formula_dc_gate(bound_value delta, bound_value Delta)
{
    return delta >= 1 && Delta >= 4 * ceil_half(delta) - 3;
}

/// Every bound on TC_k(g) known to the library, evaluated and gated.
/// The domatic lower bound is only computed when requested since it runs an
/// exhaustive domatic search.
inline std::vector<BoundEntry> bound_report_tc(const Graph& g, int k, bool include_domatic,
                                               SearchGuard domatic_guard = {domatic_guard_default})
{
    using K = BoundEntry::Kind;
    namespace bn = bound_names;
    const CoalitionMode mode = CoalitionMode::open_total(k);
    mode.require_admissible(g);
    require_connected(g);

    const DegreeStats ds = degree_stats(g);
    const auto n = static_cast<bound_value>(g.order());
    const auto delta = static_cast<bound_value>(ds.min_degree);
    const auto Delta = static_cast<bound_value>(ds.max_degree);
    const bool two = k == 2;
    const std::string not_two = "only stated for k = 2";

    std::vector<BoundEntry> out;
    out.push_back({bn::min_degree_lower, K::Lower, delta - k + 2, true, ""});
    out.push_back({bn::order_upper, K::Upper, n - k + 1, true, ""});

    if (include_domatic) {
        const auto d = static_cast<bound_value>(max_domatic_partition(g, mode, domatic_guard).size());
        out.push_back({bn::domatic_lower, K::Lower, 2 * d, true, ""});
    } else {
        out.push_back({bn::domatic_lower, K::Lower, 0, false, "domatic search not requested"});
    }

    out.push_back({bn::mixed_degree_upper, K::Upper, mixed_degree_tc2(delta, Delta), two, two ? "" : not_two});

    const bool gate = degree_formula_tc2_gate(delta, Delta);
    std::string gate_reason;
    if (!two)
        gate_reason = not_two;
    else if (!gate)
        gate_reason = "needs Delta >= 4*floor(delta/2)-2 = " + std::to_string(4 * floor_half(delta) - 2);
    out.push_back({bn::gated_degree_upper, K::Upper, degree_formula_tc2(delta, Delta), two && gate, gate_reason});

    out.push_back({bn::conjectured_upper, K::ConjecturedUpper, degree_formula_tc2(delta, Delta), two,
                   two ? "" : not_two});

    const bool cubic = is_regular(g, 3);
    const bool cubic_ok = cubic && (k == 2 || k == 3);
    out.push_back({bn::cubic_exact, K::ExactRule, k == 3 ? 2 : 3, cubic_ok,
                   cubic_ok ? "" : (cubic ? "cubic rule covers k in {2,3}" : "graph is not cubic")});

    const bool quartic = is_regular(g, 4);
    out.push_back({bn::quartic_exact, K::ExactRule, 4, quartic && two,
                   quartic ? (two ? "" : not_two) : "graph is not 4-regular"});
    return out;
}

/// Bounds on DC(g) (closed neighborhoods, k = 2).
inline std::vector<BoundEntry> bound_report_dc(const Graph& g)
{
    using K = BoundEntry::Kind;
    namespace bn = bound_names;
    CoalitionMode::double_domination().require_admissible(g);
    require_connected(g);
    const DegreeStats ds = degree_stats(g);
    const auto delta = static_cast<bound_value>(ds.min_degree);
    const auto Delta = static_cast<bound_value>(ds.max_degree);
    const bool gate = degree_formula_dc_gate(delta, Delta);

    std::vector<BoundEntry> out;
    out.push_back({bn::pair_lower, K::Lower, 2, true, ""});
    out.push_back({bn::order_upper, K::Upper, static_cast<bound_value>(g.order()), true, ""});
    out.push_back({bn::double_gated_upper, K::Upper, degree_formula_dc(delta, Delta), gate,
                   gate ? "" : "needs Delta >= 4*ceil(delta/2)-3 = " + std::to_string(4 * ceil_half(delta) - 3)});
    return out;
}

inline std::vector<BoundEntry> bound_report(const Graph& g, const CoalitionMode& mode, bool include_domatic = false)
{
    if (mode.closed()) {
        if (mode.k != 2)
            throw parameter_error("closed-neighborhood bounds are only available for k = 2");
        return bound_report_dc(g);
    }
    return bound_report_tc(g, mode.k, include_domatic);
}

struct Certificate {
    bound_value lower = 0;
    bound_value upper = std::numeric_limits<bound_value>::max();

    bool exact() const noexcept { return lower == upper; }
};

/// Sandwich a verified witness size and proven bounds. Conjectured entries
/// never contribute.
inline Certificate certify(std::optional<std::size_t> witness, const std::vector<BoundEntry>& report)
{
    Certificate c;
    if (witness)
        c.lower = static_cast<bound_value>(*witness);
    for (const auto& e : report) {
        if (!e.applicable)
            continue;
        switch (e.kind) {
        case BoundEntry::Kind::Lower: c.lower = std::max(c.lower, e.value); break;
        case BoundEntry::Kind::Upper: c.upper = std::min(c.upper, e.value); break;
        case BoundEntry::Kind::ExactRule:
            c.lower = std::max(c.lower, e.value);
            c.upper = std::min(c.upper, e.value);
            break;
        case BoundEntry::Kind::ConjecturedUpper: break;
        }
    }
    if (c.lower > c.upper)
        throw certification_failure("certified lower bound " + std::to_string(c.lower)
                                    + " exceeds certified upper bound " + std::to_string(c.upper));
    return c;
}

} // namespace tkc

#endif
