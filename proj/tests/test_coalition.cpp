#include <gtest/gtest.h>

#include "support.hpp"

using namespace tkc;

namespace {

bool has_kind(const VerificationReport& r, Violation::Kind k)
{
    for (const auto& v : r.violations)
        if (v.kind == k)
            return true;
    return false;
}

} // namespace

TEST(Coalition, PairOnFourCycle)
{
    const Graph c4 = parse_graph6("Cl");
    const auto t1 = CoalitionMode::open_total(1);
    EXPECT_TRUE(is_coalition(c4, VertexSet(4, {0}), VertexSet(4, {1}), t1));
    EXPECT_TRUE(is_coalition(c4, VertexSet(4, {1}), VertexSet(4, {0}), t1));
    EXPECT_FALSE(is_coalition(c4, VertexSet(4, {0}), VertexSet(4, {2}), t1));
    // A dominating operand disqualifies the pair.
    EXPECT_FALSE(is_coalition(c4, VertexSet(4, {0, 1}), VertexSet(4, {2}), t1));
    EXPECT_THROW(is_coalition(c4, VertexSet(4, {0, 1}), VertexSet(4, {1}), t1), precondition_failed);
    EXPECT_THROW(is_coalition(c4, VertexSet(4), VertexSet(4, {1}), t1), precondition_failed);
}

TEST(Verify, FourCycleTwoBlocks)
{
    const Graph c4 = parse_graph6("Cl");
    const auto r = verify_partition(c4, Partition::from_lists(4, {{0, 2}, {1, 3}}), CoalitionMode::open_total(2));
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.partners_of(0), std::vector<std::size_t>{1});
}

TEST(Verify, SixCycleSingletonsHaveNoPartner)
{
    const Graph c6 = generate(FamilySpec::cycle(6));
    const auto r = verify_partition(c6, Partition::from_lists(6, {{0}, {1}, {2}, {3}, {4}, {5}}),
                                    CoalitionMode::open_total(2));
    EXPECT_FALSE(r.valid);
    ASSERT_EQ(r.violations.size(), 6u);
    for (const auto& v : r.violations)
        EXPECT_EQ(v.kind, Violation::Kind::NoPartner);
}

TEST(Verify, ReportsEveryStructuralViolation)
{
    const Graph k4 = generate(FamilySpec::complete(4));
    const auto t1 = CoalitionMode::open_total(1);
    EXPECT_TRUE(has_kind(verify_partition(k4, Partition::from_lists(4, {{0, 1}, {1, 2, 3}}), t1), Violation::Kind::Overlap));
    EXPECT_TRUE(has_kind(verify_partition(k4, Partition::from_lists(4, {{0}, {1}}), t1), Violation::Kind::NotCovering));
    EXPECT_TRUE(has_kind(verify_partition(k4, Partition::from_lists(4, {{0}, {}, {1, 2, 3}}), t1),
                         Violation::Kind::EmptyBlock));
    EXPECT_TRUE(has_kind(verify_partition(k4, Partition::from_lists(4, {{0}, {1, 2, 3}}), t1),
                         Violation::Kind::BlockIsDominating));
}

TEST(Verify, RejectsDisconnectedAndInadmissible)
{
    const Graph two = disjoint_union(generate(FamilySpec::cycle(3)), generate(FamilySpec::cycle(3)));
    EXPECT_THROW(verify_partition(two, Partition::from_lists(6, {{0, 1, 2}, {3, 4, 5}}), CoalitionMode::open_total(1)),
                 disconnected_graph);
    EXPECT_THROW(verify_partition(generate(FamilySpec::cycle(5)), Partition::from_lists(5, {{0, 1, 2, 3, 4}}),
                                  CoalitionMode::open_total(3)),
                 inadmissible_mode);
}

TEST(VertexCover, AgainstReference)
{
    EXPECT_EQ(vertex_cover_number(generate(FamilySpec::cycle(5))), 3u);
    EXPECT_EQ(vertex_cover_number(generate(FamilySpec::complete(4))), 3u);
    EXPECT_EQ(vertex_cover_number(generate(FamilySpec::star(4))), 1u);
    EXPECT_EQ(vertex_cover_number(GraphBuilder(3).build()), 0u);
    for (const Graph& g : connected_universe(6, 1, 6)) {
        if (g.size() % 3 == 0) {
            ASSERT_EQ(vertex_cover_number(g), support::ref_vertex_cover(g));
        }
    }
}

TEST(CoalitionGraph, TwoCoalitionPartitionOfK5)
{
    const Graph k5 = generate(FamilySpec::complete(5));
    const auto mode = CoalitionMode::open_total(2);
    const Partition p = Partition::from_lists(5, {{0}, {1}, {2}, {3, 4}});
    ASSERT_TRUE(verify_partition(k5, p, mode).valid);
    const auto cg = coalition_graph(k5, p, mode);
    EXPECT_EQ(cg.base.order(), 4u);
    EXPECT_EQ(cg.base.size(), 3u);
    EXPECT_EQ(cg.max_degree, 3u);
    EXPECT_EQ(cg.vertex_cover_number, 1u);
    EXPECT_EQ(cg.independence_number(), 3u);
    const auto inv = check_partition_invariants(k5, p, mode);
    EXPECT_TRUE(inv.hold());
    EXPECT_EQ(inv.degree_bound, 3u);
    EXPECT_EQ(inv.cover_bound, 3u);
    EXPECT_EQ(inv.partner_bound, 3u);
}

TEST(CoalitionGraph, RequiresValidPartition)
{
    const Graph c6 = generate(FamilySpec::cycle(6));
    EXPECT_THROW(coalition_graph(c6, Partition::from_lists(6, {{0}, {1}, {2}, {3}, {4}, {5}}), CoalitionMode::open_total(2)),
                 precondition_failed);
}
