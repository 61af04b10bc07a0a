#include <gtest/gtest.h>

#include <stdexcept>

#include "support.hpp"

using namespace tkc;

TEST(ParallelMap, EmitsInOrderForAnyJobCount)
{
    for (unsigned jobs : {1u, 2u, 3u, 8u}) {
        std::vector<std::size_t> out;
        ordered_parallel_map(
            50, jobs, [](std::size_t i) { return i * i; }, [&](std::size_t i, std::size_t v) {
                EXPECT_EQ(v, i * i);
                out.push_back(i);
            });
        ASSERT_EQ(out.size(), 50u);
        EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
    }
}

TEST(ParallelMap, RethrowsWorkerErrors)
{
    for (unsigned jobs : {1u, 4u}) {
        std::size_t emitted = 0;
        EXPECT_THROW(ordered_parallel_map(
                         20, jobs,
                         [](std::size_t i) {
                             if (i == 7)
                                 throw std::runtime_error("boom");
                             return i;
                         },
                         [&](std::size_t, std::size_t) { ++emitted; }),
                     std::runtime_error);
        EXPECT_EQ(emitted, 7u);
    }
}

TEST(ScanCheck, NamesAndAliases)
{
    EXPECT_EQ(parse_scan_check("thm35"), ScanCheck::mixed_degree);
    EXPECT_EQ(parse_scan_check("thm38"), ScanCheck::gated_degree);
    EXPECT_EQ(parse_scan_check("thm41"), ScanCheck::double_gated);
    EXPECT_EQ(parse_scan_check("conjecture"), ScanCheck::conjecture);
    EXPECT_THROW(parse_scan_check("nope"), parameter_error);
    EXPECT_FALSE(is_proven(ScanCheck::conjecture));
    EXPECT_TRUE(is_proven(ScanCheck::gated_degree));
}

TEST(Scan, Verdicts)
{
    ScanOptions opt;
    opt.check = ScanCheck::mixed_degree;
    const auto c5 = scan_graph(generate(FamilySpec::cycle(5)), opt);
    EXPECT_EQ(c5.verdict, Verdict::Satisfies);
    EXPECT_TRUE(c5.exact());
    EXPECT_EQ(c5.value_lower, 2);
    EXPECT_EQ(c5.bound, 2);

    EXPECT_EQ(scan_line("not graph6", opt).verdict, Verdict::Skipped);
    EXPECT_EQ(scan_line("not graph6", opt).reason.rfind("parse:", 0), 0u);
    EXPECT_EQ(scan_graph(generate(FamilySpec::star(3)), opt).reason, "min degree below 2");
    const Graph two = disjoint_union(generate(FamilySpec::cycle(3)), generate(FamilySpec::cycle(3)));
    EXPECT_EQ(scan_graph(two, opt).reason, "disconnected");

    const auto big = scan_graph(generate(FamilySpec::cycle(25)), opt);
    EXPECT_EQ(big.verdict, Verdict::Skipped);
    EXPECT_TRUE(big.has_value);
    EXPECT_EQ(big.value_lower, 2);
}

TEST(Scan, DoubleGateSkipsCubic)
{
    ScanOptions opt;
    opt.check = ScanCheck::double_gated;
    for (const auto& g : support::cubic_fixture().graphs) {
        const auto r = scan_graph(g, opt);
        EXPECT_EQ(r.verdict, Verdict::Skipped);
        EXPECT_FALSE(r.has_value);
    }
}

TEST(Scan, SummaryFatalOnlyForProvenChecks)
{
    ScanRecord v;
    v.verdict = Verdict::Violates;
    ScanSummary conj, thm;
    conj.add(v, ScanCheck::conjecture);
    thm.add(v, ScanCheck::gated_degree);
    EXPECT_EQ(conj.violates, 1u);
    EXPECT_FALSE(conj.fatal);
    EXPECT_TRUE(thm.fatal);
}

TEST(Scan, UniverseHasNoViolations)
{
    std::vector<std::string> lines;
    for (const auto& g : unique_connected_graphs(6, 2))
        lines.push_back(write_graph6(g));
    for (auto check : {ScanCheck::conjecture, ScanCheck::mixed_degree, ScanCheck::gated_degree}) {
        ScanOptions opt;
        opt.check = check;
        const auto s = scan_lines(lines, opt, 2, [](const ScanRecord&) {});
        EXPECT_EQ(s.total, lines.size());
        EXPECT_EQ(s.violates, 0u) << to_string(check);
        EXPECT_FALSE(s.fatal);
    }
}

TEST(Catalog, KnownValues)
{
    EXPECT_EQ(catalog_graph(generate(FamilySpec::complete_multipartite({2, 3}))).tc2, 3u);
    EXPECT_EQ(catalog_graph(support::c5_plus_chord()).tc2, 2u);
    EXPECT_EQ(catalog_graph(generate(FamilySpec::cycle(8))).tc2, 2u);
    EXPECT_EQ(catalog_graph(parse_graph6("C~")).tc2, 3u);
    EXPECT_EQ(catalog_graph(generate(FamilySpec::complete(5))).skipped, "max degree above 3");
    EXPECT_EQ(catalog_graph(generate(FamilySpec::star(3))).skipped, "min degree below 2");
    EXPECT_FALSE(catalog_line("!!").skipped.empty());
}

TEST(Catalog, FixtureValuesInRange)
{
    for (const auto& g : support::subcubic_fixture().graphs) {
        const auto r = catalog_graph(g);
        ASSERT_TRUE(r.tc2.has_value());
        ASSERT_TRUE(*r.tc2 == 2 || *r.tc2 == 3);
    }
}
