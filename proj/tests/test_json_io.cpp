#include <gtest/gtest.h>

#include "support.hpp"
#include "tkc/json_io.hpp"

using namespace tkc;
using tkc::io::json;

TEST(JsonIo, PartitionRoundTrip)
{
    const Partition p = Partition::from_lists(5, {{0, 3}, {1}, {2, 4}});
    EXPECT_EQ(io::to_json(p).dump(), "[[0,3],[1],[2,4]]");
    EXPECT_EQ(io::partition_from_text(5, "[[0,3],[1],[2,4]]"), p);
}

TEST(JsonIo, PartitionErrors)
{
    EXPECT_THROW(io::partition_from_text(4, "[[0,1],[2,"), parse_error);
    EXPECT_THROW(io::partition_from_text(4, "{\"a\":1}"), parse_error);
    EXPECT_THROW(io::partition_from_text(4, "[[0,1],[2,9]]"), parse_error);
    EXPECT_THROW(io::partition_from_text(4, "[[0,-1]]"), parse_error);
    EXPECT_THROW(io::partition_from_text(4, "[[0],3]"), parse_error);
}

TEST(JsonIo, VerificationReportShape)
{
    const Graph c6 = generate(FamilySpec::cycle(6));
    const auto r = verify_partition(c6, Partition::from_lists(6, {{0}, {1}, {2}, {3}, {4}, {5}}), CoalitionMode::open_total(2));
    const json j = io::to_json(r);
    EXPECT_EQ(j["schemaVersion"], io::schema_version);
    EXPECT_FALSE(j["valid"].get<bool>());
    EXPECT_EQ(j["violations"].size(), 6u);
    EXPECT_EQ(j["violations"][0]["kind"], "NoPartner");
    EXPECT_EQ(j["partnerMatrix"].size(), 6u);
}

TEST(JsonIo, InstanceRoundTrip)
{
    const auto inst = build_extremal_tc(2, 3);
    const json j = io::to_json(inst);
    EXPECT_EQ(j["mode"], "OpenTotal");
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["claimedValue"], 8);
    EXPECT_EQ(j["blocks"].size(), 8u);
    const auto back = io::instance_from_json(j);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.partition, inst.partition);
    EXPECT_EQ(back.mode, inst.mode);
    EXPECT_EQ(io::to_json(back), j);

    const auto dc = io::instance_from_json(io::to_json(build_extremal_dc(2, 4)));
    EXPECT_EQ(dc.mode, CoalitionMode::double_domination());
}

TEST(JsonIo, TamperedInstanceFails)
{
    json j = io::to_json(build_extremal_tc(2, 3));
    j["claimedValue"] = 9;
    EXPECT_THROW(io::instance_from_json(j), certification_failure);
    j = io::to_json(build_extremal_tc(2, 3));
    auto moved = j["blocks"][0].back();
    j["blocks"][0].erase(j["blocks"][0].size() - 1);
    j["blocks"][1].push_back(moved);
    EXPECT_THROW(io::instance_from_json(j), certification_failure);
    j = io::to_json(build_extremal_tc(2, 3));
    j["mode"] = "Sideways";
    EXPECT_THROW(io::instance_from_json(j), parse_error);
    j.erase("graph6");
    EXPECT_THROW(io::instance_from_json(j), parse_error);
}

TEST(JsonIo, ShippedInstanceVerifies)
{
    const auto doc = io::read_instance(support::read_lines(support::fixture_path("gdl_2_3.json")).front());
    EXPECT_EQ(doc.graph.order(), 56u);
    EXPECT_EQ(doc.claimed_value, 8u);
    EXPECT_TRUE(verify_partition(doc.graph, doc.partition, doc.mode).valid);
}

TEST(JsonIo, SolveResultShape)
{
    const json j = io::to_json(solve_uncapped(parse_graph6("C~"), CoalitionMode::open_total(2)));
    EXPECT_EQ(j["value"], 3);
    EXPECT_EQ(j["witness"].size(), 3u);
    EXPECT_EQ(j["certifiedBy"], "Search");
    EXPECT_TRUE(j["stats"].contains("nodes"));
    EXPECT_TRUE(j["stats"]["prunesByKind"].contains("dominatingBlock"));
}

TEST(JsonIo, ScanRecordForms)
{
    ScanOptions opt;
    opt.check = ScanCheck::mixed_degree;
    const auto r = scan_graph(generate(FamilySpec::cycle(5)), opt);
    const json j = io::to_json(r);
    EXPECT_EQ(j["verdict"], "Satisfies");
    EXPECT_EQ(j["value"], 2);
    EXPECT_EQ(io::csv::row(r), "Dhc,5,2,2,2,2,Satisfies,");
    const auto big = scan_graph(generate(FamilySpec::cycle(25)), opt);
    EXPECT_NE(io::csv::row(big).find("guard: n > 20"), std::string::npos);
    ScanSummary s;
    s.add(r, opt.check);
    EXPECT_EQ(io::csv::footer(s, opt.check),
              "# summary check=mixed-degree total=1 satisfies=1 violates=0 skipped=0 fatal=false");
}

TEST(JsonIo, CsvQuoting)
{
    EXPECT_EQ(io::csv::field("plain"), "plain");
    EXPECT_EQ(io::csv::field("a,b"), "\"a,b\"");
    EXPECT_EQ(io::csv::field("say \"x\""), "\"say \"\"x\"\"\"");
}
