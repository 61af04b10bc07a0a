#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "support.hpp"
#include "tkc/json_io.hpp"

using tkc::io::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun tkc_run(const std::string& args, const std::string& stdin_text = "")
{
    std::string cmd = std::string("'") + TKC_CLI_PATH + "' " + args + " 2>/dev/null";
    if (!stdin_text.empty())
        cmd = "printf '" + stdin_text + "' | " + cmd;
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<json> json_lines(const std::string& out)
{
    std::vector<json> v;
    std::size_t start = 0;
    while (start < out.size()) {
        const std::size_t end = out.find('\n', start);
        v.push_back(json::parse(out.substr(start, end - start)));
        start = end == std::string::npos ? out.size() : end + 1;
    }
    return v;
}

} // namespace

TEST(Cli, VerifyFourCycle)
{
    const CliRun r = tkc_run("verify Cl --blocks '[[0,2],[1,3]]' --k 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(json_lines(r.out).at(0)["valid"].get<bool>());
}

TEST(Cli, VerifySixCycleSingletons)
{
    const std::string c6 = tkc::write_graph6(tkc::generate(tkc::FamilySpec::cycle(6)));
    const CliRun r = tkc_run("verify '" + c6 + "' --blocks '[[0],[1],[2],[3],[4],[5]]'");
    EXPECT_EQ(r.code, 1);
    const auto j = json_lines(r.out).at(0);
    ASSERT_EQ(j["violations"].size(), 6u);
    for (const auto& v : j["violations"])
        EXPECT_EQ(v["kind"], "NoPartner");
}

TEST(Cli, VerifyShippedInstance)
{
    EXPECT_EQ(tkc_run("verify --instance '" + support::fixture_path("gdl_2_3.json") + "'").code, 0);
    EXPECT_EQ(tkc_run("verify --instance '" + support::fixture_path("hrt_2_4.json") + "'").code, 0);
}

TEST(Cli, VerifyParseFailures)
{
    EXPECT_EQ(tkc_run("verify C --blocks '[[0]]'").code, 2);
    EXPECT_EQ(tkc_run("verify Cl --blocks '[[0,2],[1,'").code, 2);
    EXPECT_EQ(tkc_run("verify Cl").code, 2);
}

TEST(Cli, SolveExamples)
{
    EXPECT_EQ(json_lines(tkc_run("solve C~ --k 2").out).at(0)["value"], 3);
    EXPECT_EQ(json_lines(tkc_run("solve C~ --double").out).at(0)["value"], 4);
    EXPECT_EQ(json_lines(tkc_run("solve C~ --k 3").out).at(0)["value"], 2);
    const CliRun o = tkc_run("solve C~ --double --oracle");
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(json_lines(o.out).at(0)["oracleAgrees"].get<bool>());
}

TEST(Cli, SolveFromStdinAndErrors)
{
    const auto lines = json_lines(tkc_run("solve", "C~\\nCl\\n").out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[1]["value"], 2);
    EXPECT_EQ(tkc_run("solve C~ --k 4").code, 2);
    EXPECT_EQ(tkc_run("solve C~ --double --k 3").code, 2);
    const std::string c21 = tkc::write_graph6(tkc::generate(tkc::FamilySpec::cycle(21)));
    EXPECT_EQ(tkc_run("solve '" + c21 + "'").code, 3);
    EXPECT_EQ(tkc_run("solve '" + c21 + "' --force").code, 0);
}

TEST(Cli, Bounds)
{
    const CliRun r = tkc_run("bounds C~");
    EXPECT_EQ(r.code, 0);
    const auto j = json_lines(r.out).at(0);
    EXPECT_EQ(j["schemaVersion"], 1);
    EXPECT_TRUE(j["bounds"].is_array());
    EXPECT_EQ(j["certificate"]["value"], 3);
}

TEST(Cli, ScanCsvAndJson)
{
    const std::string cubic = support::fixture_path("cubic_connected_n4-10.g6");
    const CliRun csv = tkc_run("scan '" + cubic + "' --check thm41 --csv --jobs 2");
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.rfind("graph6,n,delta,Delta,value,bound,verdict,reason\n", 0), 0u);
    EXPECT_NE(csv.out.find("total=27 satisfies=0 violates=0 skipped=27"), std::string::npos);

    const CliRun js = tkc_run("scan --enumerate 6 --check thm35");
    EXPECT_EQ(js.code, 0);
    const auto lines = json_lines(js.out);
    EXPECT_EQ(lines.back()["summary"]["violates"], 0);
    EXPECT_EQ(lines.back()["summary"]["total"], 76);
    EXPECT_EQ(tkc_run("scan C~ --check bogus").code, 2);
}

TEST(Cli, ScanOrderMatchesInputAcrossJobs)
{
    const std::string n7 = support::fixture_path("connected_n7_mindeg2.g6");
    const CliRun one = tkc_run("scan '" + n7 + "' --csv --jobs 1");
    const CliRun four = tkc_run("scan '" + n7 + "' --csv --jobs 4");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST(Cli, Catalog)
{
    const std::string k23 = tkc::write_graph6(tkc::generate(tkc::FamilySpec::complete_multipartite({2, 3})));
    const std::string chord = tkc::write_graph6(support::c5_plus_chord());
    const auto lines = json_lines(tkc_run("catalog-subcubic '" + k23 + "' '" + chord + "'").out);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0]["tc2"], 3);
    EXPECT_EQ(lines[1]["tc2"], 2);
    EXPECT_EQ(lines[2]["summary"]["total"], 2);
}

TEST(Cli, Generate)
{
    const CliRun gdl = tkc_run("generate --gdl 2 3 --with-partition");
    EXPECT_EQ(gdl.code, 0);
    const std::size_t nl = gdl.out.find('\n');
    EXPECT_EQ(tkc::parse_graph6(gdl.out.substr(0, nl)).order(), 56u);
    const auto inst = tkc::io::instance_from_json(json::parse(gdl.out.substr(nl + 1)));
    EXPECT_EQ(inst.partition.size(), 8u);

    const CliRun hrt = tkc_run("generate --hrt 2 4 --with-partition");
    const std::size_t nl2 = hrt.out.find('\n');
    EXPECT_EQ(tkc::parse_graph6(hrt.out.substr(0, nl2)).order(), 50u);
    EXPECT_EQ(tkc::io::instance_from_json(json::parse(hrt.out.substr(nl2 + 1))).partition.size(), 10u);

    EXPECT_EQ(tkc_run("generate --family 'cycle(7)'").out,
              tkc::write_graph6(tkc::generate(tkc::FamilySpec::cycle(7))) + "\n");
    EXPECT_EQ(tkc_run("generate --gdl 1 3").code, 2);
    EXPECT_EQ(tkc_run("generate --hrt 2 3").code, 2);
    EXPECT_EQ(tkc_run("generate --family 'cycle(2)'").code, 2);
    EXPECT_EQ(tkc_run("generate").code, 2);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(tkc_run("").code, 2);
    EXPECT_EQ(tkc_run("frobnicate").code, 2);
    EXPECT_EQ(tkc_run("solve --k zero C~").code, 2);
    EXPECT_EQ(tkc_run("--help").code, 0);
}
