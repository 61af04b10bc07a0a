// tkc: command-line front end for the coalition toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tkc/json_io.hpp"
#include "tkc/tkc.hpp"

namespace {

using tkc::io::json;

enum exit_code : int { ok = 0, invalid = 1, bad_input = 2, too_large = 3 };

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw tkc::parse_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void append_lines(std::istream& in, std::vector<std::string>& out)
{
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            out.push_back(line);
    }
}

// Each input is "-" (stdin), an existing file of graph6 lines, or a literal
// graph6 record. No inputs means stdin.
std::vector<std::string> gather_lines(const std::vector<std::string>& inputs)
{
    std::vector<std::string> lines;
    if (inputs.empty()) {
        append_lines(std::cin, lines);
        return lines;
    }
    for (const auto& in : inputs) {
        if (in == "-") {
            append_lines(std::cin, lines);
        } else if (std::filesystem::is_regular_file(in)) {
            std::ifstream f(in);
            append_lines(f, lines);
        } else {
            lines.push_back(in);
        }
    }
    return lines;
}

struct ModeFlags {
    int k = 2;
    bool dbl = false;

    tkc::CoalitionMode mode(const CLI::App& app) const
    {
        if (dbl) {
            if (app.count("--k") > 0 && k != 2)
                throw tkc::parameter_error("--double is closed-neighborhood domination with k = 2; got --k " + std::to_string(k));
            return tkc::CoalitionMode::double_domination();
        }
        return tkc::CoalitionMode::open_total(k);
    }

    void add(CLI::App* app)
    {
        app->add_option("--k", k, "domination parameter for total k-coalitions")->check(CLI::PositiveNumber);
        app->add_flag("--double", dbl, "double coalitions (closed neighborhoods, k = 2)");
    }
};

struct SearchFlags {
    bool force = false;
    std::optional<std::size_t> guard;

    void add(CLI::App* app)
    {
        app->add_flag("--force", force, "run exhaustive searches beyond the size guard");
        app->add_option("--guard", guard, "largest order searched without --force");
    }

    void warn() const
    {
        if (force)
            std::cerr << "tkc: warning: --force lifts the size guard; exhaustive search time grows "
                         "exponentially with the number of vertices\n";
    }
};

void print(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_verify(const std::vector<std::string>& inputs, const ModeFlags& mf, const CLI::App& app,
               const std::string& blocks, const std::string& blocks_file, const std::string& instance)
{
    std::optional<tkc::Graph> g;
    tkc::Partition p;
    tkc::CoalitionMode mode = mf.mode(app);
    std::optional<std::size_t> claimed;
    if (!instance.empty()) {
        auto doc = tkc::io::read_instance(read_file(instance));
        g = std::move(doc.graph);
        mode = doc.mode;
        p = std::move(doc.partition);
        claimed = doc.claimed_value;
    } else {
        const auto lines = gather_lines(inputs);
        if (lines.size() != 1)
            throw tkc::parameter_error("verify takes exactly one graph, got " + std::to_string(lines.size()));
        g = tkc::parse_graph6(lines.front());
        if (blocks.empty() == blocks_file.empty())
            throw tkc::parameter_error("verify needs exactly one of --blocks, --blocks-file, --instance");
        p = tkc::io::partition_from_text(g->order(), blocks.empty() ? read_file(blocks_file) : blocks);
    }
    const auto report = tkc::verify_partition(*g, p, mode);
    json out = tkc::io::to_json(report);
    out["mode"] = tkc::io::to_json(mode);
    out["blocks"] = p.size();
    bool valid = report.valid;
    if (claimed) {
        out["claimedValue"] = *claimed;
        valid = valid && *claimed == p.size();
    }
    print(out);
    return valid ? ok : invalid;
}

int cmd_solve(const std::vector<std::string>& inputs, const ModeFlags& mf, const CLI::App& app,
              const SearchFlags& sf, bool oracle)
{
    sf.warn();
    const auto mode = mf.mode(app);
    tkc::SolveOptions opt;
    opt.guard = sf.guard.value_or(tkc::search_guard_default);
    opt.force = sf.force;
    int rc = ok;
    for (const auto& line : gather_lines(inputs)) {
        const tkc::Graph g = tkc::parse_graph6(line);
        const auto r = tkc::solve_exact(g, mode, opt);
        json out = tkc::io::to_json(r);
        out["graph6"] = line;
        out["mode"] = tkc::io::to_json(mode);
        if (oracle) {
            const std::size_t o = tkc::brute_force_oracle(g, mode, tkc::oracle_guard_default, sf.force);
            out["oracle"] = o;
            out["oracleAgrees"] = o == r.value;
            if (o != r.value)
                rc = invalid;
        }
        print(out);
    }
    return rc;
}

int cmd_bounds(const std::vector<std::string>& inputs, const ModeFlags& mf, const CLI::App& app,
               const SearchFlags& sf, bool domatic)
{
    sf.warn();
    const auto mode = mf.mode(app);
    for (const auto& line : gather_lines(inputs)) {
        const tkc::Graph g = tkc::parse_graph6(line);
        mode.require_admissible(g);
        tkc::require_connected(g);
        std::vector<tkc::BoundEntry> report;
        if (mode.closed())
            report = tkc::bound_report(g, mode);
        else
            report = tkc::bound_report_tc(g, mode.k, domatic,
                                          {sf.guard.value_or(tkc::domatic_guard_default), sf.force});
        std::optional<std::size_t> witness;
        if (!mode.closed())
            witness = tkc::min_degree_partition(g, mode.k).size();
        json out = {{"schemaVersion", tkc::io::schema_version},
                    {"graph6", line},
                    {"mode", tkc::io::to_json(mode)},
                    {"bounds", tkc::io::to_json(report)},
                    {"certificate", tkc::io::to_json(tkc::certify(witness, report))}};
        if (witness)
            out["witnessSize"] = *witness;
        print(out);
    }
    return ok;
}

std::vector<std::string> enumerated_lines(std::size_t max_n, std::size_t min_n, bool subcubic, std::size_t min_degree)
{
    std::vector<std::string> lines;
    for (const auto& g : tkc::unique_graphs(
             max_n,
             [&](const tkc::Graph& g) {
                 return tkc::is_connected(g) && tkc::min_degree(g) >= min_degree
                        && (!subcubic || tkc::max_degree(g) <= 3);
             },
             min_n))
        lines.push_back(tkc::write_graph6(g));
    return lines;
}

int cmd_scan(const std::vector<std::string>& inputs, const std::string& check, unsigned jobs, bool csv,
             std::optional<std::size_t> enumerate, std::size_t min_order, const SearchFlags& sf)
{
    sf.warn();
    tkc::ScanOptions opt;
    opt.check = tkc::parse_scan_check(check);
    opt.guard = sf.guard.value_or(tkc::search_guard_default);
    opt.force = sf.force;
    const auto lines = enumerate ? enumerated_lines(*enumerate, min_order, false,
                                                    tkc::scan_mode(opt.check).required_min_degree())
                                 : gather_lines(inputs);
    if (csv)
        std::cout << tkc::io::csv::scan_header << '\n';
    const auto summary = tkc::scan_lines(lines, opt, jobs, [&](const tkc::ScanRecord& r) {
        if (csv)
            std::cout << tkc::io::csv::row(r) << '\n';
        else
            print(tkc::io::to_json(r));
        if (r.verdict == tkc::Verdict::Violates)
            std::cerr << "tkc: " << (tkc::is_proven(opt.check) ? "THEOREM VIOLATED" : "conjecture counterexample")
                      << ": " << r.graph6 << " value " << r.value_lower << " > bound " << r.bound << '\n';
    });
    if (csv)
        std::cout << tkc::io::csv::footer(summary, opt.check) << '\n';
    else
        print(tkc::io::to_json(summary, opt.check));
    return summary.fatal ? invalid : ok;
}

int cmd_catalog(const std::vector<std::string>& inputs, unsigned jobs, bool csv, std::optional<std::size_t> enumerate,
                std::size_t min_order, const SearchFlags& sf)
{
    sf.warn();
    const std::size_t guard = sf.guard.value_or(tkc::search_guard_default);
    const auto lines = enumerate ? enumerated_lines(*enumerate, min_order, true, 2) : gather_lines(inputs);
    if (csv)
        std::cout << tkc::io::csv::catalog_header << '\n';
    std::size_t two = 0, three = 0, skipped = 0;
    tkc::ordered_parallel_map(
        lines.size(), jobs, [&](std::size_t i) { return tkc::catalog_line(lines[i], guard, sf.force); },
        [&](std::size_t, const tkc::CatalogRecord& r) {
            if (!r.tc2)
                ++skipped;
            else if (*r.tc2 == 2)
                ++two;
            else
                ++three;
            if (csv)
                std::cout << tkc::io::csv::row(r) << '\n';
            else
                print(tkc::io::to_json(r));
        });
    if (csv)
        std::cout << "# summary total=" << lines.size() << " tc2_2=" << two << " tc2_3=" << three
                  << " skipped=" << skipped << '\n';
    else
        print({{"summary",
                {{"schemaVersion", tkc::io::schema_version},
                 {"total", lines.size()},
                 {"tc2_2", two},
                 {"tc2_3", three},
                 {"skipped", skipped}}}});
    return ok;
}

int cmd_generate(const std::vector<std::size_t>& gdl, const std::vector<std::size_t>& hrt, const std::string& family,
                 bool with_partition)
{
    if (static_cast<int>(!gdl.empty()) + static_cast<int>(!hrt.empty()) + static_cast<int>(!family.empty()) != 1)
        throw tkc::parameter_error("generate needs exactly one of --gdl, --hrt, --family");
    if (!family.empty()) {
        if (with_partition)
            throw tkc::parameter_error("--with-partition applies to --gdl and --hrt only");
        std::cout << tkc::write_graph6(tkc::generate(tkc::parse_family(family))) << '\n';
        return ok;
    }
    const auto inst = !gdl.empty() ? tkc::build_extremal_tc(gdl[0], gdl[1]) : tkc::build_extremal_dc(hrt[0], hrt[1]);
    std::cout << tkc::write_graph6(inst.graph) << '\n';
    if (with_partition)
        print(tkc::io::to_json(inst));
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Total k-coalition and double coalition toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    ModeFlags mf;
    SearchFlags sf;
    bool json_out = false, csv_out = false, oracle = false, domatic = false, with_partition = false;
    unsigned jobs = 1;
    std::string blocks, blocks_file, instance, check = "conjecture", family;
    std::optional<std::size_t> enumerate;
    std::size_t min_order = 1;
    std::vector<std::size_t> gdl, hrt;

    auto* verify = app.add_subcommand("verify", "check a candidate coalition partition");
    verify->add_option("input", inputs, "graph6 record, file, or - for stdin");
    mf.add(verify);
    verify->add_option("--blocks", blocks, "partition as JSON, e.g. [[0,2],[1,3]]");
    verify->add_option("--blocks-file", blocks_file, "file holding the partition JSON");
    verify->add_option("--instance", instance, "certified instance JSON file (graph, mode and blocks)");
    verify->add_flag("--json", json_out, "JSON output (default)");

    auto* solve = app.add_subcommand("solve", "exact maximum coalition partition");
    solve->add_option("input", inputs, "graph6 records, files, or - for stdin");
    mf.add(solve);
    sf.add(solve);
    solve->add_flag("--oracle", oracle, "cross-check with brute force over all set partitions (n <= 12)");
    solve->add_flag("--json", json_out, "JSON output (default)");

    auto* bounds = app.add_subcommand("bounds", "bound report and certificate");
    bounds->add_option("input", inputs, "graph6 records, files, or - for stdin");
    mf.add(bounds);
    sf.add(bounds);
    bounds->add_flag("--domatic", domatic, "include the domatic lower bound (exhaustive)");
    bounds->add_flag("--json", json_out, "JSON output (default)");

    auto* scan = app.add_subcommand("scan", "check every input graph against a degree bound");
    scan->add_option("input", inputs, "graph6 files, records, or - for stdin");
    scan->add_option("--check", check, "conjecture | mixed-degree | gated-degree | double-gated");
    scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--enumerate", enumerate, "use all connected graphs up to this order instead of input")
        ->check(CLI::Range(std::size_t{1}, tkc::enumerate_max_order));
    scan->add_option("--min-order", min_order, "smallest order for --enumerate");
    sf.add(scan);
    auto* scan_json = scan->add_flag("--json", json_out, "JSON lines output (default)");
    scan->add_flag("--csv", csv_out, "CSV output")->excludes(scan_json);

    auto* catalog = app.add_subcommand("catalog-subcubic", "classify subcubic graphs by TC_2");
    catalog->add_option("input", inputs, "graph6 files, records, or - for stdin");
    catalog->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    catalog->add_option("--enumerate", enumerate, "use all connected subcubic graphs with min degree 2 up to this order")
        ->check(CLI::Range(std::size_t{1}, tkc::enumerate_max_order));
    catalog->add_option("--min-order", min_order, "smallest order for --enumerate");
    sf.add(catalog);
    auto* catalog_json = catalog->add_flag("--json", json_out, "JSON lines output (default)");
    catalog->add_flag("--csv", csv_out, "CSV output")->excludes(catalog_json);

    auto* gen = app.add_subcommand("generate", "emit a construction as graph6");
    gen->add_option("--gdl", gdl, "G(d,l) for total 2-coalitions")->expected(2);
    gen->add_option("--hrt", hrt, "H(r,t) for double coalitions")->expected(2);
    gen->add_option("--family", family, "e.g. cycle(7), complete(5), star(3), multipartite(2,2,2), join(a,b)");
    gen->add_flag("--with-partition", with_partition, "also print the certified instance JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return bad_input;
    }

    try {
        if (*verify)
            return cmd_verify(inputs, mf, *verify, blocks, blocks_file, instance);
        if (*solve)
            return cmd_solve(inputs, mf, *solve, sf, oracle);
        if (*bounds)
            return cmd_bounds(inputs, mf, *bounds, sf, domatic);
        if (*scan)
            return cmd_scan(inputs, check, jobs, csv_out, enumerate, min_order, sf);
        if (*catalog)
            return cmd_catalog(inputs, jobs, csv_out, enumerate, min_order, sf);
        return cmd_generate(gdl, hrt, family, with_partition);
    } catch (const tkc::guard_exceeded& e) {
        std::cerr << "tkc: " << e.what() << '\n';
        return too_large;
    } catch (const tkc::certification_failure& e) {
        std::cerr << "tkc: certification failure: " << e.what() << '\n';
        return invalid;
    } catch (const tkc::error& e) {
        std::cerr << "tkc: " << e.what() << '\n';
        return bad_input;
    }
}
