#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hatkit/automorphism.hpp"
#include "hatkit/census.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/error.hpp"
#include "hatkit/serialize.hpp"
#include "hatkit/suites.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

void emit(const hat::json& doc, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(out);
    if (!file)
        throw hat::Error(hat::ErrorKind::UnknownInput, "cannot write " + out);
    file << doc.dump(2) << '\n';
}

void print_violations(const std::vector<hat::Violation>& violations)
{
    for (const auto& v : violations)
        std::cerr << "FAIL " << v.entry << " [" << v.stage << "] " << v.invariant << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certify half-arc-transitive structure, dart graphs and their covers"};
    app.set_version_flag("--version", std::string(hat::version()));
    app.require_subcommand(1);

    std::string census_source = "builtin";
    std::string out;
    bool strict = false;
    std::size_t jobs = 1;
    bool no_timing = false;

    std::string input;
    auto* analyze = app.add_subcommand("analyze", "Automorphism group, transitivity and alternating-cycle parameters");
    analyze->add_option("input", input, "census name, generator (c5, k4, k3,3, wreath4) or graph6 file")->required();

    auto* dart = app.add_subcommand("dart", "Write the dart graph of a cubic graph and certify it");
    dart->add_option("input", input, "census name, generator or graph6 file")->required();

    std::string suite_name;
    auto* verify = app.add_subcommand("verify", "Run a verification suite over a census");
    verify->add_option("suite", suite_name, "dart-theorem | cover-theorem | divisibility | all")
        ->required()
        ->check(CLI::IsMember({"dart-theorem", "cover-theorem", "divisibility", "all"}));
    verify->add_option("--jobs,-j", jobs, "entries processed in parallel")->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", no_timing, "omit timing fields from the report");

    for (auto* sub : {analyze, dart, verify}) {
        sub->add_option("--census", census_source, "builtin, a .json manifest or a graph6 file");
        sub->add_option("--out,-o", out, "JSON report path ('-' for stdout)");
        sub->add_flag("--strict", strict, "treat disagreeing arc-transitivity readings as failures");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    hat::RunOptions options;
    options.jobs = jobs;
    options.strict = strict;

    try {
        auto census = hat::load_census(census_source);

        if (*analyze) {
            std::vector<hat::Violation> violations;
            hat::json report = hat::json::array();
            for (const auto& entry : hat::resolve_input(input, census))
                report.push_back(hat::analyze_graph(entry.name, entry.graph, options, violations));
            emit(report.size() == 1 ? report[0] : report, out);
            print_violations(violations);
            return violations.empty() ? exit_pass : exit_violation;
        }

        if (*dart) {
            auto entries = hat::resolve_input(input, census);
            std::vector<hat::Violation> violations;
            hat::json reports = hat::json::array();
            for (const auto& entry : entries) {
                hat::DartGraph d = hat::dart_graph(entry.graph);
                std::cout << hat::write_graph6(d.graph) << '\n';
                hat::json rep{{"name", entry.name}, {"dart_graph6", hat::write_graph6(d.graph)},
                              {"labeling", d.labeling}};
                try {
                    hat::DartForwardReport fwd = hat::verify_dart_forward(entry.graph, hat::automorphism_group(entry.graph));
                    rep["forward"] = fwd;
                    if (!fwd.passed())
                        violations.push_back({entry.name, "dart-forward", "forward correspondence not certified"});
                } catch (const hat::Error& e) {
                    if (e.kind() != hat::ErrorKind::Not2ArcTransitive)
                        throw;
                    rep["forward"] = hat::json{{"skipped", e.what()}};
                }
                reports.push_back(std::move(rep));
            }
            if (!out.empty())
                emit(reports.size() == 1 ? reports[0] : reports, out);
            else
                for (const auto& rep : reports)
                    std::cerr << rep["name"].get<std::string>() << ": " << rep["forward"].dump() << '\n';
            print_violations(violations);
            return violations.empty() ? exit_pass : exit_violation;
        }

        auto suite = *hat::parse_suite(suite_name);
        hat::RunReport report = hat::run_suite(suite, census, census_source, options);
        // The JSON report owns stdout when written there.
        std::ostream& log = out == "-" ? std::cerr : std::cout;
        for (const auto& e : report.entries)
            log << (e.violations.empty() ? "ok   " : "FAIL ") << e.name << '\n';
        for (const auto& b : report.boundary)
            log << (b["passed"].get<bool>() ? "ok   " : "FAIL ") << b["case"].get<std::string>() << '\n';
        if (!out.empty())
            emit(report.to_json(!no_timing), out);
        print_violations(report.violations());
        log << report.suite << ": " << (report.passed() ? "passed" : "FAILED") << " ("
                  << report.violations().size() << " violations)\n";
        return report.passed() ? exit_pass : exit_violation;
    } catch (const hat::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
