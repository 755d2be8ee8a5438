// qplab: analysis and verification tool for genus-4 curves with triple
// involutions and their elliptic quotients.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qplab/config.hpp"
#include "qplab/errors.hpp"
#include "qplab/report.hpp"
#include "qplab/scan.hpp"

namespace {

using namespace qplab;

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw ParseError("range '" + text + "' is empty");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("malformed range '" + text + "' (expected N or lo..hi)");
    }
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    cli::Config config;
    try {
        config = cli::load_config();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"genus-4 triple-involution curve laboratory"};
    app.require_subcommand(1);

    // analyze
    std::string arg_a, arg_b, arg_c, arg_d, format = "json", out_path;
    int height_iters = config.height_iters;
    double height_tol = config.height_tol;
    auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline on a single parameter tuple");
    analyze_cmd->add_option("--a", arg_a, "parameter a (integer or num/den)")->required();
    analyze_cmd->add_option("--b", arg_b, "parameter b")->required();
    analyze_cmd->add_option("--c", arg_c, "parameter c")->required();
    analyze_cmd->add_option("--d", arg_d, "parameter d")->required();
    analyze_cmd->add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--height-iters", height_iters, "max doubling iterations");
    analyze_cmd->add_option("--tol", height_tol, "height tolerance");
    analyze_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");

    // reproduce-paper
    double repro_tol = 1e-4;
    auto* repro_cmd = app.add_subcommand("reproduce-paper", "rerun the built-in reference examples");
    repro_cmd->add_option("--tol", repro_tol, "height comparison tolerance");

    // verify-identities
    auto* verify_cmd = app.add_subcommand("verify-identities", "run the symbolic identity suite");

    // scan
    std::string ra, rb, rc, rd;
    int parallel = 1;
    int scan_iters = 8;
    std::string scan_out;
    auto* scan_cmd = app.add_subcommand("scan", "enumerate an integer parameter box");
    scan_cmd->add_option("--a-range", ra, "range for a: N or lo..hi")->required();
    scan_cmd->add_option("--b-range", rb, "range for b")->required();
    scan_cmd->add_option("--c-range", rc, "range for c")->required();
    scan_cmd->add_option("--d-range", rd, "range for d")->required();
    scan_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--height-iters", scan_iters, "max doubling iterations per point");
    scan_cmd->add_option("--out", scan_out, "output file (.csv or .json); stdout CSV by default");

    // certificates
    auto* cm_cmd = app.add_subcommand("cm-check", "emit the CM simplicity certificate");
    auto* group_cmd = app.add_subcommand("group-check", "emit the involution-normalizer certificate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze_cmd->parsed()) {
            const family::Params params{Rational::parse(arg_a), Rational::parse(arg_b),
                                        Rational::parse(arg_c), Rational::parse(arg_d)};
            const auto report = cli::analyze(params, {height_iters, height_tol});
            write_output(format == "json" ? cli::to_json_string(report) : cli::to_csv_string(report),
                         out_path);
            return 0;
        }
        if (repro_cmd->parsed()) {
            return cli::reproduce_paper(std::cout, repro_tol) ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            const char* fault = std::getenv("QPLAB_FAULT_INJECT");
            return cli::verify_identities(std::cout, fault ? fault : "") ? 0 : 1;
        }
        if (scan_cmd->parsed()) {
            cli::ScanOptions opts;
            opts.ranges = {parse_range(ra), parse_range(rb), parse_range(rc), parse_range(rd)};
            opts.parallel = parallel;
            opts.height_iters = scan_iters;
            opts.height_tol = config.height_tol;
            opts.cap = config.scan_cap;
            const auto result = cli::run_scan(opts);
            const bool json_out = scan_out.size() > 5 && scan_out.substr(scan_out.size() - 5) == ".json";
            write_output(json_out ? cli::scan_json(result) : cli::scan_csv(result), scan_out);
            std::cerr << "scanned " << result.box_size << " tuples, " << result.rows.size()
                      << " rows, " << result.skipped << " degenerate skipped\n";
            return 0;
        }
        if (cm_cmd->parsed()) {
            std::cout << cli::cm_certificate_json();
            return 0;
        }
        if (group_cmd->parsed()) {
            std::cout << cli::group_certificate_json();
            return 0;
        }
    } catch (const DegenerateParameters& e) {
        std::cerr << "degenerate parameters: " << e.what() << "\n";
        return 2;
    } catch (const SingularQuotient& e) {
        std::cerr << "degenerate pipeline: " << e.what() << "\n";
        return 2;
    } catch (const ScanCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
