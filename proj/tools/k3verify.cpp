// k3verify.cpp -- batch verification driver and data exporter.
//
//   k3verify <suite> [--format json|text] [--out FILE] [--ext-degree N]
//            [--jobs N] [--cache DIR]
//   k3verify export <kind> --out FILE [--format json|csv|bin]
//
// Exit codes: 0 all checks pass (warnings do not fail), 1 any check fails,
// 2 usage error.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "k3/checks.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the 42-curve configuration"};
    app.name("k3verify");

    std::string suite;
    std::string format = "text";
    std::string out_path;
    k3::checks::Options opt;
    if (const char* env = std::getenv("K3V_CACHE")) opt.cache_dir = env;

    std::string suite_help = "check suite to run:";
    for (const auto& s : k3::checks::suite_names()) suite_help += " " + s;
    app.add_option("suite", suite, suite_help);
    app.add_option("--format", format, "report format: json or text (default text)")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--ext-degree", opt.ext_degree,
                   "field-extension scan depth for surface checks (1, 2 or 3)")
        ->check(CLI::Range(1, 3));
    app.add_option("--jobs", opt.jobs, "worker threads for the minimal-vector scan")
        ->check(CLI::Range(1, 64));
    app.add_option("--cache", opt.cache_dir, "directory for the minimal-vector cache");

    auto* exp = app.add_subcommand("export", "write one dataset to a file");
    std::string kind;
    std::string exp_format = "json";
    std::string exp_out;
    std::string kind_help = "dataset:";
    for (const auto& k : k3::checks::export_kinds()) kind_help += " " + k;
    exp->add_option("kind", kind, kind_help)->required();
    exp->add_option("--format", exp_format, "json, csv or bin (kind-dependent)")
        ->check(CLI::IsMember({"json", "csv", "bin"}));
    exp->add_option("--out", exp_out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (exp->parsed()) {
        std::string error;
        if (!k3::checks::export_data(kind, exp_format, exp_out, opt, &error)) {
            std::fprintf(stderr, "export failed: %s\n", error.c_str());
            return 2;
        }
        return 0;
    }

    if (suite.empty()) {
        std::fprintf(stderr, "usage: k3verify <suite> [options]; suites:");
        for (const auto& s : k3::checks::suite_names()) std::fprintf(stderr, " %s", s.c_str());
        std::fprintf(stderr, "\n");
        return 2;
    }
    if (!k3::checks::is_suite(suite)) {
        std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
        return 2;
    }

    auto reports = k3::checks::run_suite(suite, opt);
    std::string body = format == "json" ? k3::checks::render_json(reports)
                                        : k3::checks::render_text(reports);
    if (out_path.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
    } else {
        std::FILE* f = std::fopen(out_path.c_str(), "wb");
        if (!f) {
            std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
            return 2;
        }
        std::fwrite(body.data(), 1, body.size(), f);
        std::fclose(f);
    }
    return k3::checks::exit_code(reports);
}
