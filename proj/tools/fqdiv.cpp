#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fakequadric/cli.hpp"

namespace {

struct RawArgs {
    std::string model;
    std::string divisor;
};

void add_model_option(CLI::App* cmd, RawArgs& raw, bool required = true) {
    auto* opt = cmd->add_option("--model", raw.model, "lattice type: even or odd");
    if (required) opt->required();
}

void add_class_option(CLI::App* cmd, RawArgs& raw) {
    cmd->add_option("--class", raw.divisor, "divisor class as \"x,y\" (e.g. \"3,-1\")")
        ->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fqdiv: exact divisor-class calculator for fake quadrics"};
    app.require_subcommand(1);

    fakequadric::Invocation inv;
    RawArgs raw;

    auto* classify = app.add_subcommand(
        "classify", "positivity verdict, genus report and cohomology case for a class");
    add_model_option(classify, raw);
    add_class_option(classify, raw);
    classify->add_flag("--json", inv.json, "emit JSON");

    auto* chi = app.add_subcommand("chi", "Euler characteristic chi(O(D))");
    add_model_option(chi, raw);
    add_class_option(chi, raw);
    chi->add_flag("--json", inv.json, "emit JSON");

    auto* genus = app.add_subcommand("genus", "arithmetic genus p_a(D)");
    add_model_option(genus, raw);
    add_class_option(genus, raw);
    genus->add_flag("--json", inv.json, "emit JSON");

    auto* cones = app.add_subcommand("cones", "effective and nef cone rays");
    add_model_option(cones, raw);
    cones->add_flag("--json", inv.json, "emit JSON");

    auto* verify = app.add_subcommand(
        "verify-p4", "certificate that the P^4 embedding conditions have no solution");
    add_model_option(verify, raw);
    verify->add_option("--box-bound", inv.box_bound,
                       "sweep bound for the redundant box search (default 10000)");
    verify->add_flag("--json", inv.json, "emit JSON");

    auto* enumerate = app.add_subcommand(
        "enumerate", "admissible curve classes of each arithmetic genus up to --g-max");
    add_model_option(enumerate, raw);
    enumerate->add_option("--g-max", inv.g_max, "largest genus to list (2..100, default 5)");
    enumerate->add_flag("--simply-connected", inv.simply_connected,
                        "apply the simply-connected exclusions and annotations");
    enumerate->add_flag("--json", inv.json, "emit JSON");

    auto* report = app.add_subcommand(
        "report", "run the full verification suite on both models and emit all certificates");
    report->add_option("--box-bound", inv.box_bound,
                       "sweep bound for the certificates (default 10000)");
    report->add_flag("--json", inv.json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (classify->parsed()) inv.subcommand = fakequadric::Subcommand::Classify;
    if (chi->parsed()) inv.subcommand = fakequadric::Subcommand::Chi;
    if (genus->parsed()) inv.subcommand = fakequadric::Subcommand::Genus;
    if (cones->parsed()) inv.subcommand = fakequadric::Subcommand::Cones;
    if (verify->parsed()) inv.subcommand = fakequadric::Subcommand::VerifyP4;
    if (enumerate->parsed()) inv.subcommand = fakequadric::Subcommand::Enumerate;
    if (report->parsed()) inv.subcommand = fakequadric::Subcommand::Report;

    try {
        if (!raw.model.empty()) inv.model = fakequadric::parse_model_arg(raw.model);
        if (!raw.divisor.empty()) inv.divisor = fakequadric::parse_class_arg(raw.divisor);
    } catch (const fakequadric::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    const fakequadric::RunResult result = fakequadric::run(inv);
    if (!result.output.empty()) std::cout << result.output;
    if (!result.error.empty()) std::cerr << result.error;
    return result.exit_code;
}
