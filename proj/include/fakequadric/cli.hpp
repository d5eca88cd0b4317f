#pragma once

#include <optional>
#include <string>

#include "fakequadric/selfcheck.hpp"

namespace fakequadric {

// Command-line errors carry the offending flag so the front end can point
// at it. Always maps to exit status 1.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Subcommand { Classify, Chi, Genus, Cones, VerifyP4, Enumerate, Report };

struct Invocation {
    Subcommand subcommand = Subcommand::Classify;
    std::optional<LatticeType> model;
    std::optional<DivisorClass> divisor;
    bool json = false;
    bool simply_connected = false;
    long long box_bound = 10000;
    long long g_max = 5;
};

struct RunResult {
    int exit_code = 0;
    std::string output; // stdout
    std::string error;  // stderr
};

// Parses "x,y" with optional signs, arbitrary-precision coefficients.
inline DivisorClass parse_class_arg(const std::string& s) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 >= s.size())
        throw usage_error("--class expects \"x,y\" (e.g. \"3,-1\"), got \"" + s + "\"");
    try {
        return DivisorClass(BigInt::from_string(s.substr(0, comma)),
                            BigInt::from_string(s.substr(comma + 1)));
    } catch (const std::invalid_argument& e) {
        throw usage_error("--class expects integer coordinates: " + std::string(e.what()));
    }
}

inline LatticeType parse_model_arg(const std::string& s) {
    try {
        return lattice_from_string(s);
    } catch (const std::invalid_argument& e) {
        throw usage_error("--model: " + std::string(e.what()));
    }
}

namespace detail {

inline const SurfaceModel& require_model(const Invocation& inv) {
    if (!inv.model) throw usage_error("--model is required for this subcommand");
    return SurfaceModel::of(*inv.model);
}

inline const DivisorClass& require_class(const Invocation& inv) {
    if (!inv.divisor) throw usage_error("--class is required for this subcommand");
    return *inv.divisor;
}

inline nlohmann::json doc_header(const char* command, const Invocation& inv) {
    nlohmann::json j{{"schema", kSchemaVersion}, {"command", command}};
    if (inv.model) j["model"] = to_string(*inv.model);
    if (inv.divisor) j["class"] = *inv.divisor;
    return j;
}

inline std::string run_classify(const Invocation& inv) {
    const SurfaceModel& m = require_model(inv);
    const DivisorClass& d = require_class(inv);
    const PositivityVerdict verdict = positivity_verdict(m, d);
    const GenusReport genus = genus_report(m, d);
    const bool admissible = curve_class_admissible(m, d);
    std::optional<BoundedCohomologyCase> cohom;
    if (admissible) cohom = bounded_cohomology_case(m, d);

    if (inv.json) {
        nlohmann::json j = doc_header("classify", inv);
        j["verdict"] = verdict;
        j["genus"] = genus;
        j["admissible_curve_class"] = admissible;
        j["cohomology_case"] = cohom ? nlohmann::json(*cohom) : nlohmann::json(nullptr);
        return j.dump(2) + "\n";
    }
    std::string out;
    out += "model: " + to_string(m.lattice()) + "\n";
    out += "class: " + d.to_string() + "\n";
    out += "verdict: effective-necessary=" + std::string(verdict.effective_necessary ? "yes" : "no") +
           " nef=" + (verdict.nef ? "yes" : "no") + " big=" + (verdict.big ? "yes" : "no") +
           " ample=" + (verdict.ample ? "yes" : "no") + " rule=" + verdict.governing_rule + "\n";
    out += "genus: p_a=" + genus.p_a.to_string() + " chi=" + genus.chi.to_string() +
           " K.D=" + genus.k_dot.to_string() + " D^2=" + genus.self_int.to_string() + "\n";
    if (cohom) {
        out += "cohomology case: " + to_string(cohom->case_tag) +
               " (chi=" + cohom->chi.to_string() + "): " + cohom->relation_text() + "\n";
    } else {
        out += "cohomology case: not an admissible curve class\n";
    }
    return out;
}

inline std::string run_scalar(const Invocation& inv, bool chi) {
    const SurfaceModel& m = require_model(inv);
    const DivisorClass& d = require_class(inv);
    const BigInt value = chi ? euler_characteristic(m, d) : arithmetic_genus(m, d);
    if (inv.json) {
        nlohmann::json j = doc_header(chi ? "chi" : "genus", inv);
        j[chi ? "chi" : "p_a"] = to_json_value(value);
        return j.dump(2) + "\n";
    }
    return value.to_string() + "\n";
}

inline std::string run_cones(const Invocation& inv) {
    const SurfaceModel& m = require_model(inv);
    const ConeRays rays = cone_rays(m);
    if (inv.json) {
        nlohmann::json j = doc_header("cones", inv);
        j["effective_rays"] = rays.effective_rays;
        j["nef_rays"] = rays.nef_rays;
        return j.dump(2) + "\n";
    }
    std::string out = "model: " + to_string(m.lattice()) + "\n";
    out += "effective cone rays: " + rays.effective_rays[0].to_string() + " " +
           rays.effective_rays[1].to_string() + "\n";
    out += "nef cone rays: " + rays.nef_rays[0].to_string() + " " +
           rays.nef_rays[1].to_string() + "\n";
    return out;
}

inline std::string run_verify_p4(const Invocation& inv) {
    const SurfaceModel& m = require_model(inv);
    if (inv.box_bound < 100)
        throw usage_error("--box-bound must be at least 100, got " +
                          std::to_string(inv.box_bound));
    const Certificate cert = verify_no_p4_embedding(m, inv.box_bound);
    if (inv.json) return nlohmann::json(cert).dump(2) + "\n";
    return to_text(cert);
}

inline std::string run_enumerate(const Invocation& inv) {
    const SurfaceModel& m = require_model(inv);
    if (inv.g_max < 2 || inv.g_max > 100)
        throw usage_error("--g-max must be between 2 and 100, got " +
                          std::to_string(inv.g_max));
    const auto lists = enumerate_low_genus(m, inv.g_max, inv.simply_connected);
    if (inv.json) {
        nlohmann::json j = doc_header("enumerate", inv);
        j["g_max"] = inv.g_max;
        j["simply_connected"] = inv.simply_connected;
        j["lists"] = lists;
        return j.dump(2) + "\n";
    }
    std::string out = "model: " + to_string(m.lattice()) +
                      (inv.simply_connected ? " (simply-connected filter)\n" : "\n");
    for (const GenusClassList& l : lists) out += to_text(l);
    return out;
}

inline std::string run_report(const Invocation& inv, bool& all_passed) {
    if (inv.box_bound < 100)
        throw usage_error("--box-bound must be at least 100, got " +
                          std::to_string(inv.box_bound));
    const FullReport rep = build_full_report(100, inv.box_bound);
    all_passed = rep.all_passed;
    if (inv.json) return nlohmann::json(rep).dump(2) + "\n";
    std::string out;
    for (const CheckResult& c : rep.checks)
        out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.id + ": " + c.detail + "\n";
    out += "\n" + to_text(rep.even_certificate) + "\n" + to_text(rep.odd_certificate);
    out += "\nlow genus classes, even model (simply-connected):\n";
    for (const GenusClassList& l : rep.even_low_genus_simply_connected) out += to_text(l);
    out += "low genus classes, odd model:\n";
    for (const GenusClassList& l : rep.odd_low_genus) out += to_text(l);
    out += all_passed ? "\nall checks passed\n" : "\nCHECK FAILURES PRESENT\n";
    return out;
}

} // namespace detail

// Executes a validated invocation. Exit codes: 0 success, 1 usage error,
// 2 internal consistency fault (two routes to the same number disagreed).
inline RunResult run(const Invocation& inv) {
    RunResult res;
    try {
        switch (inv.subcommand) {
        case Subcommand::Classify:
            res.output = detail::run_classify(inv);
            break;
        case Subcommand::Chi:
            res.output = detail::run_scalar(inv, true);
            break;
        case Subcommand::Genus:
            res.output = detail::run_scalar(inv, false);
            break;
        case Subcommand::Cones:
            res.output = detail::run_cones(inv);
            break;
        case Subcommand::VerifyP4:
            res.output = detail::run_verify_p4(inv);
            break;
        case Subcommand::Enumerate:
            res.output = detail::run_enumerate(inv);
            break;
        case Subcommand::Report: {
            bool all_passed = false;
            res.output = detail::run_report(inv, all_passed);
            if (!all_passed) res.exit_code = 2;
            break;
        }
        }
    } catch (const usage_error& e) {
        res.exit_code = 1;
        res.error = std::string("usage error: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        res.exit_code = 1;
        res.error = std::string("usage error: ") + e.what() + "\n";
    } catch (const internal_consistency_error& e) {
        res.exit_code = 2;
        res.error = std::string("internal consistency fault: ") + e.what() + "\n";
    }
    return res;
}

} // namespace fakequadric
