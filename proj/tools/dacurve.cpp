// Command-line front end: exact chi-basis construction, Hilbert-point
// semistability certificates, section algebra checks, and the bielliptic /
// trigonal slope calculators, with deterministic JSON or text output.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dacurve/certify.hpp"
#include "dacurve/chi.hpp"
#include "dacurve/json_io.hpp"
#include "dacurve/lp.hpp"
#include "dacurve/rnc.hpp"
#include "dacurve/sections.hpp"
#include "dacurve/slope.hpp"

using namespace dacurve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNonSemistable = 2;

std::vector<Int> parse_integers(const std::string& source) {
    std::vector<std::string> tokens;
    if (std::filesystem::exists(source)) {
        std::ifstream in(source);
        require(in.good(), "weights: cannot open file " + source);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
        }
    } else {
        std::string tok;
        for (char c : source) {
            if (c == ',' || c == ' ' || c == ';') {
                if (!tok.empty()) tokens.push_back(tok);
                tok.clear();
            } else {
                tok += c;
            }
        }
        if (!tok.empty()) tokens.push_back(tok);
    }
    std::vector<Int> out;
    for (const std::string& t : tokens) {
        try {
            out.emplace_back(t);
        } catch (const std::exception&) {
            require(false, "weights: not an integer: " + t);
        }
    }
    return out;
}

RhoWeights parse_rho(const std::string& source, int k) {
    std::vector<Int> flat = parse_integers(source);
    require(flat.size() == 2 * static_cast<std::size_t>(k),
            "weights: expected 2k = " + std::to_string(2 * k) + " integers, got " +
                std::to_string(flat.size()));
    RhoWeights r = RhoWeights::from_flat(k, flat);
    require(r.trace_zero(), "weights: trace must be zero (sum of all entries)");
    return r;
}

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // text: flat deterministic key: value dump
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array()) {
                std::size_t i = 0;
                for (const auto& item : node) walk(item, prefix + "[" + std::to_string(i++) + "]");
            } else {
                std::cout << prefix << ": "
                          << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
            }
        };
    walk(doc, "");
}

struct CertifyOpts {
    int k = 2, m = 2;
    std::string mode = "lp";
    std::string weights;
    int trials = 1000;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json";
};

int run_certify(const CertifyOpts& opt) {
    auto sys = stab::ClassSystem::build(opt.k, opt.m);
    json out{{"command", "certify"}, {"k", opt.k}, {"m", opt.m},
             {"g", 2 * opt.k}, {"mode", opt.mode}};
    bool lp_semistable = true;

    if (opt.mode == "lp" || opt.mode == "both") {
        auto cert = stab::certify(sys);
        std::string reason;
        ensure(stab::verify_certificate(cert, sys, &reason),
               "certificate failed re-verification: " + reason);
        out["lp"] = to_json(cert, sys);
        lp_semistable = cert.verdict == stab::StabilityCertificate::Verdict::Semistable;
    }
    if (opt.mode == "constructive" || opt.mode == "both") {
        json block;
        if (!opt.weights.empty()) {
            RhoWeights r = parse_rho(opt.weights, opt.k);
            auto built = stab::constructive_basis(opt.k, opt.m, r);
            json basis = json::array();
            for (const Monomial& mon : built.basis) basis.push_back(mon.str());
            block = json{{"rho", to_json(r)},
                         {"weight", to_json(built.weight)},
                         {"basis", basis},
                         {"nonpositive", built.weight <= 0}};
        } else {
            // sampled check: constructive bases over seed-derived subgroups
            Int max_weight = 0;
            bool first = true;
            int argmax = -1;
            for (int trial = 0; trial < opt.trials; ++trial) {
                SplitMix64 gen = SplitMix64::stream(opt.seed, static_cast<std::uint64_t>(trial));
                RhoWeights r = stab::random_trace_zero(opt.k, gen, 10LL * opt.k * opt.m);
                Int w = stab::constructive_basis(opt.k, opt.m, r).weight;
                if (first || w > max_weight) {
                    max_weight = w;
                    argmax = trial;
                    first = false;
                }
            }
            block = json{{"trials", opt.trials},
                         {"seed", opt.seed},
                         {"max_weight", to_json(max_weight)},
                         {"argmax_trial", argmax},
                         {"no_violation", max_weight <= 0}};
        }
        out["constructive"] = block;
    }
    if (opt.mode == "both") {
        bool constructive_ok = out["constructive"].contains("no_violation")
                                   ? out["constructive"]["no_violation"].get<bool>()
                                   : out["constructive"]["nonpositive"].get<bool>();
        out["agree"] = lp_semistable == constructive_ok;
    }
    emit(out, opt.format);
    return lp_semistable ? kExitOk : kExitNonSemistable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semistability toolkit for balanced double A-curves"};
    app.require_subcommand(1);

    CertifyOpts copt;
    auto* cmd_certify = app.add_subcommand(
        "certify", "decide semistability of the degree-m Hilbert point (g = 2k)");
    cmd_certify->add_option("--k", copt.k, "number of x (and y) variables, genus g = 2k")
        ->required()->check(CLI::Range(2, 64));
    cmd_certify->add_option("--m", copt.m, "Hilbert degree")->required()->check(CLI::Range(2, 64));
    cmd_certify->add_option("--mode", copt.mode)->check(CLI::IsMember({"lp", "constructive", "both"}));
    cmd_certify->add_option("--weights", copt.weights, "2k integers, lambda block then nu block");
    cmd_certify->add_option("--trials", copt.trials)->check(CLI::PositiveNumber);
    cmd_certify->add_option("--seed", copt.seed);
    cmd_certify->add_option("--jobs", copt.jobs)->check(CLI::PositiveNumber);
    cmd_certify->add_option("--format", copt.format)->check(CLI::IsMember({"json", "text"}));

    struct {
        int k = 2, m = 2;
        std::string weights;
        bool optimal = false;
        std::string format = "json";
    } xopt;
    auto* cmd_chi = app.add_subcommand("chi-basis",
                                       "chi-basis of non-positive weight for given weights");
    cmd_chi->add_option("--k", xopt.k)->required()->check(CLI::Range(2, 64));
    cmd_chi->add_option("--m", xopt.m)->required()->check(CLI::Range(2, 64));
    cmd_chi->add_option("--weights", xopt.weights)->required();
    cmd_chi->add_flag("--optimal", xopt.optimal, "also print the exact minimum");
    cmd_chi->add_option("--format", xopt.format)->check(CLI::IsMember({"json", "text"}));

    struct {
        int k = 2, m = 3, s = 1;
        std::string family;
        std::string format = "json";
    } fopt;
    auto* cmd_family = app.add_subcommand("family", "construct and audit a chi-basis family");
    cmd_family->add_option("--k", fopt.k)->required()->check(CLI::Range(2, 64));
    cmd_family->add_option("--m", fopt.m)->required()->check(CLI::Range(2, 64));
    cmd_family->add_option("--family", fopt.family)
        ->required()->check(CLI::IsMember({"B1", "B2", "T2", "T2m", "S", "Sm"}));
    cmd_family->add_option("--s", fopt.s, "family parameter, 1 <= s <= k-1");
    cmd_family->add_option("--format", fopt.format)->check(CLI::IsMember({"json", "text"}));

    struct {
        int k = 2, m = 2;
        std::string format = "json";
    } sopt;
    auto* cmd_sections = app.add_subcommand(
        "sections", "pluricanonical basis, scroll minors, span identities, torus weights");
    cmd_sections->add_option("--k", sopt.k)->required()->check(CLI::Range(2, 64));
    cmd_sections->add_option("--m", sopt.m)->required()->check(CLI::Range(2, 64));
    cmd_sections->add_option("--format", sopt.format)->check(CLI::IsMember({"json", "text"}));

    struct {
        int g = 4, m = 2;
        std::string format = "json";
    } bopt;
    auto* cmd_bielliptic = app.add_subcommand(
        "bielliptic", "cone-vertex weight bound and verdict for bielliptic curves");
    cmd_bielliptic->add_option("--g", bopt.g)->required()->check(CLI::Range(3, 100000));
    cmd_bielliptic->add_option("--m", bopt.m)->required()->check(CLI::Range(2, 100000));
    cmd_bielliptic->add_option("--format", bopt.format)->check(CLI::IsMember({"json", "text"}));

    struct {
        int g = 4, m = 3;
        std::string format = "json";
    } lopt;
    auto* cmd_slope = app.add_subcommand("slope", "polarization slope and trigonal comparison");
    cmd_slope->add_option("--g", lopt.g)->required()->check(CLI::Range(2, 100000));
    cmd_slope->add_option("--m", lopt.m)->check(CLI::Range(2, 100000));
    cmd_slope->add_option("--format", lopt.format)->check(CLI::IsMember({"json", "text"}));

    struct {
        int k = 2, m = 2;
        int trials = 1000;
        std::uint64_t seed = 0;
        int jobs = 1;
        std::string format = "json";
    } zopt;
    auto* cmd_fuzz = app.add_subcommand("fuzz", "random trace-zero subgroups vs. the min basis");
    cmd_fuzz->add_option("--k", zopt.k)->required()->check(CLI::Range(2, 64));
    cmd_fuzz->add_option("--m", zopt.m)->required()->check(CLI::Range(2, 64));
    cmd_fuzz->add_option("--trials", zopt.trials)->check(CLI::PositiveNumber);
    cmd_fuzz->add_option("--seed", zopt.seed);
    cmd_fuzz->add_option("--jobs", zopt.jobs)->check(CLI::PositiveNumber);
    cmd_fuzz->add_option("--format", zopt.format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }

    try {
        if (cmd_certify->parsed()) return run_certify(copt);

        if (cmd_chi->parsed()) {
            RhoWeights r = parse_rho(xopt.weights, xopt.k);
            std::string dispatch;
            chi::ChiBasis basis = chi::nonpositive_chi_basis(xopt.k, xopt.m, r, &dispatch);
            json out{{"command", "chi-basis"}, {"k", xopt.k}, {"m", xopt.m},
                     {"g", 2 * xopt.k},      {"rho", to_json(r)},
                     {"dispatch", dispatch},  {"basis", to_json(basis)},
                     {"weight", to_json(basis.weight(r))}};
            if (xopt.optimal) {
                auto [best, weight] = chi::min_weight_chi_basis(xopt.k, xopt.m, r);
                out["optimal"] = json{{"basis", to_json(best)}, {"weight", to_json(weight)}};
            }
            emit(out, xopt.format);
            return kExitOk;
        }

        if (cmd_family->parsed()) {
            int s = (fopt.family == "B1" || fopt.family == "B2") ? 0 : fopt.s;
            chi::FamilyReport rep = chi::report_family(fopt.family, fopt.k, fopt.m, s);
            json out = to_json(rep);
            out["command"] = "family";
            emit(out, fopt.format);
            return kExitOk;
        }

        if (cmd_sections->parsed()) {
            auto basis = sections::pluricanonical_basis(sopt.k, sopt.m);
            json list = json::array();
            for (const auto& ls : basis) list.push_back(to_json(ls));
            json audit = json::array();
            for (const auto& e : sections::exponent_audit(sopt.k, sopt.m))
                audit.push_back(to_json(e));
            json out{{"command", "sections"},
                     {"k", sopt.k},
                     {"m", sopt.m},
                     {"g", 2 * sopt.k},
                     {"count", basis.size()},
                     {"expected_count", (2 * sopt.m - 1) * (2 * sopt.k - 1)},
                     {"dimension_ok",
                      basis.size() == static_cast<std::size_t>((2 * sopt.m - 1) * (2 * sopt.k - 1))},
                     {"basis", list},
                     {"minors", to_json(sections::scroll_minor_check(sopt.k))},
                     {"cotangent_span", to_json(sections::cotangent_span_check(sopt.k))},
                     {"torus_weights", sections::torus_weights(sopt.k).weights},
                     {"multiplicity_free", sections::torus_weights(sopt.k).multiplicity_free},
                     {"exponent_audit", audit}};
            emit(out, sopt.format);
            return kExitOk;
        }

        if (cmd_bielliptic->parsed()) {
            json out = to_json(slope::bielliptic_classify(bopt.g, bopt.m));
            out["command"] = "bielliptic";
            emit(out, bopt.format);
            return kExitOk;
        }

        if (cmd_slope->parsed()) {
            json out = to_json(slope::polarization_slope(lopt.g, lopt.m));
            out["command"] = "slope";
            if (lopt.g >= 3) out["trigonal"] = to_json(slope::trigonal_comparison(lopt.g));
            emit(out, lopt.format);
            return kExitOk;
        }

        if (cmd_fuzz->parsed()) {
            auto sys = stab::ClassSystem::build(zopt.k, zopt.m);
            auto rep = stab::fuzz(sys, zopt.trials, zopt.seed, zopt.jobs);
            json out = to_json(rep);
            out["command"] = "fuzz";
            out["k"] = zopt.k;
            out["m"] = zopt.m;
            out["g"] = 2 * zopt.k;
            emit(out, zopt.format);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
