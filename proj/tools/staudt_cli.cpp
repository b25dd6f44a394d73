// staudt: command-line front end.
//
//   staudt ring SPEC             ring axioms, units and the two ring conditions
//   staudt line SPEC             points and distant graph (text, json or dot)
//   staudt verify SPEC [TARGET]  classify harmonicity preservers and match them
//                                to Jordan homomorphisms
//
// Exit codes: 0 success, 1 falsification, 2 usage or parse error, 3 resource cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "staudt/errors.hpp"
#include "staudt/groups.hpp"
#include "staudt/maps.hpp"
#include "staudt/projline.hpp"
#include "staudt/ring_checks.hpp"
#include "staudt/ring_spec.hpp"
#include "staudt/theorem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string spec;
    std::string target_spec;
    std::string format = "text";
    std::string out;
    std::string graph_out;
    std::size_t gl2_cap = staudt::kDefaultGl2RingCap;
    std::uint64_t node_budget = staudt::kDefaultNodeBudget;
    std::size_t additive_gen_cap = 4;
    std::size_t threads = 1;
    std::uint64_t seed = 0;
    bool timing = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + cfg.out);
    }
    f << text;
}

staudt::CoverSearchOptions cover_options(const RunConfig& cfg) {
    staudt::CoverSearchOptions o;
    o.node_budget = cfg.node_budget;
    o.seed = cfg.seed;
    return o;
}

nlohmann::ordered_json verdict_json(staudt::Verdict v) {
    if (v == staudt::Verdict::Unresolved) {
        return "unresolved";
    }
    return v == staudt::Verdict::Holds;
}

int cmd_ring(const RunConfig& cfg) {
    const auto ring = staudt::make_ring(cfg.spec);
    const auto& r = *ring;
    const auto axioms = staudt::check_ring_axioms(r);
    const auto five = staudt::check_condition_five_units(r, cover_options(cfg));
    const bool two = staudt::check_two_unit(r);

    nlohmann::ordered_json j;
    j["ring"] = r.label();
    j["size"] = r.size();
    j["commutative"] = r.is_commutative();
    j["units"] = r.units().size();
    j["axioms_pass"] = axioms.all_passed();
    auto failed = nlohmann::ordered_json::array();
    for (const auto& c : axioms.checks) {
        if (!c.passed) {
            failed.push_back(c.name);
        }
    }
    j["failed_axioms"] = std::move(failed);
    j["conditions"] = {{"five_units", verdict_json(five.verdict)}, {"two_unit", two}};
    auto witness = nlohmann::ordered_json::array();
    for (auto x : five.witness) {
        witness.push_back(r.name(x));
    }
    j["five_units_witness"] = std::move(witness);
    if (r.size() <= cfg.gl2_cap) {
        j["ge2_ring"] = staudt::is_GE2_ring(r, cfg.gl2_cap);
    } else {
        j["ge2_ring"] = nullptr;
    }
    staudt::JordanEnumOptions jo;
    jo.max_generators = cfg.additive_gen_cap;
    try {
        j["jordan_endomorphisms"] = staudt::enumerate_jordan_homomorphisms(ring, ring, jo).size();
    } catch (const staudt::ResourceError&) {
        j["jordan_endomorphisms"] = nullptr;
    }

    if (cfg.format == "json") {
        emit(cfg, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "ring " << r.label() << " (" << r.size() << " elements, " << r.units().size() << " units, "
           << (r.is_commutative() ? "commutative" : "noncommutative") << ")\n";
        os << "axioms: " << (axioms.all_passed() ? "all pass" : "FAILED") << "\n";
        os << "condition (i) five units: " << staudt::to_string(five.verdict) << "\n";
        if (!five.witness.empty()) {
            os << "  blocking elements:";
            for (auto x : five.witness) {
                os << " " << r.name(x);
            }
            os << "\n";
        }
        os << "condition (ii) 2 is a unit: " << (two ? "true" : "false") << "\n";
        if (!j["ge2_ring"].is_null()) {
            os << "GE2-ring: " << (j["ge2_ring"].get<bool>() ? "true" : "false") << "\n";
        }
        if (!j["jordan_endomorphisms"].is_null()) {
            os << "Jordan endomorphisms: " << j["jordan_endomorphisms"].get<std::size_t>() << "\n";
        }
        emit(cfg, os.str());
    }
    return axioms.all_passed() ? kExitOk : kExitFalsified;
}

int cmd_line(const RunConfig& cfg) {
    const auto ring = staudt::make_ring(cfg.spec);
    const auto line = staudt::enumerate_points(ring);
    const auto graph = staudt::build_distant_graph(line);
    if (!cfg.graph_out.empty()) {
        std::ofstream f(cfg.graph_out, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot write " + cfg.graph_out);
        }
        f << staudt::distant_graph_dot(*graph);
    }
    if (cfg.format == "json") {
        emit(cfg, staudt::distant_graph_json(*graph));
    } else if (cfg.format == "dot") {
        emit(cfg, staudt::distant_graph_dot(*graph));
    } else {
        const auto& r = *ring;
        const auto comps = staudt::components(*graph);
        std::ostringstream os;
        os << "projective line over " << r.label() << ": " << line->size() << " points, " << comps.size()
           << (comps.size() == 1 ? " component" : " components") << "\n";
        os << "component sizes:";
        for (const auto& c : comps) {
            os << " " << c.size();
        }
        os << "\n";
        for (staudt::PointId p = 0; p < line->size(); ++p) {
            os << "  " << p << ": R(" << r.name(line->rep(p)[0]) << "," << r.name(line->rep(p)[1])
               << ")  degree " << graph->degree(p) << "\n";
        }
        emit(cfg, os.str());
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    const auto source = staudt::make_ring(cfg.spec);
    const auto target = cfg.target_spec.empty() ? source : staudt::make_ring(cfg.target_spec);
    staudt::TheoremOptions opt;
    opt.classify.node_budget = cfg.node_budget;
    opt.classify.threads = cfg.threads;
    opt.cover = cover_options(cfg);
    opt.well_defined.seed = cfg.seed;
    const auto report = staudt::verify_staudt_theorem(source, target, opt);
    emit(cfg, cfg.format == "json" ? staudt::report_json(report, cfg.timing) : staudt::report_text(report));
    return report.falsified() ? kExitFalsified : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective lines over finite rings and harmonicity preservers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout");
        sub->add_option("--gl2-cap", cfg.gl2_cap, "Largest ring for brute-force GL2")->check(CLI::PositiveNumber);
        sub->add_option("--node-budget", cfg.node_budget, "Search node budget")->check(CLI::PositiveNumber);
        sub->add_option("--additive-gen-cap", cfg.additive_gen_cap, "Most additive generators in Jordan enumeration")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "Worker threads for the preserver search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Seed for randomized passes");
        sub->add_flag("--timing", cfg.timing, "Include wall-clock timing in JSON output");
    };

    auto* ring = app.add_subcommand("ring", "Ring axioms, units and conditions");
    ring->add_option("spec", cfg.spec, "Ring spec, e.g. Z/7, GF(3,2), M2(Z/2)")->required();
    add_common(ring);

    auto* line = app.add_subcommand("line", "Points and distant graph");
    line->add_option("spec", cfg.spec, "Ring spec")->required();
    line->add_option("--graph", cfg.graph_out, "Also write the distant graph as DOT to PATH");
    add_common(line);

    auto* verify = app.add_subcommand("verify", "Classify preservers and reconstruct Jordan data");
    verify->add_option("spec", cfg.spec, "Source ring spec")->required();
    verify->add_option("target", cfg.target_spec, "Target ring spec (defaults to the source)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ring) {
            return cmd_ring(cfg);
        }
        if (*line) {
            return cmd_line(cfg);
        }
        return cmd_verify(cfg);
    } catch (const staudt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const staudt::SemanticError& e) {
        std::cerr << "invalid ring: " << e.what() << "\n";
        return kExitUsage;
    } catch (const staudt::ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const staudt::FalsificationError& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
