#include "staudt/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "staudt/errors.hpp"
#include "staudt/ring_checks.hpp"

namespace staudt {

namespace {

std::size_t alpha_index(std::vector<RingMap>& alphas, const RingMap& a) {
    const auto it = std::find(alphas.begin(), alphas.end(), a);
    if (it != alphas.end()) {
        return static_cast<std::size_t>(it - alphas.begin());
    }
    alphas.push_back(a);
    return alphas.size() - 1;
}

}  // namespace

TheoremReport verify_staudt_theorem(const RingPtr& source, const RingPtr& target, const TheoremOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.source = source;
    rep.target = target;
    rep.ring = source->label();
    rep.target_ring = target->label();

    rep.five_units = check_condition_five_units(*source, options.cover).verdict;
    rep.two_unit = check_two_unit(*source);

    const LinePtr src_line = enumerate_points(source, options.line_cap);
    const LinePtr tgt_line = source == target ? src_line : enumerate_points(target, options.line_cap);
    const GraphPtr src_graph = build_distant_graph(src_line);
    rep.i_prime = check_condition_i_prime(*src_graph, options.cover).verdict;
    rep.points = src_line->size();
    rep.components = components(*src_graph);

    const HarmonicIndex src_index(*src_line);
    rep.harmonic_quads = src_index.quads().size();
    rep.uniqueness_failures = check_harmonic_uniqueness(*src_graph, src_index).failures;
    if (tgt_line != src_line) {
        const GraphPtr tgt_graph = build_distant_graph(tgt_line);
        rep.uniqueness_failures += check_harmonic_uniqueness(*tgt_graph, HarmonicIndex(*tgt_line)).failures;
    }
    if (rep.uniqueness_failures != 0) {
        rep.falsifications.push_back(std::to_string(rep.uniqueness_failures) +
                                     " distant triples without a unique harmonic completion");
    }

    ClassificationResult cls = classify_preservers(src_line, tgt_line, options.classify);
    rep.search_nodes = cls.nodes;
    rep.preservers = std::move(cls.preservers);

    const GeneratedGroup e2 = generate_E2(*source, options.group_cap);
    const auto witnesses = point_witnesses(*src_line, e2);
    // Each (preserver, component) slot is matched independently; workers
    // take interleaved preservers and the results are merged in index order.
    struct Slot {
        bool matched = false;
        bool lemmas_ok = false;
        std::vector<Elem> alpha;
        Mat2 source_basis;
        Mat2 target_basis;
    };
    const std::size_t ncomp = rep.components.size();
    std::vector<Slot> slots(rep.preservers.size() * ncomp);
    auto work = [&](std::size_t w, std::size_t nworkers) {
        for (std::size_t i = w; i < rep.preservers.size(); i += nworkers) {
            for (std::size_t c = 0; c < ncomp; ++c) {
                Slot& slot = slots[i * ncomp + c];
                const auto data = match_to_jordan(rep.preservers[i], rep.components[c], e2, witnesses);
                if (data) {
                    slot.matched = true;
                    slot.lemmas_ok = check_lemmas(rep.preservers[i].restricted(rep.components[c]), *data).ok();
                    slot.alpha = data->alpha.map().image;
                    slot.source_basis = data->source_basis;
                    slot.target_basis = data->target_basis;
                }
            }
        }
    };
    const std::size_t nworkers = std::max<std::size_t>(1, options.classify.threads);
    if (nworkers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < nworkers; ++w) {
            threads.emplace_back(work, w, nworkers);
        }
        for (auto& t : threads) {
            t.join();
        }
    }

    // Alpha ids are assigned in discovery order, then renumbered to follow
    // the sorted alpha tables.
    std::vector<RingMap> found_alphas;
    std::vector<JordanInducedData> first_data;
    for (std::size_t i = 0; i < rep.preservers.size(); ++i) {
        bool all_matched = true;
        for (std::size_t c = 0; c < ncomp; ++c) {
            Slot& slot = slots[i * ncomp + c];
            if (!slot.matched) {
                all_matched = false;
                continue;
            }
            const std::size_t before = found_alphas.size();
            const std::size_t a = alpha_index(found_alphas, RingMap{source, target, std::move(slot.alpha)});
            if (found_alphas.size() != before) {
                first_data.push_back(JordanInducedData{*JordanMap::verify(found_alphas.back()), slot.source_basis,
                                                       slot.target_basis, rep.components[c]});
            }
            rep.matches.push_back(MatchRecord{i, c, a, slot.source_basis, slot.target_basis});
            rep.lemma_failures += slot.lemmas_ok ? 0 : 1;
        }
        if (!all_matched) {
            rep.unmatched.push_back(i);
        }
    }

    // Well-definedness depends on alpha only: one full pass per distinct map.
    for (const JordanInducedData& d : first_data) {
        const WellDefinedReport wd = verify_mu_well_defined(src_line, tgt_line, e2, d, options.well_defined);
        if (!wd.ok) {
            rep.falsifications.push_back("mu for a reconstructed Jordan map fails the well-definedness check");
        }
    }

    std::vector<std::size_t> perm(found_alphas.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        perm[i] = i;
    }
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return found_alphas[a].image < found_alphas[b].image; });
    std::vector<std::size_t> rank(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        rank[perm[k]] = k;
        rep.alphas.push_back(found_alphas[perm[k]]);
    }
    for (MatchRecord& mr : rep.matches) {
        mr.alpha_id = rank[mr.alpha_id];
    }

    if (rep.hypotheses_hold()) {
        if (!rep.unmatched.empty()) {
            rep.falsifications.push_back(std::to_string(rep.unmatched.size()) +
                                         " preservers admit no Jordan reconstruction although the hypotheses hold");
        }
        if (rep.lemma_failures != 0) {
            rep.falsifications.push_back(std::to_string(rep.lemma_failures) + " matches fail a lemma check");
        }
    }
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

nlohmann::ordered_json verdict_json(Verdict v) {
    switch (v) {
        case Verdict::Holds:
            return true;
        case Verdict::Fails:
            return false;
        case Verdict::Unresolved:
            break;
    }
    return "unresolved";
}

nlohmann::ordered_json matrix_json(const FiniteRing& r, const Mat2& x) {
    return {{r.name(x.a), r.name(x.b)}, {r.name(x.c), r.name(x.d)}};
}

}  // namespace

std::string report_json(const TheoremReport& rep, bool include_timing) {
    nlohmann::ordered_json j;
    j["ring"] = rep.ring;
    j["target_ring"] = rep.target_ring;
    j["conditions"] = {{"five_units", verdict_json(rep.five_units)},
                       {"two_unit", rep.two_unit},
                       {"i_prime", verdict_json(rep.i_prime)}};
    j["hypotheses_hold"] = rep.hypotheses_hold();
    j["counts"] = {{"points", rep.points},
                   {"harmonic_quads", rep.harmonic_quads},
                   {"preservers", rep.preservers.size()},
                   {"components", rep.components.size()},
                   {"matches", rep.matches.size()},
                   {"search_nodes", rep.search_nodes}};
    auto alphas = nlohmann::ordered_json::array();
    for (const RingMap& a : rep.alphas) {
        auto table = nlohmann::ordered_json::array();
        for (Elem y : a.image) {
            table.push_back(rep.target->name(y));
        }
        alphas.push_back(std::move(table));
    }
    j["alphas"] = std::move(alphas);
    auto matches = nlohmann::ordered_json::array();
    for (const MatchRecord& m : rep.matches) {
        matches.push_back({{"preserver_id", m.preserver_id},
                           {"component_id", m.component_id},
                           {"alpha_id", m.alpha_id},
                           {"source_basis", matrix_json(*rep.source, m.source_basis)},
                           {"target_basis", matrix_json(*rep.target, m.target_basis)}});
    }
    j["matches"] = std::move(matches);
    j["unmatched"] = rep.unmatched;
    j["lemma_failures"] = rep.lemma_failures;
    j["uniqueness_failures"] = rep.uniqueness_failures;
    j["falsifications"] = rep.falsifications;
    j["falsified"] = rep.falsified();
    if (include_timing) {
        j["timing_ms"] = rep.timing_ms;
    } else {
        j["timing_ms"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string report_text(const TheoremReport& rep) {
    std::ostringstream os;
    os << "ring " << rep.ring;
    if (rep.target_ring != rep.ring) {
        os << " -> " << rep.target_ring;
    }
    os << "\n";
    os << "condition (i) five units: " << to_string(rep.five_units) << "\n";
    os << "condition (ii) 2 is a unit: " << (rep.two_unit ? "true" : "false") << "\n";
    os << "condition (i') on the line: " << to_string(rep.i_prime) << "\n";
    os << "points: " << rep.points << ", components: " << rep.components.size()
       << ", harmonic quadruples: " << rep.harmonic_quads << "\n";
    os << "preservers: " << rep.preservers.size() << ", matched (preserver, component) pairs: " << rep.matches.size()
       << ", unmatched preservers: " << rep.unmatched.size() << "\n";
    os << "Jordan maps used: " << rep.alphas.size() << "\n";
    for (std::size_t i = 0; i < rep.alphas.size(); ++i) {
        os << "  alpha " << i << ":";
        for (std::size_t x = 0; x < rep.alphas[i].image.size(); ++x) {
            os << " " << rep.source->name(Elem(x)) << "->" << rep.target->name(rep.alphas[i].image[x]);
        }
        os << "\n";
    }
    if (rep.falsified()) {
        os << "FALSIFIED:\n";
        for (const auto& f : rep.falsifications) {
            os << "  " << f << "\n";
        }
    } else {
        os << "no falsification\n";
    }
    return os.str();
}

}  // namespace staudt
