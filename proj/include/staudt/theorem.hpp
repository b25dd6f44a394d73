#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "staudt/classify.hpp"
#include "staudt/cover.hpp"
#include "staudt/preservers.hpp"

namespace staudt {

struct TheoremOptions {
    ClassifyOptions classify;
    CoverSearchOptions cover;
    WellDefinedOptions well_defined;
    std::size_t line_cap = kDefaultLineRingCap;
    std::size_t group_cap = kDefaultGroupCap;
};

struct MatchRecord {
    std::size_t preserver_id = 0;
    std::size_t component_id = 0;
    std::size_t alpha_id = 0;
    Mat2 source_basis;
    Mat2 target_basis;
};

/// Outcome of the full pipeline: conditions on the source ring, the
/// classification, and the Jordan reconstruction of every preserver on every
/// component.
struct TheoremReport {
    std::string ring;
    std::string target_ring;
    RingPtr source;
    RingPtr target;

    Verdict five_units = Verdict::Unresolved;
    bool two_unit = false;
    Verdict i_prime = Verdict::Unresolved;
    bool hypotheses_hold() const { return five_units == Verdict::Holds && two_unit; }

    std::size_t points = 0;
    std::size_t harmonic_quads = 0;
    std::vector<std::vector<PointId>> components;
    std::vector<PointMap> preservers;

    std::vector<MatchRecord> matches;
    /// Preservers with at least one component admitting no match.
    std::vector<std::size_t> unmatched;
    /// Distinct Jordan maps used by the matches, sorted by image table.
    std::vector<RingMap> alphas;

    std::size_t lemma_failures = 0;
    std::size_t uniqueness_failures = 0;
    std::uint64_t search_nodes = 0;
    /// Human-readable reasons; nonempty means the theorem was contradicted.
    std::vector<std::string> falsifications;
    double timing_ms = 0.0;

    bool falsified() const { return !falsifications.empty(); }
};

/// Runs conditions, classification and matching for source -> target.
/// Throws ResourceError when a cap is hit.
TheoremReport verify_staudt_theorem(const RingPtr& source, const RingPtr& target, const TheoremOptions& options = {});

/// Deterministic JSON; timing_ms is null unless `include_timing`.
std::string report_json(const TheoremReport& report, bool include_timing = false);
/// Short human-readable summary.
std::string report_text(const TheoremReport& report);

}  // namespace staudt
