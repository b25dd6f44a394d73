#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "staudt/preservers.hpp"

namespace staudt {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct ClassifyOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Worker threads; the first variable's candidates are dealt round-robin.
    std::size_t threads = 1;
    /// Cap on the number of preservers kept in memory.
    std::size_t max_results = 2'000'000;
};

struct ClassificationResult {
    /// All total harmonicity preservers, sorted by image table.
    std::vector<PointMap> preservers;
    std::uint64_t nodes = 0;
    std::size_t source_quads = 0;
    double elapsed_ms = 0.0;
};

/// Exhaustive backtracking over total maps source -> target.
///
/// Each point carries a domain of admissible images. Assigning p to q
/// intersects the domains of p's distant neighbours with the neighbours of q.
/// For every harmonic quadruple through p whose other points are all fixed
/// except one, that point's domain is cut to the images completing a target
/// harmonic quadruple, which is how fourth harmonic points get forced.
/// Singleton domains are assigned and propagated eagerly.
///
/// Variables are ordered by the least harmonic quadruple first, then by
/// decreasing distant degree. Throws ResourceError when the node budget or
/// the result cap is exhausted.
ClassificationResult classify_preservers(const LinePtr& source, const LinePtr& target,
                                         const ClassifyOptions& options = {});

}  // namespace staudt
