#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staudt/cover.hpp"
#include "staudt/ring.hpp"

namespace staudt {

struct AxiomCheck {
    std::string name;
    bool passed = true;
    /// First counterexample (elements in the order the axiom quantifies them).
    std::vector<Elem> witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    /// Informational, not an axiom: some (a, b) with ab != ba.
    std::optional<std::pair<Elem, Elem>> noncommuting;

    bool all_passed() const;
    const AxiomCheck* find(const std::string& name) const;
};

/// Exhaustive check of the ring axioms and of the unit/inverse tables.
AxiomReport check_ring_axioms(const FiniteRing& ring);

/// Condition (i) of the theorem: for all x1..x5 there is an x with every
/// x - xi a unit. It fails exactly when five translates xi + N of the
/// non-unit set N cover R, so this is a covering search. Translation
/// invariance lets the first translate be fixed to N itself.
struct FiveUnitsResult {
    Verdict verdict = Verdict::Unresolved;
    /// Blocking 5-tuple when verdict == Fails.
    std::vector<Elem> witness;
    std::uint64_t nodes = 0;
};

FiveUnitsResult check_condition_five_units(const FiniteRing& ring, const CoverSearchOptions& options = {});

/// Condition (ii): 1 + 1 is a unit.
bool check_two_unit(const FiniteRing& ring);

}  // namespace staudt
