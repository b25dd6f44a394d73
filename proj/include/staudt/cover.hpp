#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace staudt {

using Bits = boost::dynamic_bitset<>;

/// Outcome of a search that can run out of budget.
enum class Verdict { Holds, Fails, Unresolved };

const char* to_string(Verdict v);

struct CoverSearchOptions {
    std::uint64_t node_budget = 100'000'000;
    unsigned greedy_restarts = 64;
    std::uint64_t seed = 0;
};

struct CoverSearchResult {
    bool found = false;
    /// Indices into the family, padded by repetition to exactly `depth`
    /// entries (fewer only if the universe is empty).
    std::vector<std::size_t> cover;
    /// True when the search space was exhausted (absence of `cover` is then a proof).
    bool complete = false;
    std::uint64_t nodes = 0;
};

/// Looks for at most `depth` members of `family` whose union contains `universe`.
///
/// Exact depth-first search: the least uncovered element must be covered by
/// some chosen member, so branch over the members containing it. If
/// `forced_first` is set that member is always chosen (used when a symmetry
/// argument allows fixing it). When the node budget runs out the search
/// falls back to randomized greedy covering, which can only find covers.
CoverSearchResult find_cover(const Bits& universe, const std::vector<Bits>& family, std::size_t depth,
                             std::optional<std::size_t> forced_first, const CoverSearchOptions& options);

}  // namespace staudt
