#include "staudt/cover.hpp"

#include <algorithm>
#include <random>

namespace staudt {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds:
        return "true";
    case Verdict::Fails:
        return "false";
    case Verdict::Unresolved:
        return "unresolved";
    }
    return "?";
}

namespace {

struct Dfs {
    const Bits& universe;
    const std::vector<Bits>& family;
    // containing[e] = members of the family that contain element e
    std::vector<std::vector<std::size_t>> containing;
    std::size_t depth;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::size_t> chosen;

    bool run(const Bits& covered) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        const Bits missing = universe - covered;
        const auto e = missing.find_first();
        if (e == Bits::npos) {
            return true;
        }
        if (chosen.size() == depth) {
            return false;
        }
        for (std::size_t j : containing[e]) {
            chosen.push_back(j);
            if (run(covered | family[j])) {
                return true;
            }
            chosen.pop_back();
            if (out_of_budget) {
                return false;
            }
        }
        return false;
    }
};

std::vector<std::size_t> greedy(const Bits& universe, const std::vector<Bits>& family, std::size_t depth,
                                std::optional<std::size_t> forced_first, const CoverSearchOptions& options) {
    std::mt19937_64 rng(options.seed);
    for (unsigned restart = 0; restart < options.greedy_restarts; ++restart) {
        std::vector<std::size_t> chosen;
        Bits covered(universe.size());
        if (forced_first) {
            chosen.push_back(*forced_first);
            covered |= family[*forced_first];
        } else if (restart > 0) {
            // Randomize the first pick on restarts.
            std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
            const std::size_t j = pick(rng);
            chosen.push_back(j);
            covered |= family[j];
        }
        while (chosen.size() < depth && !universe.is_subset_of(covered)) {
            std::size_t best = 0;
            std::size_t best_gain = 0;
            std::size_t ties = 0;
            for (std::size_t j = 0; j < family.size(); ++j) {
                const std::size_t gain = ((family[j] & universe) - covered).count();
                if (gain > best_gain) {
                    best = j;
                    best_gain = gain;
                    ties = 1;
                } else if (gain == best_gain && gain > 0) {
                    // reservoir-style random tie-break
                    ++ties;
                    if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng) == 0) {
                        best = j;
                    }
                }
            }
            if (best_gain == 0) {
                break;
            }
            chosen.push_back(best);
            covered |= family[best];
        }
        if (universe.is_subset_of(covered)) {
            return chosen;
        }
    }
    return {};
}

}  // namespace

CoverSearchResult find_cover(const Bits& universe, const std::vector<Bits>& family, std::size_t depth,
                             std::optional<std::size_t> forced_first, const CoverSearchOptions& options) {
    CoverSearchResult result;
    Dfs dfs{universe, family, std::vector<std::vector<std::size_t>>(universe.size()), depth, options.node_budget, 0, false, {}};
    for (std::size_t j = 0; j < family.size(); ++j) {
        for (auto e = family[j].find_first(); e != Bits::npos; e = family[j].find_next(e)) {
            dfs.containing[e].push_back(j);
        }
    }

    Bits start(universe.size());
    bool found = false;
    if (forced_first) {
        if (depth == 0) {
            found = universe.none();
        } else {
            dfs.chosen.push_back(*forced_first);
            found = dfs.run(family[*forced_first]);
        }
    } else {
        found = dfs.run(start);
    }
    result.nodes = dfs.nodes;
    if (found) {
        result.found = true;
        result.cover = dfs.chosen;
        result.complete = true;
    } else if (!dfs.out_of_budget) {
        result.complete = true;
    } else {
        result.cover = greedy(universe, family, depth, forced_first, options);
        result.found = !result.cover.empty();
    }
    if (!result.cover.empty()) {
        while (result.cover.size() < depth) {
            result.cover.push_back(result.cover.back());
        }
    }
    return result;
}

}  // namespace staudt
