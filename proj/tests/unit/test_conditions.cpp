#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "staudt/cover.hpp"
#include "staudt/projline.hpp"
#include "staudt/ring_checks.hpp"
#include "staudt/ring_spec.hpp"

using namespace staudt;

namespace {

// Condition (i) straight from its statement: every 5-tuple admits some x
// with all x - xi units.
bool five_units_brute(const FiniteRing& r) {
    const std::size_t n = r.size();
    std::size_t t[5] = {0, 0, 0, 0, 0};
    while (true) {
        bool found = false;
        for (std::size_t x = 0; x < n && !found; ++x) {
            bool all = true;
            for (std::size_t i = 0; i < 5 && all; ++i) {
                all = r.is_unit(r.sub(Elem(x), Elem(t[i])));
            }
            found = all;
        }
        if (!found) {
            return false;
        }
        std::size_t k = 0;
        while (k < 5 && ++t[k] == n) {
            t[k++] = 0;
        }
        if (k == 5) {
            return true;
        }
    }
}

// Any `depth` members of `family` (repetition allowed) covering `universe`.
bool cover_brute(const Bits& universe, const std::vector<Bits>& family, std::size_t depth) {
    if (universe.none()) {
        return true;
    }
    if (depth == 0) {
        return false;
    }
    for (const Bits& f : family) {
        if (cover_brute(universe - f, family, depth - 1)) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_SUITE("conditions") {
    TEST_CASE("verdict table") {
        struct Row {
            const char* spec;
            Verdict five;
            bool two;
        };
        for (const Row& row : {Row{"Z/7", Verdict::Holds, true}, Row{"GF(3,2)", Verdict::Holds, true},
                               Row{"GF(2,3)", Verdict::Holds, false}, Row{"Z/9", Verdict::Fails, true},
                               Row{"Z/4", Verdict::Fails, false}, Row{"Z/3", Verdict::Fails, true}}) {
            CAPTURE(row.spec);
            const auto r = make_ring(row.spec);
            CHECK(check_condition_five_units(*r).verdict == row.five);
            CHECK(check_two_unit(*r) == row.two);
        }
    }

    TEST_CASE("five units agrees with exhaustive 5-tuple search for |R| <= 9") {
        for (const auto& s : oracle::catalog()) {
            const auto r = make_ring(s);
            if (r->size() > 9) {
                continue;
            }
            CAPTURE(s);
            const auto res = check_condition_five_units(*r);
            CHECK(res.verdict == (five_units_brute(*r) ? Verdict::Holds : Verdict::Fails));
        }
    }

    TEST_CASE("blocking witnesses really block") {
        for (const std::string s : {"Z/4", "Z/9", "Z/3", "Z/6", "M2(Z/2)"}) {
            CAPTURE(s);
            const auto r = make_ring(s);
            const auto res = check_condition_five_units(*r);
            REQUIRE(res.verdict == Verdict::Fails);
            REQUIRE(res.witness.size() == 5);
            for (std::size_t x = 0; x < r->size(); ++x) {
                bool all_units = true;
                for (Elem xi : res.witness) {
                    all_units = all_units && r->is_unit(r->sub(Elem(x), xi));
                }
                CHECK_FALSE(all_units);
            }
        }
        // Z/4: the witness covers both residues mod 2
        const auto r = make_ring("Z/4");
        const auto w = check_condition_five_units(*r).witness;
        bool even = false, odd = false;
        for (Elem x : w) {
            (x % 2 ? odd : even) = true;
        }
        CHECK(even);
        CHECK(odd);
    }

    TEST_CASE("condition (i') matches condition (i) on the catalog") {
        for (const auto& s : oracle::catalog()) {
            CAPTURE(s);
            const auto r = make_ring(s);
            const auto five = check_condition_five_units(*r).verdict;
            const auto graph = build_distant_graph(enumerate_points(r));
            const auto ip = check_condition_i_prime(*graph);
            if (five != Verdict::Unresolved && ip.verdict != Verdict::Unresolved) {
                CHECK(five == ip.verdict);
            }
            if (ip.verdict == Verdict::Fails) {
                // p0 and five neighbours with no point distant to all six
                REQUIRE(ip.witness.size() == 6);
                for (std::size_t i = 1; i < 6; ++i) {
                    CHECK(graph->adjacent(ip.witness[0], ip.witness[i]));
                }
                for (PointId q = 0; q < graph->size(); ++q) {
                    bool all = true;
                    for (PointId w : ip.witness) {
                        all = all && graph->adjacent(q, w);
                    }
                    CHECK_FALSE(all);
                }
            }
        }
    }

    TEST_CASE("cover search agrees with brute force on random instances") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 1 + rng() % 10;
            const std::size_t m = 1 + rng() % 6;
            const std::size_t depth = 1 + rng() % 3;
            Bits universe(n);
            for (std::size_t i = 0; i < n; ++i) {
                universe[i] = rng() % 4 != 0;
            }
            std::vector<Bits> family(m, Bits(n));
            for (auto& f : family) {
                for (std::size_t i = 0; i < n; ++i) {
                    f[i] = rng() % 3 == 0;
                }
            }
            const auto res = find_cover(universe, family, depth, std::nullopt, {});
            CHECK(res.complete);
            CHECK(res.found == cover_brute(universe, family, depth));
            if (res.found) {
                Bits covered(n);
                for (std::size_t j : res.cover) {
                    covered |= family[j];
                }
                CHECK((universe - covered).none());
            }
        }
    }

    TEST_CASE("a tiny node budget leaves the verdict unresolved instead of true") {
        CoverSearchOptions opt;
        opt.node_budget = 1;
        opt.greedy_restarts = 0;
        const auto res = check_condition_five_units(*make_ring("Z/7"), opt);
        CHECK(res.verdict == Verdict::Unresolved);
    }

    TEST_CASE("Dedekind finiteness") {
        for (const std::string s : {"Z/6", "M2(Z/2)", "T2(Z/3)"}) {
            CHECK_FALSE(check_dedekind_witness(*make_ring(s)).has_value());
        }
    }
}
