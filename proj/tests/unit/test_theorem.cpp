#include <doctest.h>

#include <json.hpp>
#include <string>

#include "../support/oracles.hpp"
#include "staudt/ring_spec.hpp"
#include "staudt/theorem.hpp"

using namespace staudt;

TEST_SUITE("theorem") {
    TEST_CASE("Z/7: hypotheses hold and every preserver is Jordan-induced") {
        const auto r = make_ring("Z/7");
        const auto rep = verify_staudt_theorem(r, r);
        CHECK(rep.five_units == Verdict::Holds);
        CHECK(rep.two_unit);
        CHECK(rep.i_prime == Verdict::Holds);
        CHECK(rep.hypotheses_hold());
        CHECK(rep.points == 8);
        CHECK(rep.harmonic_quads == 336);
        CHECK(rep.preservers.size() == 336);
        CHECK(rep.matches.size() == 336);
        CHECK(rep.unmatched.empty());
        REQUIRE(rep.alphas.size() == 1);
        CHECK(rep.alphas[0] == RingMap::identity(r));
        CHECK_FALSE(rep.falsified());
    }

    TEST_CASE("GF(3,2): 1440 preservers, Jordan maps id and Frobenius") {
        const auto r = make_ring("GF(3,2)");
        const auto rep = verify_staudt_theorem(r, r);
        CHECK(rep.hypotheses_hold());
        CHECK(rep.preservers.size() == 1440);
        CHECK(rep.matches.size() == 1440);
        CHECK(rep.unmatched.empty());
        REQUIRE(rep.alphas.size() == 2);
        CHECK(rep.alphas[0].image == oracle::identity_table(*r));
        CHECK(rep.alphas[1].image == oracle::power_map(*r, 3));
        CHECK(rep.lemma_failures == 0);
        CHECK(rep.uniqueness_failures == 0);
        CHECK_FALSE(rep.falsified());
        for (const auto& m : rep.matches) {
            CHECK(m.component_id == 0);
            CHECK(m.alpha_id < 2);
        }
    }

    TEST_CASE("Z/4: hypotheses fail, classification still reported") {
        const auto r = make_ring("Z/4");
        const auto rep = verify_staudt_theorem(r, r);
        CHECK(rep.five_units == Verdict::Fails);
        CHECK_FALSE(rep.two_unit);
        CHECK_FALSE(rep.hypotheses_hold());
        CHECK(rep.points == 6);
        CHECK(rep.preservers.size() == 48);
        CHECK_FALSE(rep.falsified());
    }

    TEST_CASE("matches reproduce their preserver") {
        const auto r = make_ring("DUAL(Z/3)");
        const auto rep = verify_staudt_theorem(r, r);
        const auto line = enumerate_points(r);
        const auto e2 = generate_E2(*r);
        for (const auto& m : rep.matches) {
            const auto alpha = JordanMap::verify(rep.alphas[m.alpha_id]);
            REQUIRE(alpha);
            const JordanInducedData data{*alpha, m.source_basis, m.target_basis, rep.components[m.component_id]};
            const auto mu = mu_from_jordan(line, line, e2, data);
            CHECK(mu.restricted(rep.components[m.component_id]) ==
                  rep.preservers[m.preserver_id].restricted(rep.components[m.component_id]));
        }
    }

    TEST_CASE("JSON report is deterministic across thread counts") {
        const auto r = make_ring("GF(2,3)");
        TheoremOptions one, four;
        four.classify.threads = 4;
        const auto a = report_json(verify_staudt_theorem(r, r, one));
        const auto b = report_json(verify_staudt_theorem(r, r, four));
        CHECK(a == b);
        const auto j = nlohmann::json::parse(a);
        for (const char* key : {"ring", "conditions", "counts", "matches", "unmatched", "timing_ms"}) {
            CHECK(j.contains(key));
        }
        CHECK(j["timing_ms"].is_null());
        CHECK(j["conditions"]["five_units"] == true);
        CHECK(j["conditions"]["two_unit"] == false);
        CHECK(j["counts"]["points"] == 9);
        CHECK(j["counts"]["preservers"] == 362880);
        CHECK(j["falsified"] == false);
    }

    TEST_CASE("text report mentions the ring and the counts") {
        const auto r = make_ring("Z/5");
        const auto text = report_text(verify_staudt_theorem(r, r));
        CHECK(text.find("Z/5") != std::string::npos);
        CHECK(text.find("120") != std::string::npos);
    }

    TEST_CASE("cross-ring verification") {
        // Every ordering of the four points of P(Z/3) is harmonic; Z/9 has no
        // such quadruple (it would need 3 = 0), so there are no preservers.
        const auto z3 = make_ring("Z/3");
        CHECK(verify_staudt_theorem(z3, make_ring("Z/9")).preservers.empty());

        const auto gf9 = make_ring("GF(3,2)");
        const auto rep = verify_staudt_theorem(z3, gf9);
        const auto expected = oracle::raw_filter_preservers(*enumerate_points(z3), *enumerate_points(gf9));
        REQUIRE(rep.preservers.size() == expected.size());
        CHECK_FALSE(expected.empty());
        CHECK(rep.matches.size() + rep.unmatched.size() >= rep.preservers.size());
        CHECK_FALSE(rep.falsified());
    }
}
