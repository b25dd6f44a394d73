#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "staudt/projline.hpp"

namespace staudt {

/// Ordered quadruple of points of one line; repetitions allowed.
struct Quad {
    std::array<PointId, 4> p{};

    PointId operator[](std::size_t i) const { return p[i]; }
    friend auto operator<=>(const Quad&, const Quad&) = default;
};

/// Harm(p0, p1, p2, p3): some basis (g0, g1) with p0 = Rg0, p1 = Rg1,
/// p2 = R(g0 + g1), p3 = R(g0 - g1).
///
/// Admissible generators of a point are unit multiples of its representative,
/// so g0 = u rep(p0), g1 = v rep(p1). Since R(u r0 + v r1) = R(r0 + u^-1 v r1),
/// only w = u^-1 v matters and the search is over one unit.
bool is_harmonic(const ProjectiveLine& line, const Quad& q);

/// Oracle: some G in GL2 with (1,0)G, (1,0)E(0)G, (1,0)E(1)G, (1,0)E(-1)G
/// generating p0..p3. `gl2` must list all of GL2(R).
bool is_harmonic_via_G(const ProjectiveLine& line, const std::vector<Mat2>& gl2, const Quad& q);

/// The full set { (p0..p3) realised by some G in gl2 }, sorted.
std::vector<Quad> harmonic_quadruples_via_G(const ProjectiveLine& line, const std::vector<Mat2>& gl2);

/// All harmonic quadruples, sorted.
std::vector<Quad> enumerate_harmonic_quadruples(const ProjectiveLine& line);

/// The unique p3 with Harm(p0, p1, p2, p3), found by scanning every point.
/// Throws std::invalid_argument unless p0, p1, p2 are mutually distant, and
/// FalsificationError if the number of completions is not exactly one.
PointId fourth_harmonic(const ProjectiveLine& line, PointId p0, PointId p1, PointId p2);
/// The unique p2 with Harm(p0, p1, p2, p3); Harm(p0,p1,p2,p3) <=> Harm(p0,p1,p3,p2).
PointId third_harmonic(const ProjectiveLine& line, PointId p0, PointId p1, PointId p3);

/// Constant-time membership over the harmonic quadruples of one line.
class HarmonicIndex {
public:
    explicit HarmonicIndex(const ProjectiveLine& line);

    bool contains(const Quad& q) const;
    const std::vector<Quad>& quads() const noexcept { return quads_; }

private:
    std::size_t key(const Quad& q) const { return ((q[0] * n_ + q[1]) * n_ + q[2]) * n_ + q[3]; }

    std::size_t n_ = 0;
    std::vector<Quad> quads_;
    // dense bit table for small lines, sorted keys otherwise
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint64_t> keys_;
};

/// Checks, for every harmonic quadruple: p0 and p1 distant, pi distant to pj
/// (i in {0,1}, j in {2,3}), p2 distant to p3 iff 2 is a unit, p2 != p3 iff
/// -1 != 1, and all four points in one component.
struct DistantConsequencesReport {
    std::size_t quads = 0;
    bool two_unit = false;
    bool minus_one_ne_one = false;
    std::size_t pattern_violations = 0;
    std::size_t p2_p3_distant = 0;
    std::size_t p2_eq_p3 = 0;
    std::size_t distant_rule_violations = 0;
    std::size_t equality_rule_violations = 0;
    std::size_t component_violations = 0;

    bool ok() const {
        return pattern_violations == 0 && distant_rule_violations == 0 && equality_rule_violations == 0 &&
               component_violations == 0;
    }
};

DistantConsequencesReport check_distant_consequences(const DistantGraph& graph);

/// Counts, over all ordered mutually distant triples, how many have a number
/// of harmonic completions other than one (in slot 3, equivalently slot 2).
struct UniquenessReport {
    std::size_t triples = 0;
    std::size_t failures = 0;
};

UniquenessReport check_harmonic_uniqueness(const DistantGraph& graph, const HarmonicIndex& index);

}  // namespace staudt
