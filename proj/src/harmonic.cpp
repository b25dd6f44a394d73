#include "staudt/harmonic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "staudt/errors.hpp"

namespace staudt {

bool is_harmonic(const ProjectiveLine& line, const Quad& q) {
    if (!are_distant(line, q[0], q[1])) {
        return false;  // (g0, g1) would not be a basis
    }
    const FiniteRing& r = line.ring();
    const Row& r0 = line.rep(q[0]);
    const Row& r1 = line.rep(q[1]);
    for (Elem w : r.units()) {
        const Row g1 = row_scale(r, w, r1);
        if (line.point_of(row_add(r, r0, g1)) == q[2] &&
            line.point_of(row_add(r, r0, row_scale(r, r.minus_one(), g1))) == q[3]) {
            return true;
        }
    }
    return false;
}

namespace {

// The four points (1,0)G, (1,0)E(0)G, (1,0)E(1)G, (1,0)E(-1)G.
Quad quad_of(const ProjectiveLine& line, const Mat2& g) {
    const FiniteRing& r = line.ring();
    const Row e0{kOne, kZero};
    auto pt = [&](const Row& v) { return line.point_of(row_mul(r, v, g)); };
    return Quad{{pt(e0), pt(row_mul(r, e0, elementary(r, kZero))), pt(row_mul(r, e0, elementary(r, kOne))),
                 pt(row_mul(r, e0, elementary(r, r.minus_one())))}};
}

}  // namespace

bool is_harmonic_via_G(const ProjectiveLine& line, const std::vector<Mat2>& gl2, const Quad& q) {
    for (const Mat2& g : gl2) {
        if (quad_of(line, g) == q) {
            return true;
        }
    }
    return false;
}

std::vector<Quad> harmonic_quadruples_via_G(const ProjectiveLine& line, const std::vector<Mat2>& gl2) {
    std::vector<Quad> out;
    out.reserve(gl2.size());
    for (const Mat2& g : gl2) {
        out.push_back(quad_of(line, g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Quad> enumerate_harmonic_quadruples(const ProjectiveLine& line) {
    const FiniteRing& r = line.ring();
    std::vector<Quad> out;
    for (PointId p0 = 0; p0 < line.size(); ++p0) {
        for (PointId p1 = 0; p1 < line.size(); ++p1) {
            if (!are_distant(line, p0, p1)) {
                continue;
            }
            const Row& r0 = line.rep(p0);
            for (Elem w : r.units()) {
                const Row g1 = row_scale(r, w, line.rep(p1));
                out.push_back(Quad{{p0, p1, line.point_of(row_add(r, r0, g1)),
                                    line.point_of(row_add(r, r0, row_scale(r, r.minus_one(), g1)))}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointId fourth_harmonic(const ProjectiveLine& line, PointId p0, PointId p1, PointId p2) {
    if (!are_distant(line, p0, p1) || !are_distant(line, p0, p2) || !are_distant(line, p1, p2)) {
        throw std::invalid_argument("fourth_harmonic: points are not mutually distant");
    }
    std::size_t count = 0;
    PointId found = 0;
    for (PointId p3 = 0; p3 < line.size(); ++p3) {
        if (is_harmonic(line, Quad{{p0, p1, p2, p3}})) {
            ++count;
            found = p3;
        }
    }
    if (count != 1) {
        throw FalsificationError("harmonic completion of (" + std::to_string(p0) + "," + std::to_string(p1) + "," +
                                 std::to_string(p2) + ") over " + line.ring().label() + " is not unique: " +
                                 std::to_string(count) + " candidates");
    }
    return found;
}

PointId third_harmonic(const ProjectiveLine& line, PointId p0, PointId p1, PointId p3) {
    return fourth_harmonic(line, p0, p1, p3);
}

HarmonicIndex::HarmonicIndex(const ProjectiveLine& line)
    : n_(line.size()), quads_(enumerate_harmonic_quadruples(line)) {
    constexpr std::size_t kDenseLimit = std::size_t{1} << 28;
    const std::size_t total = n_ * n_ * n_ * n_;
    if (total <= kDenseLimit) {
        bits_.assign((total + 63) / 64, 0);
        for (const Quad& q : quads_) {
            const std::size_t k = key(q);
            bits_[k / 64] |= std::uint64_t{1} << (k % 64);
        }
    } else {
        for (const Quad& q : quads_) {
            keys_.push_back(key(q));
        }
        std::sort(keys_.begin(), keys_.end());
    }
}

bool HarmonicIndex::contains(const Quad& q) const {
    const std::size_t k = key(q);
    if (!bits_.empty()) {
        return (bits_[k / 64] >> (k % 64)) & 1U;
    }
    return std::binary_search(keys_.begin(), keys_.end(), std::uint64_t{k});
}

UniquenessReport check_harmonic_uniqueness(const DistantGraph& graph, const HarmonicIndex& index) {
    UniquenessReport rep;
    const std::size_t n = graph.size();
    for (PointId a = 0; a < n; ++a) {
        for (PointId b = 0; b < n; ++b) {
            if (!graph.adjacent(a, b)) {
                continue;
            }
            for (PointId c = 0; c < n; ++c) {
                if (!graph.adjacent(a, c) || !graph.adjacent(b, c)) {
                    continue;
                }
                ++rep.triples;
                std::size_t count = 0;
                for (PointId d = 0; d < n; ++d) {
                    count += index.contains(Quad{{a, b, c, d}}) ? 1 : 0;
                }
                rep.failures += count == 1 ? 0 : 1;
            }
        }
    }
    return rep;
}

DistantConsequencesReport check_distant_consequences(const DistantGraph& graph) {
    const ProjectiveLine& line = graph.line();
    const FiniteRing& r = line.ring();
    DistantConsequencesReport rep;
    rep.two_unit = r.is_unit(r.two());
    rep.minus_one_ne_one = r.minus_one() != kOne;
    const auto comps = components(graph);
    for (const Quad& q : enumerate_harmonic_quadruples(line)) {
        ++rep.quads;
        bool pattern = graph.adjacent(q[0], q[1]);
        for (int i : {0, 1}) {
            for (int j : {2, 3}) {
                pattern = pattern && graph.adjacent(q[i], q[j]);
            }
        }
        rep.pattern_violations += pattern ? 0 : 1;
        const bool distant23 = graph.adjacent(q[2], q[3]);
        const bool equal23 = q[2] == q[3];
        rep.p2_p3_distant += distant23 ? 1 : 0;
        rep.p2_eq_p3 += equal23 ? 1 : 0;
        rep.distant_rule_violations += distant23 == rep.two_unit ? 0 : 1;
        rep.equality_rule_violations += (!equal23) == rep.minus_one_ne_one ? 0 : 1;
        const std::size_t c = component_of(comps, q[0]);
        bool same = true;
        for (int i = 1; i < 4; ++i) {
            same = same && component_of(comps, q[i]) == c;
        }
        rep.component_violations += same ? 0 : 1;
    }
    return rep;
}

}  // namespace staudt
