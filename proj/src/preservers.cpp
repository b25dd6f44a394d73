#include "staudt/preservers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "staudt/errors.hpp"

namespace staudt {

namespace {

Mat2 require_inverse(const FiniteRing& r, const Mat2& x, const char* what) {
    const auto xi = inverse(r, x);
    if (!xi) {
        throw std::invalid_argument(std::string(what) + ": basis matrix is not invertible");
    }
    return *xi;
}

std::string word_string(const FiniteRing& r, const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "," : "") + r.name(w[i]);
    }
    return s + ")";
}

// Incremental images Phi(X) = Phi(parent) * E'(letter^alpha) for all E2
// elements, in BFS order.
std::vector<Mat2> target_word_images(const FiniteRing& t, const GeneratedGroup& e2, const JordanMap& alpha) {
    std::vector<Mat2> phi(e2.size());
    phi[0] = Mat2::identity();
    for (std::size_t i = 1; i < e2.size(); ++i) {
        phi[i] = mat_mul(t, phi[e2.parent[i]], elementary(t, alpha(e2.letter[i])));
    }
    return phi;
}

struct WordPass {
    PointMap map;
    std::vector<std::int64_t> first_element;  // E2 element that defined each image
    std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

WordPass run_word_pass(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                       const JordanInducedData& data) {
    if (!e2.has_witnesses || e2.ring_size != source->ring().size()) {
        throw std::invalid_argument("mu_from_jordan: E2 group of the source ring with witnesses required");
    }
    const FiniteRing& r = source->ring();
    const FiniteRing& t = target->ring();
    require_inverse(r, data.source_basis, "mu_from_jordan");
    require_inverse(t, data.target_basis, "mu_from_jordan");
    const auto phi = target_word_images(t, e2, data.alpha);

    WordPass pass;
    pass.map.source = source;
    pass.map.target = target;
    pass.map.image.assign(source->size(), PointMap::kUndefined);
    pass.first_element.assign(source->size(), -1);
    for (std::size_t i = 0; i < e2.size(); ++i) {
        const PointId p = source->point_of(row_mul(r, e2.elements[i].row0(), data.source_basis));
        const PointId q = target->point_of(row_mul(t, phi[i].row0(), data.target_basis));
        if (pass.first_element[p] < 0) {
            pass.first_element[p] = static_cast<std::int64_t>(i);
            pass.map.image[p] = static_cast<std::int32_t>(q);
        } else if (pass.map.image[p] != static_cast<std::int32_t>(q) && !pass.conflict) {
            pass.conflict = std::make_pair(static_cast<std::size_t>(pass.first_element[p]), i);
        }
    }
    return pass;
}

}  // namespace

bool PointMap::is_total() const {
    return std::none_of(image.begin(), image.end(), [](std::int32_t v) { return v == kUndefined; });
}

std::vector<PointId> PointMap::domain() const {
    std::vector<PointId> out;
    for (PointId p = 0; p < image.size(); ++p) {
        if (defined(p)) {
            out.push_back(p);
        }
    }
    return out;
}

PointMap PointMap::restricted(const std::vector<PointId>& points) const {
    PointMap out{source, target, std::vector<std::int32_t>(image.size(), kUndefined)};
    for (PointId p : points) {
        out.image[p] = image[p];
    }
    return out;
}

PointMap PointMap::identity(const LinePtr& line) {
    PointMap m{line, line, std::vector<std::int32_t>(line->size())};
    for (PointId p = 0; p < line->size(); ++p) {
        m.image[p] = static_cast<std::int32_t>(p);
    }
    return m;
}

PointMap mu_from_jordan(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                        const JordanInducedData& data) {
    WordPass pass = run_word_pass(source, target, e2, data);
    if (pass.conflict) {
        const FiniteRing& r = source->ring();
        throw FalsificationError("mu over " + r.label() + " is not well defined: words " +
                                 word_string(r, e2.witness(pass.conflict->first)) + " and " +
                                 word_string(r, e2.witness(pass.conflict->second)) +
                                 " reach one point with different images");
    }
    if (!data.component.empty() && data.component != pass.map.domain()) {
        throw std::invalid_argument("mu_from_jordan: component differs from the word component of R a0");
    }
    return std::move(pass.map);
}

std::vector<std::int64_t> point_witnesses(const ProjectiveLine& line, const GeneratedGroup& e2) {
    std::vector<std::int64_t> out(line.size(), -1);
    for (std::size_t i = 0; i < e2.size(); ++i) {
        const PointId p = line.point_of(e2.elements[i].row0());
        if (out[p] < 0) {
            out[p] = static_cast<std::int64_t>(i);
        }
    }
    return out;
}

PointMap mu_from_witnesses(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                           const std::vector<std::int64_t>& witnesses, const JordanInducedData& data) {
    const FiniteRing& r = source->ring();
    const FiniteRing& t = target->ring();
    PointMap m{source, target, std::vector<std::int32_t>(source->size(), PointMap::kUndefined)};
    for (PointId x = 0; x < source->size(); ++x) {
        if (witnesses[x] < 0) {
            continue;
        }
        const std::size_t i = static_cast<std::size_t>(witnesses[x]);
        Row img{kOne, kZero};
        for (Elem l : e2.witness(i)) {
            img = row_mul(t, img, elementary(t, data.alpha(l)));
        }
        const PointId p = source->point_of(row_mul(r, e2.elements[i].row0(), data.source_basis));
        m.image[p] = static_cast<std::int32_t>(target->point_of(row_mul(t, img, data.target_basis)));
    }
    return m;
}

WellDefinedReport verify_mu_well_defined(const LinePtr& source, const LinePtr& target, const GeneratedGroup& e2,
                                         const JordanInducedData& data, const WellDefinedOptions& options) {
    WellDefinedReport rep;
    const FiniteRing& r = source->ring();
    const FiniteRing& t = target->ring();
    const WordPass pass = run_word_pass(source, target, e2, data);
    rep.elements_checked = e2.size();
    if (pass.conflict) {
        rep.ok = false;
        rep.witness = std::make_pair(e2.witness(pass.conflict->first), e2.witness(pass.conflict->second));
        return rep;
    }
    const PointMap& mu = pass.map;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> len_dist(0, options.max_word_length);
    std::uniform_int_distribution<std::size_t> letter_dist(0, r.size() - 1);
    for (std::size_t k = 0; k < options.random_words; ++k) {
        Word w(len_dist(rng));
        for (Elem& x : w) {
            x = static_cast<Elem>(letter_dist(rng));
        }
        Mat2 x = Mat2::identity();
        Mat2 y = Mat2::identity();
        for (Elem l : w) {
            x = mat_mul(r, x, elementary(r, l));
            y = mat_mul(t, y, elementary(t, data.alpha(l)));
        }
        const PointId p = source->point_of(row_mul(r, x.row0(), data.source_basis));
        const PointId q = target->point_of(row_mul(t, y.row0(), data.target_basis));
        ++rep.random_words_checked;
        if (!mu.defined(p) || mu(p) != q) {
            rep.ok = false;
            rep.witness = std::make_pair(w, pass.first_element[p] >= 0
                                                ? e2.witness(static_cast<std::size_t>(pass.first_element[p]))
                                                : Word{});
            return rep;
        }
    }

    for (const Quad& quad : enumerate_harmonic_quadruples(*source)) {
        if (!std::all_of(quad.p.begin(), quad.p.end(), [&](PointId p) { return mu.defined(p); })) {
            continue;
        }
        ++rep.quads_checked;
        const Quad img{{mu(quad[0]), mu(quad[1]), mu(quad[2]), mu(quad[3])}};
        if (!is_harmonic(*target, img)) {
            rep.ok = false;
            rep.quad_witness = quad;
            return rep;
        }
    }
    return rep;
}

PointMap lambda_from_hom(const LinePtr& source, const LinePtr& target, const RingMap& alpha,
                         const Mat2& source_basis, const Mat2& target_basis) {
    if (!is_ring_homomorphism(alpha)) {
        throw std::invalid_argument("lambda_from_hom: map is not a ring homomorphism");
    }
    const FiniteRing& r = source->ring();
    const FiniteRing& t = target->ring();
    const Mat2 b_inv = require_inverse(r, source_basis, "lambda_from_hom");
    require_inverse(t, target_basis, "lambda_from_hom");
    PointMap m{source, target, std::vector<std::int32_t>(source->size())};
    for (PointId p = 0; p < source->size(); ++p) {
        const Row x = row_mul(r, source->rep(p), b_inv);
        const Row xs{alpha(x[0]), alpha(x[1])};
        m.image[p] = static_cast<std::int32_t>(target->point_of(row_mul(t, xs, target_basis)));
    }
    return m;
}

PointMap delta_from_antihom(const LinePtr& source, const LinePtr& target, const RingMap& alpha,
                            const Mat2& source_basis, const Mat2& target_basis) {
    if (!is_antihomomorphism(alpha)) {
        throw std::invalid_argument("delta_from_antihom: map is not an antihomomorphism");
    }
    const FiniteRing& r = source->ring();
    const FiniteRing& t = target->ring();
    const Mat2 b_inv = require_inverse(r, source_basis, "delta_from_antihom");
    require_inverse(t, target_basis, "delta_from_antihom");
    const Mat2 e0 = elementary(t, kZero);
    const Mat2 e0_inv{kZero, t.minus_one(), kOne, kZero};

    PointMap m{source, target, std::vector<std::int32_t>(source->size())};
    for (PointId p = 0; p < source->size(); ++p) {
        // X0 has first row rep(p) and second row its completion, in B-coordinates.
        const Mat2 x0 = Mat2::from_rows(row_mul(r, source->rep(p), b_inv), row_mul(r, source->completion(p), b_inv));
        const Mat2 x0_inv = require_inverse(r, x0, "delta_from_antihom");
        std::int32_t img = PointMap::kUndefined;
        // Every X with first row a generator of p is [[u, 0], [s, v]] * X0.
        for (Elem u : r.units()) {
            for (Elem v : r.units()) {
                const Elem vi = r.inv(v);
                const Elem ui = r.inv(u);
                for (std::size_t s = 0; s < r.size(); ++s) {
                    const Mat2 l_inv{ui, kZero, r.neg(r.mul(r.mul(vi, Elem(s)), ui)), vi};
                    const Mat2 x_inv = mat_mul(r, x0_inv, l_inv);
                    const Mat2 dd = mat_mul(t, mat_mul(t, e0_inv, alpha_star(alpha, transpose(x_inv))), e0);
                    const auto q = static_cast<std::int32_t>(target->point_of(row_mul(t, dd.row0(), target_basis)));
                    if (img == PointMap::kUndefined) {
                        img = q;
                    } else if (img != q) {
                        throw FalsificationError("delta over " + r.label() + " depends on the choice of matrix at point " +
                                                 std::to_string(p));
                    }
                }
            }
        }
        m.image[p] = img;
    }
    return m;
}

std::optional<std::pair<PointId, PointId>> bartolone_image(const LinePtr& source, const LinePtr& target,
                                                           const JordanInducedData& data, Elem t1, Elem t2) {
    const FiniteRing& r = source->ring();
    const FiniteRing& t = target->ring();
    const Row x{r.sub(r.mul(t1, t2), kOne), t1};
    const Elem s1 = data.alpha(t1);
    const Elem s2 = data.alpha(t2);
    const Row y{t.sub(t.mul(s1, s2), kOne), s1};
    const auto p = source->find(row_mul(r, x, data.source_basis));
    const auto q = target->find(row_mul(t, y, data.target_basis));
    if (!p || !q) {
        return std::nullopt;
    }
    return std::make_pair(*p, *q);
}

BartoloneReport bartolone_sweep(const LinePtr& source, const LinePtr& target, const JordanInducedData& data,
                                const PointMap& mu) {
    BartoloneReport rep;
    const std::size_t n = source->ring().size();
    std::vector<char> hit(source->size(), 0);
    std::vector<char> bad(source->size(), 0);
    for (std::size_t t1 = 0; t1 < n; ++t1) {
        for (std::size_t t2 = 0; t2 < n; ++t2) {
            ++rep.pairs;
            const auto img = bartolone_image(source, target, data, Elem(t1), Elem(t2));
            if (!img) {
                ++rep.non_admissible;
                continue;
            }
            hit[img->first] = 1;
            if (!mu.defined(img->first) || mu(img->first) != img->second) {
                bad[img->first] = 1;
            }
        }
    }
    for (PointId p = 0; p < source->size(); ++p) {
        if (hit[p]) {
            rep.covered.push_back(p);
        }
        rep.disagreements += bad[p] ? 1 : 0;
    }
    return rep;
}

bool is_harmonicity_preserver(const PointMap& m, const std::vector<Quad>& source_quads,
                              const HarmonicIndex& target_index) {
    for (const Quad& q : source_quads) {
        if (!m.defined(q[0]) || !m.defined(q[1]) || !m.defined(q[2]) || !m.defined(q[3])) {
            continue;
        }
        if (!target_index.contains(Quad{{m(q[0]), m(q[1]), m(q[2]), m(q[3])}})) {
            return false;
        }
    }
    return true;
}

bool is_harmonicity_preserver(const PointMap& m) {
    for (const Quad& q : enumerate_harmonic_quadruples(*m.source)) {
        if (!m.defined(q[0]) || !m.defined(q[1]) || !m.defined(q[2]) || !m.defined(q[3])) {
            continue;
        }
        if (!is_harmonic(*m.target, Quad{{m(q[0]), m(q[1]), m(q[2]), m(q[3])}})) {
            return false;
        }
    }
    return true;
}

bool is_distant_preserving(const PointMap& m) {
    const auto dom = m.domain();
    for (PointId p : dom) {
        for (PointId q : dom) {
            if (p < q && are_distant(*m.source, p, q) && !are_distant(*m.target, m(p), m(q))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Mat2> enumerate_GL2_by_rows(const ProjectiveLine& line) {
    const FiniteRing& r = line.ring();
    std::vector<Mat2> out;
    for (PointId p = 0; p < line.size(); ++p) {
        for (Elem u : r.units()) {
            const Row first = row_scale(r, u, line.rep(p));
            const Row c = line.completion(p);
            for (std::size_t s = 0; s < r.size(); ++s) {
                for (Elem v : r.units()) {
                    out.push_back(Mat2::from_rows(first, row_add(r, row_scale(r, Elem(s), first), row_scale(r, v, c))));
                }
            }
        }
    }
    return out;
}

PointMap map_induced_by(const LinePtr& line, const Mat2& g) {
    PointMap m{line, line, std::vector<std::int32_t>(line->size())};
    for (PointId p = 0; p < line->size(); ++p) {
        m.image[p] = static_cast<std::int32_t>(line->point_of(row_mul(line->ring(), line->rep(p), g)));
    }
    return m;
}

std::optional<JordanInducedData> match_to_jordan(const PointMap& m, const std::vector<PointId>& component,
                                                 const GeneratedGroup& e2) {
    return match_to_jordan(m, component, e2, point_witnesses(*m.source, e2));
}

std::optional<JordanInducedData> match_to_jordan(const PointMap& m, const std::vector<PointId>& component,
                                                 const GeneratedGroup& e2, const std::vector<std::int64_t>& witnesses) {
    if (component.empty() || !std::all_of(component.begin(), component.end(), [&](PointId p) { return m.defined(p); })) {
        return std::nullopt;
    }
    const ProjectiveLine& src = *m.source;
    const ProjectiveLine& tgt = *m.target;
    const FiniteRing& r = src.ring();
    const FiniteRing& t = tgt.ring();

    const PointId p0 = component.front();
    const Row a0 = src.rep(p0);
    const Row a1 = src.completion(p0);
    const Mat2 b = Mat2::from_rows(a0, a1);
    const std::array<std::optional<PointId>, 3> ps{src.find(a1), src.find(row_add(r, a0, a1)),
                                                   src.find(row_add(r, a0, row_scale(r, r.minus_one(), a1)))};
    for (const auto& p : ps) {
        if (!p || !m.defined(*p)) {
            return std::nullopt;
        }
    }
    const PointId q0 = m(p0);
    const PointId q1 = m(*ps[0]);
    const PointId q2 = m(*ps[1]);
    const PointId q3 = m(*ps[2]);

    std::optional<Mat2> b_target;
    for (Elem u : t.units()) {
        for (Elem v : t.units()) {
            const Row c0 = row_scale(t, u, tgt.rep(q0));
            const Row c1 = row_scale(t, v, tgt.rep(q1));
            if (tgt.find(row_add(t, c0, c1)) == q2 && tgt.find(row_add(t, c0, row_scale(t, t.minus_one(), c1))) == q3 &&
                is_invertible(t, Mat2::from_rows(c0, c1))) {
                b_target = Mat2::from_rows(c0, c1);
                break;
            }
        }
        if (b_target) {
            break;
        }
    }
    if (!b_target) {
        return std::nullopt;
    }
    const Mat2 bt_inv = *inverse(t, *b_target);

    RingMap alpha{m.source->ring_ptr(), m.target->ring_ptr(), std::vector<Elem>(r.size())};
    for (std::size_t x = 0; x < r.size(); ++x) {
        const PointId s = src.point_of(row_mul(r, Row{Elem(x), kOne}, b));
        if (!m.defined(s)) {
            return std::nullopt;
        }
        const Row y = row_mul(t, tgt.rep(m(s)), bt_inv);
        if (!t.is_unit(y[1])) {
            return std::nullopt;
        }
        alpha.image[x] = t.mul(t.inv(y[1]), y[0]);
    }
    auto jordan = JordanMap::verify(std::move(alpha));
    if (!jordan) {
        return std::nullopt;
    }
    JordanInducedData data{std::move(*jordan), b, *b_target, {}};
    const PointMap mu = mu_from_witnesses(m.source, m.target, e2, witnesses, data);
    if (mu.domain() != component) {
        return std::nullopt;
    }
    for (PointId p : component) {
        if (mu(p) != m(p)) {
            return std::nullopt;
        }
    }
    data.component = component;
    return data;
}

LemmaReport check_lemmas(const PointMap& m, const JordanInducedData& data) {
    const ProjectiveLine& src = *m.source;
    const ProjectiveLine& tgt = *m.target;
    const FiniteRing& r = src.ring();
    const FiniteRing& t = tgt.ring();
    LemmaReport rep;
    rep.two_unit_target = t.is_unit(t.two());
    rep.additive_unital = is_additive_unital(data.alpha.map());
    rep.inverse_compatible = preserves_inverses(data.alpha.map());
    rep.base_change_stable = true;
    for (std::size_t s = 0; s < r.size() && rep.base_change_stable; ++s) {
        const Mat2 f = mat_mul(r, elementary(r, Elem(s)), data.source_basis);
        const Mat2 g = mat_mul(t, elementary(t, data.alpha(Elem(s))), data.target_basis);
        for (std::size_t x = 0; x < r.size(); ++x) {
            const PointId p = src.point_of(row_mul(r, Row{Elem(x), kOne}, f));
            const auto q = tgt.find(row_mul(t, Row{data.alpha(Elem(x)), kOne}, g));
            if (!m.defined(p) || !q || m(p) != *q) {
                rep.base_change_stable = false;
                break;
            }
        }
    }
    return rep;
}

bool has_commutative_image(const RingMap& alpha) {
    const FiniteRing& t = *alpha.target;
    for (Elem x : alpha.image) {
        for (Elem y : alpha.image) {
            if (t.mul(x, y) != t.mul(y, x)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace staudt
