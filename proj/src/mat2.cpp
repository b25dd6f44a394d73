#include "staudt/mat2.hpp"

#include <stdexcept>

#include "staudt/errors.hpp"

namespace staudt {

std::uint64_t mat_key(const FiniteRing& r, const Mat2& x) {
    const std::uint64_t n = r.size();
    return x.a + n * (x.b + n * (x.c + n * std::uint64_t{x.d}));
}

Mat2 mat_from_key(const FiniteRing& r, std::uint64_t key) {
    const std::uint64_t n = r.size();
    Mat2 x;
    x.a = Elem(key % n);
    key /= n;
    x.b = Elem(key % n);
    key /= n;
    x.c = Elem(key % n);
    key /= n;
    x.d = Elem(key % n);
    return x;
}

Mat2 mat_mul(const FiniteRing& r, const Mat2& x, const Mat2& y) {
    return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
            r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

Row row_mul(const FiniteRing& r, const Row& v, const Mat2& x) {
    return {r.add(r.mul(v[0], x.a), r.mul(v[1], x.c)), r.add(r.mul(v[0], x.b), r.mul(v[1], x.d))};
}

Row row_add(const FiniteRing& r, const Row& v, const Row& w) {
    return {r.add(v[0], w[0]), r.add(v[1], w[1])};
}

Row row_scale(const FiniteRing& r, Elem u, const Row& v) {
    return {r.mul(u, v[0]), r.mul(u, v[1])};
}

Mat2 transpose(const Mat2& x) {
    return {x.a, x.c, x.b, x.d};
}

Mat2 elementary(const FiniteRing& r, Elem t) {
    return {t, kOne, r.minus_one(), kZero};
}

Mat2 eval_word(const FiniteRing& r, const Word& w) {
    Mat2 acc = Mat2::identity();
    for (Elem t : w) {
        acc = mat_mul(r, acc, elementary(r, t));
    }
    return acc;
}

std::optional<Mat2> inverse(const FiniteRing& r, const Mat2& x) {
    const std::size_t n = r.size();
    std::optional<Row> pre_e0, pre_e1;
    for (std::size_t r0 = 0; r0 < n; ++r0) {
        // Precompute r0 * (a, b) once per outer iteration.
        const Elem ua = r.mul(Elem(r0), x.a);
        const Elem ub = r.mul(Elem(r0), x.b);
        for (std::size_t r1 = 0; r1 < n; ++r1) {
            const Elem v0 = r.add(ua, r.mul(Elem(r1), x.c));
            const Elem v1 = r.add(ub, r.mul(Elem(r1), x.d));
            if (v0 == kZero && v1 == kZero && (r0 != 0 || r1 != 0)) {
                return std::nullopt;
            }
            if (v0 == kOne && v1 == kZero) {
                pre_e0 = Row{Elem(r0), Elem(r1)};
            } else if (v0 == kZero && v1 == kOne) {
                pre_e1 = Row{Elem(r0), Elem(r1)};
            }
        }
    }
    if (!pre_e0 || !pre_e1) {
        return std::nullopt;  // unreachable for an injective map on a finite set
    }
    const Mat2 y = Mat2::from_rows(*pre_e0, *pre_e1);
    if (mat_mul(r, x, y) != Mat2::identity()) {
        throw FalsificationError("left inverse is not a right inverse over " + r.label());
    }
    return y;
}

bool is_invertible(const FiniteRing& r, const Mat2& x) {
    return inverse(r, x).has_value();
}

Mat2 alpha_star(const RingMap& alpha, const Mat2& x) {
    return {alpha(x.a), alpha(x.b), alpha(x.c), alpha(x.d)};
}

Mat2 alpha_double_star(const RingMap& alpha, const Mat2& x) {
    const auto xi = inverse(*alpha.source, x);
    if (!xi) {
        throw std::invalid_argument("alpha_double_star: matrix is not invertible");
    }
    const FiniteRing& t = *alpha.target;
    const Mat2 e0 = elementary(t, kZero);
    const Mat2 e0_inv = {kZero, t.minus_one(), kOne, kZero};
    return mat_mul(t, mat_mul(t, e0_inv, alpha_star(alpha, transpose(*xi))), e0);
}

Elem det_commuting(const FiniteRing& r, const Mat2& x) {
    return r.sub(r.mul(x.a, x.d), r.mul(x.b, x.c));
}

Mat2 scalar_mul(const FiniteRing& r, Elem s, const Mat2& x) {
    return {r.mul(s, x.a), r.mul(s, x.b), r.mul(s, x.c), r.mul(s, x.d)};
}

GlrStarReport verify_glrstar_factorization(const FiniteRing& r) {
    GlrStarReport rep;
    const Mat2 upper = {kOne, kOne, kZero, kOne};
    for (std::size_t xi = 0; xi < r.size(); ++xi) {
        for (std::size_t yi = 0; yi < r.size(); ++yi) {
            const Elem x = Elem(xi);
            const Elem y = Elem(yi);
            const Mat2 m = {x, kOne, y, kOne};
            const bool inv = is_invertible(r, m);
            const bool unit = r.is_unit(r.sub(x, y));
            ++rep.pairs_checked;
            rep.invertible += inv ? 1 : 0;
            bool failed = false;
            if (inv != unit) {
                ++rep.equivalence_failures;
                failed = true;
            }
            if (unit) {
                const Mat2 diag = {r.sub(x, y), kZero, kZero, kOne};
                const Mat2 lower = {kOne, kZero, y, kOne};
                if (mat_mul(r, mat_mul(r, upper, diag), lower) != m) {
                    ++rep.factorization_failures;
                    failed = true;
                }
            }
            if (failed && !rep.first_failure) {
                rep.first_failure = Row{x, y};
            }
        }
    }
    return rep;
}

}  // namespace staudt
