#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "staudt/maps.hpp"
#include "staudt/ring.hpp"

namespace staudt {

/// Row vector (x0, x1) in R^2.
using Row = std::array<Elem, 2>;

/// 2x2 matrix [[a, b], [c, d]] over some FiniteRing. The ring is passed to
/// every operation; a Mat2 is only meaningful together with it.
struct Mat2 {
    Elem a = kOne, b = kZero, c = kZero, d = kOne;

    static constexpr Mat2 identity() { return {}; }
    static constexpr Mat2 from_rows(Row r0, Row r1) { return {r0[0], r0[1], r1[0], r1[1]}; }
    constexpr Row row0() const { return {a, b}; }
    constexpr Row row1() const { return {c, d}; }

    friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// A word (t1, ..., tn) in Seq(R), n >= 0.
using Word = std::vector<Elem>;

/// Dense integer key, base |R| digits a, b, c, d.
std::uint64_t mat_key(const FiniteRing& r, const Mat2& x);
Mat2 mat_from_key(const FiniteRing& r, std::uint64_t key);

/// Row-by-column product, left factors on the left.
Mat2 mat_mul(const FiniteRing& r, const Mat2& x, const Mat2& y);
Row row_mul(const FiniteRing& r, const Row& v, const Mat2& x);
Row row_add(const FiniteRing& r, const Row& v, const Row& w);
/// u * v, left scalar multiplication.
Row row_scale(const FiniteRing& r, Elem u, const Row& v);
Mat2 transpose(const Mat2& x);

/// The elementary generator E(t) = [[t, 1], [-1, 0]].
Mat2 elementary(const FiniteRing& r, Elem t);
/// E(t1) * ... * E(tn); the empty word gives the identity.
Mat2 eval_word(const FiniteRing& r, const Word& w);

/// Two-sided inverse, if X is invertible.
///
/// Decided by the left row action v -> v * X on R^2: it is additive, so it is
/// bijective iff its kernel is trivial. The rows of the inverse are the
/// preimages of (1, 0) and (0, 1). No determinant is involved, so this is
/// sound over noncommutative rings.
std::optional<Mat2> inverse(const FiniteRing& r, const Mat2& x);
bool is_invertible(const FiniteRing& r, const Mat2& x);

/// alpha applied entrywise.
Mat2 alpha_star(const RingMap& alpha, const Mat2& x);
/// E(0)^-1 * ((X^-1)^T)^alpha * E(0). Throws std::invalid_argument if X is singular.
Mat2 alpha_double_star(const RingMap& alpha, const Mat2& x);

/// ad - bc. Only meaningful when the four entries commute pairwise.
Elem det_commuting(const FiniteRing& r, const Mat2& x);
/// s * X entrywise from the left.
Mat2 scalar_mul(const FiniteRing& r, Elem s, const Mat2& x);

/// Exhaustive check over all (x, y) that [[x, 1], [y, 1]] is invertible iff
/// x - y is a unit, and that it factors as
/// [[1, 1], [0, 1]] * diag(x - y, 1) * [[1, 0], [y, 1]].
struct GlrStarReport {
    std::size_t pairs_checked = 0;
    std::size_t invertible = 0;
    std::size_t equivalence_failures = 0;
    std::size_t factorization_failures = 0;
    std::optional<Row> first_failure;

    bool ok() const { return equivalence_failures == 0 && factorization_failures == 0; }
};

GlrStarReport verify_glrstar_factorization(const FiniteRing& r);

}  // namespace staudt
