#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "staudt/ring.hpp"

namespace staudt {

/// A map between two finite rings given by its full image table.
struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Elem> image;

    Elem operator()(Elem x) const { return image[x]; }
    friend bool operator==(const RingMap& a, const RingMap& b) { return a.image == b.image; }

    static RingMap identity(const RingPtr& ring);
};

/// image[0] = 0, image[1] = 1 and image[a + b] = image[a] + image[b].
bool is_additive_unital(const RingMap& m);
/// Additive, unital and multiplicative.
bool is_ring_homomorphism(const RingMap& m);
/// Additive, unital and (ab)^m = b^m a^m.
bool is_antihomomorphism(const RingMap& m);
/// Additive, unital and (xyx)^m = x^m y^m x^m.
bool is_jordan(const RingMap& m);
/// (xy + yx)^m = x^m y^m + y^m x^m for all x, y.
bool preserves_jordan_product(const RingMap& m);
/// Every unit x maps to a unit and (x^m)^-1 = (x^-1)^m.
bool preserves_inverses(const RingMap& m);

/// A RingMap known to be a Jordan homomorphism. Construct via `verify` or
/// enumerate_jordan_homomorphisms.
class JordanMap {
public:
    static std::optional<JordanMap> verify(RingMap m);

    const RingMap& map() const noexcept { return map_; }
    const RingPtr& source() const noexcept { return map_.source; }
    const RingPtr& target() const noexcept { return map_.target; }
    Elem operator()(Elem x) const { return map_.image[x]; }
    friend bool operator==(const JordanMap& a, const JordanMap& b) { return a.map_ == b.map_; }

private:
    explicit JordanMap(RingMap m) : map_(std::move(m)) {}
    RingMap map_;
};

/// Decomposition of the additive group as a direct sum of cyclic groups,
/// each element written uniquely as sum_i coords[x][i] * generators[i].
struct AdditiveBasis {
    std::vector<Elem> generators;
    std::vector<std::size_t> orders;
    std::vector<std::vector<std::size_t>> coords;
};

/// Greedy brute-force decomposition: repeatedly adjoin an element whose order
/// equals its order modulo the span so far, choosing one of maximal order
/// (and preferring 1 when it qualifies, which it always does first since the
/// characteristic is the exponent).
AdditiveBasis additive_basis(const FiniteRing& ring);

struct JordanEnumOptions {
    std::size_t max_generators = 4;
    std::size_t max_target_size = 128;
    /// Filter on (xy + yx) instead of (xyx). Both give the same list when 2
    /// is a unit in both rings.
    bool use_jordan_product = false;
};

/// All additive unital maps source -> target that pass the Jordan filter,
/// sorted by image table. Throws ResourceError when the caps are exceeded.
std::vector<JordanMap> enumerate_jordan_homomorphisms(const RingPtr& source, const RingPtr& target,
                                                      const JordanEnumOptions& options = {});

/// Same enumeration with the filter given by `use_jordan_product`, returning
/// raw maps (the product filter does not certify the Jordan axiom).
std::vector<RingMap> enumerate_filtered_maps(const RingPtr& source, const RingPtr& target,
                                             const JordanEnumOptions& options);

}  // namespace staudt
