#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "staudt/mat2.hpp"

namespace staudt {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;
inline constexpr std::size_t kDefaultGl2RingCap = 16;

/// A finite matrix group found by breadth-first closure from the identity
/// under right multiplication by a generator list.
///
/// For E2 every element carries a witness word: the lexicographically least
/// among the shortest words T with E(T) equal to it. Generators are tried in
/// increasing parameter order and the queue is FIFO, which yields exactly
/// that word.
struct GeneratedGroup {
    std::string description;
    std::size_t ring_size = 0;
    /// Elements in BFS order; element 0 is the identity.
    std::vector<Mat2> elements;
    bool has_witnesses = false;
    /// For E2: parent[i] is the BFS predecessor, letter[i] the last word letter.
    std::vector<std::uint32_t> parent;
    std::vector<Elem> letter;

    std::size_t size() const { return elements.size(); }
    bool contains(const FiniteRing& r, const Mat2& x) const;
    /// Position of x in `elements`, or -1.
    std::int64_t find(const FiniteRing& r, const Mat2& x) const;
    /// Witness word of element i (E2 only).
    Word witness(std::size_t i) const;

    std::unordered_map<std::uint64_t, std::uint32_t> index;
};

/// E2(R) = <E(t) : t in R> with shortest lexicographically least witnesses.
/// Throws ResourceError when the group exceeds `cap` elements.
GeneratedGroup generate_E2(const FiniteRing& r, std::size_t cap = kDefaultGroupCap);

/// GE2(R) = <E2(R), invertible diagonal matrices>.
GeneratedGroup generate_GE2(const FiniteRing& r, std::size_t cap = kDefaultGroupCap);

/// GL2(R) by brute force over all |R|^4 matrices, sorted by key. Throws
/// ResourceError when |R| > ring_cap.
std::vector<Mat2> enumerate_GL2(const FiniteRing& r, std::size_t ring_cap = kDefaultGl2RingCap);

/// GL2(R) == GE2(R), both computed independently.
bool is_GE2_ring(const FiniteRing& r, std::size_t ring_cap = kDefaultGl2RingCap,
                 std::size_t group_cap = kDefaultGroupCap);

}  // namespace staudt
