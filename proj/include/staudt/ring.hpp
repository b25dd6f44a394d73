#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace staudt {

/// Index of an element inside a specific FiniteRing. 0 is zero, 1 is one.
using Elem = std::uint16_t;

inline constexpr Elem kZero = 0;
inline constexpr Elem kOne = 1;

/// Table-driven finite ring with identity.
///
/// Immutable after construction. Addition, multiplication and negation are
/// dense lookups; the unit set and inverse table are found by brute-force
/// two-sided search when the ring is built.
class FiniteRing {
public:
    /// Builds a ring from dense add/mul tables (row-major, size*size).
    /// Requires size >= 2, 0 to be an additive identity and every element to
    /// have a negative. Ring axioms are *not* checked here; see check_ring_axioms.
    /// `names` is optional; when empty, elements are named by their index.
    static FiniteRing from_tables(std::string label, std::size_t size, std::vector<Elem> add,
                                  std::vector<Elem> mul, std::vector<std::string> names = {});

    std::size_t size() const noexcept { return size_; }
    const std::string& label() const noexcept { return label_; }

    const std::string& name(Elem a) const noexcept { return names_[a]; }
    /// Element with the given display name, if any.
    std::optional<Elem> find(std::string_view name) const;

    Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    bool is_unit(Elem a) const noexcept { return inv_[a] != kNoInverse; }
    /// Inverse of a unit. Precondition: is_unit(a).
    Elem inv(Elem a) const noexcept { return static_cast<Elem>(inv_[a]); }

    /// Units in increasing index order; always starts with 1.
    const std::vector<Elem>& units() const noexcept { return units_; }
    /// Non-units in increasing index order; always starts with 0.
    const std::vector<Elem>& non_units() const noexcept { return non_units_; }

    Elem two() const noexcept { return add(kOne, kOne); }
    Elem minus_one() const noexcept { return neg(kOne); }

    /// k-fold sum a + ... + a (k >= 0).
    Elem times(std::size_t k, Elem a) const noexcept;
    /// Additive order of a.
    std::size_t additive_order(Elem a) const noexcept;
    bool is_commutative() const noexcept;

    const std::vector<Elem>& add_table() const noexcept { return add_; }
    const std::vector<Elem>& mul_table() const noexcept { return mul_; }

private:
    static constexpr std::int32_t kNoInverse = -1;

    std::size_t idx(Elem a, Elem b) const noexcept { return std::size_t{a} * size_ + b; }

    std::string label_;
    std::size_t size_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<std::int32_t> inv_;
    std::vector<Elem> units_;
    std::vector<Elem> non_units_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace staudt
