#include "staudt/ring.hpp"

#include <stdexcept>

namespace staudt {

FiniteRing FiniteRing::from_tables(std::string label, std::size_t size, std::vector<Elem> add,
                                   std::vector<Elem> mul, std::vector<std::string> names) {
    if (size < 2) {
        throw std::invalid_argument("ring must have at least two elements (1 != 0)");
    }
    if (add.size() != size * size || mul.size() != size * size) {
        throw std::invalid_argument("table size does not match ring size");
    }
    FiniteRing r;
    r.label_ = std::move(label);
    r.size_ = size;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    if (names.empty()) {
        for (std::size_t a = 0; a < size; ++a) {
            names.push_back(std::to_string(a));
        }
    } else if (names.size() != size) {
        throw std::invalid_argument("name table size does not match ring size");
    }
    r.names_ = std::move(names);

    for (std::size_t a = 0; a < size; ++a) {
        if (r.add_[a] != a || r.add_[a * size] != a) {
            throw std::invalid_argument("element 0 is not an additive identity");
        }
    }

    r.neg_.assign(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < size && !found; ++b) {
            if (r.add_[a * size + b] == kZero) {
                r.neg_[a] = static_cast<Elem>(b);
                found = true;
            }
        }
        if (!found) {
            throw std::invalid_argument("element without additive inverse");
        }
    }

    r.inv_.assign(size, kNoInverse);
    for (std::size_t u = 0; u < size; ++u) {
        for (std::size_t v = 0; v < size; ++v) {
            if (r.mul_[u * size + v] == kOne && r.mul_[v * size + u] == kOne) {
                r.inv_[u] = static_cast<std::int32_t>(v);
                break;
            }
        }
        (r.inv_[u] == kNoInverse ? r.non_units_ : r.units_).push_back(static_cast<Elem>(u));
    }
    return r;
}

std::optional<Elem> FiniteRing::find(std::string_view name) const {
    for (std::size_t a = 0; a < size_; ++a) {
        if (names_[a] == name) {
            return static_cast<Elem>(a);
        }
    }
    return std::nullopt;
}

Elem FiniteRing::times(std::size_t k, Elem a) const noexcept {
    Elem acc = kZero;
    for (std::size_t i = 0; i < k; ++i) {
        acc = add(acc, a);
    }
    return acc;
}

std::size_t FiniteRing::additive_order(Elem a) const noexcept {
    std::size_t k = 1;
    for (Elem acc = a; acc != kZero; acc = add(acc, a)) {
        ++k;
    }
    return k;
}

bool FiniteRing::is_commutative() const noexcept {
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = a + 1; b < size_; ++b) {
            if (mul_[a * size_ + b] != mul_[b * size_ + a]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace staudt
