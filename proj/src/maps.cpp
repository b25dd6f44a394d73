#include "staudt/maps.hpp"

#include <algorithm>
#include <string>

#include "staudt/errors.hpp"

namespace staudt {

RingMap RingMap::identity(const RingPtr& ring) {
    RingMap m{ring, ring, std::vector<Elem>(ring->size())};
    for (std::size_t x = 0; x < ring->size(); ++x) {
        m.image[x] = Elem(x);
    }
    return m;
}

bool is_additive_unital(const RingMap& m) {
    const FiniteRing& s = *m.source;
    const FiniteRing& t = *m.target;
    if (m.image.size() != s.size() || m(kZero) != kZero || m(kOne) != kOne) {
        return false;
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (m.image[a] >= t.size()) {
            return false;
        }
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (m(s.add(Elem(a), Elem(b))) != t.add(m(Elem(a)), m(Elem(b)))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

template <class Pred>
bool for_all_pairs(const FiniteRing& s, Pred pred) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (!pred(Elem(a), Elem(b))) {
                return false;
            }
        }
    }
    return true;
}

bool triple_ok(const RingMap& m) {
    const FiniteRing& s = *m.source;
    const FiniteRing& t = *m.target;
    return for_all_pairs(s, [&](Elem x, Elem y) {
        const Elem lhs = m(s.mul(s.mul(x, y), x));
        return lhs == t.mul(t.mul(m(x), m(y)), m(x));
    });
}

}  // namespace

bool is_ring_homomorphism(const RingMap& m) {
    const FiniteRing& s = *m.source;
    const FiniteRing& t = *m.target;
    return is_additive_unital(m) &&
           for_all_pairs(s, [&](Elem a, Elem b) { return m(s.mul(a, b)) == t.mul(m(a), m(b)); });
}

bool is_antihomomorphism(const RingMap& m) {
    const FiniteRing& s = *m.source;
    const FiniteRing& t = *m.target;
    return is_additive_unital(m) &&
           for_all_pairs(s, [&](Elem a, Elem b) { return m(s.mul(a, b)) == t.mul(m(b), m(a)); });
}

bool is_jordan(const RingMap& m) {
    return is_additive_unital(m) && triple_ok(m);
}

bool preserves_jordan_product(const RingMap& m) {
    const FiniteRing& s = *m.source;
    const FiniteRing& t = *m.target;
    return for_all_pairs(s, [&](Elem x, Elem y) {
        return m(s.add(s.mul(x, y), s.mul(y, x))) == t.add(t.mul(m(x), m(y)), t.mul(m(y), m(x)));
    });
}

bool preserves_inverses(const RingMap& m) {
    const FiniteRing& s = *m.source;
    const FiniteRing& t = *m.target;
    for (Elem x : s.units()) {
        const Elem y = m(x);
        if (!t.is_unit(y) || t.inv(y) != m(s.inv(x))) {
            return false;
        }
    }
    return true;
}

std::optional<JordanMap> JordanMap::verify(RingMap m) {
    if (!m.source || !m.target || !is_jordan(m)) {
        return std::nullopt;
    }
    return JordanMap(std::move(m));
}

AdditiveBasis additive_basis(const FiniteRing& r) {
    const std::size_t n = r.size();
    AdditiveBasis basis;
    // span[x] = true when x lies in the subgroup generated so far
    std::vector<char> span(n, 0);
    span[kZero] = 1;
    std::size_t span_size = 1;
    // coordinates of the span elements w.r.t. the generators chosen so far
    std::vector<std::vector<std::size_t>> coords(n);
    coords[kZero] = {};

    while (span_size < n) {
        Elem best = kZero;
        std::size_t best_order = 0;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (span[cand]) {
                continue;
            }
            const Elem x = Elem(cand);
            // order of x modulo the span
            std::size_t coset_order = 1;
            for (Elem acc = x; !span[acc]; acc = r.add(acc, x)) {
                ++coset_order;
            }
            if (coset_order == r.additive_order(x) && coset_order > best_order) {
                best = x;
                best_order = coset_order;
            }
        }
        if (best_order == 0) {
            // Cannot happen for a finite abelian group; kept as a hard stop.
            throw FalsificationError("additive group decomposition failed for " + r.label());
        }
        // New span = old span (+) <best>, direct because the coset order matches.
        std::vector<std::size_t> old_members;
        for (std::size_t x = 0; x < n; ++x) {
            if (span[x]) {
                old_members.push_back(x);
            }
        }
        for (std::size_t x : old_members) {
            const auto base = coords[x];
            Elem acc = Elem(x);
            for (std::size_t k = 0; k < best_order; ++k) {
                if (k > 0) {
                    acc = r.add(acc, best);
                    span[acc] = 1;
                    ++span_size;
                }
                auto c = base;
                c.push_back(k);
                coords[acc] = std::move(c);
            }
        }
        basis.generators.push_back(best);
        basis.orders.push_back(best_order);
    }
    // Pad coordinates of elements listed before later generators were added.
    for (auto& c : coords) {
        c.resize(basis.generators.size(), 0);
    }
    basis.coords = std::move(coords);
    return basis;
}

std::vector<RingMap> enumerate_filtered_maps(const RingPtr& source, const RingPtr& target,
                                             const JordanEnumOptions& options) {
    const FiniteRing& s = *source;
    const FiniteRing& t = *target;
    if (t.size() > options.max_target_size) {
        throw ResourceError("Jordan enumeration: target size " + std::to_string(t.size()) + " exceeds cap " +
                            std::to_string(options.max_target_size));
    }
    const AdditiveBasis basis = additive_basis(s);
    const std::size_t g = basis.generators.size();
    if (g > options.max_generators) {
        throw ResourceError("Jordan enumeration: source needs " + std::to_string(g) + " additive generators, cap is " +
                            std::to_string(options.max_generators));
    }

    // Candidate images of generator i: target elements killed by orders[i].
    std::vector<std::vector<Elem>> candidates(g);
    for (std::size_t i = 0; i < g; ++i) {
        if (basis.generators[i] == kOne) {
            candidates[i] = {kOne};
            continue;
        }
        for (std::size_t y = 0; y < t.size(); ++y) {
            if (t.times(basis.orders[i], Elem(y)) == kZero) {
                candidates[i].push_back(Elem(y));
            }
        }
    }
    // 1 must also be killed by the order of 1 in the target.
    if (t.times(s.additive_order(kOne), kOne) != kZero) {
        return {};
    }

    // multiples[i][y][k] = k * candidates[i][y]
    std::vector<std::vector<std::vector<Elem>>> multiples(g);
    for (std::size_t i = 0; i < g; ++i) {
        for (Elem y : candidates[i]) {
            std::vector<Elem> row(basis.orders[i]);
            for (std::size_t k = 0; k < basis.orders[i]; ++k) {
                row[k] = t.times(k, y);
            }
            multiples[i].push_back(std::move(row));
        }
    }

    std::vector<RingMap> out;
    std::vector<std::size_t> choice(g, 0);
    RingMap m{source, target, std::vector<Elem>(s.size())};
    while (true) {
        for (std::size_t x = 0; x < s.size(); ++x) {
            Elem acc = kZero;
            for (std::size_t i = 0; i < g; ++i) {
                acc = t.add(acc, multiples[i][choice[i]][basis.coords[x][i]]);
            }
            m.image[x] = acc;
        }
        if (m(kOne) == kOne) {
            const bool keep = options.use_jordan_product ? preserves_jordan_product(m) : triple_ok(m);
            if (keep) {
                out.push_back(m);
            }
        }
        std::size_t i = 0;
        while (i < g && ++choice[i] == candidates[i].size()) {
            choice[i] = 0;
            ++i;
        }
        if (i == g) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const RingMap& a, const RingMap& b) { return a.image < b.image; });
    return out;
}

std::vector<JordanMap> enumerate_jordan_homomorphisms(const RingPtr& source, const RingPtr& target,
                                                      const JordanEnumOptions& options) {
    JordanEnumOptions o = options;
    o.use_jordan_product = false;
    std::vector<JordanMap> out;
    for (auto& m : enumerate_filtered_maps(source, target, o)) {
        auto j = JordanMap::verify(std::move(m));
        if (!j) {
            throw FalsificationError("enumerated map failed Jordan verification");
        }
        out.push_back(std::move(*j));
    }
    return out;
}

}  // namespace staudt
