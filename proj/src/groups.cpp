#include "staudt/groups.hpp"

#include <algorithm>
#include <string>

#include "staudt/errors.hpp"

namespace staudt {

bool GeneratedGroup::contains(const FiniteRing& r, const Mat2& x) const {
    return index.count(mat_key(r, x)) != 0;
}

std::int64_t GeneratedGroup::find(const FiniteRing& r, const Mat2& x) const {
    const auto it = index.find(mat_key(r, x));
    return it == index.end() ? -1 : std::int64_t{it->second};
}

Word GeneratedGroup::witness(std::size_t i) const {
    Word w;
    while (i != 0) {
        w.push_back(letter[i]);
        i = parent[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

namespace {

GeneratedGroup closure(const FiniteRing& r, const std::vector<Mat2>& gens, const std::vector<Elem>& letters,
                       std::string description, std::size_t cap) {
    GeneratedGroup g;
    g.description = std::move(description);
    g.ring_size = r.size();
    g.has_witnesses = !letters.empty();
    g.elements.push_back(Mat2::identity());
    g.parent.push_back(0);
    g.letter.push_back(kZero);
    g.index.emplace(mat_key(r, Mat2::identity()), 0);
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        const Mat2 x = g.elements[head];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const Mat2 y = mat_mul(r, x, gens[k]);
            const auto [it, inserted] = g.index.emplace(mat_key(r, y), static_cast<std::uint32_t>(g.elements.size()));
            if (!inserted) {
                continue;
            }
            if (g.elements.size() >= cap) {
                throw ResourceError(g.description + " exceeds group cap " + std::to_string(cap));
            }
            g.elements.push_back(y);
            g.parent.push_back(static_cast<std::uint32_t>(head));
            g.letter.push_back(g.has_witnesses ? letters[k] : kZero);
        }
    }
    if (!g.has_witnesses) {
        g.parent.clear();
        g.letter.clear();
    }
    return g;
}

}  // namespace

GeneratedGroup generate_E2(const FiniteRing& r, std::size_t cap) {
    std::vector<Mat2> gens;
    std::vector<Elem> letters;
    for (std::size_t t = 0; t < r.size(); ++t) {
        gens.push_back(elementary(r, Elem(t)));
        letters.push_back(Elem(t));
    }
    return closure(r, gens, letters, "E2(" + r.label() + ")", cap);
}

GeneratedGroup generate_GE2(const FiniteRing& r, std::size_t cap) {
    std::vector<Mat2> gens;
    for (std::size_t t = 0; t < r.size(); ++t) {
        gens.push_back(elementary(r, Elem(t)));
    }
    for (Elem u : r.units()) {
        gens.push_back({u, kZero, kZero, kOne});
        gens.push_back({kOne, kZero, kZero, u});
    }
    return closure(r, gens, {}, "GE2(" + r.label() + ")", cap);
}

std::vector<Mat2> enumerate_GL2(const FiniteRing& r, std::size_t ring_cap) {
    if (r.size() > ring_cap) {
        throw ResourceError("GL2 enumeration over " + r.label() + " (|R| = " + std::to_string(r.size()) +
                            ") exceeds gl2 cap " + std::to_string(ring_cap));
    }
    std::vector<Mat2> out;
    const std::uint64_t n = r.size();
    const std::uint64_t total = n * n * n * n;
    for (std::uint64_t key = 0; key < total; ++key) {
        const Mat2 x = mat_from_key(r, key);
        if (is_invertible(r, x)) {
            out.push_back(x);
        }
    }
    return out;
}

bool is_GE2_ring(const FiniteRing& r, std::size_t ring_cap, std::size_t group_cap) {
    const auto gl2 = enumerate_GL2(r, ring_cap);
    const auto ge2 = generate_GE2(r, group_cap);
    if (ge2.size() != gl2.size()) {
        return false;
    }
    for (const Mat2& x : gl2) {
        if (!ge2.contains(r, x)) {
            return false;
        }
    }
    return true;
}

}  // namespace staudt
