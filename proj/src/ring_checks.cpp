#include "staudt/ring_checks.hpp"

namespace staudt {

bool AxiomReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

template <class Pred>
AxiomCheck check_all3(const std::string& name, std::size_t n, Pred pred) {
    AxiomCheck c{name, true, {}};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t d = 0; d < n; ++d) {
                if (!pred(Elem(a), Elem(b), Elem(d))) {
                    c.passed = false;
                    c.witness = {Elem(a), Elem(b), Elem(d)};
                    return c;
                }
            }
        }
    }
    return c;
}

template <class Pred>
AxiomCheck check_all2(const std::string& name, std::size_t n, Pred pred) {
    AxiomCheck c{name, true, {}};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!pred(Elem(a), Elem(b))) {
                c.passed = false;
                c.witness = {Elem(a), Elem(b)};
                return c;
            }
        }
    }
    return c;
}

template <class Pred>
AxiomCheck check_all1(const std::string& name, std::size_t n, Pred pred) {
    AxiomCheck c{name, true, {}};
    for (std::size_t a = 0; a < n; ++a) {
        if (!pred(Elem(a))) {
            c.passed = false;
            c.witness = {Elem(a)};
            return c;
        }
    }
    return c;
}

}  // namespace

AxiomReport check_ring_axioms(const FiniteRing& r) {
    const std::size_t n = r.size();
    AxiomReport rep;
    auto& out = rep.checks;

    out.push_back({"one_ne_zero", n >= 2, {}});
    out.push_back(check_all1("add_identity", n, [&](Elem a) { return r.add(a, kZero) == a && r.add(kZero, a) == a; }));
    out.push_back(check_all1("add_inverse", n, [&](Elem a) { return r.add(a, r.neg(a)) == kZero; }));
    out.push_back(check_all2("add_commutative", n, [&](Elem a, Elem b) { return r.add(a, b) == r.add(b, a); }));
    out.push_back(check_all3("add_associative", n,
                             [&](Elem a, Elem b, Elem c) { return r.add(r.add(a, b), c) == r.add(a, r.add(b, c)); }));
    out.push_back(check_all1("mul_identity", n, [&](Elem a) { return r.mul(a, kOne) == a && r.mul(kOne, a) == a; }));
    out.push_back(check_all3("mul_associative", n,
                             [&](Elem a, Elem b, Elem c) { return r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)); }));
    out.push_back(check_all3("left_distributive", n, [&](Elem a, Elem b, Elem c) {
        return r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c));
    }));
    out.push_back(check_all3("right_distributive", n, [&](Elem a, Elem b, Elem c) {
        return r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
    }));

    // u is listed as a unit iff some v has uv = vu = 1, and then inv(u) is such a v.
    out.push_back(check_all1("unit_table", n, [&](Elem u) {
        bool exists = false;
        for (std::size_t v = 0; v < n && !exists; ++v) {
            exists = r.mul(u, Elem(v)) == kOne && r.mul(Elem(v), u) == kOne;
        }
        if (exists != r.is_unit(u)) {
            return false;
        }
        return !exists || (r.mul(u, r.inv(u)) == kOne && r.mul(r.inv(u), u) == kOne);
    }));
    out.push_back({"one_is_unit", r.is_unit(kOne), {}});
    {
        AxiomCheck c{"units_closed", true, {}};
        for (Elem u : r.units()) {
            if (!r.is_unit(r.inv(u)) || r.inv(r.inv(u)) != u) {
                c = {"units_closed", false, {u}};
                break;
            }
            for (Elem v : r.units()) {
                if (!r.is_unit(r.mul(u, v))) {
                    c = {"units_closed", false, {u, v}};
                    break;
                }
            }
            if (!c.passed) {
                break;
            }
        }
        out.push_back(c);
    }

    for (std::size_t a = 0; a < n && !rep.noncommuting; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (r.mul(Elem(a), Elem(b)) != r.mul(Elem(b), Elem(a))) {
                rep.noncommuting = std::make_pair(Elem(a), Elem(b));
                break;
            }
        }
    }
    return rep;
}

FiveUnitsResult check_condition_five_units(const FiniteRing& r, const CoverSearchOptions& options) {
    const std::size_t n = r.size();
    Bits universe(n);
    universe.set();
    // translates[x] = x + N: the candidates x' with x' - x a non-unit
    std::vector<Bits> translates(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (Elem z : r.non_units()) {
            translates[x].set(r.add(Elem(x), z));
        }
    }
    const auto cover = find_cover(universe, translates, 5, std::size_t{0}, options);
    FiveUnitsResult res;
    res.nodes = cover.nodes;
    if (cover.found) {
        res.verdict = Verdict::Fails;
        for (std::size_t j : cover.cover) {
            res.witness.push_back(Elem(j));
        }
    } else {
        res.verdict = cover.complete ? Verdict::Holds : Verdict::Unresolved;
    }
    return res;
}

bool check_two_unit(const FiniteRing& r) {
    return r.is_unit(r.two());
}

}  // namespace staudt
