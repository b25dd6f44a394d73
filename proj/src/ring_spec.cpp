#include "staudt/ring_spec.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <limits>

#include "staudt/errors.hpp"

namespace staudt {

bool operator==(const RingExpr& a, const RingExpr& b) {
    auto same_child = [](const std::shared_ptr<const RingExpr>& x, const std::shared_ptr<const RingExpr>& y) {
        if (!x || !y) {
            return !x && !y;
        }
        return *x == *y;
    };
    return a.kind == b.kind && a.modulus == b.modulus && a.prime == b.prime && a.degree == b.degree &&
           a.poly == b.poly && same_child(a.left, b.left) && same_child(a.right, b.right);
}

bool is_prime(unsigned n) {
    if (n < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

unsigned inverse_mod(unsigned a, unsigned p) {
    for (unsigned b = 1; b < p; ++b) {
        if (a * b % p == 1) {
            return b;
        }
    }
    return 0;
}

// Remainder of `num` modulo monic `den`, coefficients mod p, constant term first.
std::vector<unsigned> poly_mod(std::vector<unsigned> num, const std::vector<unsigned>& den, unsigned p) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t d = num.size(); d-- > dd;) {
        const unsigned c = num[d] % p;
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= dd; ++i) {
            num[d - dd + i] = (num[d - dd + i] + (p - c) * den[i]) % p;
        }
    }
    num.resize(dd);
    return num;
}

std::vector<unsigned> make_monic(std::vector<unsigned> poly, unsigned p) {
    const unsigned li = inverse_mod(poly.back() % p, p);
    for (auto& c : poly) {
        c = c * li % p;
    }
    return poly;
}

}  // namespace

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
    if (poly.size() < 2 || poly.back() % p == 0) {
        return false;
    }
    const auto f = make_monic(poly, p);
    const std::size_t k = f.size() - 1;
    // Try every monic divisor of degree 1..k/2.
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<unsigned> g(d + 1, 0);
            std::size_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[d] = 1;
            const auto r = poly_mod(f, g, p);
            bool zero = true;
            for (unsigned x : r) {
                zero = zero && x == 0;
            }
            if (zero) {
                return false;
            }
        }
    }
    return true;
}

std::vector<unsigned> default_irreducible(unsigned p, unsigned k) {
    std::size_t count = 1;
    for (unsigned i = 0; i < k; ++i) {
        count *= p;
    }
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<unsigned> f(k + 1, 0);
        std::size_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) {
            return f;
        }
    }
    return {};  // unreachable: irreducible polynomials exist in every degree
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingExpr parse() {
        RingExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input '" + std::string(text_.substr(pos_, 1)) + "'", pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    // Matches `tok` character by character, allowing whitespace between them.
    bool accept(std::string_view tok) {
        const std::size_t save = pos_;
        for (char ch : tok) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ch) {
                pos_ = save;
                return false;
            }
            ++pos_;
        }
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) {
            skip_ws();
            throw ParseError("expected '" + std::string(tok) + "'", pos_);
        }
    }

    unsigned integer() {
        skip_ws();
        const std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (v > 1'000'000'000ULL) {
                throw ParseError("integer too large", start);
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected integer", start);
        }
        return static_cast<unsigned>(v);
    }

    RingExpr expr() {
        RingExpr lhs = atom();
        while (accept("x")) {
            RingExpr rhs = atom();
            RingExpr prod;
            prod.kind = RingExpr::Kind::Product;
            prod.left = std::make_shared<const RingExpr>(std::move(lhs));
            prod.right = std::make_shared<const RingExpr>(std::move(rhs));
            lhs = std::move(prod);
        }
        return lhs;
    }

    RingExpr wrapped(RingExpr::Kind kind) {
        RingExpr e;
        e.kind = kind;
        e.left = std::make_shared<const RingExpr>(expr());
        expect(")");
        return e;
    }

    RingExpr atom() {
        skip_ws();
        const std::size_t start = pos_;
        if (accept("Z/")) {
            RingExpr e;
            e.kind = RingExpr::Kind::Zmod;
            e.modulus = integer();
            if (e.modulus < 2) {
                throw SemanticError("Z/n requires n >= 2 (at position " + std::to_string(start) + ")");
            }
            return e;
        }
        if (accept("GF(")) {
            return galois_field(start);
        }
        if (accept("M2(")) {
            return wrapped(RingExpr::Kind::Mat2Ring);
        }
        if (accept("T2(")) {
            return wrapped(RingExpr::Kind::UpperTri2);
        }
        if (accept("DUAL(")) {
            return wrapped(RingExpr::Kind::Dual);
        }
        throw ParseError("expected ring constructor (Z/, GF(, M2(, T2(, DUAL()", start);
    }

    RingExpr galois_field(std::size_t start) {
        RingExpr e;
        e.kind = RingExpr::Kind::GF;
        e.prime = integer();
        expect(",");
        e.degree = integer();
        if (accept(",")) {
            expect("[");
            e.poly.push_back(integer());
            while (accept(",")) {
                e.poly.push_back(integer());
            }
            expect("]");
        }
        expect(")");

        const std::string where = " (at position " + std::to_string(start) + ")";
        if (!is_prime(e.prime)) {
            throw SemanticError("GF: " + std::to_string(e.prime) + " is not prime" + where);
        }
        if (e.degree < 1) {
            throw SemanticError("GF: degree must be >= 1" + where);
        }
        if (e.poly.empty()) {
            e.poly = default_irreducible(e.prime, e.degree);
        }
        if (e.poly.size() != e.degree + 1) {
            throw SemanticError("GF: polynomial degree does not equal " + std::to_string(e.degree) + where);
        }
        for (unsigned c : e.poly) {
            if (c >= e.prime) {
                throw SemanticError("GF: coefficient " + std::to_string(c) + " not reduced mod " +
                                    std::to_string(e.prime) + where);
            }
        }
        if (e.poly.back() == 0) {
            throw SemanticError("GF: leading coefficient is zero" + where);
        }
        if (!is_irreducible(e.poly, e.prime)) {
            throw SemanticError("GF: polynomial is reducible over GF(" + std::to_string(e.prime) + ")" + where);
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse_ring_spec(std::string_view text) {
    return Parser(text).parse();
}

std::string to_string(const RingExpr& e) {
    switch (e.kind) {
    case RingExpr::Kind::Zmod:
        return "Z/" + std::to_string(e.modulus);
    case RingExpr::Kind::GF: {
        std::string s = "GF(" + std::to_string(e.prime) + "," + std::to_string(e.degree) + ",[";
        for (std::size_t i = 0; i < e.poly.size(); ++i) {
            s += (i ? "," : "") + std::to_string(e.poly[i]);
        }
        return s + "])";
    }
    case RingExpr::Kind::Mat2Ring:
        return "M2(" + to_string(*e.left) + ")";
    case RingExpr::Kind::UpperTri2:
        return "T2(" + to_string(*e.left) + ")";
    case RingExpr::Kind::Dual:
        return "DUAL(" + to_string(*e.left) + ")";
    case RingExpr::Kind::Product:
        return to_string(*e.left) + "x" + to_string(*e.right);
    }
    return {};
}

std::size_t ring_size(const RingExpr& e) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    auto mul = [](std::size_t a, std::size_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
    auto power = [&](std::size_t base, unsigned k) {
        std::size_t r = 1;
        for (unsigned i = 0; i < k; ++i) {
            r = mul(r, base);
        }
        return r;
    };
    switch (e.kind) {
    case RingExpr::Kind::Zmod:
        return e.modulus;
    case RingExpr::Kind::GF:
        return power(e.prime, e.degree);
    case RingExpr::Kind::Mat2Ring:
        return power(ring_size(*e.left), 4);
    case RingExpr::Kind::UpperTri2:
        return power(ring_size(*e.left), 3);
    case RingExpr::Kind::Dual:
        return power(ring_size(*e.left), 2);
    case RingExpr::Kind::Product:
        return mul(ring_size(*e.left), ring_size(*e.right));
    }
    return kMax;
}

// ---------------------------------------------------------------------------
// Table construction
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxComponents = 4;
using Tuple = std::array<Elem, kMaxComponents>;

// Tabulates a ring whose elements are tuples over component rings. The tuple
// of all zeros gets index 0 and `one` is swapped into index 1.
FiniteRing tabulate(std::string label, const std::vector<const FiniteRing*>& comps, const Tuple& one,
                    const std::function<Tuple(const Tuple&, const Tuple&)>& add,
                    const std::function<Tuple(const Tuple&, const Tuple&)>& mul,
                    const std::function<std::string(const Tuple&)>& name) {
    const std::size_t m = comps.size();
    std::size_t size = 1;
    for (auto* c : comps) {
        size *= c->size();
    }
    auto encode_natural = [&](const Tuple& t) {
        std::size_t idx = 0;
        for (std::size_t i = m; i-- > 0;) {
            idx = idx * comps[i]->size() + t[i];
        }
        return idx;
    };
    const std::size_t one_nat = encode_natural(one);
    auto relabel = [&](std::size_t nat) -> Elem {
        if (nat == one_nat) {
            return kOne;
        }
        if (nat == 1) {
            return static_cast<Elem>(one_nat);
        }
        return static_cast<Elem>(nat);
    };

    std::vector<Tuple> tuples(size);
    for (std::size_t nat = 0; nat < size; ++nat) {
        Tuple t{};
        std::size_t rest = nat;
        for (std::size_t i = 0; i < m; ++i) {
            t[i] = static_cast<Elem>(rest % comps[i]->size());
            rest /= comps[i]->size();
        }
        tuples[relabel(nat)] = t;
    }

    std::vector<Elem> add_t(size * size), mul_t(size * size);
    std::vector<std::string> names(size);
    for (std::size_t a = 0; a < size; ++a) {
        names[a] = name(tuples[a]);
        for (std::size_t b = 0; b < size; ++b) {
            add_t[a * size + b] = relabel(encode_natural(add(tuples[a], tuples[b])));
            mul_t[a * size + b] = relabel(encode_natural(mul(tuples[a], tuples[b])));
        }
    }
    return FiniteRing::from_tables(std::move(label), size, std::move(add_t), std::move(mul_t), std::move(names));
}

FiniteRing build_zmod(unsigned n) {
    std::vector<Elem> add(std::size_t{n} * n), mul(std::size_t{n} * n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    }
    return FiniteRing::from_tables("Z/" + std::to_string(n), n, std::move(add), std::move(mul));
}

FiniteRing build_gf(const RingExpr& e) {
    const unsigned p = e.prime;
    const unsigned k = e.degree;
    const auto f = make_monic(e.poly, p);
    std::size_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        size *= p;
    }
    auto decode = [&](std::size_t x) {
        std::vector<unsigned> c(k);
        for (unsigned i = 0; i < k; ++i) {
            c[i] = static_cast<unsigned>(x % p);
            x /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<unsigned>& c) {
        std::size_t x = 0;
        for (unsigned i = k; i-- > 0;) {
            x = x * p + c[i];
        }
        return static_cast<Elem>(x);
    };
    std::vector<Elem> add(size * size), mul(size * size);
    std::vector<std::string> names(size);
    for (std::size_t a = 0; a < size; ++a) {
        const auto ca = decode(a);
        std::string nm;
        for (unsigned i = 0; i < k; ++i) {
            if (ca[i] == 0) {
                continue;
            }
            if (!nm.empty()) {
                nm += "+";
            }
            if (i == 0 || ca[i] != 1) {
                nm += std::to_string(ca[i]);
            }
            if (i >= 1) {
                nm += "x";
            }
            if (i >= 2) {
                nm += "^" + std::to_string(i);
            }
        }
        names[a] = nm.empty() ? "0" : nm;
        for (std::size_t b = 0; b < size; ++b) {
            const auto cb = decode(b);
            std::vector<unsigned> sum(k), prod(2 * k - 1, 0);
            for (unsigned i = 0; i < k; ++i) {
                sum[i] = (ca[i] + cb[i]) % p;
                for (unsigned j = 0; j < k; ++j) {
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                }
            }
            add[a * size + b] = encode(sum);
            mul[a * size + b] = encode(poly_mod(prod, f, p));
        }
    }
    return FiniteRing::from_tables(to_string(e), size, std::move(add), std::move(mul), std::move(names));
}

FiniteRing build(const RingExpr& e) {
    using K = RingExpr::Kind;
    switch (e.kind) {
    case K::Zmod:
        return build_zmod(e.modulus);
    case K::GF:
        return build_gf(e);
    case K::Mat2Ring: {
        const FiniteRing s = build(*e.left);
        const std::vector<const FiniteRing*> comps(4, &s);
        // (a, b, c, d) is [[a, b], [c, d]]
        return tabulate(
            to_string(e), comps, Tuple{kOne, kZero, kZero, kOne},
            [&](const Tuple& x, const Tuple& y) {
                return Tuple{s.add(x[0], y[0]), s.add(x[1], y[1]), s.add(x[2], y[2]), s.add(x[3], y[3])};
            },
            [&](const Tuple& x, const Tuple& y) {
                return Tuple{s.add(s.mul(x[0], y[0]), s.mul(x[1], y[2])), s.add(s.mul(x[0], y[1]), s.mul(x[1], y[3])),
                             s.add(s.mul(x[2], y[0]), s.mul(x[3], y[2])), s.add(s.mul(x[2], y[1]), s.mul(x[3], y[3]))};
            },
            [&](const Tuple& x) {
                return "[[" + s.name(x[0]) + "," + s.name(x[1]) + "],[" + s.name(x[2]) + "," + s.name(x[3]) + "]]";
            });
    }
    case K::UpperTri2: {
        const FiniteRing s = build(*e.left);
        const std::vector<const FiniteRing*> comps(3, &s);
        // (a, b, c) is [[a, b], [0, c]]
        return tabulate(
            to_string(e), comps, Tuple{kOne, kZero, kOne, kZero},
            [&](const Tuple& x, const Tuple& y) {
                return Tuple{s.add(x[0], y[0]), s.add(x[1], y[1]), s.add(x[2], y[2]), kZero};
            },
            [&](const Tuple& x, const Tuple& y) {
                return Tuple{s.mul(x[0], y[0]), s.add(s.mul(x[0], y[1]), s.mul(x[1], y[2])), s.mul(x[2], y[2]), kZero};
            },
            [&](const Tuple& x) { return "(" + s.name(x[0]) + "," + s.name(x[1]) + "," + s.name(x[2]) + ")"; });
    }
    case K::Dual: {
        const FiniteRing s = build(*e.left);
        const std::vector<const FiniteRing*> comps(2, &s);
        // (a, b) is a + b*eps with eps central and eps^2 = 0
        return tabulate(
            to_string(e), comps, Tuple{kOne, kZero, kZero, kZero},
            [&](const Tuple& x, const Tuple& y) { return Tuple{s.add(x[0], y[0]), s.add(x[1], y[1]), kZero, kZero}; },
            [&](const Tuple& x, const Tuple& y) {
                return Tuple{s.mul(x[0], y[0]), s.add(s.mul(x[0], y[1]), s.mul(x[1], y[0])), kZero, kZero};
            },
            [&](const Tuple& x) { return "(" + s.name(x[0]) + "," + s.name(x[1]) + ")"; });
    }
    case K::Product: {
        const FiniteRing a = build(*e.left);
        const FiniteRing b = build(*e.right);
        return tabulate(
            to_string(e), {&a, &b}, Tuple{kOne, kOne, kZero, kZero},
            [&](const Tuple& x, const Tuple& y) { return Tuple{a.add(x[0], y[0]), b.add(x[1], y[1]), kZero, kZero}; },
            [&](const Tuple& x, const Tuple& y) { return Tuple{a.mul(x[0], y[0]), b.mul(x[1], y[1]), kZero, kZero}; },
            [&](const Tuple& x) { return "<" + a.name(x[0]) + "," + b.name(x[1]) + ">"; });
    }
    }
    throw SemanticError("unknown ring constructor");
}

}  // namespace

FiniteRing build_ring(const RingExpr& expr, std::size_t cap) {
    const std::size_t n = ring_size(expr);
    if (n > cap) {
        throw ResourceError("ring " + to_string(expr) + " has " +
                            (n == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                           : std::to_string(n)) +
                            " elements, cap is " + std::to_string(cap));
    }
    return build(expr);
}

RingPtr make_ring(std::string_view text, std::size_t cap) {
    return std::make_shared<const FiniteRing>(build_ring(parse_ring_spec(text), cap));
}

}  // namespace staudt
