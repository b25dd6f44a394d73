#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "staudt/ring.hpp"

namespace staudt {

/// Parsed ring specification.
///
/// Grammar (whitespace insignificant, `x` is left-associative):
///
///     expr := "Z/" INT | "GF(" INT "," INT ["," POLY] ")" | "M2(" expr ")"
///           | "T2(" expr ")" | "DUAL(" expr ")" | expr "x" expr
///     POLY := "[" INT ("," INT)* "]"      coefficients, constant term first
///
/// When POLY is omitted a default irreducible polynomial is chosen (see
/// default_irreducible) and stored, so printing always yields the full form.
struct RingExpr {
    enum class Kind { Zmod, GF, Mat2Ring, UpperTri2, Dual, Product };

    Kind kind = Kind::Zmod;
    unsigned modulus = 0;             // Zmod
    unsigned prime = 0;               // GF
    unsigned degree = 0;              // GF
    std::vector<unsigned> poly;       // GF, constant term first, size degree+1
    std::shared_ptr<const RingExpr> left;   // inner ring, or left factor of a product
    std::shared_ptr<const RingExpr> right;  // right factor of a product

    friend bool operator==(const RingExpr& a, const RingExpr& b);
};

/// Parses and validates a ring specification. Throws ParseError or SemanticError.
RingExpr parse_ring_spec(std::string_view text);

/// Canonical text form; parse_ring_spec(to_string(e)) == e for parsed e.
std::string to_string(const RingExpr& expr);

/// Number of elements of the ring `expr` denotes, saturating at SIZE_MAX.
std::size_t ring_size(const RingExpr& expr);

inline constexpr std::size_t kDefaultRingCap = 4096;

/// Materializes the tables. Throws ResourceError if the ring (or any
/// intermediate ring) has more than `cap` elements.
FiniteRing build_ring(const RingExpr& expr, std::size_t cap = kDefaultRingCap);

/// parse + build, returned as a shared immutable ring.
RingPtr make_ring(std::string_view text, std::size_t cap = kDefaultRingCap);

bool is_prime(unsigned n);
/// True iff `poly` (constant term first, nonzero leading coefficient) is
/// irreducible over GF(p). Brute-force trial division by monic polynomials.
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);
/// Least monic irreducible polynomial of the given degree, ordering monic
/// candidates by their lower coefficients read as base-p digits.
std::vector<unsigned> default_irreducible(unsigned p, unsigned k);

}  // namespace staudt
