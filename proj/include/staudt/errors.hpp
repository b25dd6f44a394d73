#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace staudt {

/// Malformed ring specification text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed but meaningless ring specification (non-prime p, reducible polynomial, n < 2).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap or search budget was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed object contradicts a statement that must hold (uniqueness of the
/// fourth harmonic point, well-definedness of an induced map, ...).
class FalsificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace staudt
