#ifndef GKT_FIELD_HPP
#define GKT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkt {

/// Raised when an operation's stated precondition is violated.
class spec_error : public std::runtime_error {
public:
    explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Prime };

/// Coefficient field: exact rationals, or a prime field F_p.
/// Prime-field elements are kept as canonical residues in [0, p) with
/// denominator 1, so a plain Rational can carry values of either kind.
class Field {
public:
    Field() : kind_(FieldKind::Rationals), p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }

    /// Canonical representative (identity over Q, residue over F_p).
    Rational normalize(const Rational& x) const;

    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }
    Rational div(const Rational& a, const Rational& b) const;
    Rational inv(const Rational& a) const;

    bool is_zero(const Rational& a) const { return normalize(a) == 0; }
    bool eq(const Rational& a, const Rational& b) const { return normalize(a) == normalize(b); }

    std::string to_string() const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    explicit Field(std::uint64_t p) : kind_(FieldKind::Prime), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

std::string rational_to_string(const Rational& q);

} // namespace gkt

#endif
