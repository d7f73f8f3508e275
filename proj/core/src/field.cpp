#include "gkt/field.hpp"

namespace gkt {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Residue of an arbitrary cpp_int in [0, p).
std::uint64_t residue(const Integer& x, std::uint64_t p) {
    Integer r = x % Integer(p);
    if (r < 0) r += Integer(p);
    return r.convert_to<std::uint64_t>();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw spec_error("field characteristic must be prime, got " + std::to_string(p));
    return Field(p);
}

Rational Field::normalize(const Rational& x) const {
    if (kind_ == FieldKind::Rationals) return x;
    std::uint64_t num = residue(numerator(x), p_);
    std::uint64_t den = residue(denominator(x), p_);
    if (den == 0) throw spec_error("division by zero in F_" + std::to_string(p_));
    std::uint64_t d_inv = pow_mod(den, p_ - 2, p_);
    auto v = static_cast<std::uint64_t>((unsigned __int128)num * d_inv % p_);
    return Rational(Integer(v));
}

Rational Field::div(const Rational& a, const Rational& b) const {
    if (is_zero(b)) throw spec_error("division by zero");
    return normalize(a / b);
}

Rational Field::inv(const Rational& a) const {
    if (is_zero(a)) throw spec_error("inverting zero field element");
    return normalize(Rational(1) / a);
}

std::string Field::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace gkt
