#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ilp {

/// Exact rational scalar. Always in canonical form: reduced, positive
/// denominator. Every quantity in the library is one of these; there is
/// no floating point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else,
/// including q == 0. Non-canonical inputs like "2/4" are normalized.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is one, else "p/q".
std::string to_string(const Rational& value);

std::string to_string(const RationalVector& values);

/// A rational extended with -infinity and +infinity. Totally ordered;
/// arithmetic is limited to negation, which is always well defined.
class ExtendedRational {
public:
    ExtendedRational() : kind_(Kind::Finite) {}
    ExtendedRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}
    ExtendedRational(int value) : ExtendedRational(Rational(value)) {}

    static ExtendedRational neg_infinity() { return ExtendedRational(Kind::NegInf); }
    static ExtendedRational pos_infinity() { return ExtendedRational(Kind::PosInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_infinity() const { return kind_ == Kind::NegInf; }
    bool is_pos_infinity() const { return kind_ == Kind::PosInf; }

    /// Finite value; throws std::logic_error on an infinity.
    const Rational& finite() const;

    ExtendedRational operator-() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                            const ExtendedRational& b);

private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit ExtendedRational(Kind kind) : kind_(kind) {}

    Kind kind_;
    Rational value_;
};

inline ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b ? a : b;
}
inline ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b ? b : a;
}

/// "p/q", "-inf" or "+inf".
std::string to_string(const ExtendedRational& value);

/// Inverse of to_string(ExtendedRational). Accepts "inf" for "+inf".
ExtendedRational parse_extended_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value);

} // namespace ilp
