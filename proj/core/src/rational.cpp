#include "ilp/rational.hpp"

#include "ilp/errors.hpp"

#include <ostream>
#include <sstream>

namespace ilp {

namespace {

bool is_integer_text(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

BigInt parse_big_int(std::string_view text, std::string_view full) {
    if (!is_integer_text(text)) {
        throw ParseError("not a rational number: '" + std::string(full) + "'");
    }
    return BigInt(std::string(text));
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_big_int(text, text));
    }
    const BigInt num = parse_big_int(text.substr(0, slash), text);
    const BigInt den = parse_big_int(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const RationalVector& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(values[i]);
    }
    out += ")";
    return out;
}

const Rational& ExtendedRational::finite() const {
    if (kind_ != Kind::Finite) {
        throw std::logic_error("infinite value used where a finite rational is required");
    }
    return value_;
}

ExtendedRational ExtendedRational::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_infinity();
        case Kind::PosInf: return neg_infinity();
        case Kind::Finite: return ExtendedRational(Rational(-value_));
    }
    return {};
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != ExtendedRational::Kind::Finite) return true;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    using Kind = ExtendedRational::Kind;
    if (a.kind_ != Kind::Finite || b.kind_ != Kind::Finite) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
}

std::string to_string(const ExtendedRational& value) {
    if (value.is_neg_infinity()) return "-inf";
    if (value.is_pos_infinity()) return "+inf";
    return to_string(value.finite());
}

ExtendedRational parse_extended_rational(std::string_view text) {
    if (text == "-inf") return ExtendedRational::neg_infinity();
    if (text == "+inf" || text == "inf") return ExtendedRational::pos_infinity();
    return ExtendedRational(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value) {
    return os << to_string(value);
}

} // namespace ilp
