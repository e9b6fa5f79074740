#include "zigzag/arith.hpp"

#include <cctype>

namespace zigzag {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad digit in rational '" + std::string(whole) + "'");
    }
    return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    BigInt num, den = 1;
    auto slash = body.find('/');
    if (slash == std::string_view::npos) {
        num = parse_integer(body, text);
    } else {
        num = parse_integer(body.substr(0, slash), text);
        den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

}  // namespace zigzag
