#include "kodaira/integer.hpp"

#include <cctype>

namespace kodaira {

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = gcd(a, b);
    std::int64_t v = a / g * b;
    return v < 0 ? -v : v;
}

Integer floor_mod(const Integer& a, const Integer& n) {
    Integer r = a % n;
    if (r < 0) r += n;
    return r;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    if (r < 0) r += n;
    return r;
}

Integer numerator_of(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

Integer denominator_of(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

Rational mod_one(const Rational& q) {
    Integer num = numerator_of(q);
    Integer den = denominator_of(q);
    return Rational(floor_mod(num, den), den);
}

Integer order_mod_one(const Rational& q) {
    return denominator_of(mod_one(q));
}

std::string to_string(const Integer& n) {
    return n.str();
}

std::string to_string(const Rational& q) {
    Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw DomainError("expected an integer, got '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::int64_t to_int64(const Integer& n) {
    if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN))
        throw DomainError("integer " + n.str() + " out of machine range");
    return static_cast<std::int64_t>(n);
}

}  // namespace kodaira
