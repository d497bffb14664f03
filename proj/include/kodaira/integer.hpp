#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kodaira {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised for every input that is well-formed but mathematically rejected.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Representative in [0, n) for n > 0.
Integer floor_mod(const Integer& a, const Integer& n);
std::int64_t floor_mod(std::int64_t a, std::int64_t n);

// Reduction of an exponent of a root of unity into [0, 1).
Rational mod_one(const Rational& q);
// Order of q in Q/Z.
Integer order_mod_one(const Rational& q);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::int64_t to_int64(const Integer& n);

}  // namespace kodaira
