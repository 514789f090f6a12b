#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "fock/errors.hpp"

namespace fock {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always reduced to lowest terms, the denominator is
// positive, and zero is stored canonically as 0/1. All symbolic coefficients
// in the engine are of this type; floating point enters only at evaluation
// time.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    double to_double() const;

    // "p" for integers, "p/q" otherwise; the sign sits on the numerator.
    std::string to_string() const;
    static Rational from_string(std::string_view text);

private:
    void normalize();

    BigInt num_ = 0;
    BigInt den_ = 1;
};

// Exact binomial coefficient; zero when k > n.
BigInt binomial_coefficient(unsigned n, unsigned k);

} // namespace fock
