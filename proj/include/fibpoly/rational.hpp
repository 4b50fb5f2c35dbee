#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fibpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form is maintained by every operation: the denominator is
/// positive, gcd(|num|, den) == 1, and zero is stored as 0/1.  Values are
/// immutable after construction and safe to share across threads.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit for integer literals
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    /// Throws std::domain_error when d == 0.
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    bool operator==(const Rational&) const = default;

    Rational operator-() const;
    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    /// Throws std::domain_error when y == 0.
    friend Rational operator/(const Rational& x, const Rational& y);

    /// "num/den", the denominator omitted when it is 1.  E.g. "-2/3", "7".
    std::string str() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

/// Exact power; 0^0 is 1 by the empty-product convention.
Rational pow(const Rational& base, unsigned long long k);

Rational abs(const Rational& r);

/// Exact binomial coefficient.  Throws std::domain_error when j > n.
BigInt binomial(unsigned long long n, unsigned long long j);

}  // namespace fibpoly
