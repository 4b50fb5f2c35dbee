#include "fibpoly/rational.hpp"

#include <stdexcept>
#include <utility>

namespace fibpoly {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void Rational::normalize() {
    if (den_ == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 1) {
        return;
    }
    BigInt g = mp::gcd(BigInt(mp::abs(num_)), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& x, const Rational& y) {
    Rational r;
    if (x.den_ == 1 && y.den_ == 1) {
        r.num_ = x.num_ + y.num_;
        return r;
    }
    r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
    r.den_ = x.den_ * y.den_;
    r.normalize();
    return r;
}

Rational operator-(const Rational& x, const Rational& y) {
    Rational r;
    if (x.den_ == 1 && y.den_ == 1) {
        r.num_ = x.num_ - y.num_;
        return r;
    }
    r.num_ = x.num_ * y.den_ - y.num_ * x.den_;
    r.den_ = x.den_ * y.den_;
    r.normalize();
    return r;
}

Rational operator*(const Rational& x, const Rational& y) {
    Rational r;
    r.num_ = x.num_ * y.num_;
    if (x.den_ == 1 && y.den_ == 1) {
        return r;
    }
    r.den_ = x.den_ * y.den_;
    r.normalize();
    return r;
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) {
        throw std::domain_error("rational: division by zero");
    }
    Rational r;
    r.num_ = x.num_ * y.den_;
    r.den_ = x.den_ * y.num_;
    r.normalize();
    return r;
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += "/";
        out += den_.str();
    }
    return out;
}

Rational pow(const Rational& base, unsigned long long k) {
    if (k == 0) {
        return Rational(1);
    }
    // num and den are coprime, so their powers are too: no reduction needed.
    Rational r = base;
    unsigned long long e = k - 1;
    Rational acc = base;
    while (e > 0) {
        if (e & 1ULL) {
            r = r * acc;
        }
        e >>= 1ULL;
        if (e > 0) {
            acc = acc * acc;
        }
    }
    return r;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

BigInt binomial(unsigned long long n, unsigned long long j) {
    if (j > n) {
        throw std::domain_error("binomial: j > n");
    }
    if (j > n - j) {
        j = n - j;
    }
    BigInt r = 1;
    for (unsigned long long i = 1; i <= j; ++i) {
        r *= BigInt(n - j + i);
        r /= BigInt(i);  // exact at every step
    }
    return r;
}

}  // namespace fibpoly
