#include "fibpoly/mat2.hpp"

#include <stdexcept>

namespace fibpoly {

Mat2 Mat2::identity() {
    return Mat2{Poly::one(), Poly(), Poly(), Poly::one()};
}

std::string Mat2::str() const {
    return "[[" + e11.str() + ", " + e12.str() + "], [" + e21.str() + ", " + e22.str() + "]]";
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{
        a.e11 * b.e11 + a.e12 * b.e21,
        a.e11 * b.e12 + a.e12 * b.e22,
        a.e21 * b.e11 + a.e22 * b.e21,
        a.e21 * b.e12 + a.e22 * b.e22,
    };
}

Poly det(const Mat2& a) {
    return a.e11 * a.e22 - a.e12 * a.e21;
}

Mat2 pow(const Mat2& a, unsigned long long n) {
    Mat2 result = Mat2::identity();
    Mat2 base = a;
    unsigned long long e = n;
    while (e > 0) {
        if (e & 1ULL) {
            result = result * base;
        }
        e >>= 1ULL;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Mat2 scaled(const Mat2& a, const Rational& s) {
    return Mat2{a.e11.scaled(s), a.e12.scaled(s), a.e21.scaled(s), a.e22.scaled(s)};
}

Mat2 q_matrix(const FamilySpec& spec) {
    return Mat2{spec.c, spec.d, Poly::one(), Poly()};
}

Mat2 q_inverse_power_scaled(const FamilySpec& spec, unsigned long long m) {
    if (spec.d.is_zero()) {
        throw std::domain_error("q_inverse_power_scaled: d(x) is zero, Q(x) is not invertible");
    }
    if (m == 0) {
        return Mat2::identity();
    }
    // adj(Q) = [[0, -d], [-1, c]]; it commutes with Q and Q * adj(Q) = -d * I.
    const Mat2 adjugate{Poly(), -spec.d, -Poly::one(), spec.c};
    return pow(adjugate, m);
}

}  // namespace fibpoly
