#pragma once

#include "fibpoly/family.hpp"
#include "fibpoly/poly.hpp"

#include <string>

namespace fibpoly {

/// 2x2 matrix of polynomials, row-major.
struct Mat2 {
    Poly e11, e12, e21, e22;

    static Mat2 identity();

    bool operator==(const Mat2&) const = default;

    /// "[[e11, e12], [e21, e22]]" with canonical entries.
    std::string str() const;
};

Mat2 operator*(const Mat2& a, const Mat2& b);

Poly det(const Mat2& a);

/// Binary exponentiation; a^0 is the identity.
Mat2 pow(const Mat2& a, unsigned long long n);

Mat2 scaled(const Mat2& a, const Rational& s);

/// The companion matrix [[c, d], [1, 0]] of a family's recurrence.
Mat2 q_matrix(const FamilySpec& spec);

/// (-d)^m * Q^{-m}, the inverse power kept inside the polynomial ring.
/// Computed as adj(Q)^m (adj(Q) = c*I - Q), so that
/// pow(q_matrix(spec), m) * q_inverse_power_scaled(spec, m) == (-d)^m * I.
/// Throws std::domain_error when d is the zero polynomial.
Mat2 q_inverse_power_scaled(const FamilySpec& spec, unsigned long long m);

}  // namespace fibpoly
