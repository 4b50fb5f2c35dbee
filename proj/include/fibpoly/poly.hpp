#pragma once

#include "fibpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fibpoly {

/// Dense univariate polynomial over Rational in the indeterminate x.
///
/// coeffs()[i] is the coefficient of x^i.  Canonical form: the highest
/// stored coefficient is nonzero and the zero polynomial keeps an empty
/// coefficient vector, so equality is plain memberwise comparison.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);

    /// Builds from an ascending coefficient list, trimming trailing zeros.
    static Poly from_coeffs(std::vector<Rational> ascending);
    /// c * x^k
    static Poly monomial(Rational c, std::size_t k);
    static Poly x() { return monomial(Rational(1), 1); }
    static Poly one() { return Poly(Rational(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or nullopt for the zero polynomial (its degree is -infinity,
    /// deliberately not representable as a number).
    std::optional<std::size_t> degree() const;
    /// Coefficient of x^i; zero beyond the stored degree.
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const Poly&) const = default;

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);

    /// Every coefficient multiplied by s.
    Poly scaled(const Rational& s) const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x0) const;

    /// Canonical rendering: strictly descending powers, "C*x^K" terms with
    /// unit coefficients elided (except on the constant term), joined by
    /// " + " / " - " with the sign absorbed.  E.g. "x^4 + 3*x^2 + 1",
    /// "-2*x + 1/2"; the zero polynomial prints "0".
    std::string str() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Exact power by repeated squaring; f^0 == 1 (also for f == 0).
Poly pow(const Poly& f, unsigned long long k);

}  // namespace fibpoly
