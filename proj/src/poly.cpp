#include "fibpoly/poly.hpp"

#include <algorithm>
#include <utility>

namespace fibpoly {

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

Poly Poly::from_coeffs(std::vector<Rational> ascending) {
    Poly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(Rational c, std::size_t k) {
    Poly p;
    if (!c.is_zero()) {
        p.coeffs_.resize(k + 1);
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

const Rational& Poly::coeff(std::size_t i) const {
    static const Rational kZero;
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Poly Poly::operator-() const {
    Poly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) {
        r.coeffs_.push_back(-c);
    }
    return r;
}

Poly operator+(const Poly& f, const Poly& g) {
    Poly r;
    const std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    r.coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.coeffs_[i] = f.coeff(i) + g.coeff(i);
    }
    r.trim();
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    Poly r;
    const std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    r.coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.coeffs_[i] = f.coeff(i) - g.coeff(i);
    }
    r.trim();
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) {
        return Poly();
    }
    Poly r;
    r.coeffs_.resize(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            if (g.coeffs_[j].is_zero()) {
                continue;
            }
            r.coeffs_[i + j] = r.coeffs_[i + j] + f.coeffs_[i] * g.coeffs_[j];
        }
    }
    // the top coefficient is a product of two nonzero leads; trim is a no-op
    r.trim();
    return r;
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) {
        return Poly();
    }
    Poly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) {
        r.coeffs_.push_back(c * s);
    }
    return r;
}

Rational Poly::eval(const Rational& x0) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x0 + coeffs_[i];
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? -c : c;
        if (k == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) {
                out += mag.str();
                out += "*";
            }
            out += "x";
            if (k >= 2) {
                out += "^";
                out += std::to_string(k);
            }
        }
    }
    return out;
}

Poly pow(const Poly& f, unsigned long long k) {
    Poly r = Poly::one();
    Poly base = f;
    unsigned long long e = k;
    while (e > 0) {
        if (e & 1ULL) {
            r = r * base;
        }
        e >>= 1ULL;
        if (e > 0) {
            base = base * base;
        }
    }
    return r;
}

}  // namespace fibpoly
