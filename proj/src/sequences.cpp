#include "fibpoly/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace fibpoly {

namespace {

std::pair<Poly, Poly> initial_terms(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::fibonacci) {
        return {Poly(), Poly(spec.a)};
    }
    return {Poly(spec.a), spec.b};
}

}  // namespace

const Poly& SeqWindow::at(std::size_t n) const {
    if (n < lo || n - lo >= terms.size()) {
        throw std::out_of_range("SeqWindow: index " + std::to_string(n) + " outside window");
    }
    return terms[n - lo];
}

Poly term_iter(const FamilySpec& spec, std::size_t n) {
    auto [prev, cur] = initial_terms(spec);
    if (n == 0) {
        return prev;
    }
    for (std::size_t i = 1; i < n; ++i) {
        Poly next = spec.c * cur + spec.d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SeqWindow window(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
    if (lo > hi) {
        throw std::domain_error("window: lo > hi");
    }
    SeqWindow w;
    w.spec = spec;
    w.lo = lo;
    w.terms.reserve(hi - lo + 1);
    auto [prev, cur] = initial_terms(spec);
    if (lo == 0) {
        w.terms.push_back(prev);
    }
    for (std::size_t i = 1; i <= hi; ++i) {
        if (i >= lo) {
            w.terms.push_back(cur);
        }
        if (i == hi) {
            break;
        }
        Poly next = spec.c * cur + spec.d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return w;
}

Poly fib_via_qpow(const FamilySpec& spec, std::size_t n) {
    if (spec.kind != FamilyKind::fibonacci) {
        throw std::domain_error("fib_via_qpow: \"" + spec.name + "\" is not fibonacci-kind");
    }
    if (n == 0) {
        return Poly();
    }
    const Mat2 qn = pow(q_matrix(spec), n);
    // (2,1) entry of Q^n is F_n / a.
    return qn.e21.scaled(spec.a);
}

Poly lucas_from_fib(const FamilyPair& pair, std::size_t n) {
    if (n == 0) {
        throw std::domain_error("lucas_from_fib: n must be >= 1");
    }
    const FamilySpec& l = pair.lucas;
    const Mat2 qn = pow(q_matrix(l), n);
    // Q^n = [[F_{n+1}/a, d F_n/a], [F_n/a, d F_{n-1}/a]], so
    // (b/a) F_n + d F_{n-1}  ==  b * e21 + a * e22.
    return l.b * qn.e21 + qn.e22.scaled(l.a);
}

namespace {

// Numeric 2x2 matrix of rationals with a shared multiplication counter.
struct NumMat2 {
    Rational e11, e12, e21, e22;
};

NumMat2 mul_counted(const NumMat2& a, const NumMat2& b, NumericEval& stats) {
    stats.big_mults += 8;
    stats.mat_mults += 1;
    return NumMat2{
        a.e11 * b.e11 + a.e12 * b.e21,
        a.e11 * b.e12 + a.e12 * b.e22,
        a.e21 * b.e11 + a.e22 * b.e21,
        a.e21 * b.e12 + a.e22 * b.e22,
    };
}

}  // namespace

Rational eval_term_fast(const FamilySpec& spec, std::size_t n, const Rational& x0) {
    return eval_term_numeric_matrix(spec, n, x0).value;
}

NumericEval eval_term_numeric_iter(const FamilySpec& spec, std::size_t n, const Rational& x0) {
    NumericEval out;
    Rational prev;
    Rational cur;
    if (spec.kind == FamilyKind::fibonacci) {
        cur = spec.a;
    } else {
        prev = spec.a;
        cur = spec.b.eval(x0);
    }
    if (n == 0) {
        out.value = prev;
        return out;
    }
    const Rational c0 = spec.c.eval(x0);
    const Rational d0 = spec.d.eval(x0);
    for (std::size_t i = 1; i < n; ++i) {
        Rational next = c0 * cur + d0 * prev;
        out.big_mults += 2;
        prev = std::move(cur);
        cur = std::move(next);
    }
    out.value = std::move(cur);
    return out;
}

NumericEval eval_term_numeric_matrix(const FamilySpec& spec, std::size_t n, const Rational& x0) {
    NumericEval out;
    if (n == 0) {
        out.value = spec.kind == FamilyKind::fibonacci ? Rational() : spec.a;
        return out;
    }
    const NumMat2 q{spec.c.eval(x0), spec.d.eval(x0), Rational(1), Rational()};
    NumMat2 acc{Rational(1), Rational(), Rational(), Rational(1)};
    NumMat2 base = q;
    std::size_t e = n;
    while (e > 0) {
        if (e & std::size_t{1}) {
            acc = mul_counted(acc, base, out);
        }
        e >>= 1;
        if (e > 0) {
            base = mul_counted(base, base, out);
        }
    }
    // acc = Q(x0)^n = [[F_{n+1}/a, d F_n/a], [F_n/a, d F_{n-1}/a]] at x0.
    if (spec.kind == FamilyKind::fibonacci) {
        out.value = spec.a * acc.e21;
        out.big_mults += 1;
    } else {
        out.value = spec.b.eval(x0) * acc.e21 + spec.a * acc.e22;
        out.big_mults += 2;
    }
    return out;
}

}  // namespace fibpoly
