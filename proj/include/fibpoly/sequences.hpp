#pragma once

#include "fibpoly/family.hpp"
#include "fibpoly/mat2.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fibpoly {

/// Contiguous run of symbolic sequence terms lo..hi for one family.
struct SeqWindow {
    FamilySpec spec;
    std::size_t lo = 0;
    std::vector<Poly> terms;

    std::size_t hi() const { return lo + terms.size() - 1; }
    /// Term with absolute index n; throws std::out_of_range outside lo..hi.
    const Poly& at(std::size_t n) const;
};

/// The n-th term by forward iteration from the family's initial pair.
Poly term_iter(const FamilySpec& spec, std::size_t n);

/// All terms lo..hi in one forward pass.  Throws std::domain_error if lo > hi.
SeqWindow window(const FamilySpec& spec, std::size_t lo, std::size_t hi);

/// F_n recovered from the (2,1) entry of Q^n, computed by binary
/// exponentiation.  Fibonacci-kind specs only; agrees with term_iter exactly.
Poly fib_via_qpow(const FamilySpec& spec, std::size_t n);

/// L_n through the companion link L_n = (b/a) F_n + d F_{n-1}, with both F
/// terms read off one symbolic Q^n power.  Requires n >= 1 (F_{-1} is out of
/// scope); throws std::domain_error for n == 0.
Poly lucas_from_fib(const FamilyPair& pair, std::size_t n);

/// Exact value of the n-th term at x0 using O(log n) numeric 2x2 matrix
/// products (lucas terms are combined through the companion link).
Rational eval_term_fast(const FamilySpec& spec, std::size_t n, const Rational& x0);

/// Numeric evaluation result with operation counters for the benchmark:
/// big_mults counts multiplications of arbitrary-precision scalars,
/// mat_mults counts 2x2 matrix squarings/multiplies (matrix strategy only).
struct NumericEval {
    Rational value;
    std::uint64_t big_mults = 0;
    std::uint64_t mat_mults = 0;
};

NumericEval eval_term_numeric_iter(const FamilySpec& spec, std::size_t n, const Rational& x0);
NumericEval eval_term_numeric_matrix(const FamilySpec& spec, std::size_t n, const Rational& x0);

/// Single-term generation switches from iteration to the matrix path above
/// this index (CLI default policy).
inline constexpr std::size_t kMatrixPathThreshold = 64;

}  // namespace fibpoly
