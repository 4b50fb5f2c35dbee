#pragma once

#include "fibpoly/sequences.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibpoly {

/// Every identity the checker suite knows, in declaration (report) order.
enum class IdentityId {
    fib_matrix,              // Q^n carries F_{n+1}, F_n, F_{n-1}
    fib_cassini,             // F_n^2 - F_{n+1} F_{n-1} = a^2 (-d)^(n-1)
    fib_cassini_expanded,    // F_n^2 - c F_n F_{n-1} - d F_{n-1}^2 = a^2 (-d)^(n-1)
    fib_honsberger,          // a F_{n+m} = F_n F_{m+1} + d F_{n-1} F_m
    fib_double_index,        // a F_{2n-1} = F_n^2 + d F_{n-1}^2
    fib_docagne,             // a (-d)^m F_{n-m} = F_n F_{m+1} - F_{n+1} F_m
    fib_binomial,            // F_{2n+p} = sum_j C(n,j) c^j d^(n-j) F_{j+p}
    q_square,                // Q^2 = c Q + d I
    lf_link_a,               // L_n = (b/a) F_n + d F_{n-1}
    lf_link_b,               // L_n = ((bc+ad)/a) F_{n-1} + (bd/a) F_{n-2}
    lucas_matrix,            // [[L_{n+2}, d L_{n+1}], [L_{n+1}, d L_n]] = Linit Q^n
    lucas_cassini,           // L_{n+2} L_n - L_{n+1}^2 = (L_2 L_0 - L_1^2) (-d)^n
    lucas_cassini_expanded,  // c L_{n+1} L_n + d L_n^2 - L_{n+1}^2 = same RHS
    lucas_binomial,          // L_{2n+p} = sum_j C(n,j) c^j d^(n-j) L_{p+j}
    mixed_honsberger,        // a L_{n+m} = L_{n+1} F_m + d L_n F_{m-1}
    mixed_docagne,           // a (-d)^m L_{n-m} = L_n F_{m+1} - L_{n+1} F_m
};

inline constexpr std::size_t kIdentityCount = 16;

std::span<const IdentityId> all_identities();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

enum class CheckStatus { pass, fail, skipped };

/// "PASS", "FAIL" or "SKIPPED".
std::string_view status_name(CheckStatus status);

/// Index bounds for the sweeps.  Every checker restricts its own range so
/// that each referenced subscript stays >= 0; include_p0 additionally admits
/// p = 0 in the fibonacci binomial sweep (experimental, off by default).
struct SweepBounds {
    long n_max = 30;
    long m_max = 30;
    long p_max = 5;
    bool include_p0 = false;
};

struct Counterexample {
    std::vector<long> indices;  // in the order of the range description
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    IdentityId identity = IdentityId::fib_matrix;
    std::string family;
    std::string range;
    CheckStatus status = CheckStatus::pass;
    std::optional<Counterexample> counterexample;  // present exactly when FAIL
    std::string reason;                            // non-empty exactly when SKIPPED
};

/// The term windows a checker reads: the family's own terms plus, for
/// lucas-kind families, the fibonacci companion's.  Checkers never iterate
/// the recurrence themselves, so windows and spec can be sourced
/// independently -- which is what the fault-injection tests exploit.
struct FamilyWindows {
    SeqWindow main;
    std::optional<SeqWindow> companion;
};

/// Windows wide enough for every identity at the given bounds.
FamilyWindows make_windows(const FamilySpec& spec, const SweepBounds& bounds);

IdentityReport check_identity(IdentityId id, const FamilySpec& spec, const SweepBounds& bounds);

/// As above with caller-supplied windows (they must cover the bounds).
IdentityReport check_identity(IdentityId id, const FamilySpec& spec, const SweepBounds& bounds,
                              const FamilyWindows& windows);

/// Recomputes both sides of one identity at one index tuple, as canonical
/// text.  Returns nullopt when the identity does not apply to the family.
/// This is how reported counterexamples are re-verified.
std::optional<std::pair<std::string, std::string>> identity_sides_at(
    IdentityId id, const FamilySpec& spec, const FamilyWindows& windows,
    std::span<const long> indices);

/// Runs every identity against every spec.  Reports are ordered by family
/// name, then identity declaration order; inapplicable combinations come back
/// SKIPPED.  Failures are data, not errors.  Since the windows are generated
/// from the specs themselves, a passing plain Cassini check forces the
/// expanded form to pass too; run_suite asserts that implication on its
/// results (violations are bugs, reported as std::logic_error).
std::vector<IdentityReport> run_suite(const std::vector<FamilySpec>& specs,
                                      const SweepBounds& bounds);

/// One family with externally supplied term windows.  The plain run_suite
/// builds these itself; this form exists so fault-injection tests can route
/// a mutated recurrence (or mutated parameters) through the whole suite.
struct SuiteEntry {
    FamilySpec spec;
    FamilyWindows windows;
};

std::vector<IdentityReport> run_suite(const std::vector<SuiteEntry>& entries,
                                      const SweepBounds& bounds);

/// JSON array of report objects with fields identity, family, range, status,
/// counterexample ({indices, lhs, rhs} or null) and reason (or null).
std::string reports_to_json_text(const std::vector<IdentityReport>& reports);

}  // namespace fibpoly
