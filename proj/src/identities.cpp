#include "fibpoly/identities.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace fibpoly {

namespace {

using nlohmann::json;

constexpr std::array<IdentityId, kIdentityCount> kAllIdentities = {
    IdentityId::fib_matrix,
    IdentityId::fib_cassini,
    IdentityId::fib_cassini_expanded,
    IdentityId::fib_honsberger,
    IdentityId::fib_double_index,
    IdentityId::fib_docagne,
    IdentityId::fib_binomial,
    IdentityId::q_square,
    IdentityId::lf_link_a,
    IdentityId::lf_link_b,
    IdentityId::lucas_matrix,
    IdentityId::lucas_cassini,
    IdentityId::lucas_cassini_expanded,
    IdentityId::lucas_binomial,
    IdentityId::mixed_honsberger,
    IdentityId::mixed_docagne,
};

constexpr std::array<const char*, kIdentityCount> kIdentityNames = {
    "fib_matrix",
    "fib_cassini",
    "fib_cassini_expanded",
    "fib_honsberger",
    "fib_double_index",
    "fib_docagne",
    "fib_binomial",
    "q_square",
    "lf_link_a",
    "lf_link_b",
    "lucas_matrix",
    "lucas_cassini",
    "lucas_cassini_expanded",
    "lucas_binomial",
    "mixed_honsberger",
    "mixed_docagne",
};

// Which family kinds an identity applies to.  `pair` identities need a
// lucas-kind family checked together with its fibonacci companion.
enum class Applies { fib, lucas, pair, any };

// Evaluation context: the spec provides the identity's parameters (a, b, c,
// d, Q), the windows provide the sequence terms.  The two sources are never
// derived from one another here.
struct Ctx {
    const FamilySpec& spec;
    const FamilyWindows& win;

    // Single-slot cache: sweeps visit each exponent in order.
    mutable unsigned long long q_exp = 0;
    mutable std::optional<Mat2> q_val = std::nullopt;

    const Poly& own(long n) const { return win.main.at(static_cast<std::size_t>(n)); }
    const Poly& comp(long n) const { return win.companion->at(static_cast<std::size_t>(n)); }

    const Mat2& qpow(unsigned long long n) const {
        if (!q_val || q_exp != n) {
            q_val = pow(q_matrix(spec), n);
            q_exp = n;
        }
        return *q_val;
    }

    Poly neg_d_pow(unsigned long long k) const { return pow(-spec.d, k); }
    Rational inv_a() const { return Rational(1) / spec.a; }
};

const Poly& entry(const Mat2& m, long i, long j) {
    if (i == 1 && j == 1) return m.e11;
    if (i == 1 && j == 2) return m.e12;
    if (i == 2 && j == 1) return m.e21;
    if (i == 2 && j == 2) return m.e22;
    throw std::invalid_argument("matrix entry indices must be 1 or 2");
}

Mat2 mat_add(const Mat2& a, const Mat2& b) {
    return Mat2{a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
}

Mat2 mat_scale_by_poly(const Mat2& a, const Poly& f) {
    return Mat2{a.e11 * f, a.e12 * f, a.e21 * f, a.e22 * f};
}

// Initial lucas matrix [[L_2, d L_1], [L_1, d L_0]] built from the spec's
// parameters alone (L_0 = a, L_1 = b, L_2 = bc + ad), not from the window.
Mat2 lucas_initial_matrix(const FamilySpec& s) {
    const Poly l0 = Poly(s.a);
    const Poly& l1 = s.b;
    const Poly l2 = s.b * s.c + s.d.scaled(s.a);
    return Mat2{l2, s.d * l1, l1, s.d * l0};
}

long need(std::span<const long> idx, std::size_t k) {
    if (k >= idx.size()) {
        throw std::invalid_argument("identity index tuple too short");
    }
    return idx[k];
}

using Sides = std::pair<Poly, Poly>;
using StepFn = std::function<bool(std::span<const long>)>;

// ---- per-identity index enumerations ------------------------------------

void sweep_n(long lo, long hi, const StepFn& step) {
    for (long n = lo; n <= hi; ++n) {
        const long idx[1] = {n};
        if (!step(idx)) return;
    }
}

void sweep_grid(long n_lo, long n_hi, long k_lo, long k_hi, const StepFn& step) {
    for (long n = n_lo; n <= n_hi; ++n) {
        for (long k = k_lo; k <= k_hi; ++k) {
            const long idx[2] = {n, k};
            if (!step(idx)) return;
        }
    }
}

void sweep_m_up_to_n(long n_hi, const StepFn& step) {
    for (long n = 0; n <= n_hi; ++n) {
        for (long m = 0; m <= n; ++m) {
            const long idx[2] = {n, m};
            if (!step(idx)) return;
        }
    }
}

void sweep_matrix(long n_lo, long n_hi, const StepFn& step) {
    for (long n = n_lo; n <= n_hi; ++n) {
        for (long i = 1; i <= 2; ++i) {
            for (long j = 1; j <= 2; ++j) {
                const long idx[3] = {n, i, j};
                if (!step(idx)) return;
            }
        }
    }
}

void sweep_entries(const StepFn& step) {
    for (long i = 1; i <= 2; ++i) {
        for (long j = 1; j <= 2; ++j) {
            const long idx[2] = {i, j};
            if (!step(idx)) return;
        }
    }
}

// ---- per-identity sides ---------------------------------------------------

Sides eval_fib_matrix(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0), i = need(idx, 1), j = need(idx, 2);
    const Rational ia = c.inv_a();
    const Mat2 rhs{c.own(n + 1).scaled(ia), (c.spec.d * c.own(n)).scaled(ia),
                   c.own(n).scaled(ia), (c.spec.d * c.own(n - 1)).scaled(ia)};
    return {entry(c.qpow(static_cast<unsigned long long>(n)), i, j), entry(rhs, i, j)};
}

Sides eval_fib_cassini(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    Poly lhs = c.own(n) * c.own(n) - c.own(n + 1) * c.own(n - 1);
    Poly rhs = c.neg_d_pow(static_cast<unsigned long long>(n - 1)).scaled(c.spec.a * c.spec.a);
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_fib_cassini_expanded(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    Poly lhs = c.own(n) * c.own(n) - c.spec.c * c.own(n) * c.own(n - 1) -
               c.spec.d * c.own(n - 1) * c.own(n - 1);
    Poly rhs = c.neg_d_pow(static_cast<unsigned long long>(n - 1)).scaled(c.spec.a * c.spec.a);
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_fib_honsberger(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0), m = need(idx, 1);
    Poly lhs = c.own(n + m).scaled(c.spec.a);
    Poly rhs = c.own(n) * c.own(m + 1) + c.spec.d * c.own(n - 1) * c.own(m);
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_fib_double_index(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    Poly lhs = c.own(2 * n - 1).scaled(c.spec.a);
    Poly rhs = c.own(n) * c.own(n) + c.spec.d * c.own(n - 1) * c.own(n - 1);
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_fib_docagne(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0), m = need(idx, 1);
    Poly lhs = (c.neg_d_pow(static_cast<unsigned long long>(m)) * c.own(n - m)).scaled(c.spec.a);
    Poly rhs = c.own(n) * c.own(m + 1) - c.own(n + 1) * c.own(m);
    return {std::move(lhs), std::move(rhs)};
}

// shared by the fibonacci and lucas binomial expansions
Sides eval_binomial_sum(const Ctx& c, long n, long p) {
    Poly lhs = c.own(2 * n + p);
    std::vector<Poly> c_pows(static_cast<std::size_t>(n) + 1);
    std::vector<Poly> d_pows(static_cast<std::size_t>(n) + 1);
    c_pows[0] = Poly::one();
    d_pows[0] = Poly::one();
    for (long j = 1; j <= n; ++j) {
        c_pows[j] = c_pows[j - 1] * c.spec.c;
        d_pows[j] = d_pows[j - 1] * c.spec.d;
    }
    Poly rhs;
    for (long j = 0; j <= n; ++j) {
        const Rational weight{binomial(static_cast<unsigned long long>(n),
                                       static_cast<unsigned long long>(j))};
        rhs = rhs + (c_pows[j] * d_pows[n - j] * c.own(j + p)).scaled(weight);
    }
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_fib_binomial(const Ctx& c, std::span<const long> idx) {
    return eval_binomial_sum(c, need(idx, 0), need(idx, 1));
}

Sides eval_q_square(const Ctx& c, std::span<const long> idx) {
    const long i = need(idx, 0), j = need(idx, 1);
    const Mat2 q = q_matrix(c.spec);
    const Mat2 rhs = mat_add(mat_scale_by_poly(q, c.spec.c),
                             mat_scale_by_poly(Mat2::identity(), c.spec.d));
    return {entry(c.qpow(2), i, j), entry(rhs, i, j)};
}

Sides eval_lf_link_a(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    Poly rhs = (c.spec.b * c.comp(n)).scaled(c.inv_a()) + c.spec.d * c.comp(n - 1);
    return {c.own(n), std::move(rhs)};
}

Sides eval_lf_link_b(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    const Poly lead = c.spec.b * c.spec.c + c.spec.d.scaled(c.spec.a);  // bc + ad
    Poly rhs = (lead * c.comp(n - 1)).scaled(c.inv_a()) +
               (c.spec.b * c.spec.d * c.comp(n - 2)).scaled(c.inv_a());
    return {c.own(n), std::move(rhs)};
}

Sides eval_lucas_matrix(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0), i = need(idx, 1), j = need(idx, 2);
    const Mat2 lhs{c.own(n + 2), c.spec.d * c.own(n + 1), c.own(n + 1), c.spec.d * c.own(n)};
    const Mat2 rhs = lucas_initial_matrix(c.spec) * c.qpow(static_cast<unsigned long long>(n));
    return {entry(lhs, i, j), entry(rhs, i, j)};
}

// (L_2 L_0 - L_1^2) from the spec parameters: (bc + ad) a - b^2.
Poly lucas_cassini_constant(const FamilySpec& s) {
    return (s.b * s.c + s.d.scaled(s.a)).scaled(s.a) - s.b * s.b;
}

Sides eval_lucas_cassini(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    Poly lhs = c.own(n + 2) * c.own(n) - c.own(n + 1) * c.own(n + 1);
    Poly rhs = lucas_cassini_constant(c.spec) * c.neg_d_pow(static_cast<unsigned long long>(n));
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_lucas_cassini_expanded(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0);
    Poly lhs = c.spec.c * c.own(n + 1) * c.own(n) + c.spec.d * c.own(n) * c.own(n) -
               c.own(n + 1) * c.own(n + 1);
    Poly rhs = lucas_cassini_constant(c.spec) * c.neg_d_pow(static_cast<unsigned long long>(n));
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_lucas_binomial(const Ctx& c, std::span<const long> idx) {
    return eval_binomial_sum(c, need(idx, 0), need(idx, 1));
}

Sides eval_mixed_honsberger(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0), m = need(idx, 1);
    Poly lhs = c.own(n + m).scaled(c.spec.a);
    Poly rhs = c.own(n + 1) * c.comp(m) + c.spec.d * c.own(n) * c.comp(m - 1);
    return {std::move(lhs), std::move(rhs)};
}

Sides eval_mixed_docagne(const Ctx& c, std::span<const long> idx) {
    const long n = need(idx, 0), m = need(idx, 1);
    Poly lhs = (c.neg_d_pow(static_cast<unsigned long long>(m)) * c.own(n - m)).scaled(c.spec.a);
    Poly rhs = c.own(n) * c.comp(m + 1) - c.own(n + 1) * c.comp(m);
    return {std::move(lhs), std::move(rhs)};
}

// ---- identity table -------------------------------------------------------

struct Def {
    IdentityId id;
    Applies applies;
    bool needs_nonzero_d;
    std::string (*range)(const SweepBounds&);
    void (*for_each)(const SweepBounds&, const StepFn&);
    Sides (*eval)(const Ctx&, std::span<const long>);
};

std::string bound(std::string_view pattern, long n, long k = 0) {
    std::string out(pattern);
    auto replace = [&](std::string_view tag, long value) {
        const std::size_t at = out.find(tag);
        if (at != std::string::npos) {
            out.replace(at, tag.size(), std::to_string(value));
        }
    };
    replace("N", n);
    replace("K", k);
    return out;
}

const std::array<Def, kIdentityCount> kDefs = {{
    {IdentityId::fib_matrix, Applies::fib, false,
     +[](const SweepBounds& b) { return bound("1 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_matrix(1, b.n_max, s); },
     eval_fib_matrix},
    {IdentityId::fib_cassini, Applies::fib, false,
     +[](const SweepBounds& b) { return bound("1 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(1, b.n_max, s); },
     eval_fib_cassini},
    {IdentityId::fib_cassini_expanded, Applies::fib, false,
     +[](const SweepBounds& b) { return bound("1 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(1, b.n_max, s); },
     eval_fib_cassini_expanded},
    {IdentityId::fib_honsberger, Applies::fib, false,
     +[](const SweepBounds& b) { return bound("1 <= n <= N, 0 <= m <= K", b.n_max, b.m_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_grid(1, b.n_max, 0, b.m_max, s); },
     eval_fib_honsberger},
    {IdentityId::fib_double_index, Applies::fib, false,
     +[](const SweepBounds& b) { return bound("1 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(1, b.n_max, s); },
     eval_fib_double_index},
    {IdentityId::fib_docagne, Applies::fib, true,
     +[](const SweepBounds& b) { return bound("0 <= m <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_m_up_to_n(b.n_max, s); },
     eval_fib_docagne},
    {IdentityId::fib_binomial, Applies::fib, false,
     +[](const SweepBounds& b) {
         return bound(b.include_p0 ? "0 <= n <= N, 0 <= p <= K" : "0 <= n <= N, 1 <= p <= K",
                      b.n_max, b.p_max);
     },
     +[](const SweepBounds& b, const StepFn& s) {
         sweep_grid(0, b.n_max, b.include_p0 ? 0 : 1, b.p_max, s);
     },
     eval_fib_binomial},
    {IdentityId::q_square, Applies::any, false,
     +[](const SweepBounds&) { return std::string("single"); },
     +[](const SweepBounds&, const StepFn& s) { sweep_entries(s); },
     eval_q_square},
    {IdentityId::lf_link_a, Applies::pair, false,
     +[](const SweepBounds& b) { return bound("1 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(1, b.n_max, s); },
     eval_lf_link_a},
    {IdentityId::lf_link_b, Applies::pair, false,
     +[](const SweepBounds& b) { return bound("2 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(2, b.n_max, s); },
     eval_lf_link_b},
    {IdentityId::lucas_matrix, Applies::pair, false,
     +[](const SweepBounds& b) { return bound("0 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_matrix(0, b.n_max, s); },
     eval_lucas_matrix},
    {IdentityId::lucas_cassini, Applies::lucas, false,
     +[](const SweepBounds& b) { return bound("0 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(0, b.n_max, s); },
     eval_lucas_cassini},
    {IdentityId::lucas_cassini_expanded, Applies::lucas, false,
     +[](const SweepBounds& b) { return bound("0 <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_n(0, b.n_max, s); },
     eval_lucas_cassini_expanded},
    {IdentityId::lucas_binomial, Applies::lucas, false,
     +[](const SweepBounds& b) { return bound("0 <= n <= N, 0 <= p <= K", b.n_max, b.p_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_grid(0, b.n_max, 0, b.p_max, s); },
     eval_lucas_binomial},
    {IdentityId::mixed_honsberger, Applies::pair, false,
     +[](const SweepBounds& b) { return bound("0 <= n <= N, 1 <= m <= K", b.n_max, b.m_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_grid(0, b.n_max, 1, b.m_max, s); },
     eval_mixed_honsberger},
    {IdentityId::mixed_docagne, Applies::pair, true,
     +[](const SweepBounds& b) { return bound("0 <= m <= n <= N", b.n_max); },
     +[](const SweepBounds& b, const StepFn& s) { sweep_m_up_to_n(b.n_max, s); },
     eval_mixed_docagne},
}};

const Def& def_of(IdentityId id) {
    return kDefs[static_cast<std::size_t>(id)];
}

bool kind_matches(Applies applies, FamilyKind kind) {
    switch (applies) {
        case Applies::fib: return kind == FamilyKind::fibonacci;
        case Applies::lucas:
        case Applies::pair: return kind == FamilyKind::lucas;
        case Applies::any: return true;
    }
    return false;
}

std::string skip_reason(Applies applies) {
    switch (applies) {
        case Applies::fib: return "applies to fibonacci-kind families only";
        case Applies::lucas: return "applies to lucas-kind families only";
        case Applies::pair:
            return "applies to lucas-kind families (with their fibonacci companion) only";
        case Applies::any: break;
    }
    return {};
}

void validate_bounds(const SweepBounds& b) {
    if (b.n_max < 1 || b.m_max < 0 || b.p_max < 0) {
        throw std::domain_error("sweep bounds: need n_max >= 1, m_max >= 0, p_max >= 0");
    }
}

}  // namespace

std::span<const IdentityId> all_identities() {
    return kAllIdentities;
}

std::string_view identity_name(IdentityId id) {
    return kIdentityNames[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kIdentityNames.size(); ++i) {
        if (name == kIdentityNames[i]) {
            return kAllIdentities[i];
        }
    }
    return std::nullopt;
}

std::string_view status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIPPED";
    }
    return "?";
}

FamilyWindows make_windows(const FamilySpec& spec, const SweepBounds& bounds) {
    validate_bounds(bounds);
    const long main_hi =
        std::max({bounds.n_max + 2, 2 * bounds.n_max + bounds.p_max, bounds.n_max + bounds.m_max});
    FamilyWindows w{window(spec, 0, static_cast<std::size_t>(main_hi)), std::nullopt};
    if (spec.kind == FamilyKind::lucas) {
        const long comp_hi = std::max(bounds.n_max + 1, bounds.m_max);
        w.companion = window(companion_fib(spec), 0, static_cast<std::size_t>(comp_hi));
    }
    return w;
}

IdentityReport check_identity(IdentityId id, const FamilySpec& spec, const SweepBounds& bounds) {
    const FamilyWindows windows = make_windows(spec, bounds);
    return check_identity(id, spec, bounds, windows);
}

IdentityReport check_identity(IdentityId id, const FamilySpec& spec, const SweepBounds& bounds,
                              const FamilyWindows& windows) {
    validate_bounds(bounds);
    const Def& def = def_of(id);

    IdentityReport report;
    report.identity = id;
    report.family = spec.name;
    report.range = def.range(bounds);

    if (!kind_matches(def.applies, spec.kind)) {
        report.status = CheckStatus::skipped;
        report.reason = skip_reason(def.applies);
        return report;
    }
    if (def.needs_nonzero_d && spec.d.is_zero()) {
        report.status = CheckStatus::skipped;
        report.reason = "d(x) is zero, so Q(x) is not invertible";
        return report;
    }
    if (def.applies == Applies::pair && !windows.companion.has_value()) {
        throw std::logic_error("check_identity: companion window missing for a pair identity");
    }

    const Ctx ctx{spec, windows};
    report.status = CheckStatus::pass;
    def.for_each(bounds, [&](std::span<const long> idx) {
        auto [lhs, rhs] = def.eval(ctx, idx);
        if (lhs == rhs) {
            return true;
        }
        report.status = CheckStatus::fail;
        report.counterexample =
            Counterexample{{idx.begin(), idx.end()}, lhs.str(), rhs.str()};
        return false;
    });
    return report;
}

std::optional<std::pair<std::string, std::string>> identity_sides_at(
    IdentityId id, const FamilySpec& spec, const FamilyWindows& windows,
    std::span<const long> indices) {
    const Def& def = def_of(id);
    if (!kind_matches(def.applies, spec.kind)) {
        return std::nullopt;
    }
    const Ctx ctx{spec, windows};
    auto [lhs, rhs] = def.eval(ctx, indices);
    return std::make_pair(lhs.str(), rhs.str());
}

std::vector<IdentityReport> run_suite(const std::vector<SuiteEntry>& entries,
                                      const SweepBounds& bounds) {
    validate_bounds(bounds);
    std::vector<const SuiteEntry*> order;
    order.reserve(entries.size());
    for (const SuiteEntry& entry : entries) {
        order.push_back(&entry);
    }
    std::stable_sort(order.begin(), order.end(), [](const SuiteEntry* x, const SuiteEntry* y) {
        return x->spec.name < y->spec.name;
    });

    std::vector<IdentityReport> out;
    out.reserve(order.size() * kIdentityCount);
    for (const SuiteEntry* entry : order) {
        for (IdentityId id : kAllIdentities) {
            out.push_back(check_identity(id, entry->spec, bounds, entry->windows));
        }
    }
    return out;
}

std::vector<IdentityReport> run_suite(const std::vector<FamilySpec>& specs,
                                      const SweepBounds& bounds) {
    validate_bounds(bounds);
    std::vector<SuiteEntry> entries;
    entries.reserve(specs.size());
    for (const FamilySpec& spec : specs) {
        entries.push_back(SuiteEntry{spec, make_windows(spec, bounds)});
    }
    std::vector<IdentityReport> out = run_suite(entries, bounds);

    // With windows generated from the specs themselves, the expanded Cassini
    // form is an algebraic substitution of plain Cassini plus the recurrence,
    // so the first passing forces the second; a violation can only mean the
    // checkers are broken.
    CheckStatus cassini = CheckStatus::skipped;
    for (const IdentityReport& r : out) {
        if (r.identity == IdentityId::fib_cassini) {
            cassini = r.status;
        }
        if (r.identity == IdentityId::fib_cassini_expanded && cassini == CheckStatus::pass &&
            r.status == CheckStatus::fail) {
            throw std::logic_error("identity suite inconsistency: fib_cassini passed but "
                                   "fib_cassini_expanded failed for family " +
                                   r.family);
        }
    }
    return out;
}

std::string reports_to_json_text(const std::vector<IdentityReport>& reports) {
    json doc = json::array();
    for (const IdentityReport& r : reports) {
        json item;
        item["identity"] = std::string(identity_name(r.identity));
        item["family"] = r.family;
        item["range"] = r.range;
        item["status"] = std::string(status_name(r.status));
        if (r.counterexample.has_value()) {
            item["counterexample"] = {
                {"indices", r.counterexample->indices},
                {"lhs", r.counterexample->lhs},
                {"rhs", r.counterexample->rhs},
            };
        } else {
            item["counterexample"] = nullptr;
        }
        item["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
        doc.push_back(std::move(item));
    }
    return doc.dump(2);
}

}  // namespace fibpoly
