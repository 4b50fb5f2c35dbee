// fibpoly: construct Fibonacci-type / Lucas-type polynomial sequences through
// the Q(x) companion matrix and verify their identities exactly.
//
// Exit codes: 0 all requested checks pass or are skipped, 1 at least one
// check failed (or the two evaluation strategies disagreed), 2 usage or
// config error.

#include "fibpoly/identities.hpp"
#include "fibpoly/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fibpoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string format = "text";
    std::string config_path;
};

bool json_mode(const CommonOpts& opts) {
    return opts.format == "json";
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--config", opts.config_path,
                    "JSON file with additional family definitions");
}

std::vector<FamilySpec> load_config(const CommonOpts& opts) {
    if (opts.config_path.empty()) {
        return {};
    }
    std::ifstream in(opts.config_path);
    if (!in) {
        throw ConfigError("config: cannot read \"" + opts.config_path + "\"");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_families(buffer.str());
}

// Config families take precedence so a file can shadow a builtin definition.
FamilySpec resolve_family(const std::string& name, const std::vector<FamilySpec>& config) {
    for (const FamilySpec& spec : config) {
        if (spec.name == name) {
            return spec;
        }
    }
    if (const FamilySpec* builtin = find_builtin(name)) {
        return *builtin;
    }
    throw ConfigError("unknown family \"" + name + "\" (try `fibpoly list`)");
}

std::vector<FamilySpec> builtin_plus_config(const std::vector<FamilySpec>& config) {
    std::vector<FamilySpec> all;
    for (const FamilySpec& builtin : builtin_families()) {
        const bool shadowed =
            std::any_of(config.begin(), config.end(),
                        [&](const FamilySpec& c) { return c.name == builtin.name; });
        if (!shadowed) {
            all.push_back(builtin);
        }
    }
    all.insert(all.end(), config.begin(), config.end());
    return all;
}

void emit(const std::string& text) {
    std::cout << text << "\n";
}

// ---- list -----------------------------------------------------------------

struct ListOpts {
    CommonOpts common;
    std::string kind_filter;
};

int run_list(const ListOpts& opts) {
    std::vector<FamilySpec> families = builtin_plus_config(load_config(opts.common));
    if (!opts.kind_filter.empty()) {
        std::erase_if(families, [&](const FamilySpec& f) {
            return kind_name(f.kind) != opts.kind_filter;
        });
    }
    if (json_mode(opts.common)) {
        emit(families_to_json_text(families));
        return kExitOk;
    }
    std::size_t name_w = 4, a_w = 1, b_w = 1, c_w = 1;
    for (const FamilySpec& f : families) {
        name_w = std::max(name_w, f.name.size());
        a_w = std::max(a_w, f.a.str().size());
        b_w = std::max(b_w, f.kind == FamilyKind::lucas ? f.b.str().size() : 1);
        c_w = std::max(c_w, f.c.str().size());
    }
    std::cout << std::left << std::setw(static_cast<int>(name_w) + 2) << "NAME"
              << std::setw(11) << "KIND" << std::setw(static_cast<int>(a_w) + 2) << "A"
              << std::setw(static_cast<int>(b_w) + 2) << "B"
              << std::setw(static_cast<int>(c_w) + 2) << "C"
              << "D\n";
    for (const FamilySpec& f : families) {
        std::cout << std::left << std::setw(static_cast<int>(name_w) + 2) << f.name
                  << std::setw(11) << std::string(kind_name(f.kind))
                  << std::setw(static_cast<int>(a_w) + 2) << f.a.str()
                  << std::setw(static_cast<int>(b_w) + 2)
                  << (f.kind == FamilyKind::lucas ? f.b.str() : "-")
                  << std::setw(static_cast<int>(c_w) + 2) << f.c.str() << f.d.str() << "\n";
    }
    return kExitOk;
}

// ---- gen ------------------------------------------------------------------

struct GenOpts {
    CommonOpts common;
    std::string family;
    long long from = 0;
    long long to = 0;
    std::string method = "auto";
};

Poly term_via_matrix(const FamilySpec& spec, std::size_t n) {
    if (spec.kind == FamilyKind::fibonacci) {
        return fib_via_qpow(spec, n);
    }
    if (n == 0) {
        return Poly(spec.a);
    }
    return lucas_from_fib(make_family_pair(spec), n);
}

int run_gen(const GenOpts& opts) {
    const std::vector<FamilySpec> config = load_config(opts.common);
    const FamilySpec spec = resolve_family(opts.family, config);
    if (opts.from < 0 || opts.from > opts.to) {
        throw ConfigError("gen: need 0 <= from <= to");
    }
    const auto from = static_cast<std::size_t>(opts.from);
    const auto to = static_cast<std::size_t>(opts.to);

    // Default policy: windows for sweeps, the matrix path for one large term.
    std::string method = opts.method;
    if (method == "auto") {
        method = (from == to && to > kMatrixPathThreshold) ? "matpow" : "iter";
    }

    std::vector<Poly> terms;
    if (method == "iter") {
        terms = window(spec, from, to).terms;
    } else {
        for (std::size_t n = from; n <= to; ++n) {
            terms.push_back(term_via_matrix(spec, n));
        }
    }

    if (json_mode(opts.common)) {
        json doc;
        doc["family"] = spec.name;
        doc["kind"] = std::string(kind_name(spec.kind));
        doc["from"] = from;
        doc["to"] = to;
        doc["method"] = method;
        json list = json::array();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            json item;
            item["n"] = from + i;
            item["text"] = terms[i].str();
            json coeffs = json::array();
            for (const Rational& c : terms[i].coeffs()) {
                coeffs.push_back(c.str());
            }
            item["coeffs"] = std::move(coeffs);
            list.push_back(std::move(item));
        }
        doc["terms"] = std::move(list);
        emit(doc.dump(2));
        return kExitOk;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::cout << from + i << ": " << terms[i].str() << "\n";
    }
    return kExitOk;
}

// ---- eval -----------------------------------------------------------------

struct EvalOpts {
    CommonOpts common;
    std::string family;
    unsigned long long n = 0;
    std::string at;
    std::string method = "matrix";
};

int run_eval(const EvalOpts& opts) {
    const std::vector<FamilySpec> config = load_config(opts.common);
    const FamilySpec spec = resolve_family(opts.family, config);
    const Rational x0 = parse_rational(opts.at);

    std::optional<Rational> value;
    if (opts.method == "matrix" || opts.method == "both") {
        value = eval_term_fast(spec, opts.n, x0);
    }
    if (opts.method == "symbolic" || opts.method == "both") {
        const Rational symbolic = term_iter(spec, opts.n).eval(x0);
        if (value.has_value() && !(symbolic == *value)) {
            std::cerr << "internal disagreement: matrix path " << value->str()
                      << " vs symbolic path " << symbolic.str() << "\n";
            return kExitCheckFailed;
        }
        value = symbolic;
    }

    if (json_mode(opts.common)) {
        json doc;
        doc["family"] = spec.name;
        doc["n"] = opts.n;
        doc["at"] = x0.str();
        doc["method"] = opts.method;
        doc["value"] = value->str();
        emit(doc.dump(2));
    } else {
        emit(value->str());
    }
    return kExitOk;
}

// ---- qpow -----------------------------------------------------------------

struct QpowOpts {
    CommonOpts common;
    std::string family;
    unsigned long long n = 0;
};

int run_qpow(const QpowOpts& opts) {
    const std::vector<FamilySpec> config = load_config(opts.common);
    const FamilySpec spec = resolve_family(opts.family, config);
    const Mat2 m = pow(q_matrix(spec), opts.n);
    if (json_mode(opts.common)) {
        json doc;
        doc["family"] = spec.name;
        doc["n"] = opts.n;
        doc["matrix"] = json::array({json::array({m.e11.str(), m.e12.str()}),
                                     json::array({m.e21.str(), m.e22.str()})});
        emit(doc.dump(2));
    } else {
        emit(m.str());
    }
    return kExitOk;
}

// ---- check ----------------------------------------------------------------

struct CheckOpts {
    CommonOpts common;
    bool all = false;
    std::string identity;
    std::string family;
    long max_n = 30;
    long max_m = 30;
    long max_p = 5;
    bool experimental_p0 = false;
};

std::string indices_text(const std::vector<long>& indices) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        out += (i == 0 ? "" : ", ") + std::to_string(indices[i]);
    }
    return "(" + out + ")";
}

int run_check(const CheckOpts& opts) {
    if (!opts.all && opts.identity.empty() && opts.family.empty()) {
        throw ConfigError("check: select --all, --identity <id> or --family <name>");
    }

    std::optional<IdentityId> id_filter;
    if (!opts.identity.empty()) {
        id_filter = identity_from_name(opts.identity);
        if (!id_filter.has_value()) {
            std::string valid;
            for (IdentityId id : all_identities()) {
                valid += valid.empty() ? "" : ", ";
                valid += identity_name(id);
            }
            throw ConfigError("unknown identity \"" + opts.identity + "\"; valid ids: " + valid);
        }
    }

    const std::vector<FamilySpec> config = load_config(opts.common);
    std::vector<FamilySpec> families;
    if (!opts.family.empty()) {
        families.push_back(resolve_family(opts.family, config));
    } else {
        families = builtin_plus_config(config);
    }

    const SweepBounds bounds{opts.max_n, opts.max_m, opts.max_p, opts.experimental_p0};

    std::vector<IdentityReport> reports;
    if (id_filter.has_value()) {
        std::sort(families.begin(), families.end(),
                  [](const FamilySpec& x, const FamilySpec& y) { return x.name < y.name; });
        for (const FamilySpec& fam : families) {
            reports.push_back(check_identity(*id_filter, fam, bounds));
        }
    } else {
        reports = run_suite(families, bounds);
    }

    std::size_t failed = 0, passed = 0, skipped = 0;
    for (const IdentityReport& r : reports) {
        failed += r.status == CheckStatus::fail ? 1 : 0;
        passed += r.status == CheckStatus::pass ? 1 : 0;
        skipped += r.status == CheckStatus::skipped ? 1 : 0;
    }

    if (json_mode(opts.common)) {
        emit(reports_to_json_text(reports));
    } else {
        std::size_t id_w = 8, fam_w = 6, range_w = 5;
        for (const IdentityReport& r : reports) {
            id_w = std::max(id_w, identity_name(r.identity).size());
            fam_w = std::max(fam_w, r.family.size());
            range_w = std::max(range_w, r.range.size());
        }
        std::cout << std::left << std::setw(static_cast<int>(id_w) + 2) << "IDENTITY"
                  << std::setw(static_cast<int>(fam_w) + 2) << "FAMILY"
                  << std::setw(static_cast<int>(range_w) + 2) << "RANGE"
                  << "STATUS\n";
        for (const IdentityReport& r : reports) {
            std::cout << std::left << std::setw(static_cast<int>(id_w) + 2)
                      << std::string(identity_name(r.identity))
                      << std::setw(static_cast<int>(fam_w) + 2) << r.family
                      << std::setw(static_cast<int>(range_w) + 2) << r.range
                      << std::string(status_name(r.status)) << "\n";
            if (r.counterexample.has_value()) {
                std::cout << "    counterexample at " << indices_text(r.counterexample->indices)
                          << ": lhs = " << r.counterexample->lhs
                          << ", rhs = " << r.counterexample->rhs << "\n";
            }
            if (!r.reason.empty()) {
                std::cout << "    reason: " << r.reason << "\n";
            }
        }
        std::cout << reports.size() << " checks: " << passed << " passed, " << failed
                  << " failed, " << skipped << " skipped\n";
    }
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

// ---- bench ----------------------------------------------------------------

struct BenchOpts {
    CommonOpts common;
    std::string family;
    unsigned long long n = 0;
    std::string at;
};

int run_bench(const BenchOpts& opts) {
    const std::vector<FamilySpec> config = load_config(opts.common);
    const FamilySpec spec = resolve_family(opts.family, config);
    if (opts.n < 1) {
        throw ConfigError("bench: need n >= 1");
    }
    const Rational x0 = parse_rational(opts.at);

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const NumericEval iter = eval_term_numeric_iter(spec, opts.n, x0);
    const auto t1 = clock::now();
    const NumericEval mat = eval_term_numeric_matrix(spec, opts.n, x0);
    const auto t2 = clock::now();

    if (!(iter.value == mat.value)) {
        std::cerr << "bench: strategies disagree, refusing to report timings "
                  << "(iteration vs matrix power is a correctness bug)\n";
        return kExitCheckFailed;
    }

    const double iter_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double mat_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    const std::string value = iter.value.str();
    const std::uint64_t steps = opts.n >= 2 ? opts.n - 1 : 0;

    if (json_mode(opts.common)) {
        json doc;
        doc["family"] = spec.name;
        doc["n"] = opts.n;
        doc["at"] = x0.str();
        doc["agree"] = true;
        doc["value_length"] = value.size();
        doc["value_head"] = value.substr(0, 16);
        // wall_ms fields are measurements and therefore not deterministic
        doc["iteration"] = {{"wall_ms", iter_ms},
                            {"big_mults", iter.big_mults},
                            {"recurrence_steps", steps}};
        doc["matrix"] = {{"wall_ms", mat_ms},
                         {"big_mults", mat.big_mults},
                         {"matrix_mults", mat.mat_mults}};
        emit(doc.dump(2));
    } else {
        std::cout << "family " << spec.name << ", n = " << opts.n << ", x0 = " << x0.str()
                  << "\n";
        std::cout << std::left << std::setw(12) << "STRATEGY" << std::setw(12) << "WALL_MS"
                  << std::setw(12) << "BIG_MULTS"
                  << "OPS\n";
        std::cout << std::left << std::setw(12) << "iteration" << std::setw(12) << iter_ms
                  << std::setw(12) << iter.big_mults << steps << " recurrence steps\n";
        std::cout << std::left << std::setw(12) << "matrix" << std::setw(12) << mat_ms
                  << std::setw(12) << mat.big_mults << mat.mat_mults
                  << " matrix squarings/multiplies\n";
        std::cout << "agree: true, value_length: " << value.size() << ", value_head: "
                  << value.substr(0, 16) << "\n";
    }
    return kExitOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact Fibonacci-type / Lucas-type polynomial sequences via the Q(x) matrix"};
    app.require_subcommand(1);

    ListOpts list_opts;
    CLI::App* list_cmd = app.add_subcommand("list", "List known polynomial families");
    add_common(list_cmd, list_opts.common);
    list_cmd->add_option("--kind", list_opts.kind_filter, "Only this kind")
        ->check(CLI::IsMember({"fibonacci", "lucas"}));

    GenOpts gen_opts;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate symbolic terms");
    add_common(gen_cmd, gen_opts.common);
    gen_cmd->add_option("--family", gen_opts.family, "Family name")->required();
    gen_cmd->add_option("--from", gen_opts.from, "First index")->required();
    gen_cmd->add_option("--to", gen_opts.to, "Last index")->required();
    gen_cmd->add_option("--method", gen_opts.method, "Generation strategy")
        ->check(CLI::IsMember({"auto", "iter", "matpow"}))
        ->capture_default_str();

    EvalOpts eval_opts;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one term at a rational point");
    add_common(eval_cmd, eval_opts.common);
    eval_cmd->add_option("--family", eval_opts.family, "Family name")->required();
    eval_cmd->add_option("--n", eval_opts.n, "Term index")->required();
    eval_cmd->add_option("--at", eval_opts.at, "Evaluation point (rational)")->required();
    eval_cmd->add_option("--method", eval_opts.method, "Evaluation strategy")
        ->check(CLI::IsMember({"matrix", "symbolic", "both"}))
        ->capture_default_str();

    QpowOpts qpow_opts;
    CLI::App* qpow_cmd = app.add_subcommand("qpow", "Print Q(x)^n for a family");
    add_common(qpow_cmd, qpow_opts.common);
    qpow_cmd->add_option("--family", qpow_opts.family, "Family name")->required();
    qpow_cmd->add_option("--n", qpow_opts.n, "Exponent")->required();

    CheckOpts check_opts;
    CLI::App* check_cmd = app.add_subcommand("check", "Verify identities over index sweeps");
    add_common(check_cmd, check_opts.common);
    CLI::Option* all_flag = check_cmd->add_flag("--all", check_opts.all, "Every identity, "
                                                "every family");
    check_cmd->add_option("--identity", check_opts.identity, "One identity id")
        ->excludes(all_flag);
    check_cmd->add_option("--family", check_opts.family, "One family")->excludes(all_flag);
    check_cmd->add_option("--max-n", check_opts.max_n, "n sweep bound")->capture_default_str();
    check_cmd->add_option("--max-m", check_opts.max_m, "m sweep bound")->capture_default_str();
    check_cmd->add_option("--max-p", check_opts.max_p, "p sweep bound")->capture_default_str();
    check_cmd->add_flag("--experimental-p0", check_opts.experimental_p0,
                        "Also sweep p = 0 in the fibonacci binomial expansion");

    BenchOpts bench_opts;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Time iteration vs matrix-power numeric evaluation");
    add_common(bench_cmd, bench_opts.common);
    bench_cmd->add_option("--family", bench_opts.family, "Family name")->required();
    bench_cmd->add_option("--n", bench_opts.n, "Term index")->required();
    bench_cmd->add_option("--at", bench_opts.at, "Evaluation point (rational)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (list_cmd->parsed()) return run_list(list_opts);
    if (gen_cmd->parsed()) return run_gen(gen_opts);
    if (eval_cmd->parsed()) return run_eval(eval_opts);
    if (qpow_cmd->parsed()) return run_qpow(qpow_opts);
    if (check_cmd->parsed()) return run_check(check_opts);
    if (bench_cmd->parsed()) return run_bench(bench_opts);
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
