#pragma once

#include "fibpoly/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibpoly {

enum class FamilyKind {
    fibonacci,  // G_0 = 0, G_1 = a
    lucas,      // G_0 = a, G_1 = b(x)
};

std::string_view kind_name(FamilyKind kind);

/// Parameters of one polynomial family following the second-order recurrence
/// G_n = c(x) G_{n-1} + d(x) G_{n-2}.  The scalar `a` is G_1 for fibonacci
/// families and G_0 for lucas families; `b` is the lucas G_1 and stays unused
/// (zero) on fibonacci families.
struct FamilySpec {
    std::string name;
    FamilyKind kind = FamilyKind::fibonacci;
    Rational a;
    Poly b;
    Poly c;
    Poly d;

    bool operator==(const FamilySpec&) const = default;
};

/// A lucas family bundled with the fibonacci companion sharing (a, c, d);
/// the mixed identities are stated for exactly this pairing (L_0 = F_1 = a).
struct FamilyPair {
    FamilySpec lucas;
    FamilySpec fib;
};

/// Throws std::invalid_argument unless a != 0, c and d are nonzero and, for
/// lucas families, b is nonzero.
void validate(const FamilySpec& spec);

/// The 15 built-in families, fibonacci kinds first, in catalog order.
const std::vector<FamilySpec>& builtin_families();

/// Builtin lookup by slug name; nullptr when absent.
const FamilySpec* find_builtin(std::string_view name);

/// The fibonacci companion of a lucas family: same a, c, d.
/// Throws std::domain_error when spec is not lucas-kind.
FamilySpec companion_fib(const FamilySpec& spec);

FamilyPair make_family_pair(const FamilySpec& lucas_spec);

/// Raised by load_families with a message naming the offending family/field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loads a JSON array of family objects:
///   {"name": ..., "kind": "fibonacci"|"lucas", "a": rational text,
///    "b": polynomial text (lucas only), "c": ..., "d": ...}
/// Unknown fields are rejected; every spec is validated.
std::vector<FamilySpec> load_families(std::string_view json_text);

/// Serializes specs to the same JSON schema load_families accepts.
std::string families_to_json_text(const std::vector<FamilySpec>& specs);

}  // namespace fibpoly
