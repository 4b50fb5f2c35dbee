#include "fibpoly/family.hpp"

#include "fibpoly/parse.hpp"

#include <json.hpp>

#include <unordered_set>
#include <utility>

namespace fibpoly {

using nlohmann::json;

std::string_view kind_name(FamilyKind kind) {
    return kind == FamilyKind::fibonacci ? "fibonacci" : "lucas";
}

void validate(const FamilySpec& spec) {
    if (spec.name.empty()) {
        throw std::invalid_argument("family name must be non-empty");
    }
    if (spec.a.is_zero()) {
        throw std::invalid_argument("family \"" + spec.name + "\": a must be nonzero");
    }
    if (spec.c.is_zero()) {
        throw std::invalid_argument("family \"" + spec.name + "\": c(x) must be nonzero");
    }
    if (spec.d.is_zero()) {
        throw std::invalid_argument("family \"" + spec.name + "\": d(x) must be nonzero");
    }
    if (spec.kind == FamilyKind::lucas && spec.b.is_zero()) {
        throw std::invalid_argument("family \"" + spec.name + "\": b(x) must be nonzero");
    }
}

namespace {

FamilySpec fib_family(std::string name, std::string_view a, std::string_view c,
                      std::string_view d) {
    FamilySpec spec;
    spec.name = std::move(name);
    spec.kind = FamilyKind::fibonacci;
    spec.a = parse_rational(a);
    spec.c = parse_poly(c);
    spec.d = parse_poly(d);
    return spec;
}

FamilySpec lucas_family(std::string name, std::string_view a, std::string_view b,
                        std::string_view c, std::string_view d) {
    FamilySpec spec;
    spec.name = std::move(name);
    spec.kind = FamilyKind::lucas;
    spec.a = parse_rational(a);
    spec.b = parse_poly(b);
    spec.c = parse_poly(c);
    spec.d = parse_poly(d);
    return spec;
}

std::vector<FamilySpec> make_builtins() {
    std::vector<FamilySpec> out;
    out.push_back(fib_family("fibonacci", "1", "x", "1"));
    out.push_back(fib_family("pell", "1", "2x", "1"));
    out.push_back(fib_family("fermat", "1", "3x", "-2"));
    out.push_back(fib_family("chebyshev-u", "1", "2x", "-1"));
    out.push_back(fib_family("jacobsthal", "1", "1", "2x"));
    out.push_back(fib_family("morgan-voyce-b", "1", "x+2", "-1"));
    out.push_back(fib_family("vieta", "1", "x", "-1"));
    out.push_back(lucas_family("lucas", "2", "x", "x", "1"));
    out.push_back(lucas_family("pell-lucas", "2", "2x", "2x", "1"));
    out.push_back(lucas_family("pell-lucas-prime", "1", "x", "2x", "1"));
    out.push_back(lucas_family("fermat-lucas", "2", "3x", "3x", "-2"));
    out.push_back(lucas_family("chebyshev-t", "1", "x", "2x", "-1"));
    out.push_back(lucas_family("jacobsthal-lucas", "1", "1", "1", "2x"));
    out.push_back(lucas_family("morgan-voyce-c", "2", "x+2", "x+2", "-1"));
    out.push_back(lucas_family("vieta-lucas", "2", "x", "x", "-1"));
    for (const FamilySpec& spec : out) {
        validate(spec);
    }
    return out;
}

}  // namespace

const std::vector<FamilySpec>& builtin_families() {
    static const std::vector<FamilySpec> families = make_builtins();
    return families;
}

const FamilySpec* find_builtin(std::string_view name) {
    for (const FamilySpec& spec : builtin_families()) {
        if (spec.name == name) {
            return &spec;
        }
    }
    return nullptr;
}

FamilySpec companion_fib(const FamilySpec& spec) {
    if (spec.kind != FamilyKind::lucas) {
        throw std::domain_error("companion_fib: \"" + spec.name + "\" is not a lucas-type family");
    }
    FamilySpec fib;
    fib.name = spec.name + "-companion";
    fib.kind = FamilyKind::fibonacci;
    fib.a = spec.a;
    fib.c = spec.c;
    fib.d = spec.d;
    return fib;
}

FamilyPair make_family_pair(const FamilySpec& lucas_spec) {
    return FamilyPair{lucas_spec, companion_fib(lucas_spec)};
}

namespace {

std::string field_text(const json& item, const std::string& where, const std::string& key) {
    if (!item.contains(key)) {
        throw ConfigError(where + ": missing field \"" + key + "\"");
    }
    if (!item.at(key).is_string()) {
        throw ConfigError(where + ": field \"" + key + "\" must be a string");
    }
    return item.at(key).get<std::string>();
}

}  // namespace

std::vector<FamilySpec> load_families(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ConfigError("config: top-level value must be an array of family objects");
    }

    std::vector<FamilySpec> out;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& item = doc[i];
        std::string where = "families[" + std::to_string(i) + "]";
        if (!item.is_object()) {
            throw ConfigError(where + ": must be an object");
        }

        FamilySpec spec;
        spec.name = field_text(item, where, "name");
        if (!spec.name.empty()) {
            where = "family \"" + spec.name + "\"";
        }

        const std::string kind = field_text(item, where, "kind");
        if (kind == "fibonacci") {
            spec.kind = FamilyKind::fibonacci;
        } else if (kind == "lucas") {
            spec.kind = FamilyKind::lucas;
        } else {
            throw ConfigError(where + ": kind must be \"fibonacci\" or \"lucas\", got \"" + kind +
                              "\"");
        }

        for (const auto& [key, value] : item.items()) {
            const bool known = key == "name" || key == "kind" || key == "a" || key == "c" ||
                               key == "d" ||
                               (key == "b" && spec.kind == FamilyKind::lucas);
            if (!known) {
                throw ConfigError(where + ": unknown field \"" + key + "\"");
            }
        }

        auto parse_field = [&](const std::string& key, auto parser) {
            const std::string text = field_text(item, where, key);
            try {
                return parser(text);
            } catch (const ParseError& e) {
                throw ConfigError(where + ": field \"" + key + "\": " + e.what());
            }
        };
        spec.a = parse_field("a", [](const std::string& s) { return parse_rational(s); });
        spec.c = parse_field("c", [](const std::string& s) { return parse_poly(s); });
        spec.d = parse_field("d", [](const std::string& s) { return parse_poly(s); });
        if (spec.kind == FamilyKind::lucas) {
            spec.b = parse_field("b", [](const std::string& s) { return parse_poly(s); });
        }

        try {
            validate(spec);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
        if (!seen.insert(spec.name).second) {
            throw ConfigError("config: duplicate family name \"" + spec.name + "\"");
        }
        out.push_back(std::move(spec));
    }
    return out;
}

std::string families_to_json_text(const std::vector<FamilySpec>& specs) {
    json doc = json::array();
    for (const FamilySpec& spec : specs) {
        json item;
        item["name"] = spec.name;
        item["kind"] = std::string(kind_name(spec.kind));
        item["a"] = spec.a.str();
        if (spec.kind == FamilyKind::lucas) {
            item["b"] = spec.b.str();
        }
        item["c"] = spec.c.str();
        item["d"] = spec.d.str();
        doc.push_back(std::move(item));
    }
    return doc.dump(2);
}

}  // namespace fibpoly
