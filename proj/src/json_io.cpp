#include "fock/json_io.hpp"

#include <cmath>

namespace fock {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw Error("BadJson", msg);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

std::uint32_t nat_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        bad(std::string("key '") + key + "' must be a natural number");
    }
    return v.get<std::uint32_t>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) bad(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

MultiIndex deriv_from_json(const Json& j, std::size_t expect_dim) {
    if (!j.is_array()) bad("'deriv' must be an array of naturals");
    std::vector<std::uint32_t> entries;
    entries.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0) {
            bad("'deriv' entries must be naturals");
        }
        entries.push_back(e.get<std::uint32_t>());
    }
    if (expect_dim != 0 && entries.size() != expect_dim) {
        throw Error("DimensionMismatch", "derivative list has " + std::to_string(entries.size()) +
                                             " entries, dimension is " + std::to_string(expect_dim));
    }
    return MultiIndex(std::move(entries));
}

Json deriv_to_json(const MultiIndex& mi) {
    Json a = Json::array();
    for (auto e : mi.exponents()) a.push_back(e);
    return a;
}

std::string kind_to_string(const PropagatorSymbol& s) {
    switch (s.kind()) {
        case KernelKind::Wightman: return "wightman";
        case KernelKind::Feynman: return "feynman";
        case KernelKind::Named: return s.name();
    }
    return {};
}

std::pair<KernelKind, std::string> kind_from_string(const std::string& k) {
    if (k == "wightman") return {KernelKind::Wightman, {}};
    if (k == "feynman") return {KernelKind::Feynman, {}};
    if (k.empty()) bad("empty kernel kind");
    return {KernelKind::Named, k};
}

KernelSlot slot_from_json(const Json& j, std::size_t expect_dim) {
    KernelSlot s;
    s.point = nat_field(j, "point");
    if (s.point == 0) bad("slot point must be at least 1");
    s.deriv = deriv_from_json(field(j, "deriv"), expect_dim);
    return s;
}

Json slot_to_json(const KernelSlot& s) {
    return Json{{"point", s.point}, {"deriv", deriv_to_json(s.deriv)}};
}

double double_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number()) bad(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

} // namespace

Json to_json(const Generator& g) {
    return Json{{"field", g.field}, {"point", g.point}, {"deriv", deriv_to_json(g.deriv)}};
}

Generator generator_from_json(const Json& j, std::size_t expect_dim) {
    Generator g;
    g.field = string_field(j, "field");
    if (g.field.empty()) bad("generator field name must be nonempty");
    g.point = nat_field(j, "point");
    if (g.point == 0) bad("generator point must be at least 1");
    g.deriv = deriv_from_json(field(j, "deriv"), expect_dim);
    return g;
}

Json to_json(const Monomial& m) {
    Json a = Json::array();
    for (const auto& [g, mult] : m.factors()) {
        Json e = to_json(g);
        e["mult"] = mult;
        a.push_back(std::move(e));
    }
    return a;
}

Monomial monomial_from_json(const Json& j, std::size_t expect_dim) {
    if (!j.is_array()) bad("monomial must be an array of generators");
    std::vector<Monomial::Factor> fs;
    fs.reserve(j.size());
    for (const auto& e : j) {
        std::uint32_t mult = e.contains("mult") ? nat_field(e, "mult") : 1;
        fs.push_back({generator_from_json(e, expect_dim), mult});
    }
    return Monomial::from_factors(std::move(fs));
}

Json to_json(const PropagatorSymbol& s) {
    return Json{{"kind", kind_to_string(s)},
                {"left", slot_to_json(s.left())},
                {"right", slot_to_json(s.right())}};
}

PropagatorSymbol symbol_from_json(const Json& j, std::size_t expect_dim, bool allow_diagonal) {
    auto [kind, name] = kind_from_string(string_field(j, "kind"));
    KernelSlot left = slot_from_json(field(j, "left"), expect_dim);
    KernelSlot right = slot_from_json(field(j, "right"), expect_dim);
    return PropagatorSymbol::make(kind, std::move(name), std::move(left), std::move(right),
                                  allow_diagonal);
}

Json to_json(const ScalarPoly& s) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : s.terms()) {
        Json symbols = Json::array();
        for (const auto& [sym, pow] : mono.factors()) {
            Json e = to_json(sym);
            e["power"] = pow;
            symbols.push_back(std::move(e));
        }
        terms.push_back(Json{{"coeff", coeff.to_string()}, {"symbols", std::move(symbols)}});
    }
    return terms;
}

ScalarPoly scalar_poly_from_json(const Json& j, std::size_t expect_dim, bool allow_diagonal) {
    if (!j.is_array()) bad("scalar polynomial must be an array of terms");
    ScalarPoly out;
    for (const auto& t : j) {
        Rational coeff = Rational::from_string(string_field(t, "coeff"));
        const Json& symbols = field(t, "symbols");
        if (!symbols.is_array()) bad("'symbols' must be an array");
        std::vector<SymbolMonomial::Factor> fs;
        fs.reserve(symbols.size());
        for (const auto& e : symbols) {
            std::uint32_t pow = e.contains("power") ? nat_field(e, "power") : 1;
            fs.push_back({symbol_from_json(e, expect_dim, allow_diagonal), pow});
        }
        out.add_term(SymbolMonomial::from_factors(std::move(fs)), coeff);
    }
    return out;
}

Json to_json(const FieldPoly& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        terms.push_back(Json{{"monomial", to_json(mono)}, {"coeff", to_json(coeff)}});
    }
    return Json{{"terms", std::move(terms)}};
}

FieldPoly field_poly_from_json(const Json& j, std::size_t expect_dim, bool allow_diagonal) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    FieldPoly out;
    for (const auto& t : terms) {
        Monomial m = monomial_from_json(field(t, "monomial"), expect_dim);
        ScalarPoly c = scalar_poly_from_json(field(t, "coeff"), expect_dim, allow_diagonal);
        out.add_term(m, c);
    }
    return out;
}

Json to_json(const TensorDecomp& d) {
    Json pairs = Json::array();
    for (const auto& t : d.terms()) {
        pairs.push_back(Json{{"coeff", to_json(t.coeff)},
                             {"left", to_json(t.left)},
                             {"right", to_json(t.right)}});
    }
    return Json{{"pairs", std::move(pairs)}};
}

Json to_json(std::complex<double> z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const CausalReport& r) {
    std::string status;
    switch (r.status) {
        case CausalReport::Status::Pass: status = "pass"; break;
        case CausalReport::Status::Fail: status = "fail"; break;
        case CausalReport::Status::OrderViolated: status = "order_violated"; break;
    }
    return Json{{"status", status},
                {"max_abs_diff", r.max_abs_diff},
                {"tol", r.tolerance},
                {"terms", r.terms_compared}};
}

KernelRegistry registry_from_json(const Json& j) {
    KernelRegistry reg;
    if (j.contains("allow_diagonal")) {
        const Json& v = j.at("allow_diagonal");
        if (!v.is_boolean()) bad("'allow_diagonal' must be a boolean");
        reg.set_allow_diagonal(v.get<bool>());
    }
    if (j.contains("pairs")) {
        const Json& pairs = j.at("pairs");
        if (!pairs.is_array()) bad("'pairs' must be an array");
        for (const auto& p : pairs) {
            auto [kind, name] = kind_from_string(string_field(p, "kind"));
            reg.register_pair(string_field(p, "fieldA"), string_field(p, "fieldB"),
                              KernelEntry{kind, std::move(name)});
        }
    }
    return reg;
}

KernelTable kernel_table_from_json(const Json& j, std::size_t expect_dim, bool allow_diagonal) {
    const Json& kernels = field(j, "kernels");
    if (!kernels.is_array()) bad("'kernels' must be an array");
    KernelTable table;
    for (const auto& k : kernels) {
        PropagatorSymbol sym = symbol_from_json(k, expect_dim, allow_diagonal);
        double re = double_field(k, "re");
        double im = double_field(k, "im");
        table.set(sym, {re, im});
    }
    return table;
}

TimeAssignment times_from_json(const Json& j) {
    const Json& times = field(j, "times");
    if (!times.is_object()) bad("'times' must map point labels to numbers");
    TimeAssignment out;
    for (auto it = times.begin(); it != times.end(); ++it) {
        const std::string& key = it.key();
        bool digits = !key.empty() && key.size() <= 9 &&
                      key.find_first_not_of("0123456789") == std::string::npos;
        if (!digits) bad("time key '" + key + "' is not a point label");
        std::uint32_t point = static_cast<std::uint32_t>(std::stoul(key));
        if (point == 0) bad("time key '" + key + "' is not a valid point label");
        if (!it.value().is_number()) bad("time for point " + it.key() + " must be a number");
        double t = it.value().get<double>();
        if (!std::isfinite(t)) bad("time for point " + it.key() + " must be finite");
        out.times[point] = t;
    }
    return out;
}

} // namespace fock
