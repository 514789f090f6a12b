#include "fock/laplace.hpp"

namespace fock {

void KernelRegistry::register_pair(const std::string& field_a, const std::string& field_b,
                                   KernelEntry entry) {
    entries_[{field_a, field_b}] = entry;
}

std::optional<KernelEntry> KernelRegistry::lookup(const std::string& field_a,
                                                  const std::string& field_b) const {
    auto it = entries_.find({field_a, field_b});
    if (it != entries_.end()) return it->second;
    it = entries_.find({field_b, field_a});
    if (it != entries_.end()) return it->second;
    if (field_a == field_b) return KernelEntry{KernelKind::Wightman, {}};
    return std::nullopt;
}

std::optional<PropagatorSymbol> pair_generator_symbol(const Generator& g, const Generator& h,
                                                      const KernelRegistry& reg) {
    auto entry = reg.lookup(g.field, h.field);
    if (!entry) return std::nullopt;
    if (g.point == h.point && !reg.allow_diagonal()) {
        throw Error("DiagonalContraction",
                    "pairing two factors at point " + std::to_string(g.point));
    }
    return PropagatorSymbol::make(entry->kind, entry->name, {g.point, g.deriv}, {h.point, h.deriv},
                                  true);
}

ScalarPoly pair_generators(const Generator& g, const Generator& h, const KernelRegistry& reg) {
    auto sym = pair_generator_symbol(g, h, reg);
    return sym ? ScalarPoly(*sym) : ScalarPoly{};
}

namespace {

// Sum over all bijections between the factor positions of a and b of the
// product of generator pairings: the permanent-style closed form.
ScalarPoly pair_monomials_closed(const Monomial& a, const Monomial& b, const KernelRegistry& reg) {
    const std::vector<Generator> A = a.expanded();
    const std::vector<Generator> B = b.expanded();
    if (A.size() != B.size()) return {};
    ScalarPoly out;
    if (A.empty()) return ScalarPoly(1);
    std::vector<char> used(B.size(), 0);
    std::vector<SymbolMonomial::Factor> picked;
    picked.reserve(A.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == A.size()) {
            out.add_term(SymbolMonomial::from_factors(picked), Rational(1));
            return;
        }
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (used[j]) continue;
            auto sym = pair_generator_symbol(A[i], B[j], reg);
            if (!sym) continue;
            used[j] = 1;
            picked.push_back({*sym, 1});
            self(self, i + 1);
            picked.pop_back();
            used[j] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

// The defining recursion: peel one factor g off b and split a one factor at
// a time, (a | g b') = sum over factors t of a of mult(t) (t|g) (a/t | b').
ScalarPoly pair_monomials_recursive(const Monomial& a, const Monomial& b, const KernelRegistry& reg) {
    if (b.is_unit()) {
        return a.is_unit() ? ScalarPoly(1) : ScalarPoly{};
    }
    if (a.is_unit()) return {};
    const Generator& g = b.factors().front().first;
    Monomial rest = b.minus_one(g);
    ScalarPoly out;
    for (const auto& [t, mult] : a.factors()) {
        auto sym = pair_generator_symbol(t, g, reg);
        if (!sym) continue;
        ScalarPoly tail = pair_monomials_recursive(a.minus_one(t), rest, reg);
        if (tail.is_zero()) continue;
        out += ScalarPoly(*sym) * ScalarPoly(Rational(mult)) * tail;
    }
    return out;
}

template <typename MonomialPairing>
ScalarPoly bilinear_pairing(const FieldPoly& a, const FieldPoly& b, MonomialPairing&& pairing) {
    ScalarPoly out;
    for (const auto& [ma, ua] : a.terms()) {
        for (const auto& [mb, ub] : b.terms()) {
            if (ma.degree() != mb.degree()) continue;
            ScalarPoly p = pairing(ma, mb);
            if (p.is_zero()) continue;
            out += ua * ub * p;
        }
    }
    return out;
}

} // namespace

ScalarPoly laplace_pair(const FieldPoly& a, const FieldPoly& b, const KernelRegistry& reg) {
    return bilinear_pairing(a, b, [&](const Monomial& ma, const Monomial& mb) {
        return pair_monomials_closed(ma, mb, reg);
    });
}

ScalarPoly laplace_pair_recursive(const FieldPoly& a, const FieldPoly& b, const KernelRegistry& reg) {
    return bilinear_pairing(a, b, [&](const Monomial& ma, const Monomial& mb) {
        return pair_monomials_recursive(ma, mb, reg);
    });
}

} // namespace fock
