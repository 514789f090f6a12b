#include "fock/quantize.hpp"

#include <algorithm>

namespace fock {

namespace {

void check_disjoint_supports(const FieldPoly& c, const FieldPoly& d, const StarContext& ctx) {
    if (ctx.diagonal_policy == DiagonalPolicy::FormalSymbol) return;
    auto sc = c.support();
    auto sd = d.support();
    for (auto p : sc) {
        if (sd.count(p)) {
            throw Error("DiagonalContraction",
                        "star operands share point label " + std::to_string(p));
        }
    }
}

// Contraction expansion of a monomial pair: every factor of mc is either
// left alone or paired with a distinct unused factor of md.
FieldPoly star_monomials(const Monomial& mc, const Monomial& md, const KernelRegistry& reg) {
    const std::vector<Generator> C = mc.expanded();
    const std::vector<Generator> D = md.expanded();
    if (D.size() > 63) {
        throw Error("TooLarge", "star operand with more than 63 factors");
    }
    FieldPoly out;
    std::vector<SymbolMonomial::Factor> syms;
    std::vector<Monomial::Factor> unpaired;
    syms.reserve(C.size());
    unpaired.reserve(C.size() + D.size());
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == C.size()) {
            auto factors = unpaired;
            for (std::size_t j = 0; j < D.size(); ++j) {
                if (!(used >> j & 1)) factors.push_back({D[j], 1});
            }
            out.add_term(Monomial::from_factors(std::move(factors)),
                         ScalarPoly(SymbolMonomial::from_factors(syms), Rational(1)));
            return;
        }
        unpaired.push_back({C[i], 1});
        self(self, i + 1);
        unpaired.pop_back();
        for (std::size_t j = 0; j < D.size(); ++j) {
            if (used >> j & 1) continue;
            auto sym = pair_generator_symbol(C[i], D[j], reg);
            if (!sym) continue;
            used |= std::uint64_t{1} << j;
            syms.push_back({*sym, 1});
            self(self, i + 1);
            syms.pop_back();
            used &= ~(std::uint64_t{1} << j);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

FieldPoly star(const FieldPoly& c, const FieldPoly& d, const StarContext& ctx) {
    check_disjoint_supports(c, d, ctx);
    KernelRegistry reg = ctx.effective_registry();
    FieldPoly out;
    for (const auto& [mc, u] : c.terms()) {
        for (const auto& [md, v] : d.terms()) {
            FieldPoly expansion = star_monomials(mc, md, reg);
            ScalarPoly scale = u * v;
            for (const auto& [m, coeff] : expansion.terms()) {
                out.add_term(m, scale * coeff);
            }
        }
    }
    return out;
}

FieldPoly star_via_coproduct(const FieldPoly& c, const FieldPoly& d, const StarContext& ctx) {
    check_disjoint_supports(c, d, ctx);
    KernelRegistry reg = ctx.effective_registry();
    TensorDecomp dc = coproduct(c);
    TensorDecomp dd = coproduct(d);
    FieldPoly out;
    for (const auto& tc : dc.terms()) {
        for (const auto& td : dd.terms()) {
            if (tc.right.degree() != td.right.degree()) continue;
            ScalarPoly p = laplace_pair(FieldPoly(tc.right), FieldPoly(td.right), reg);
            if (p.is_zero()) continue;
            out.add_term(tc.left * td.left, tc.coeff * td.coeff * p);
        }
    }
    return out;
}

ScalarPoly vacuum(const FieldPoly& c) {
    return c.scalar_part();
}

FieldPoly star_power(std::span<const FieldPoly> factors, const StarContext& ctx) {
    FieldPoly acc = FieldPoly::one();
    for (const auto& f : factors) {
        acc = star(acc, f, ctx);
    }
    return acc;
}

} // namespace fock
