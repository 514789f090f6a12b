#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fock/hopf.hpp"
#include "fock/laplace.hpp"
#include "support/random_gen.hpp"

using namespace fock;
using testgen::PolyOpts;
using testgen::Rng;

namespace {

Generator phi(std::uint32_t pt) { return {"phi", pt, MultiIndex(4)}; }
Generator psi(std::uint32_t pt) { return {"psi", pt, MultiIndex(4)}; }
Monomial power(const Generator& g, std::uint32_t n) { return Monomial::from_factors({{g, n}}); }
KernelSlot slot(std::uint32_t p, MultiIndex d = MultiIndex(4)) { return {p, std::move(d)}; }

ScalarPoly dplus(std::uint32_t i, std::uint32_t j) {
    return ScalarPoly(PropagatorSymbol::wightman(slot(i), slot(j)));
}

// Bicharacter right-hand sides computed through the coproduct, with each
// pairing evaluated in the closed form.
ScalarPoly expand_right(const FieldPoly& a, const FieldPoly& b, const FieldPoly& c,
                        const KernelRegistry& reg) {
    ScalarPoly out;
    TensorDecomp da = coproduct(a);
    for (const auto& t : da.terms()) {
        out += t.coeff * laplace_pair(FieldPoly(t.left), b, reg) *
               laplace_pair(FieldPoly(t.right), c, reg);
    }
    return out;
}

ScalarPoly expand_left(const FieldPoly& a, const FieldPoly& b, const FieldPoly& c,
                       const KernelRegistry& reg) {
    ScalarPoly out;
    TensorDecomp dc = coproduct(c);
    for (const auto& t : dc.terms()) {
        out += t.coeff * laplace_pair(a, FieldPoly(t.left), reg) *
               laplace_pair(b, FieldPoly(t.right), reg);
    }
    return out;
}

} // namespace

TEST_SUITE("generator pairing") {
    TEST_CASE("same species pair to the wightman kernel by default") {
        KernelRegistry reg;
        CHECK(pair_generators(phi(1), phi(2), reg) == dplus(1, 2));
        CHECK(pair_generators(phi(2), phi(1), reg) == dplus(2, 1));
    }

    TEST_CASE("derivative slots are carried through") {
        KernelRegistry reg;
        MultiIndex alpha{1, 0, 0, 0};
        MultiIndex beta{0, 2, 0, 0};
        ScalarPoly p = pair_generators({"phi", 1, alpha}, {"phi", 2, beta}, reg);
        REQUIRE(p.term_count() == 1);
        const auto& sym = p.terms().begin()->first.factors()[0].first;
        CHECK(sym.left().deriv == alpha);
        CHECK(sym.right().deriv == beta);
    }

    TEST_CASE("unregistered species pairs vanish") {
        KernelRegistry reg;
        CHECK(pair_generators(phi(1), psi(2), reg).is_zero());
    }

    TEST_CASE("registered cross-species kernels") {
        KernelRegistry reg;
        reg.register_pair("phi", "psi", {KernelKind::Named, "K"});
        ScalarPoly p = pair_generators(phi(1), psi(2), reg);
        REQUIRE(p.term_count() == 1);
        const auto& sym = p.terms().begin()->first.factors()[0].first;
        CHECK(sym.kind() == KernelKind::Named);
        CHECK(sym.name() == "K");
        CHECK(sym.left().point == 1);
        // reversed operand order keeps the operand slots in order
        ScalarPoly q = pair_generators(psi(2), phi(1), reg);
        CHECK(q.terms().begin()->first.factors()[0].first.left().point == 2);
    }

    TEST_CASE("diagonal pairing is rejected without the flag") {
        KernelRegistry reg;
        CHECK_THROWS_AS(pair_generators(phi(1), phi(1), reg), Error);
        reg.set_allow_diagonal(true);
        ScalarPoly p = pair_generators(phi(1), phi(1), reg);
        REQUIRE(p.term_count() == 1);
        const auto& sym = p.terms().begin()->first.factors()[0].first;
        CHECK(sym.left().point == 1);
        CHECK(sym.right().point == 1);
    }
}

TEST_SUITE("laplace pairing") {
    TEST_CASE("unit laws reduce to the counit") {
        KernelRegistry reg;
        FieldPoly prod(Monomial(phi(1)) * Monomial(phi(2)));
        CHECK(laplace_pair(FieldPoly::one(), prod, reg).is_zero());
        CHECK(laplace_pair(prod, FieldPoly::one(), reg).is_zero());
        Rng rng(2024030);
        PolyOpts o;
        for (int i = 0; i < 60; ++i) {
            FieldPoly a = testgen::field_poly(rng, o);
            CHECK(laplace_pair(FieldPoly::one(), a, reg) == counit(a));
            CHECK(laplace_pair(a, FieldPoly::one(), reg) == counit(a));
        }
    }

    TEST_CASE("squares against squares") {
        KernelRegistry reg;
        ScalarPoly expected = ScalarPoly(2) * dplus(1, 2) * dplus(1, 2);
        CHECK(laplace_pair(FieldPoly(power(phi(1), 2)), FieldPoly(power(phi(2), 2)), reg) ==
              expected);
    }

    TEST_CASE("degree mismatch vanishes") {
        KernelRegistry reg;
        CHECK(laplace_pair(FieldPoly(phi(1)), FieldPoly(power(phi(2), 2)), reg).is_zero());
        Rng rng(2024031);
        PolyOpts oa;
        oa.points = {1, 2};
        PolyOpts ob;
        ob.points = {3, 4};
        for (int i = 0; i < 60; ++i) {
            unsigned da = static_cast<unsigned>(rng.range(0, 3));
            unsigned db = static_cast<unsigned>(rng.range(0, 3));
            if (da == db) db += 1;
            Monomial a = testgen::monomial_of_degree(rng, oa, da);
            Monomial b = testgen::monomial_of_degree(rng, ob, db);
            CHECK(laplace_pair(FieldPoly(a), FieldPoly(b), reg).is_zero());
        }
    }

    TEST_CASE("factorial counting on powers") {
        KernelRegistry reg;
        Rational factorial(1);
        for (std::uint32_t n = 1; n <= 6; ++n) {
            factorial *= Rational(n);
            ScalarPoly expected(
                SymbolMonomial::from_factors({{PropagatorSymbol::wightman(slot(1), slot(2)), n}}),
                factorial);
            CHECK(laplace_pair(FieldPoly(power(phi(1), n)), FieldPoly(power(phi(2), n)), reg) ==
                  expected);
        }
    }

    TEST_CASE("closed form agrees with the recursion") {
        KernelRegistry reg;
        reg.register_pair("phi", "psi", {KernelKind::Named, "K"});
        Rng rng(2024032);
        PolyOpts oa;
        oa.points = {1, 2};
        oa.species = {"phi", "psi"};
        PolyOpts ob;
        ob.points = {3, 4};
        ob.species = {"phi", "psi"};
        for (int i = 0; i < 120; ++i) {
            Monomial a = testgen::monomial_of_degree(rng, oa, static_cast<unsigned>(rng.range(0, 4)));
            Monomial b = testgen::monomial_of_degree(rng, ob, static_cast<unsigned>(rng.range(0, 4)));
            CHECK(laplace_pair(FieldPoly(a), FieldPoly(b), reg) ==
                  laplace_pair_recursive(FieldPoly(a), FieldPoly(b), reg));
        }
    }

    TEST_CASE("recursive route matches the primitive split example") {
        KernelRegistry reg;
        CHECK(laplace_pair_recursive(FieldPoly(phi(1)), FieldPoly(power(phi(2), 2)), reg)
                  .is_zero());
    }

    TEST_CASE("bicharacter laws") {
        KernelRegistry reg;
        Rng rng(2024033);
        PolyOpts oa;
        oa.points = {1, 2};
        PolyOpts obc;
        obc.points = {3, 4, 5};
        for (int i = 0; i < 80; ++i) {
            FieldPoly a(testgen::monomial_of_degree(rng, oa, static_cast<unsigned>(rng.range(0, 3))));
            FieldPoly b(testgen::monomial_of_degree(rng, obc, static_cast<unsigned>(rng.range(0, 2))));
            FieldPoly c(testgen::monomial_of_degree(rng, obc, static_cast<unsigned>(rng.range(0, 2))));
            ScalarPoly lhs1 = laplace_pair(a, b * c, reg);
            CHECK(lhs1 == laplace_pair_recursive(a, b * c, reg));
            CHECK(lhs1 == expand_right(a, b, c, reg));
            // mirrored law, with the split on the right argument
            FieldPoly a2(
                testgen::monomial_of_degree(rng, oa, static_cast<unsigned>(rng.range(0, 2))));
            FieldPoly b2(
                testgen::monomial_of_degree(rng, oa, static_cast<unsigned>(rng.range(0, 2))));
            FieldPoly c2(
                testgen::monomial_of_degree(rng, obc, static_cast<unsigned>(rng.range(0, 3))));
            ScalarPoly lhs2 = laplace_pair(a2 * b2, c2, reg);
            CHECK(lhs2 == laplace_pair_recursive(a2 * b2, c2, reg));
            CHECK(lhs2 == expand_left(a2, b2, c2, reg));
        }
    }

    TEST_CASE("diagonal contraction propagates") {
        KernelRegistry reg;
        CHECK_THROWS_AS(laplace_pair(FieldPoly(phi(1)), FieldPoly(phi(1)), reg), Error);
    }

    TEST_CASE("coefficients multiply out front") {
        KernelRegistry reg;
        FieldPoly a(Monomial(phi(1)), ScalarPoly(Rational(BigInt(2), BigInt(3))));
        FieldPoly b(Monomial(phi(2)), ScalarPoly(5));
        ScalarPoly expected = ScalarPoly(Rational(BigInt(10), BigInt(3))) * dplus(1, 2);
        CHECK(laplace_pair(a, b, reg) == expected);
    }
}
