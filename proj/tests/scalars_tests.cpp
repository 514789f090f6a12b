#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fock/printer.hpp"
#include "fock/scalar_poly.hpp"
#include "support/random_gen.hpp"

using namespace fock;
using testgen::Rng;

namespace {

KernelSlot slot(std::uint32_t p, MultiIndex d = MultiIndex(4)) { return {p, std::move(d)}; }
PropagatorSymbol dplus(std::uint32_t i, std::uint32_t j) {
    return PropagatorSymbol::wightman(slot(i), slot(j));
}
PropagatorSymbol dfey(std::uint32_t i, std::uint32_t j) {
    return PropagatorSymbol::feynman(slot(i), slot(j));
}

// Random scalar polynomial over a small symbol pool.
ScalarPoly rand_scalar(Rng& rng) {
    const PropagatorSymbol pool[] = {dplus(1, 2), dplus(2, 1), dfey(1, 3), dplus(2, 3)};
    ScalarPoly p;
    int terms = rng.range(0, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<SymbolMonomial::Factor> fs;
        int syms = rng.range(0, 2);
        for (int s = 0; s < syms; ++s) {
            fs.push_back({pool[rng.range(0, 3)], static_cast<std::uint32_t>(rng.range(1, 2))});
        }
        p.add_term(SymbolMonomial::from_factors(std::move(fs)), testgen::rational(rng, 9, 9, true));
    }
    return p;
}

} // namespace

TEST_SUITE("rational") {
    TEST_CASE("reduction and canonical forms") {
        CHECK(Rational(BigInt(6), BigInt(4)) == Rational(BigInt(3), BigInt(2)));
        CHECK(Rational(BigInt(1), BigInt(-2)) == Rational(BigInt(-1), BigInt(2)));
        CHECK(Rational(BigInt(1), BigInt(-2)).den() == 2);
        CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
        CHECK(Rational(BigInt(0), BigInt(7)).is_zero());
        CHECK(Rational(BigInt(-4), BigInt(-6)) == Rational(BigInt(2), BigInt(3)));
    }

    TEST_CASE("zero denominator rejected") {
        CHECK_THROWS_WITH_AS(Rational(BigInt(1), BigInt(0)), doctest::Contains("zero"), Error);
        try {
            Rational r(BigInt(1), BigInt(0));
        } catch (const Error& e) {
            CHECK(e.kind() == "ZeroDenominator");
        }
    }

    TEST_CASE("addition matches integer cross-multiplication for 64-bit inputs") {
        Rng rng(2024001);
        for (int i = 0; i < 500; ++i) {
            long long p = (static_cast<long long>(rng.eng()) >> 1);
            long long q = static_cast<long long>(rng.eng() % 0x7fffffffffffULL) + 1;
            long long r = (static_cast<long long>(rng.eng()) >> 1);
            long long s = static_cast<long long>(rng.eng() % 0x7fffffffffffULL) + 1;
            Rational a{BigInt(p), BigInt(q)};
            Rational b{BigInt(r), BigInt(s)};
            Rational sum = a + b;
            // Independent route: compare against raw integer cross-multiplication.
            BigInt lhs = sum.num() * (BigInt(q) * BigInt(s));
            BigInt rhs = (BigInt(p) * BigInt(s) + BigInt(r) * BigInt(q)) * sum.den();
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("field operations") {
        Rng rng(2024002);
        for (int i = 0; i < 200; ++i) {
            Rational a = testgen::rational(rng, 50, 20, true);
            Rational b = testgen::rational(rng, 50, 20, false);
            CHECK((a * b) / b == a);
            CHECK(a + (-a) == Rational(0));
            CHECK(a - b == a + (-b));
        }
        CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    }

    TEST_CASE("ordering and text forms") {
        CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
        CHECK(Rational(-1) < Rational(0));
        CHECK(Rational(BigInt(3), BigInt(2)).to_string() == "3/2");
        CHECK(Rational(-7).to_string() == "-7");
        CHECK(Rational::from_string("-3/6") == Rational(BigInt(-1), BigInt(2)));
        CHECK(Rational::from_string("42") == Rational(42));
        CHECK(Rational::from_string("+5/10") == Rational(BigInt(1), BigInt(2)));
        CHECK_THROWS_AS(Rational::from_string("1/2/3"), Error);
        CHECK_THROWS_AS(Rational::from_string("x"), Error);
        CHECK_THROWS_AS(Rational::from_string(""), Error);
    }

    TEST_CASE("binomial coefficients") {
        CHECK(binomial_coefficient(0, 0) == 1);
        CHECK(binomial_coefficient(8, 4) == 70);
        CHECK(binomial_coefficient(5, 7) == 0);
        CHECK(binomial_coefficient(12, 6) == 924);
        CHECK(binomial_coefficient(6, 0) == 1);
    }
}

TEST_SUITE("propagator symbols") {
    TEST_CASE("feynman symbols canonicalize slot order") {
        CHECK(dfey(2, 1) == dfey(1, 2));
        CHECK(dfey(2, 1).left().point == 1);
        MultiIndex a{1, 0, 0, 0};
        PropagatorSymbol s = PropagatorSymbol::feynman(slot(2, a), slot(1));
        CHECK(s.left().point == 1);
        CHECK(s.right().deriv == a);
    }

    TEST_CASE("feynman slots at one point sort by derivative") {
        MultiIndex a{1, 0, 0, 0};
        PropagatorSymbol s = PropagatorSymbol::feynman(slot(1, a), slot(1), true);
        CHECK(s.left().deriv == MultiIndex(4));
        CHECK(s.right().deriv == a);
    }

    TEST_CASE("wightman symbols preserve slot order") {
        CHECK(dplus(2, 1) != dplus(1, 2));
        CHECK(dplus(2, 1).left().point == 2);
    }

    TEST_CASE("named kernels preserve slot order and name") {
        PropagatorSymbol k = PropagatorSymbol::named("K", slot(2), slot(1));
        CHECK(k.kind() == KernelKind::Named);
        CHECK(k.name() == "K");
        CHECK(k.left().point == 2);
        CHECK(k != PropagatorSymbol::named("K", slot(1), slot(2)));
        CHECK(k != PropagatorSymbol::named("L", slot(2), slot(1)));
    }

    TEST_CASE("diagonal slots need the flag") {
        CHECK_THROWS_AS(dplus(1, 1), Error);
        try {
            dplus(3, 3);
        } catch (const Error& e) {
            CHECK(e.kind() == "DiagonalContraction");
        }
        PropagatorSymbol d = PropagatorSymbol::wightman(slot(1), slot(1), true);
        CHECK(d.left().point == d.right().point);
    }

    TEST_CASE("symbol monomial multiset semantics") {
        SymbolMonomial m = SymbolMonomial::from_factors({{dplus(1, 2), 1}, {dplus(1, 2), 1}});
        REQUIRE(m.factors().size() == 1);
        CHECK(m.factors()[0].second == 2);
        CHECK(m.degree() == 2);
        CHECK(SymbolMonomial{}.degree() == 0);
        CHECK((m * SymbolMonomial(dfey(1, 3))).degree() == 3);
        // term order puts higher degree first
        CHECK(m < SymbolMonomial{});
        CHECK(SymbolMonomial(dplus(1, 2)) < SymbolMonomial{});
    }
}

TEST_SUITE("scalar ring") {
    TEST_CASE("additive identity") {
        ScalarPoly s(dplus(1, 2));
        CHECK(ScalarPoly{} + s == s);
        CHECK(s + ScalarPoly{} == s);
    }

    TEST_CASE("like terms collect") {
        ScalarPoly half(SymbolMonomial(dplus(1, 2)), Rational(BigInt(1), BigInt(2)));
        ScalarPoly sum = half + half;
        REQUIRE(sum.term_count() == 1);
        CHECK(sum == ScalarPoly(SymbolMonomial(dplus(1, 2)), Rational(1)));
    }

    TEST_CASE("wightman orientation keeps two distinct terms") {
        ScalarPoly sum = ScalarPoly(dplus(1, 2)) + ScalarPoly(dplus(2, 1));
        CHECK(sum.term_count() == 2);
    }

    TEST_CASE("multiplicative identity and powers") {
        Rng rng(7);
        ScalarPoly s = rand_scalar(rng);
        CHECK(ScalarPoly(1) * s == s);
        ScalarPoly d(dplus(1, 2));
        ScalarPoly sq = d * d;
        REQUIRE(sq.term_count() == 1);
        CHECK(sq.terms().begin()->first.factors()[0].second == 2);
    }

    TEST_CASE("ring axioms on random triples") {
        Rng rng(2024003);
        for (int i = 0; i < 200; ++i) {
            ScalarPoly a = rand_scalar(rng);
            ScalarPoly b = rand_scalar(rng);
            ScalarPoly c = rand_scalar(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + ScalarPoly{} == a);
            CHECK(a * ScalarPoly(1) == a);
            CHECK(a - a == ScalarPoly{});
        }
    }

    TEST_CASE("canonicalization is idempotent") {
        Rng rng(2024004);
        for (int i = 0; i < 50; ++i) {
            ScalarPoly a = rand_scalar(rng);
            ScalarPoly rebuilt;
            for (const auto& [m, c] : a.terms()) {
                auto fs = m.factors();
                rebuilt.add_term(SymbolMonomial::from_factors(fs), c);
            }
            CHECK(rebuilt == a);
        }
        PropagatorSymbol f = dfey(2, 1);
        CHECK(PropagatorSymbol::feynman(f.left(), f.right()) == f);
    }

    TEST_CASE("support and relabeling") {
        ScalarPoly s = ScalarPoly(dplus(1, 2)) * ScalarPoly(dfey(1, 3));
        CHECK(s.support() == std::set<std::uint32_t>{1, 2, 3});
        ScalarPoly r = s.relabeled({{1, 5}, {2, 7}});
        CHECK(r.support() == std::set<std::uint32_t>{3, 5, 7});
    }

    TEST_CASE("constants") {
        ScalarPoly c(Rational(BigInt(3), BigInt(4)));
        CHECK(c.is_constant());
        CHECK(c.constant_part() == Rational(BigInt(3), BigInt(4)));
        CHECK(!ScalarPoly(dplus(1, 2)).is_constant());
        CHECK(ScalarPoly{}.is_constant());
        CHECK(ScalarPoly(1).is_one());
    }
}
