#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "fock/numeric.hpp"
#include "fock/timeorder.hpp"
#include "support/random_gen.hpp"

using namespace fock;
using testgen::Rng;

namespace {

KernelSlot slot(std::uint32_t p) { return {p, MultiIndex(4)}; }
PropagatorSymbol dplus(std::uint32_t i, std::uint32_t j) {
    return PropagatorSymbol::wightman(slot(i), slot(j));
}
PropagatorSymbol dfey(std::uint32_t i, std::uint32_t j) {
    return PropagatorSymbol::feynman(slot(i), slot(j));
}

} // namespace

TEST_SUITE("kernel tables") {
    TEST_CASE("strict lookups") {
        KernelTable t;
        t.set(dplus(1, 2), {0.5, 0.0});
        CHECK(t.get(dplus(1, 2)) == std::complex<double>{0.5, 0.0});
        CHECK(!t.contains(dplus(1, 3)));
        try {
            t.get(dplus(1, 3));
            FAIL("expected MissingKernelValue");
        } catch (const Error& e) {
            CHECK(e.kind() == "MissingKernelValue");
            CHECK(std::string(e.what()).find("Dplus(1,3") != std::string::npos);
        }
    }

    TEST_CASE("non-finite values are refused") {
        KernelTable t;
        CHECK_THROWS_AS(t.set(dplus(1, 2), {std::nan(""), 0.0}), Error);
        CHECK_THROWS_AS(t.set(dplus(1, 2), {0.0, INFINITY}), Error);
    }
}

TEST_SUITE("evaluation") {
    TEST_CASE("plain lookup and powers") {
        KernelTable t;
        t.set(dplus(1, 2), {0.5, 0.0});
        CHECK(eval_scalar(ScalarPoly(dplus(1, 2)), t) == std::complex<double>{0.5, 0.0});
        ScalarPoly two_d_squared(SymbolMonomial::from_factors({{dplus(1, 2), 2}}), Rational(2));
        CHECK(std::abs(eval_scalar(two_d_squared, t) - std::complex<double>{0.5, 0.0}) < 1e-15);
        CHECK(eval_scalar(ScalarPoly{}, t) == std::complex<double>{0.0, 0.0});
        CHECK(eval_scalar(ScalarPoly(Rational(BigInt(3), BigInt(4))), t) ==
              std::complex<double>{0.75, 0.0});
    }

    TEST_CASE("missing symbols abort evaluation") {
        KernelTable t;
        t.set(dplus(1, 2), {0.5, 0.0});
        CHECK_THROWS_AS(eval_scalar(ScalarPoly(dplus(1, 3)), t), Error);
    }

    TEST_CASE("multiplicative up to rounding") {
        Rng rng(2024060);
        const PropagatorSymbol pool[] = {dplus(1, 2), dplus(2, 3), dfey(1, 3)};
        KernelTable t;
        for (const auto& s : pool) t.set(s, {rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)});
        auto rand_scalar = [&](int max_terms) {
            ScalarPoly p;
            int terms = rng.range(1, max_terms);
            for (int i = 0; i < terms; ++i) {
                std::vector<SymbolMonomial::Factor> fs;
                int syms = rng.range(0, 2);
                for (int s = 0; s < syms; ++s) {
                    fs.push_back({pool[rng.range(0, 2)], static_cast<std::uint32_t>(rng.range(1, 2))});
                }
                p.add_term(SymbolMonomial::from_factors(std::move(fs)), testgen::rational(rng));
            }
            return p;
        };
        for (int i = 0; i < 150; ++i) {
            ScalarPoly a = rand_scalar(3);
            ScalarPoly b = rand_scalar(3);
            std::complex<double> lhs = eval_scalar(a * b, t);
            std::complex<double> rhs = eval_scalar(a, t) * eval_scalar(b, t);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_SUITE("pair partition oracle") {
    TEST_CASE("smallest cases") {
        auto m0 = pair_partition_oracle(0);
        REQUIRE(m0.size() == 1);
        CHECK(m0[0].empty());
        auto m2 = pair_partition_oracle(2);
        REQUIRE(m2.size() == 1);
        CHECK(m2[0] == PairPartition{{1, 2}});
        CHECK(pair_partition_oracle(4).size() == 3);
    }

    TEST_CASE("ten points give nine-seven-five-three-one matchings") {
        unsigned long long expected = 9ULL * 7 * 5 * 3 * 1;
        CHECK(pair_partition_oracle(10).size() == expected);
    }

    TEST_CASE("structure: ordered pairs, lowest element first") {
        for (const auto& matching : pair_partition_oracle(6)) {
            CHECK(matching.size() == 3);
            CHECK(matching[0].first == 1);
            std::set<int> seen;
            for (auto [a, b] : matching) {
                CHECK(a < b);
                seen.insert(a);
                seen.insert(b);
            }
            CHECK(seen.size() == 6);
        }
        // all matchings distinct
        auto all = pair_partition_oracle(8);
        std::set<PairPartition> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
    }

    TEST_CASE("input validation") {
        CHECK_THROWS_AS(pair_partition_oracle(3), Error);
        CHECK_THROWS_AS(pair_partition_oracle(-2), Error);
        CHECK_THROWS_AS(pair_partition_oracle(18), Error);
        try {
            pair_partition_oracle(5);
        } catch (const Error& e) {
            CHECK(e.kind() == "OddCount");
        }
    }

    TEST_CASE("matchings biject with full-contraction terms") {
        StarContext ctx;
        for (int n = 1; n <= 5; ++n) {
            std::vector<Generator> pts;
            for (int i = 1; i <= 2 * n; ++i) {
                pts.push_back({"phi", static_cast<std::uint32_t>(i), MultiIndex(4)});
            }
            ScalarPoly g = green(pts, ctx);
            std::set<SymbolMonomial> from_green;
            for (const auto& [mono, coeff] : g.terms()) {
                CHECK(coeff == Rational(1));
                from_green.insert(mono);
            }
            std::set<SymbolMonomial> from_oracle;
            for (const auto& matching : pair_partition_oracle(2 * n)) {
                std::vector<SymbolMonomial::Factor> fs;
                for (auto [a, b] : matching) {
                    fs.push_back({dfey(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)),
                                  1});
                }
                from_oracle.insert(SymbolMonomial::from_factors(std::move(fs)));
            }
            CHECK(from_green == from_oracle);
            CHECK(from_green.size() == testgen::double_factorial(2 * n - 1));
        }
    }
}

TEST_SUITE("gaussian moments") {
    TEST_CASE("frozen examples") {
        CHECK(std::abs(gaussian_moment_check(2, {1.0, 0.0}) - std::complex<double>{1.0, 0.0}) <
              1e-12);
        CHECK(std::abs(gaussian_moment_check(6, {1.0, 0.0}) - std::complex<double>{15.0, 0.0}) <
              1e-10);
        CHECK(std::abs(gaussian_moment_check(8, {2.0, 0.0}) - std::complex<double>{1680.0, 0.0}) <
              1e-8);
    }

    TEST_CASE("closed form at complex kernels") {
        std::complex<double> c{0.37, -0.21};
        for (int n = 0; n <= 5; ++n) {
            std::complex<double> expected =
                static_cast<double>(testgen::double_factorial(2 * n - 1));
            for (int k = 0; k < n; ++k) expected *= c;
            std::complex<double> got = gaussian_moment_check(2 * n, c);
            double rel = std::abs(got - expected) / std::max(1.0, std::abs(expected));
            CHECK(rel <= 1e-10);
        }
    }

    TEST_CASE("validation") {
        CHECK_THROWS_AS(gaussian_moment_check(3, {1.0, 0.0}), Error);
        CHECK_THROWS_AS(gaussian_moment_check(18, {1.0, 0.0}), Error);
    }
}
