#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "fock/rational.hpp"
#include "fock/symbols.hpp"

namespace fock {

// Commutative ring of polynomials in propagator symbols over the exact
// rationals. This is the coefficient ring of field polynomials; symbols are
// free commuting indeterminates with no analytic identities imposed.
class ScalarPoly {
public:
    using TermMap = std::map<SymbolMonomial, Rational>;

    ScalarPoly() = default; // zero
    ScalarPoly(long long c) : ScalarPoly(Rational(c)) {}
    ScalarPoly(Rational c);
    ScalarPoly(PropagatorSymbol s) : ScalarPoly(SymbolMonomial(std::move(s)), Rational(1)) {}
    ScalarPoly(SymbolMonomial m, Rational c);
    static ScalarPoly one() { return ScalarPoly(1); }

    // Bulk construction; fastest when the terms arrive in ascending term
    // order with distinct keys, but correct for any input.
    static ScalarPoly from_term_list(std::vector<std::pair<SymbolMonomial, Rational>> terms);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const; // no symbols, i.e. a pure rational (possibly zero)
    bool is_one() const;
    Rational constant_part() const; // coefficient of the empty symbol multiset
    std::size_t term_count() const noexcept { return terms_.size(); }

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    ScalarPoly& operator*=(const ScalarPoly& o);

    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

    bool operator==(const ScalarPoly&) const = default;

    void add_term(const SymbolMonomial& m, const Rational& c);

    // All point labels occurring in any symbol slot.
    std::set<std::uint32_t> support() const;
    ScalarPoly relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const;

private:
    TermMap terms_; // no zero coefficients stored
};

} // namespace fock
