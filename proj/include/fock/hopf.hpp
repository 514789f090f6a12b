#pragma once

#include <functional>
#include <vector>

#include "fock/fields.hpp"

namespace fock {

// One term of a tensor decomposition. The scalar coefficient rides on the
// pair, not inside a leg.
struct TensorTerm {
    ScalarPoly coeff;
    Monomial left;
    Monomial right;

    bool operator==(const TensorTerm&) const = default;
};

// Normalized bilinear tensor decomposition: terms sorted by (left, right)
// with coefficients merged, so equality is decidable by direct comparison.
class TensorDecomp {
public:
    TensorDecomp() = default;
    explicit TensorDecomp(std::vector<TensorTerm> terms);

    const std::vector<TensorTerm>& terms() const noexcept { return terms_; }
    bool operator==(const TensorDecomp&) const = default;

    // Leg exchange; equality with the original is cocommutativity.
    TensorDecomp swapped() const;

private:
    std::vector<TensorTerm> terms_;
};

// Enumerates all splittings of the factor multiset of m into an ordered pair
// (sub, rest) together with the exact multiplicity (product of binomials).
void for_each_coproduct_split(
    const Monomial& m,
    const std::function<void(const Monomial& sub, const Monomial& rest, const BigInt& mult)>& fn);

// Coproduct of the free commutative Hopf algebra on generators: every
// generator is primitive, and the map extends as an algebra morphism.
TensorDecomp coproduct(const FieldPoly& a);

// Projection onto the unit monomial's coefficient.
ScalarPoly counit(const FieldPoly& a);

// Antipode: -1 on generators, extended multiplicatively, so a degree-d
// monomial picks up (-1)^d.
FieldPoly antipode(const FieldPoly& a);

// One term of an iterated (k-leg) decomposition.
struct SweedlerTerm {
    ScalarPoly coeff;
    std::vector<Monomial> legs;

    bool operator==(const SweedlerTerm&) const = default;
};

// Result of applying the coproduct (legs - 1) times, normalized by sorting
// and merging; coassociativity makes the order of application irrelevant.
std::vector<SweedlerTerm> sweedler_iter(const FieldPoly& a, unsigned legs);

} // namespace fock
