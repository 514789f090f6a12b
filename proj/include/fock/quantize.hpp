#pragma once

#include <span>

#include "fock/hopf.hpp"
#include "fock/laplace.hpp"

namespace fock {

enum class DiagonalPolicy { Reject, FormalSymbol };

// Context of a quantized computation: the kernel registry plus the policy
// for operands with overlapping point support. Fixed for the lifetime of a
// computation.
struct StarContext {
    KernelRegistry registry;
    DiagonalPolicy diagonal_policy = DiagonalPolicy::Reject;

    static StarContext make(KernelRegistry reg) {
        DiagonalPolicy p = reg.allow_diagonal() ? DiagonalPolicy::FormalSymbol : DiagonalPolicy::Reject;
        return {std::move(reg), p};
    }

    // Registry with the diagonal flag synced to the policy.
    KernelRegistry effective_registry() const {
        KernelRegistry r = registry;
        r.set_allow_diagonal(diagonal_policy == DiagonalPolicy::FormalSymbol);
        return r;
    }
};

// The star product: sum over contraction subsets of the two factor lists and
// bijections between them of the pairing product times the normal product of
// what remains. Scalars multiply through. Under the Reject policy, operands
// with overlapping point support raise Error("DiagonalContraction").
FieldPoly star(const FieldPoly& c, const FieldPoly& d, const StarContext& ctx);

// Reference route through the coproduct: sum of c1 d1 (c2|d2) over both
// tensor decompositions. Same contract as star; kept for cross-checking.
FieldPoly star_via_coproduct(const FieldPoly& c, const FieldPoly& d, const StarContext& ctx);

// Vacuum expectation: the counit applied to the field part, keeping the
// scalar coefficient of the unit monomial.
ScalarPoly vacuum(const FieldPoly& c);

// Left fold of the star product; associativity makes the order irrelevant.
// The empty list yields the unit.
FieldPoly star_power(std::span<const FieldPoly> factors, const StarContext& ctx);

} // namespace fock
