#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fock/numeric.hpp"
#include "fock/quantize.hpp"

namespace fock {

// A time value per point label, inducing the order used by the causal
// factorization check.
struct TimeAssignment {
    std::map<std::uint32_t, double> times;

    double at(std::uint32_t point) const;
};

// Symbolic time-ordered product at pairwise-distinct points: the sum over
// all partial pairings of the factor multiset of the Feynman-symbol product
// times the normal monomial of the unpaired factors. Monomials carrying two
// factors at one label raise Error("DiagonalPoint"); coefficients must be
// pure rationals.
FieldPoly tproduct(const FieldPoly& c, const StarContext& ctx);

// Vacuum expectation of the time-ordered product of the listed generators;
// zero for odd counts.
ScalarPoly green(const std::vector<Generator>& points, const StarContext& ctx);

// Outcome of a causal factorization check.
struct CausalReport {
    enum class Status { Pass, Fail, OrderViolated };

    Status status = Status::Fail;
    double max_abs_diff = 0.0;
    double tolerance = 0.0;
    std::size_t terms_compared = 0;

    bool passed() const noexcept { return status == Status::Pass; }
};

// Evaluates T(cd) against T(c) * T(d) numerically, monomial by monomial, and
// reports the maximum absolute coefficient difference. The supports must be
// disjoint and every support label needs a time; when the support of c is
// not strictly later than that of d the report carries OrderViolated but the
// deviation is still computed.
CausalReport causal_check(const FieldPoly& c, const FieldPoly& d, const TimeAssignment& times,
                          const KernelTable& table, double tol, const StarContext& ctx);

} // namespace fock
