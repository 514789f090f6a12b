#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "fock/scalar_poly.hpp"

namespace fock {

// Numeric assignment to propagator symbols, keyed by exact canonical
// symbols. Lookups are strict: a missing entry is an error, never zero.
class KernelTable {
public:
    void set(const PropagatorSymbol& sym, std::complex<double> value);
    std::complex<double> get(const PropagatorSymbol& sym) const;
    bool contains(const PropagatorSymbol& sym) const { return values_.count(sym) != 0; }

    const std::map<PropagatorSymbol, std::complex<double>>& values() const noexcept {
        return values_;
    }

private:
    std::map<PropagatorSymbol, std::complex<double>> values_;
};

// Evaluates a scalar polynomial against a kernel table: rational
// coefficients round to double, symbol powers multiply out.
std::complex<double> eval_scalar(const ScalarPoly& s, const KernelTable& table);

// A perfect matching of {1,...,n}, as pairs (i, j) with i < j, listed with
// the smallest unmatched element first.
using PairPartition = std::vector<std::pair<int, int>>;

// All perfect matchings of {1,...,n2}, by direct recursion: the smallest
// unmatched element is paired with each larger candidate in turn. The count
// is (n2-1)!!. Requires n2 even and at most 16.
std::vector<PairPartition> pair_partition_oracle(int n2);

// Zero-dimensional sanity model: evaluates the n2-point Green function with
// every kernel set to the same value c; the result must equal
// (n2-1)!! * c^(n2/2).
std::complex<double> gaussian_moment_check(int n2, std::complex<double> c);

} // namespace fock
