#pragma once

#include <complex>
#include <string>

#include "fock/hopf.hpp"
#include "fock/timeorder.hpp"

namespace fock {

// Canonical, deterministic text forms. Polynomials render with monomials in
// term order (total degree descending, then lexicographic); two equal values
// always print byte-identically.

std::string to_text(const Rational& r);
std::string to_text(const MultiIndex& mi);
std::string to_text(const Generator& g);
std::string to_text(const Monomial& m);
std::string to_text(const PropagatorSymbol& s);
std::string to_text(const SymbolMonomial& m);
std::string to_text(const ScalarPoly& s);
std::string to_text(const FieldPoly& p);
std::string to_text(const TensorDecomp& d);
std::string to_text(std::complex<double> z);
std::string to_text(const CausalReport& r);

} // namespace fock
