#pragma once

#include <json.hpp>

#include "fock/hopf.hpp"
#include "fock/timeorder.hpp"

namespace fock {

using Json = nlohmann::json;

// JSON forms. Dimensions are validated against expect_dim when it is
// nonzero; allow_diagonal gates symbols with coincident slot points.

Json to_json(const Generator& g);
Generator generator_from_json(const Json& j, std::size_t expect_dim = 0);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j, std::size_t expect_dim = 0);

Json to_json(const PropagatorSymbol& s);
PropagatorSymbol symbol_from_json(const Json& j, std::size_t expect_dim = 0,
                                  bool allow_diagonal = false);

Json to_json(const ScalarPoly& s);
ScalarPoly scalar_poly_from_json(const Json& j, std::size_t expect_dim = 0,
                                 bool allow_diagonal = false);

Json to_json(const FieldPoly& p);
FieldPoly field_poly_from_json(const Json& j, std::size_t expect_dim = 0,
                               bool allow_diagonal = false);

Json to_json(const TensorDecomp& d);

Json to_json(std::complex<double> z);
Json to_json(const CausalReport& r);

// Configuration files.
KernelRegistry registry_from_json(const Json& j);
KernelTable kernel_table_from_json(const Json& j, std::size_t expect_dim = 0,
                                   bool allow_diagonal = false);
TimeAssignment times_from_json(const Json& j);

} // namespace fock
