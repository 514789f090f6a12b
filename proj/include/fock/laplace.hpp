#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fock/fields.hpp"

namespace fock {

struct KernelEntry {
    KernelKind kind = KernelKind::Wightman;
    std::string name; // used only for KernelKind::Named

    bool operator==(const KernelEntry&) const = default;
};

// Field-pair to kernel-kind registry, driving which generator pairs
// contract and to which formal symbol. Same-species pairs default to the
// Wightman kernel; distinct species pair to zero unless registered.
class KernelRegistry {
public:
    void register_pair(const std::string& field_a, const std::string& field_b, KernelEntry entry);
    std::optional<KernelEntry> lookup(const std::string& field_a, const std::string& field_b) const;

    bool allow_diagonal() const noexcept { return allow_diagonal_; }
    void set_allow_diagonal(bool v) noexcept { allow_diagonal_ = v; }

    const std::map<std::pair<std::string, std::string>, KernelEntry>& entries() const noexcept {
        return entries_;
    }

private:
    std::map<std::pair<std::string, std::string>, KernelEntry> entries_;
    bool allow_diagonal_ = false;
};

// The kernel symbol for a generator pair, or nullopt when the species pair
// is unregistered. Throws Error("DiagonalContraction") on coincident points
// unless the registry allows diagonals.
std::optional<PropagatorSymbol> pair_generator_symbol(const Generator& g, const Generator& h,
                                                      const KernelRegistry& reg);

// Generator-level pairing: the formal kernel symbol with coefficient 1, or
// zero for unregistered species pairs.
ScalarPoly pair_generators(const Generator& g, const Generator& h, const KernelRegistry& reg);

// The Laplace pairing extended to all field polynomials, evaluated in the
// closed form: for equal-degree monomials, the sum over all factor
// bijections of the generator-pairing products; zero across degrees.
ScalarPoly laplace_pair(const FieldPoly& a, const FieldPoly& b, const KernelRegistry& reg);

// The same pairing evaluated by the defining one-factor-at-a-time recursion;
// kept as an independent route for cross-checking.
ScalarPoly laplace_pair_recursive(const FieldPoly& a, const FieldPoly& b, const KernelRegistry& reg);

} // namespace fock
