#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fock/errors.hpp"
#include "fock/multi_index.hpp"

namespace fock {

enum class KernelKind { Wightman, Feynman, Named };

// One argument slot of a two-point kernel: a point label plus the
// derivative multi-index applied on that slot.
struct KernelSlot {
    std::uint32_t point = 1;
    MultiIndex deriv;

    auto operator<=>(const KernelSlot&) const = default;
};

// Formal two-point kernel symbol. Feynman symbols are symmetric and stored
// with slots sorted by (point, deriv); Wightman and named kernels preserve
// slot order as given. Coincident slot points are rejected unless the caller
// opts in.
class PropagatorSymbol {
public:
    static PropagatorSymbol wightman(KernelSlot left, KernelSlot right, bool allow_diagonal = false);
    static PropagatorSymbol feynman(KernelSlot left, KernelSlot right, bool allow_diagonal = false);
    static PropagatorSymbol named(std::string name, KernelSlot left, KernelSlot right,
                                  bool allow_diagonal = false);
    static PropagatorSymbol make(KernelKind kind, std::string name, KernelSlot left, KernelSlot right,
                                 bool allow_diagonal);

    KernelKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const KernelSlot& left() const noexcept { return left_; }
    const KernelSlot& right() const noexcept { return right_; }

    // Rebuilds the symbol under a point-label substitution; labels absent
    // from sigma stay fixed. Feynman slots are re-sorted.
    PropagatorSymbol relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const;

    void collect_points(std::set<std::uint32_t>& out) const;

    auto operator<=>(const PropagatorSymbol&) const = default;

private:
    PropagatorSymbol(KernelKind kind, std::string name, KernelSlot left, KernelSlot right)
        : kind_(kind), name_(std::move(name)), left_(std::move(left)), right_(std::move(right)) {}

    KernelKind kind_ = KernelKind::Wightman;
    std::string name_;
    KernelSlot left_;
    KernelSlot right_;
};

// Multiset of propagator symbols: one term key of a ScalarPoly. The empty
// multiset is the scalar unit.
class SymbolMonomial {
public:
    using Factor = std::pair<PropagatorSymbol, std::uint32_t>;

    SymbolMonomial() = default;
    SymbolMonomial(PropagatorSymbol s) : fs_{{std::move(s), 1}} {}
    static SymbolMonomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return fs_; }
    bool empty() const noexcept { return fs_.empty(); }
    std::uint32_t degree() const;

    SymbolMonomial operator*(const SymbolMonomial& o) const;
    SymbolMonomial relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const;
    void collect_points(std::set<std::uint32_t>& out) const;

    bool operator==(const SymbolMonomial&) const = default;
    // Term order: total degree descending, then factor-lexicographic.
    bool operator<(const SymbolMonomial& o) const;

private:
    std::vector<Factor> fs_; // sorted by symbol, multiplicities > 0
};

} // namespace fock
