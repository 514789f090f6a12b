#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace fock {

// Derivative multi-index. The length is the spacetime dimension in use;
// operations never mix lengths, which the input layer validates.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t dim) : exp_(dim, 0) {}
    MultiIndex(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) {}
    MultiIndex(std::initializer_list<std::uint32_t> exponents) : exp_(exponents) {}

    std::size_t dim() const noexcept { return exp_.size(); }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exp_; }
    std::uint32_t operator[](std::size_t i) const { return exp_[i]; }

    bool is_zero() const {
        for (auto e : exp_)
            if (e != 0) return false;
        return true;
    }

    std::uint32_t order() const {
        return std::accumulate(exp_.begin(), exp_.end(), std::uint32_t{0});
    }

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<std::uint32_t> exp_;
};

} // namespace fock
