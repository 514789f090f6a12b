#include "fock/symbols.hpp"

#include <algorithm>

namespace fock {

PropagatorSymbol PropagatorSymbol::make(KernelKind kind, std::string name, KernelSlot left,
                                        KernelSlot right, bool allow_diagonal) {
    if (!allow_diagonal && left.point == right.point) {
        throw Error("DiagonalContraction",
                    "kernel symbol on the diagonal: both slots at point " + std::to_string(left.point));
    }
    if (kind == KernelKind::Feynman && right < left) {
        std::swap(left, right);
    }
    if (kind != KernelKind::Named) {
        name.clear();
    }
    return PropagatorSymbol(kind, std::move(name), std::move(left), std::move(right));
}

PropagatorSymbol PropagatorSymbol::wightman(KernelSlot left, KernelSlot right, bool allow_diagonal) {
    return make(KernelKind::Wightman, {}, std::move(left), std::move(right), allow_diagonal);
}

PropagatorSymbol PropagatorSymbol::feynman(KernelSlot left, KernelSlot right, bool allow_diagonal) {
    return make(KernelKind::Feynman, {}, std::move(left), std::move(right), allow_diagonal);
}

PropagatorSymbol PropagatorSymbol::named(std::string name, KernelSlot left, KernelSlot right,
                                         bool allow_diagonal) {
    return make(KernelKind::Named, std::move(name), std::move(left), std::move(right), allow_diagonal);
}

namespace {
std::uint32_t apply_sigma(const std::map<std::uint32_t, std::uint32_t>& sigma, std::uint32_t p) {
    auto it = sigma.find(p);
    return it == sigma.end() ? p : it->second;
}
} // namespace

PropagatorSymbol PropagatorSymbol::relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const {
    KernelSlot l{apply_sigma(sigma, left_.point), left_.deriv};
    KernelSlot r{apply_sigma(sigma, right_.point), right_.deriv};
    // Validity is preserved by an injective relabeling; diagonal symbols stay
    // diagonal, so construction is unguarded here.
    return make(kind_, name_, std::move(l), std::move(r), true);
}

void PropagatorSymbol::collect_points(std::set<std::uint32_t>& out) const {
    out.insert(left_.point);
    out.insert(right_.point);
}

SymbolMonomial SymbolMonomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    SymbolMonomial m;
    for (auto& f : factors) {
        if (f.second == 0) continue;
        if (!m.fs_.empty() && m.fs_.back().first == f.first) {
            m.fs_.back().second += f.second;
        } else {
            m.fs_.push_back(std::move(f));
        }
    }
    return m;
}

std::uint32_t SymbolMonomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [sym, pow] : fs_) d += pow;
    return d;
}

SymbolMonomial SymbolMonomial::operator*(const SymbolMonomial& o) const {
    std::vector<Factor> merged;
    merged.reserve(fs_.size() + o.fs_.size());
    merged.insert(merged.end(), fs_.begin(), fs_.end());
    merged.insert(merged.end(), o.fs_.begin(), o.fs_.end());
    return from_factors(std::move(merged));
}

SymbolMonomial SymbolMonomial::relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const {
    std::vector<Factor> out;
    out.reserve(fs_.size());
    for (const auto& [sym, pow] : fs_) {
        out.push_back({sym.relabeled(sigma), pow});
    }
    return from_factors(std::move(out));
}

void SymbolMonomial::collect_points(std::set<std::uint32_t>& out) const {
    for (const auto& [sym, pow] : fs_) sym.collect_points(out);
}

bool SymbolMonomial::operator<(const SymbolMonomial& o) const {
    std::uint32_t da = degree(), db = o.degree();
    if (da != db) return da > db;
    return fs_ < o.fs_;
}

} // namespace fock
