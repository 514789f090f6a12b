#include "fock/scalar_poly.hpp"

namespace fock {

ScalarPoly::ScalarPoly(Rational c) {
    if (!c.is_zero()) {
        terms_.emplace(SymbolMonomial{}, std::move(c));
    }
}

ScalarPoly::ScalarPoly(SymbolMonomial m, Rational c) {
    if (!c.is_zero()) {
        terms_.emplace(std::move(m), std::move(c));
    }
}

ScalarPoly ScalarPoly::from_term_list(std::vector<std::pair<SymbolMonomial, Rational>> terms) {
    ScalarPoly out;
    for (auto& [m, c] : terms) {
        if (c.is_zero()) continue;
        std::size_t before = out.terms_.size();
        auto it = out.terms_.emplace_hint(out.terms_.end(), std::move(m), c);
        if (out.terms_.size() == before) { // key collision: accumulate
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

bool ScalarPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

bool ScalarPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

Rational ScalarPoly::constant_part() const {
    auto it = terms_.find(SymbolMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ScalarPoly::add_term(const SymbolMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) {
    *this = *this * o;
    return *this;
}

std::set<std::uint32_t> ScalarPoly::support() const {
    std::set<std::uint32_t> pts;
    for (const auto& [m, c] : terms_) m.collect_points(pts);
    return pts;
}

ScalarPoly ScalarPoly::relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) r.add_term(m.relabeled(sigma), c);
    return r;
}

} // namespace fock
