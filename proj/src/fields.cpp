#include "fock/fields.hpp"

#include <algorithm>

namespace fock {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
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

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [g, mult] : fs_) d += mult;
    return d;
}

std::vector<Generator> Monomial::expanded() const {
    std::vector<Generator> out;
    out.reserve(degree());
    for (const auto& [g, mult] : fs_) {
        for (std::uint32_t i = 0; i < mult; ++i) out.push_back(g);
    }
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<Factor> merged;
    merged.reserve(fs_.size() + o.fs_.size());
    merged.insert(merged.end(), fs_.begin(), fs_.end());
    merged.insert(merged.end(), o.fs_.begin(), o.fs_.end());
    return from_factors(std::move(merged));
}

Monomial Monomial::minus_one(const Generator& g) const {
    Monomial m;
    bool removed = false;
    for (const auto& f : fs_) {
        if (!removed && f.first == g) {
            removed = true;
            if (f.second > 1) m.fs_.push_back({f.first, f.second - 1});
        } else {
            m.fs_.push_back(f);
        }
    }
    if (!removed) {
        throw Error("MissingFactor", "generator not present in monomial");
    }
    return m;
}

std::set<std::uint32_t> Monomial::support() const {
    std::set<std::uint32_t> pts;
    for (const auto& [g, mult] : fs_) pts.insert(g.point);
    return pts;
}

Monomial Monomial::relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const {
    std::vector<Factor> out;
    out.reserve(fs_.size());
    for (const auto& [g, mult] : fs_) {
        auto it = sigma.find(g.point);
        Generator h = g;
        if (it != sigma.end()) h.point = it->second;
        out.push_back({std::move(h), mult});
    }
    return from_factors(std::move(out));
}

bool Monomial::operator<(const Monomial& o) const {
    std::uint32_t da = degree(), db = o.degree();
    if (da != db) return da > db;
    return fs_ < o.fs_;
}

FieldPoly::FieldPoly(ScalarPoly c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

FieldPoly::FieldPoly(Monomial m, ScalarPoly c) {
    if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

bool FieldPoly::is_scalar() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

ScalarPoly FieldPoly::scalar_part() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? ScalarPoly{} : it->second;
}

ScalarPoly FieldPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarPoly{} : it->second;
}

std::uint32_t FieldPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void FieldPoly::add_term(const Monomial& m, const ScalarPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FieldPoly::add_term(Monomial&& m, ScalarPoly&& c) {
    if (c.is_zero()) return;
    // try_emplace leaves both arguments intact when the key already exists
    auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldPoly FieldPoly::operator-() const {
    FieldPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

FieldPoly& FieldPoly::operator+=(const FieldPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FieldPoly& FieldPoly::operator-=(const FieldPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

FieldPoly& FieldPoly::operator*=(const FieldPoly& o) {
    *this = *this * o;
    return *this;
}

std::set<std::uint32_t> FieldPoly::support() const {
    std::set<std::uint32_t> pts;
    for (const auto& [m, c] : terms_) {
        for (const auto& [g, mult] : m.factors()) pts.insert(g.point);
        for (const auto& [sm, coeff] : c.terms()) sm.collect_points(pts);
    }
    return pts;
}

std::uint32_t FieldPoly::max_point() const {
    auto pts = support();
    return pts.empty() ? 0 : *pts.rbegin();
}

FieldPoly embed(const FieldPoly& a, std::uint32_t level) {
    std::uint32_t top = a.max_point();
    if (top > level) {
        throw Error("LabelOverflow", "support reaches point " + std::to_string(top) +
                                         " beyond level " + std::to_string(level));
    }
    return a;
}

FieldPoly relabel(const FieldPoly& a, const std::map<std::uint32_t, std::uint32_t>& sigma) {
    auto pts = a.support();
    std::map<std::uint32_t, std::uint32_t> image_of;
    for (auto p : pts) {
        auto it = sigma.find(p);
        std::uint32_t q = it == sigma.end() ? p : it->second;
        auto [jt, inserted] = image_of.emplace(q, p);
        if (!inserted) {
            throw Error("NotInjective", "labels " + std::to_string(jt->second) + " and " +
                                            std::to_string(p) + " both map to " + std::to_string(q));
        }
    }
    FieldPoly r;
    for (const auto& [m, c] : a.terms()) {
        r.add_term(m.relabeled(sigma), c.relabeled(sigma));
    }
    return r;
}

} // namespace fock
