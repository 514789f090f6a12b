#include "fock/hopf.hpp"

#include <algorithm>

namespace fock {

namespace {

bool term_before(const TensorTerm& a, const TensorTerm& b) {
    if (a.left < b.left) return true;
    if (b.left < a.left) return false;
    return a.right < b.right;
}

std::vector<TensorTerm> normalize_terms(std::vector<TensorTerm> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    std::vector<TensorTerm> out;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!out.empty() && out.back().left == t.left && out.back().right == t.right) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

TensorDecomp::TensorDecomp(std::vector<TensorTerm> terms) : terms_(normalize_terms(std::move(terms))) {}

TensorDecomp TensorDecomp::swapped() const {
    std::vector<TensorTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.coeff, t.right, t.left});
    return TensorDecomp(std::move(out));
}

void for_each_coproduct_split(
    const Monomial& m,
    const std::function<void(const Monomial&, const Monomial&, const BigInt&)>& fn) {
    const auto& fs = m.factors();
    std::vector<std::uint32_t> pick(fs.size(), 0);
    // Odometer over how many copies of each distinct factor go to the left leg.
    for (;;) {
        std::vector<Monomial::Factor> sub, rest;
        BigInt mult = 1;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (pick[i] > 0) sub.push_back({fs[i].first, pick[i]});
            if (pick[i] < fs[i].second) rest.push_back({fs[i].first, fs[i].second - pick[i]});
            mult *= binomial_coefficient(fs[i].second, pick[i]);
        }
        fn(Monomial::from_factors(std::move(sub)), Monomial::from_factors(std::move(rest)), mult);
        std::size_t i = 0;
        while (i < fs.size() && pick[i] == fs[i].second) {
            pick[i] = 0;
            ++i;
        }
        if (i == fs.size()) break;
        ++pick[i];
    }
}

TensorDecomp coproduct(const FieldPoly& a) {
    std::vector<TensorTerm> out;
    for (const auto& [m, u] : a.terms()) {
        for_each_coproduct_split(m, [&](const Monomial& sub, const Monomial& rest, const BigInt& mult) {
            out.push_back({u * ScalarPoly(Rational(mult)), sub, rest});
        });
    }
    return TensorDecomp(std::move(out));
}

ScalarPoly counit(const FieldPoly& a) {
    return a.scalar_part();
}

FieldPoly antipode(const FieldPoly& a) {
    FieldPoly r;
    for (const auto& [m, u] : a.terms()) {
        bool odd = m.degree() % 2 != 0;
        r.add_term(m, odd ? -u : u);
    }
    return r;
}

namespace {

std::vector<SweedlerTerm> normalize_sweedler(std::vector<SweedlerTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const SweedlerTerm& a, const SweedlerTerm& b) {
        return std::lexicographical_compare(a.legs.begin(), a.legs.end(), b.legs.begin(), b.legs.end());
    });
    std::vector<SweedlerTerm> out;
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!out.empty() && out.back().legs == t.legs) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

std::vector<SweedlerTerm> sweedler_iter(const FieldPoly& a, unsigned legs) {
    if (legs == 0) {
        throw Error("BadArgument", "sweedler_iter needs at least one leg");
    }
    std::vector<SweedlerTerm> cur;
    for (const auto& [m, u] : a.terms()) cur.push_back({u, {m}});
    for (unsigned step = 1; step < legs; ++step) {
        std::vector<SweedlerTerm> next;
        for (const auto& t : cur) {
            const Monomial& last = t.legs.back();
            for_each_coproduct_split(last, [&](const Monomial& sub, const Monomial& rest,
                                               const BigInt& mult) {
                SweedlerTerm nt;
                nt.coeff = t.coeff * ScalarPoly(Rational(mult));
                nt.legs.assign(t.legs.begin(), t.legs.end() - 1);
                nt.legs.push_back(sub);
                nt.legs.push_back(rest);
                next.push_back(std::move(nt));
            });
        }
        cur = normalize_sweedler(std::move(next));
    }
    return normalize_sweedler(std::move(cur));
}

} // namespace fock
