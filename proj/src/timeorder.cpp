#include "fock/timeorder.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>

namespace fock {

double TimeAssignment::at(std::uint32_t point) const {
    auto it = times.find(point);
    if (it == times.end()) {
        throw Error("MissingTime", "no time assigned to point " + std::to_string(point));
    }
    return it->second;
}

namespace {

void check_distinct_points(const std::vector<Generator>& F) {
    for (std::size_t i = 0; i < F.size(); ++i) {
        for (std::size_t j = i + 1; j < F.size(); ++j) {
            if (F[i].point == F[j].point) {
                throw Error("DiagonalPoint",
                            "two factors at point " + std::to_string(F[i].point));
            }
        }
    }
}

struct RankedPair {
    PropagatorSymbol sym;
    std::uint8_t i;
    std::uint8_t j;
};

// Partial-pairing expansion of one monomial, accumulated into out with the
// rational weight r. Factors are indexed once and every pairing is recorded
// as a packed word of pair ranks, so the polynomial maps are only touched in
// one sorted bulk pass per unpaired subset.
void expand_tproduct_monomial(const Monomial& m, const Rational& r, const KernelRegistry& reg,
                              FieldPoly& out) {
    const std::vector<Generator> F = m.expanded();
    const std::size_t n = F.size();
    if (n > 16) {
        throw Error("TooLarge", "time-ordered product with more than 16 factors per monomial");
    }
    check_distinct_points(F);

    std::vector<RankedPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (reg.lookup(F[i].field, F[j].field)) {
                pairs.push_back({PropagatorSymbol::feynman({F[i].point, F[i].deriv},
                                                           {F[j].point, F[j].deriv}),
                                 static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
            }
        }
    }
    // rank order mirrors symbol order, so sorted rank words enumerate the
    // coefficient terms of each bucket in ascending map order
    std::sort(pairs.begin(), pairs.end(),
              [](const RankedPair& a, const RankedPair& b) { return a.sym < b.sym; });
    int rank_of[16][16];
    for (auto& row : rank_of) std::fill(std::begin(row), std::end(row), -1);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        rank_of[pairs[k].i][pairs[k].j] = static_cast<int>(k);
    }

    // paired-subset mask -> packed rank words, one word per pairing
    std::map<std::uint32_t, std::vector<std::uint64_t>> buckets;
    std::array<std::uint8_t, 8> ranks{};
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t paired, std::size_t depth) -> void {
        while (i < n && (paired >> i & 1u)) ++i;
        if (i == n) {
            std::array<std::uint8_t, 8> sorted = ranks;
            std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(depth));
            // left-aligned so words of one bucket compare lexicographically
            std::uint64_t packed = 0;
            for (std::size_t k = 0; k < depth; ++k) {
                packed |= static_cast<std::uint64_t>(sorted[k]) << (8 * (7 - k));
            }
            buckets[paired].push_back(packed);
            return;
        }
        self(self, i + 1, paired, depth); // leave factor i unpaired
        for (std::size_t j = i + 1; j < n; ++j) {
            if (paired >> j & 1u) continue;
            int rank = rank_of[i][j];
            if (rank < 0) continue; // unregistered species pair contributes zero
            ranks[depth] = static_cast<std::uint8_t>(rank);
            self(self, i + 1, paired | 1u << i | 1u << j, depth + 1);
        }
    };
    rec(rec, 0, 0, 0);

    for (auto& [paired, words] : buckets) {
        std::sort(words.begin(), words.end());
        std::size_t npairs = static_cast<std::size_t>(__builtin_popcount(paired)) / 2;
        std::vector<std::pair<SymbolMonomial, Rational>> terms;
        terms.reserve(words.size());
        for (std::uint64_t packed : words) {
            std::vector<SymbolMonomial::Factor> fs;
            fs.reserve(npairs);
            for (std::size_t k = 0; k < npairs; ++k) {
                std::uint8_t rank = static_cast<std::uint8_t>(packed >> (8 * (7 - k)));
                fs.push_back({pairs[rank].sym, 1});
            }
            terms.push_back({SymbolMonomial::from_factors(std::move(fs)), r});
        }
        std::vector<Monomial::Factor> unpaired;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(paired >> i & 1u)) unpaired.push_back({F[i], 1});
        }
        out.add_term(Monomial::from_factors(std::move(unpaired)),
                     ScalarPoly::from_term_list(std::move(terms)));
    }
}

} // namespace

FieldPoly tproduct(const FieldPoly& c, const StarContext& ctx) {
    KernelRegistry reg = ctx.effective_registry();
    FieldPoly out;
    for (const auto& [m, u] : c.terms()) {
        if (!u.is_constant()) {
            throw Error("NonTrivialScalar",
                        "time-ordered product requires pure rational coefficients");
        }
        expand_tproduct_monomial(m, u.constant_part(), reg, out);
    }
    return out;
}

ScalarPoly green(const std::vector<Generator>& points, const StarContext& ctx) {
    std::vector<Monomial::Factor> fs;
    fs.reserve(points.size());
    for (const auto& g : points) fs.push_back({g, 1});
    FieldPoly mono(Monomial::from_factors(std::move(fs)));
    return vacuum(tproduct(mono, ctx));
}

CausalReport causal_check(const FieldPoly& c, const FieldPoly& d, const TimeAssignment& times,
                          const KernelTable& table, double tol, const StarContext& ctx) {
    auto sc = c.support();
    auto sd = d.support();
    for (auto p : sc) {
        if (sd.count(p)) {
            throw Error("DiagonalContraction",
                        "causal check operands share point label " + std::to_string(p));
        }
    }
    double min_c = std::numeric_limits<double>::infinity();
    double max_d = -std::numeric_limits<double>::infinity();
    for (auto p : sc) min_c = std::min(min_c, times.at(p));
    for (auto p : sd) max_d = std::max(max_d, times.at(p));
    bool order_ok = !(min_c <= max_d) || sc.empty() || sd.empty();

    FieldPoly lhs = tproduct(normal_mul(c, d), ctx);
    FieldPoly rhs = star(tproduct(c, ctx), tproduct(d, ctx), ctx);

    std::set<Monomial> keys;
    for (const auto& [m, u] : lhs.terms()) keys.insert(m);
    for (const auto& [m, u] : rhs.terms()) keys.insert(m);

    CausalReport report;
    report.tolerance = tol;
    report.terms_compared = keys.size();
    for (const auto& m : keys) {
        std::complex<double> a = eval_scalar(lhs.coefficient(m), table);
        std::complex<double> b = eval_scalar(rhs.coefficient(m), table);
        report.max_abs_diff = std::max(report.max_abs_diff, std::abs(a - b));
    }
    if (!order_ok) {
        report.status = CausalReport::Status::OrderViolated;
    } else {
        report.status = report.max_abs_diff <= tol ? CausalReport::Status::Pass
                                                   : CausalReport::Status::Fail;
    }
    return report;
}

} // namespace fock
