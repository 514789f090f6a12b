#include "fock/numeric.hpp"

#include <cmath>

#include "fock/printer.hpp"
#include "fock/timeorder.hpp"

namespace fock {

void KernelTable::set(const PropagatorSymbol& sym, std::complex<double> value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error("NonFiniteValue", "kernel value for " + to_text(sym) + " is not finite");
    }
    values_[sym] = value;
}

std::complex<double> KernelTable::get(const PropagatorSymbol& sym) const {
    auto it = values_.find(sym);
    if (it == values_.end()) {
        throw Error("MissingKernelValue", "no kernel value for " + to_text(sym));
    }
    return it->second;
}

std::complex<double> eval_scalar(const ScalarPoly& s, const KernelTable& table) {
    std::complex<double> sum = 0.0;
    for (const auto& [mono, coeff] : s.terms()) {
        std::complex<double> term = coeff.to_double();
        for (const auto& [sym, pow] : mono.factors()) {
            std::complex<double> v = table.get(sym);
            for (std::uint32_t k = 0; k < pow; ++k) term *= v;
        }
        sum += term;
    }
    return sum;
}

namespace {

void enumerate_matchings(std::vector<int>& avail, PairPartition& cur,
                         std::vector<PairPartition>& out) {
    if (avail.empty()) {
        out.push_back(cur);
        return;
    }
    int a = avail.front();
    std::vector<int> rest(avail.begin() + 1, avail.end());
    for (std::size_t k = 0; k < rest.size(); ++k) {
        int b = rest[k];
        std::vector<int> next;
        next.reserve(rest.size() - 1);
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (t != k) next.push_back(rest[t]);
        }
        cur.push_back({a, b});
        enumerate_matchings(next, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<PairPartition> pair_partition_oracle(int n2) {
    if (n2 < 0 || n2 % 2 != 0) {
        throw Error("OddCount", "perfect matchings need an even count, got " + std::to_string(n2));
    }
    if (n2 > 16) {
        throw Error("TooManyPoints", "pair partition oracle supports at most 16 points");
    }
    std::vector<int> avail(n2);
    for (int i = 0; i < n2; ++i) avail[i] = i + 1;
    std::vector<PairPartition> out;
    PairPartition cur;
    enumerate_matchings(avail, cur, out);
    return out;
}

std::complex<double> gaussian_moment_check(int n2, std::complex<double> c) {
    if (n2 < 0 || n2 % 2 != 0) {
        throw Error("OddCount", "Gaussian moments vanish unless the count is even; got " +
                                    std::to_string(n2));
    }
    if (n2 > 16) {
        throw Error("TooManyPoints", "gaussian_moment_check supports at most 16 points");
    }
    const std::size_t dim = 4;
    StarContext ctx;
    std::vector<Generator> points;
    points.reserve(static_cast<std::size_t>(n2));
    for (int i = 1; i <= n2; ++i) {
        points.push_back({"phi", static_cast<std::uint32_t>(i), MultiIndex(dim)});
    }
    ScalarPoly g = green(points, ctx);
    KernelTable table;
    for (int i = 1; i <= n2; ++i) {
        for (int j = i + 1; j <= n2; ++j) {
            table.set(PropagatorSymbol::feynman({static_cast<std::uint32_t>(i), MultiIndex(dim)},
                                                {static_cast<std::uint32_t>(j), MultiIndex(dim)}),
                      c);
        }
    }
    return eval_scalar(g, table);
}

} // namespace fock
