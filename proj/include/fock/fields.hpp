#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fock/scalar_poly.hpp"

namespace fock {

// One field factor: species name, point label and derivative multi-index.
struct Generator {
    std::string field;
    std::uint32_t point = 1;
    MultiIndex deriv;

    auto operator<=>(const Generator&) const = default; // (field, point, deriv)
};

// Canonically sorted multiset of generators. The empty multiset is the unit
// of the normal product.
class Monomial {
public:
    using Factor = std::pair<Generator, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Generator g) : fs_{{std::move(g), 1}} {}
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return fs_; }
    bool is_unit() const noexcept { return fs_.empty(); }
    std::uint32_t degree() const;

    // Multiplicity-flattened factor list, in canonical order.
    std::vector<Generator> expanded() const;

    Monomial operator*(const Monomial& o) const;
    // Removes one occurrence of g; g must be present.
    Monomial minus_one(const Generator& g) const;

    std::set<std::uint32_t> support() const;
    Monomial relabeled(const std::map<std::uint32_t, std::uint32_t>& sigma) const;

    bool operator==(const Monomial&) const = default;
    // Term order: total degree descending, then factor-lexicographic.
    bool operator<(const Monomial& o) const;

private:
    std::vector<Factor> fs_; // sorted by generator, multiplicities > 0
};

// Field polynomial: monomials in generators with ScalarPoly coefficients.
// An element u (x) h of the quantized algebra is represented with the scalar
// u riding as the coefficient of the field monomial h.
class FieldPoly {
public:
    using TermMap = std::map<Monomial, ScalarPoly>;

    FieldPoly() = default; // zero
    FieldPoly(long long c) : FieldPoly(ScalarPoly(c)) {}
    FieldPoly(Rational c) : FieldPoly(ScalarPoly(std::move(c))) {}
    FieldPoly(ScalarPoly c);
    FieldPoly(Generator g) : FieldPoly(Monomial(std::move(g))) {}
    FieldPoly(Monomial m, ScalarPoly c = ScalarPoly(1));
    static FieldPoly one() { return FieldPoly(1); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // True when only the unit monomial carries a coefficient.
    bool is_scalar() const;
    ScalarPoly scalar_part() const; // coefficient of the unit monomial
    ScalarPoly coefficient(const Monomial& m) const;
    std::uint32_t degree() const;  // max monomial degree, 0 for the zero poly

    FieldPoly operator-() const;
    FieldPoly& operator+=(const FieldPoly& o);
    FieldPoly& operator-=(const FieldPoly& o);
    FieldPoly& operator*=(const FieldPoly& o);

    friend FieldPoly operator+(FieldPoly a, const FieldPoly& b) { return a += b; }
    friend FieldPoly operator-(FieldPoly a, const FieldPoly& b) { return a -= b; }
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);

    bool operator==(const FieldPoly&) const = default;

    void add_term(const Monomial& m, const ScalarPoly& c);
    void add_term(Monomial&& m, ScalarPoly&& c);

    // All point labels in generators and in propagator-symbol slots of the
    // coefficients.
    std::set<std::uint32_t> support() const;
    std::uint32_t max_point() const; // 0 when the support is empty

private:
    TermMap terms_; // no zero coefficients stored
};

// The commutative normal product; alias of operator*.
inline FieldPoly normal_mul(const FieldPoly& a, const FieldPoly& b) { return a * b; }

inline std::set<std::uint32_t> support(const FieldPoly& a) { return a.support(); }

// Validates that a fits into the label universe {1,...,level} and returns it
// unchanged; the inductive-limit embeddings are identities on the
// representation. Throws Error("LabelOverflow") otherwise.
FieldPoly embed(const FieldPoly& a, std::uint32_t level);

// Applies the point substitution sigma (identity off its domain) to
// generators and propagator slots. Throws Error("NotInjective") if the
// effective map collapses two support labels.
FieldPoly relabel(const FieldPoly& a, const std::map<std::uint32_t, std::uint32_t>& sigma);

} // namespace fock
