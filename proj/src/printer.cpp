#include "fock/printer.hpp"

#include <cstdio>

namespace fock {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// One rendered addend of a polynomial sum: magnitude parts joined by '*',
// sign handled by the surrounding sum.
struct Addend {
    bool negative = false;
    std::string body;
};

std::string join_sum(const std::vector<Addend>& addends) {
    if (addends.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < addends.size(); ++i) {
        if (i == 0) {
            out += addends[i].body;
        } else {
            out += addends[i].negative ? " - " : " + ";
            out += addends[i].body;
        }
    }
    return out;
}

// Renders |coeff| * symbols * monomial, omitting a unit rational unless it
// is the whole addend. `force_sign` keeps the sign inside the rational so
// that a leading negative term stays within the expression grammar.
Addend make_addend(const Rational& coeff, const SymbolMonomial& syms, const Monomial& mono,
                   bool force_sign) {
    Addend a;
    a.negative = coeff.is_negative();
    Rational mag = a.negative ? -coeff : coeff;
    std::vector<std::string> parts;
    bool magnitude_one = mag.is_one();
    if (!magnitude_one || (syms.empty() && mono.is_unit())) {
        parts.push_back(force_sign && a.negative ? (-mag).to_string() : mag.to_string());
    } else if (force_sign && a.negative) {
        // keep "-1*" explicit so the printed form reparses
        parts.push_back("-1");
    }
    if (!syms.empty()) parts.push_back(to_text(syms));
    if (!mono.is_unit()) parts.push_back(to_text(mono));
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) body += '*';
        body += parts[i];
    }
    a.body = std::move(body);
    if (force_sign) a.negative = false; // sign already embedded
    return a;
}

} // namespace

std::string to_text(const Rational& r) {
    return r.to_string();
}

std::string to_text(const MultiIndex& mi) {
    std::string s = "[";
    for (std::size_t i = 0; i < mi.dim(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(mi[i]);
    }
    s += ']';
    return s;
}

std::string to_text(const Generator& g) {
    std::string s;
    if (!g.deriv.is_zero()) {
        s += 'D';
        s += to_text(g.deriv);
    }
    s += g.field;
    s += '@';
    s += std::to_string(g.point);
    return s;
}

std::string to_text(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [g, mult] : m.factors()) {
        if (!first) s += '*';
        first = false;
        s += to_text(g);
        if (mult > 1) {
            s += '^';
            s += std::to_string(mult);
        }
    }
    return s;
}

std::string to_text(const PropagatorSymbol& s) {
    std::string head;
    switch (s.kind()) {
        case KernelKind::Wightman: head = "Dplus"; break;
        case KernelKind::Feynman: head = "Dfey"; break;
        case KernelKind::Named: head = s.name(); break;
    }
    return head + "(" + std::to_string(s.left().point) + "," + std::to_string(s.right().point) +
           ";" + to_text(s.left().deriv) + "," + to_text(s.right().deriv) + ")";
}

std::string to_text(const SymbolMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [sym, pow] : m.factors()) {
        if (!first) s += '*';
        first = false;
        s += to_text(sym);
        if (pow > 1) {
            s += '^';
            s += std::to_string(pow);
        }
    }
    return s;
}

std::string to_text(const ScalarPoly& s) {
    std::vector<Addend> addends;
    for (const auto& [mono, coeff] : s.terms()) {
        addends.push_back(make_addend(coeff, mono, Monomial{}, addends.empty()));
    }
    return join_sum(addends);
}

std::string to_text(const FieldPoly& p) {
    std::vector<Addend> addends;
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [syms, r] : coeff.terms()) {
            addends.push_back(make_addend(r, syms, mono, addends.empty()));
        }
    }
    return join_sum(addends);
}

std::string to_text(const TensorDecomp& d) {
    std::vector<Addend> addends;
    for (const auto& t : d.terms()) {
        for (const auto& [syms, r] : t.coeff.terms()) {
            Addend a = make_addend(r, syms, Monomial{}, addends.empty());
            std::string pair = to_text(t.left) + " (x) " + to_text(t.right);
            if (a.body == "1") {
                a.body = std::move(pair);
            } else if (a.body == "-1") {
                a.body = "-1*" + pair;
            } else {
                a.body += '*';
                a.body += pair;
            }
            addends.push_back(std::move(a));
        }
    }
    return join_sum(addends);
}

std::string to_text(std::complex<double> z) {
    return "(" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + ")";
}

std::string to_text(const CausalReport& r) {
    std::string status;
    switch (r.status) {
        case CausalReport::Status::Pass: status = "PASS"; break;
        case CausalReport::Status::Fail: status = "FAIL"; break;
        case CausalReport::Status::OrderViolated: status = "ORDER_VIOLATED"; break;
    }
    char tol[32];
    std::snprintf(tol, sizeof(tol), "%g", r.tolerance);
    return "status=" + status + " max_abs_diff=" + fmt_double(r.max_abs_diff) + " tol=" + tol +
           " terms=" + std::to_string(r.terms_compared);
}

} // namespace fock
