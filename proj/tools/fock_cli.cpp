// Command-line front end: parses DSL expressions or JSON inputs, runs the
// algebraic operations and prints canonical text or JSON.
//
// Exit codes: 0 success, 1 domain error (kind on stderr), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fock/json_io.hpp"
#include "fock/parser.hpp"
#include "fock/printer.hpp"

namespace {

struct UsageError {
    std::string message;
};

struct GlobalOpts {
    std::size_t dim = 4;
    std::string format = "text";
    std::string registry_file;
    bool allow_diagonal = false;
};

fock::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw fock::Error("FileNotFound", "cannot open '" + path + "'");
    }
    try {
        fock::Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw fock::Error("BadJson", "cannot parse '" + path + "': " + e.what());
    }
}

fock::KernelRegistry load_registry(const GlobalOpts& g) {
    fock::KernelRegistry reg;
    if (!g.registry_file.empty()) {
        reg = fock::registry_from_json(read_json_file(g.registry_file));
    }
    if (g.allow_diagonal) reg.set_allow_diagonal(true);
    return reg;
}

fock::FieldPoly load_input(const std::string& arg, const GlobalOpts& g) {
    if (!arg.empty() && arg[0] == '@') {
        return fock::field_poly_from_json(read_json_file(arg.substr(1)), g.dim,
                                          g.allow_diagonal);
    }
    return fock::parse_expression(arg, g.dim);
}

struct ExprArgs {
    std::vector<std::string> positional;
    std::vector<std::string> json_files;
};

void add_expr_args(CLI::App* sub, ExprArgs& args) {
    sub->add_option("expr", args.positional, "expression in the DSL, or @FILE for JSON input");
    sub->add_option("--from-json", args.json_files,
                    "read a polynomial from a JSON file (appended after positionals)");
}

std::vector<fock::FieldPoly> resolve_inputs(const ExprArgs& args, const GlobalOpts& g,
                                            std::size_t want, const char* command) {
    std::vector<fock::FieldPoly> out;
    for (const auto& e : args.positional) out.push_back(load_input(e, g));
    for (const auto& f : args.json_files) {
        out.push_back(fock::field_poly_from_json(read_json_file(f), g.dim, g.allow_diagonal));
    }
    if (out.size() != want) {
        throw UsageError{std::string(command) + " takes exactly " + std::to_string(want) +
                         " input expression(s), got " + std::to_string(out.size())};
    }
    return out;
}

void emit(const GlobalOpts& g, const std::string& text, const fock::Json& json) {
    if (g.format == "json") {
        std::cout << json.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    int result_code = 0;

    CLI::App app{"symbolic star products, Wick expansion and Green functions "
                 "for field polynomials at labeled points"};
    app.require_subcommand(1);
    app.add_option("--dim", g.dim, "spacetime dimension (length of derivative multi-indices)")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--registry", g.registry_file, "kernel registry JSON file");
    app.add_flag("--allow-diagonal", g.allow_diagonal,
                 "permit formal kernel symbols with coincident points");

    ExprArgs coproduct_args;
    auto* sc_coproduct = app.add_subcommand("coproduct", "tensor coproduct of an expression");
    sc_coproduct->fallthrough();
    add_expr_args(sc_coproduct, coproduct_args);
    sc_coproduct->callback([&] {
        auto in = resolve_inputs(coproduct_args, g, 1, "coproduct");
        fock::TensorDecomp d = fock::coproduct(in[0]);
        emit(g, fock::to_text(d), fock::to_json(d));
    });

    ExprArgs pair_args;
    auto* sc_pair = app.add_subcommand("pair", "Laplace pairing of two expressions");
    sc_pair->fallthrough();
    add_expr_args(sc_pair, pair_args);
    sc_pair->callback([&] {
        auto in = resolve_inputs(pair_args, g, 2, "pair");
        fock::ScalarPoly s = fock::laplace_pair(in[0], in[1], load_registry(g));
        emit(g, fock::to_text(s), fock::to_json(s));
    });

    ExprArgs star_args;
    auto* sc_star = app.add_subcommand("star", "star product of two expressions");
    sc_star->fallthrough();
    add_expr_args(sc_star, star_args);
    sc_star->callback([&] {
        auto in = resolve_inputs(star_args, g, 2, "star");
        fock::FieldPoly p = fock::star(in[0], in[1], fock::StarContext::make(load_registry(g)));
        emit(g, fock::to_text(p), fock::to_json(p));
    });

    ExprArgs vacuum_args;
    auto* sc_vacuum = app.add_subcommand("vacuum", "vacuum expectation (scalar part)");
    sc_vacuum->fallthrough();
    add_expr_args(sc_vacuum, vacuum_args);
    sc_vacuum->callback([&] {
        auto in = resolve_inputs(vacuum_args, g, 1, "vacuum");
        fock::ScalarPoly s = fock::vacuum(in[0]);
        emit(g, fock::to_text(s), fock::to_json(s));
    });

    ExprArgs tproduct_args;
    auto* sc_tproduct = app.add_subcommand("tproduct", "time-ordered product at distinct points");
    sc_tproduct->fallthrough();
    add_expr_args(sc_tproduct, tproduct_args);
    sc_tproduct->callback([&] {
        auto in = resolve_inputs(tproduct_args, g, 1, "tproduct");
        fock::FieldPoly p = fock::tproduct(in[0], fock::StarContext::make(load_registry(g)));
        emit(g, fock::to_text(p), fock::to_json(p));
    });

    ExprArgs green_args;
    unsigned green_points = 0;
    std::string green_field = "phi";
    auto* sc_green = app.add_subcommand("green", "time-ordered Green function of generators");
    sc_green->fallthrough();
    sc_green->add_option("generators", green_args.positional,
                         "explicit generator atoms, e.g. phi@1 D[1,0,0,0]phi@2");
    auto* points_opt =
        sc_green->add_option("--points", green_points, "shorthand: FIELD@1 ... FIELD@N");
    sc_green->add_option("--field", green_field, "field name used with --points")
        ->capture_default_str();
    sc_green->callback([&] {
        std::vector<fock::Generator> gens;
        if (points_opt->count() > 0) {
            if (!green_args.positional.empty()) {
                throw UsageError{"green takes either --points or explicit generators, not both"};
            }
            for (unsigned i = 1; i <= green_points; ++i) {
                gens.push_back({green_field, i, fock::MultiIndex(g.dim)});
            }
        } else {
            if (green_args.positional.empty()) {
                throw UsageError{"green needs --points N or explicit generator atoms"};
            }
            for (const auto& e : green_args.positional) {
                fock::FieldPoly p = fock::parse_expression(e, g.dim);
                const auto& terms = p.terms();
                bool single = terms.size() == 1 && terms.begin()->first.degree() == 1 &&
                              terms.begin()->second.is_one();
                if (!single) {
                    throw UsageError{"green argument '" + e + "' is not a single generator"};
                }
                gens.push_back(terms.begin()->first.factors().front().first);
            }
        }
        fock::ScalarPoly s = fock::green(gens, fock::StarContext::make(load_registry(g)));
        emit(g, fock::to_text(s), fock::to_json(s));
    });

    ExprArgs causal_args;
    std::string times_file, kernels_file;
    double tol = 1e-9;
    auto* sc_causal = app.add_subcommand(
        "causal-check", "verify T(cd) = T(c) * T(d) numerically for c later than d");
    sc_causal->fallthrough();
    add_expr_args(sc_causal, causal_args);
    sc_causal->add_option("--times", times_file, "times JSON file")->required();
    sc_causal->add_option("--kernels", kernels_file, "kernel table JSON file")->required();
    sc_causal->add_option("--tol", tol, "maximum allowed absolute deviation")
        ->capture_default_str();
    sc_causal->callback([&] {
        auto in = resolve_inputs(causal_args, g, 2, "causal-check");
        fock::TimeAssignment times = fock::times_from_json(read_json_file(times_file));
        fock::KernelTable table =
            fock::kernel_table_from_json(read_json_file(kernels_file), g.dim, g.allow_diagonal);
        fock::CausalReport report = fock::causal_check(
            in[0], in[1], times, table, tol, fock::StarContext::make(load_registry(g)));
        emit(g, fock::to_text(report), fock::to_json(report));
        if (report.status == fock::CausalReport::Status::OrderViolated) {
            std::cerr << "OrderViolated: support of the first operand is not strictly later\n";
            result_code = 1;
        } else if (report.status == fock::CausalReport::Status::Fail) {
            std::cerr << "CausalCheckFailed: max deviation " << report.max_abs_diff
                      << " exceeds tol " << tol << "\n";
            result_code = 1;
        }
    });

    ExprArgs eval_args;
    std::string eval_kernels_file;
    auto* sc_eval =
        app.add_subcommand("eval", "evaluate a scalar expression against a kernel table");
    sc_eval->fallthrough();
    add_expr_args(sc_eval, eval_args);
    sc_eval->add_option("--kernels", eval_kernels_file, "kernel table JSON file")->required();
    sc_eval->callback([&] {
        auto in = resolve_inputs(eval_args, g, 1, "eval");
        if (!in[0].is_scalar()) {
            throw fock::Error("NotScalar", "eval input must have no field factors");
        }
        fock::KernelTable table = fock::kernel_table_from_json(read_json_file(eval_kernels_file),
                                                               g.dim, g.allow_diagonal);
        std::complex<double> z = fock::eval_scalar(in[0].scalar_part(), table);
        emit(g, fock::to_text(z), fock::to_json(z));
    });

    ExprArgs canon_args;
    auto* sc_canon = app.add_subcommand("canon", "parse an input and reprint it canonically");
    sc_canon->fallthrough();
    add_expr_args(sc_canon, canon_args);
    sc_canon->callback([&] {
        auto in = resolve_inputs(canon_args, g, 1, "canon");
        emit(g, fock::to_text(in[0]), fock::to_json(in[0]));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& u) {
        std::cerr << "usage error: " << u.message << "\n";
        return 2;
    } catch (const fock::SyntaxError& e) {
        std::cerr << "SyntaxError at byte " << e.offset() << ": " << e.what() << "\n";
        return 1;
    } catch (const fock::Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return 1;
    }
    return result_code;
}
