#pragma once

// Command-line front door.  Every verb loads JSON inputs, calls one library
// operation, and serializes the result; no verb owns domain logic.  Exit
// codes: 0 ok, 2 input error, 3 numeric failure, 4 scale limit.  Output is
// byte-identical for identical inputs, seed, and tolerances.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "specord/calculus.hpp"
#include "specord/daseinise.hpp"
#include "specord/json_io.hpp"
#include "specord/qobservable.hpp"
#include "specord/spectral_order.hpp"

namespace specord::cli {

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<double> tol_cluster;
    std::optional<double> tol_proj;
    uint64_t seed = 1;
    int dim = 2;
    int trials = 100000;
    std::string kind;  // counterexample flavor: linear | translation
    std::string format = "pretty";
};

namespace detail {

inline Tolerance effective_tolerance(const RunConfig& cfg) {
    Tolerance t = default_tolerance();
    if (cfg.tol_cluster) t.cluster = *cfg.tol_cluster;
    if (cfg.tol_proj) t.proj = *cfg.tol_proj;
    return t;
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void print_matrix(std::ostream& os, const ComplexMatrix& m, const char* indent = "  ") {
    for (int i = 0; i < m.dim(); ++i) {
        os << indent << "[";
        for (int j = 0; j < m.dim(); ++j) {
            Complex z = m.at(i, j);
            if (j) os << "  ";
            os << fmt(z.real());
            if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << fmt(z.imag()) << "i";
        }
        os << "]\n";
    }
}

inline void emit_matrix_csv(std::ostream& os, const std::string& which, const ComplexMatrix& m) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            os << which << "," << i << "," << j << "," << fmt(m.at(i, j).real()) << ","
               << fmt(m.at(i, j).imag()) << "\n";
}

inline void require_inputs(const RunConfig& cfg, size_t lo, size_t hi, const std::string& verb) {
    if (cfg.inputs.size() < lo || cfg.inputs.size() > hi)
        throw Error(verb + ": wrong number of input files");
}

}  // namespace detail

inline int cmd_spectral(const RunConfig& cfg, std::ostream& out) {
    detail::require_inputs(cfg, 1, 1, "spectral");
    Tolerance tol = detail::effective_tolerance(cfg);
    HermitianOperator a(io::matrix_from_json(io::load_json_file(cfg.inputs[0])), tol);
    SpectralFamily fam = SpectralFamily::from_operator(a, Continuity::Right);
    if (cfg.format == "json") {
        io::json j = io::family_to_json(fam);
        for (size_t k = 0; k < fam.jumps().size(); ++k)
            j["jumps"][k]["rank"] = fam.jumps()[k].proj.rank();
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "index,r,rank\n";
        for (size_t k = 0; k < fam.jumps().size(); ++k)
            out << k << "," << detail::fmt(fam.jumps()[k].at) << "," << fam.jumps()[k].proj.rank()
                << "\n";
    } else {
        out << "spectral family (right continuous), dim " << a.matrix().dim() << "\n";
        for (size_t k = 0; k < fam.jumps().size(); ++k) {
            const auto& jp = fam.jumps()[k];
            out << "jump " << k << ": r = " << detail::fmt(jp.at) << ", rank " << jp.proj.rank()
                << "\n";
            detail::print_matrix(out, jp.proj.matrix());
        }
    }
    return 0;
}

inline int cmd_qobs(const RunConfig& cfg, std::ostream& out) {
    detail::require_inputs(cfg, 2, 2, "qobs");
    Tolerance tol = detail::effective_tolerance(cfg);
    HermitianOperator a(io::matrix_from_json(io::load_json_file(cfg.inputs[0])), tol);
    AbelianContext ctx = io::context_from_json(io::load_json_file(cfg.inputs[1]), tol);
    if (ctx.dim() != a.matrix().dim()) throw DimMismatch("qobs: operator/context dimensions differ");
    const int k = ctx.atom_count();
    if (k > 12) throw TooManyAtoms("qobs: context has more than 12 atoms");

    std::vector<io::TableEntry> to, tz, ta;
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        Projection p = ctx.element(mask);
        to.push_back({mask, observable_value(a, p)});
        tz.push_back({mask, right_adjoint_value(a, p)});
        ta.push_back({mask, antonymous_value(a, p)});
    }
    if (cfg.format == "json") {
        io::json j;
        j["atoms"] = k;
        j["o"] = io::table_to_json(to);
        j["z"] = io::table_to_json(tz);
        j["a"] = io::table_to_json(ta);
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "P_mask,o,z,a\n";
        for (size_t i = 0; i < to.size(); ++i)
            out << to[i].mask << "," << to[i].value.str() << "," << tz[i].value.str() << ","
                << ta[i].value.str() << "\n";
    } else {
        out << "value tables over the " << (1u << k) << "-element context lattice (" << k
            << " atoms)\n";
        out << "mask  o  z  a\n";
        for (size_t i = 0; i < to.size(); ++i)
            out << to[i].mask << "  " << to[i].value.str() << "  " << tz[i].value.str() << "  "
                << ta[i].value.str() << "\n";
    }
    return 0;
}

inline int cmd_das(const RunConfig& cfg, std::ostream& out) {
    detail::require_inputs(cfg, 2, 2, "das");
    Tolerance tol = detail::effective_tolerance(cfg);
    HermitianOperator a(io::matrix_from_json(io::load_json_file(cfg.inputs[0])), tol);
    AbelianContext ctx = io::context_from_json(io::load_json_file(cfg.inputs[1]), tol);
    DaseinisedPair pair = daseinise(a, ctx);
    const double slack = tol.cluster_gap(a.matrix().max_abs());
    bool check_outer = restriction_check_outer(a, ctx, slack);
    bool check_inner = restriction_check_inner(a, ctx, slack);
    std::vector<std::pair<double, double>> atom_values;
    for (const auto& q : ctx.atoms())
        atom_values.push_back({observable_value(a, q).value(), antonymous_value(a, q).value()});

    if (cfg.format == "json") {
        io::json j;
        j["outer"] = io::matrix_to_json(pair.outer.matrix());
        j["inner"] = io::matrix_to_json(pair.inner.matrix());
        io::json av = io::json::array();
        for (size_t i = 0; i < atom_values.size(); ++i) {
            io::json e;
            e["atom"] = i;
            e["outer_value"] = atom_values[i].first;
            e["inner_value"] = atom_values[i].second;
            av.push_back(std::move(e));
        }
        j["atom_values"] = std::move(av);
        j["checks"]["restriction_outer"] = check_outer;
        j["checks"]["restriction_inner"] = check_inner;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "atom,outer_value,inner_value\n";
        for (size_t i = 0; i < atom_values.size(); ++i)
            out << i << "," << detail::fmt(atom_values[i].first) << ","
                << detail::fmt(atom_values[i].second) << "\n";
    } else {
        out << "outer approximation:\n";
        detail::print_matrix(out, pair.outer.matrix());
        out << "inner approximation:\n";
        detail::print_matrix(out, pair.inner.matrix());
        out << "per-atom values (outer, inner):\n";
        for (size_t i = 0; i < atom_values.size(); ++i)
            out << "  atom " << i << ": " << detail::fmt(atom_values[i].first) << ", "
                << detail::fmt(atom_values[i].second) << "\n";
        out << "restriction checks: outer " << (check_outer ? "pass" : "FAIL") << ", inner "
            << (check_inner ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

inline int cmd_order(const RunConfig& cfg, std::ostream& out) {
    detail::require_inputs(cfg, 2, 2, "order");
    Tolerance tol = detail::effective_tolerance(cfg);
    HermitianOperator a(io::matrix_from_json(io::load_json_file(cfg.inputs[0])), tol);
    HermitianOperator b(io::matrix_from_json(io::load_json_file(cfg.inputs[1])), tol);
    OrderVerdict ab = spectral_leq(a, b);
    OrderVerdict ba = spectral_leq(b, a);

    auto verdict_json = [](const OrderVerdict& v) {
        io::json j;
        j["leq_s"] = v.leq_s;
        j["leq_linear"] = v.leq_linear;
        io::json ws = io::json::array();
        for (const auto& w : v.witnesses) ws.push_back(w.r);
        j["witness_levels"] = std::move(ws);
        return j;
    };
    if (cfg.format == "json") {
        io::json j;
        j["a_leq_b"] = verdict_json(ab);
        j["b_leq_a"] = verdict_json(ba);
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "direction,leq_s,leq_linear,witnesses\n";
        out << "a_leq_b," << ab.leq_s << "," << ab.leq_linear << "," << ab.witnesses.size() << "\n";
        out << "b_leq_a," << ba.leq_s << "," << ba.leq_linear << "," << ba.witnesses.size() << "\n";
    } else {
        auto line = [&](const char* name, const OrderVerdict& v) {
            out << name << ": spectral " << (v.leq_s ? "yes" : "no") << ", linear "
                << (v.leq_linear ? "yes" : "no");
            if (!v.witnesses.empty()) {
                out << ", failing levels:";
                for (const auto& w : v.witnesses) out << " " << detail::fmt(w.r);
            }
            out << "\n";
        };
        line("A <= B", ab);
        line("B <= A", ba);
    }
    return 0;
}

inline int cmd_lattice(const RunConfig& cfg, std::ostream& out) {
    detail::require_inputs(cfg, 2, 16, "lattice");
    Tolerance tol = detail::effective_tolerance(cfg);
    std::vector<HermitianOperator> ops;
    for (const auto& path : cfg.inputs)
        ops.emplace_back(io::matrix_from_json(io::load_json_file(path)), tol);
    HermitianOperator m = spectral_meet(ops);
    HermitianOperator j = spectral_join(ops);
    if (cfg.format == "json") {
        io::json o;
        o["meet"] = io::matrix_to_json(m.matrix());
        o["join"] = io::matrix_to_json(j.matrix());
        out << o.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "which,i,j,re,im\n";
        detail::emit_matrix_csv(out, "meet", m.matrix());
        detail::emit_matrix_csv(out, "join", j.matrix());
    } else {
        out << "spectral meet:\n";
        detail::print_matrix(out, m.matrix());
        out << "spectral join:\n";
        detail::print_matrix(out, j.matrix());
    }
    return 0;
}

inline int cmd_calc(const RunConfig& cfg, std::ostream& out) {
    detail::require_inputs(cfg, 2, 2, "calc");
    Tolerance tol = detail::effective_tolerance(cfg);
    HermitianOperator a(io::matrix_from_json(io::load_json_file(cfg.inputs[0])), tol);
    MonotoneExtFunction f = io::function_from_json(io::load_json_file(cfg.inputs[1]));
    HermitianOperator fa = apply_to_operator(f, a);
    bool shift_ok = check_family_shift(a, f);
    std::vector<Projection> sample;
    SpectralFamily fam = SpectralFamily::from_operator(a, Continuity::Right);
    for (const auto& jp : fam.jumps()) sample.push_back(jp.proj);
    sample.push_back(Projection::zero(a.matrix().dim()));
    bool comp_ok = check_observable_composition(a, f, sample);

    if (cfg.format == "json") {
        io::json j;
        j["fA"] = io::matrix_to_json(fa.matrix());
        j["checks"]["family_shift"] = shift_ok;
        j["checks"]["observable_composition"] = comp_ok;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "check,passed\n";
        out << "family_shift," << shift_ok << "\n";
        out << "observable_composition," << comp_ok << "\n";
        detail::emit_matrix_csv(out, "fA", fa.matrix());
    } else {
        out << "transformed operator:\n";
        detail::print_matrix(out, fa.matrix());
        out << "family shift check: " << (shift_ok ? "pass" : "FAIL") << "\n";
        out << "observable composition check: " << (comp_ok ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

inline int cmd_counterexample(const RunConfig& cfg, std::ostream& out) {
    Tolerance tol = detail::effective_tolerance(cfg);
    io::json j;
    bool found = false;
    if (cfg.kind == "linear") {
        auto w = linear_not_spectral_witness(cfg.dim, cfg.seed, cfg.trials, tol);
        j["kind"] = "linear";
        j["found"] = w.has_value();
        if (w) {
            found = true;
            j["a"] = io::matrix_to_json(w->a.matrix());
            j["b"] = io::matrix_to_json(w->b.matrix());
            j["power_fail_n"] = w->power_fail_n;
        }
    } else if (cfg.kind == "translation") {
        auto w = vector_lattice_counterexample(cfg.dim, cfg.seed, cfg.trials, tol);
        j["kind"] = "translation";
        j["found"] = w.has_value();
        if (w) {
            found = true;
            j["a"] = io::matrix_to_json(w->a.matrix());
            j["b"] = io::matrix_to_json(w->b.matrix());
            j["c"] = io::matrix_to_json(w->c.matrix());
        }
    } else {
        throw Error("counterexample: kind must be \"linear\" or \"translation\"");
    }
    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "found," << (found ? 1 : 0) << "\n";
        if (found) {
            out << "which,i,j,re,im\n";
            for (const auto& key : {"a", "b", "c", "power_fail_n"}) {
                if (!j.contains(key)) continue;
                if (std::string(key) == "power_fail_n") continue;
                detail::emit_matrix_csv(out, key, io::matrix_from_json(j[key]));
            }
        }
    } else {
        out << "search " << (found ? "found a witness" : "exhausted without a witness") << "\n";
        for (const auto& key : {"a", "b", "c"}) {
            if (!j.contains(key)) continue;
            out << key << ":\n";
            detail::print_matrix(out, io::matrix_from_json(j[key]));
        }
        if (j.contains("power_fail_n"))
            out << "power comparison first fails at n = " << j["power_fail_n"].get<int>() << "\n";
    }
    return 0;
}

inline int run(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "spectral") return cmd_spectral(cfg, out);
    if (cfg.command == "qobs") return cmd_qobs(cfg, out);
    if (cfg.command == "das") return cmd_das(cfg, out);
    if (cfg.command == "order") return cmd_order(cfg, out);
    if (cfg.command == "lattice") return cmd_lattice(cfg, out);
    if (cfg.command == "calc") return cmd_calc(cfg, out);
    if (cfg.command == "counterexample") return cmd_counterexample(cfg, out);
    throw Error("unknown command: " + cfg.command);
}

inline int run_guarded(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run(cfg, out);
    } catch (const TooManyAtoms& e) {
        err << "error: TooManyAtoms: " << e.what() << "\n";
        return 4;
    } catch (const NotHermitian& e) {
        err << "error: NotHermitian: " << e.what() << "\n";
        return 3;
    } catch (const NoConvergence& e) {
        err << "error: NoConvergence: " << e.what() << "\n";
        return 3;
    } catch (const NotPSD& e) {
        err << "error: NotPSD: " << e.what() << "\n";
        return 3;
    } catch (const NonFiniteValue& e) {
        err << "error: NonFiniteValue: " << e.what() << "\n";
        return 3;
    } catch (const InternalInvariantViolation& e) {
        err << "error: InternalInvariantViolation: " << e.what() << "\n";
        return 3;
    } catch (const NotMonotone& e) {
        err << "error: NotMonotone: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"spectral-order toolkit: spectral families, observable value functions, "
                 "commutative approximations, and the spectral order on Hermitian matrices"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol-cluster", cfg.tol_cluster, "eigenvalue clustering tolerance");
        sub->add_option("--tol-proj", cfg.tol_proj, "projection comparison tolerance");
        sub->add_option("--seed", cfg.seed, "seed for randomized searches");
        sub->add_option("--format", cfg.format, "output format: json|csv|pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    auto* spectral = app.add_subcommand(
        "spectral", "print the right-continuous spectral family of an operator "
                    "(csv columns: index,r,rank)");
    spectral->add_option("operator", cfg.inputs, "operator JSON file")->required();
    add_common(spectral);

    auto* qobs = app.add_subcommand(
        "qobs", "tabulate observable, right-adjoint, and antonymous values over a context "
                "lattice (csv columns: P_mask,o,z,a)");
    qobs->add_option("files", cfg.inputs, "operator and context JSON files")->expected(2);
    add_common(qobs);

    auto* das = app.add_subcommand(
        "das", "outer and inner approximations of an operator in a context "
               "(csv columns: atom,outer_value,inner_value)");
    das->add_option("files", cfg.inputs, "operator and context JSON files")->expected(2);
    add_common(das);

    auto* order = app.add_subcommand(
        "order", "compare two operators in the spectral and linear orders "
                 "(csv columns: direction,leq_s,leq_linear,witnesses)");
    order->add_option("files", cfg.inputs, "two operator JSON files")->expected(2);
    add_common(order);

    auto* lattice = app.add_subcommand(
        "lattice", "spectral meet and join of two or more operators "
                   "(csv columns: which,i,j,re,im)");
    lattice->add_option("files", cfg.inputs, "operator JSON files")->expected(2, 16);
    add_common(lattice);

    auto* calc = app.add_subcommand(
        "calc", "apply a monotone function to an operator and verify the calculus "
                "(csv columns: check,passed then fA,i,j,re,im)");
    calc->add_option("files", cfg.inputs, "operator and function JSON files")->expected(2);
    add_common(calc);

    auto* cx = app.add_subcommand(
        "counterexample", "search for order-theoretic counterexample operators "
                          "(csv columns: found then which,i,j,re,im)");
    cx->add_option("kind", cfg.kind, "linear | translation")->required();
    cx->add_option("--dim", cfg.dim, "matrix dimension");
    cx->add_option("--trials", cfg.trials, "maximum number of random trials");
    add_common(cx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::stringstream dump_out, dump_err;
        int rc = app.exit(e, dump_out, dump_err);
        out << dump_out.str();
        err << dump_err.str();
        return rc == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return run_guarded(cfg, out, err);
}

}  // namespace specord::cli
