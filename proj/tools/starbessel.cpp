// Command-line front end: critical orders, zero tables, Rayleigh sums,
// sampled starlikeness verdicts, alpha sweeps and growth-order estimates.
//
// stdout carries data only (JSON by default, CSV with --format csv); messages
// go to stderr. Exit codes: 0 success / SUPPORTED, 2 invalid input or failed
// precondition, 3 REFUTED, 4 INCONCLUSIVE.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starbessel/cli/output.hpp"
#include "starbessel/starbessel.hpp"

namespace sb = starbessel;
using sb::cli::CsvTable;
using sb::cli::format_number;
using sb::cli::json;
using sb::cli::OutputRecord;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_refuted = 3;
constexpr int exit_inconclusive = 4;

struct Settings {
    std::string format = "json";
    double tol = sb::default_root_tolerance;
    std::size_t max_zeros = sb::default_zero_count;
    double rmax = 0.9999;
    int ntheta = sb::default_n_theta;
};

struct Coefficients {
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> c;

    bool any() const { return a || b || c; }

    sb::DiniCoefficients require(const std::string& what) const {
        if (!a || !b || !c) {
            throw sb::domain_error(what + " requires --a, --b and --c");
        }
        return {*a, *b, *c};
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--a", a, "Dini coefficient a (of z^2 J'')");
        cmd->add_option("--b", b, "Dini coefficient b (of z J')");
        cmd->add_option("--c", c, "Dini coefficient c (of J)");
    }

    void record(json& inputs, const sb::DiniCoefficients& d) const {
        inputs["a"] = d.a();
        inputs["b"] = d.b();
        inputs["c"] = d.c();
    }
};

void emit(const Settings& s, const OutputRecord& rec, const CsvTable& table) {
    if (s.format == "csv") {
        std::cout << table.str();
    } else {
        std::cout << rec.dump();
    }
}

sb::ZeroFamily parse_family(const std::string& kind, const Coefficients& coeffs) {
    if (kind == "j") return sb::ZeroFamily::j();
    if (kind == "j1") return sb::ZeroFamily::j1();
    if (kind == "j2") return sb::ZeroFamily::j2();
    if (kind == "j3") return sb::ZeroFamily::j3();
    if (kind == "dini") return sb::ZeroFamily::dini_family(coeffs.require("--kind dini"));
    throw sb::domain_error("unknown --kind '" + kind + "' (expected j, j1, j2, j3 or dini)");
}

sb::TheoremTag parse_theorem(const std::string& name, std::optional<double> alpha, const Coefficients& coeffs) {
    const auto need_alpha = [&] {
        if (!alpha) {
            throw sb::domain_error("theorem " + name + " requires --alpha in [0, 1)");
        }
        return *alpha;
    };
    if (name == "1") return sb::TheoremTag::t1(need_alpha());
    if (name == "2") return sb::TheoremTag::t2(need_alpha());
    if (name == "A") return sb::TheoremTag::ta();
    if (name == "B") return sb::TheoremTag::tb();
    if (name == "C") return sb::TheoremTag::tc();
    if (name == "D") return sb::TheoremTag::td(coeffs.require("theorem D"));
    throw sb::domain_error("unknown --theorem '" + name + "' (expected 1, 2, A, B, C or D)");
}

sb::FunctionKind parse_function(const std::string& name) {
    if (name == "f") return sb::FunctionKind::F_NU;
    if (name == "g") return sb::FunctionKind::G_NU;
    if (name == "hA") return sb::FunctionKind::HA;
    if (name == "hB") return sb::FunctionKind::HB;
    if (name == "hC") return sb::FunctionKind::HC;
    if (name == "hD") return sb::FunctionKind::HD;
    throw sb::domain_error("unknown --function '" + name + "' (expected f, g, hA, hB, hC or hD)");
}

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

int run_critical(const Settings& s, const std::string& theorem, std::optional<double> alpha,
                 const Coefficients& coeffs) {
    const auto tag = parse_theorem(theorem, alpha, coeffs);
    const auto res = sb::solve_threshold(tag, s.tol);

    OutputRecord rec{"critical"};
    rec.inputs["theorem"] = theorem;
    rec.inputs["tol"] = s.tol;
    if (tag.alpha()) rec.inputs["alpha"] = *tag.alpha();
    if (tag.dini()) coeffs.record(rec.inputs, *tag.dini());
    rec.result = {{"nu_star", res.nu_star}, {"bracket", {res.lo, res.hi}}, {"theorem", theorem}};
    rec.diagnostics = {{"residual", res.residual}, {"iterations", res.iterations}};

    CsvTable table({"theorem", "alpha", "a", "b", "c", "nu_star", "lo", "hi", "residual", "iterations"});
    const auto& d = tag.dini();
    table.add_row({theorem, opt_number(tag.alpha()), d ? format_number(d->a()) : "", d ? format_number(d->b()) : "",
                   d ? format_number(d->c()) : "", format_number(res.nu_star), format_number(res.lo),
                   format_number(res.hi), format_number(res.residual), std::to_string(res.iterations)});
    emit(s, rec, table);
    return exit_ok;
}

int run_zeros(const Settings& s, const std::string& kind, double nu, std::size_t count, const Coefficients& coeffs) {
    const auto family = parse_family(kind, coeffs);
    const auto table = sb::compute_zeros(family, sb::Order{nu}, count);

    OutputRecord rec{"zeros"};
    rec.inputs = {{"kind", kind}, {"nu", nu}, {"count", count}};
    if (family.dini) coeffs.record(rec.inputs, *family.dini);
    rec.result = {{"zeros", table.zeros}, {"count", table.count()}};
    rec.diagnostics = {{"tail_start", table.tail_start.value_or(0.0)}};

    CsvTable csv({"n", "zero"});
    for (std::size_t i = 0; i < table.zeros.size(); ++i) {
        csv.add_row({std::to_string(i + 1), format_number(table.zeros[i])});
    }
    emit(s, rec, csv);
    return exit_ok;
}

int run_rayleigh(const Settings& s, const std::string& kind, double nu, const Coefficients& coeffs) {
    const auto family = parse_family(kind, coeffs);
    const sb::Order order{nu};
    const auto table = sb::compute_zeros(family, order, s.max_zeros);
    const double closed = sb::rayleigh_sum_closed_form(family, order);

    OutputRecord rec{"rayleigh"};
    rec.inputs = {{"kind", kind}, {"nu", nu}, {"max_zeros", s.max_zeros}};
    if (family.dini) coeffs.record(rec.inputs, *family.dini);
    rec.result["closed_form"] = closed;

    CsvTable csv({"kind", "nu", "closed_form", "zero_sum", "tail_bound", "n_terms", "shah_trimble_holds", "margin"});
    std::string zero_sum_cell;
    std::string tail_cell;
    std::string holds_cell;
    std::string margin_cell;
    if (table.zeros.front() > 1.0) {
        const auto direct = sb::rayleigh_sum_from_zeros(table);
        const auto st = sb::shah_trimble_holds(table);
        rec.result["zero_sum"] = direct.value;
        rec.result["shah_trimble"] = {{"holds", st.holds}, {"sum", st.sum}, {"margin", st.margin}};
        rec.diagnostics = {{"tail_bound", direct.tail_bound}, {"n_terms", table.count()}};
        zero_sum_cell = format_number(direct.value);
        tail_cell = format_number(direct.tail_bound);
        holds_cell = st.holds ? "true" : "false";
        margin_cell = format_number(st.margin);
    } else {
        rec.result["zero_sum"] = nullptr;
        rec.result["shah_trimble"] = nullptr;
        rec.diagnostics = {{"n_terms", table.count()},
                           {"note", "first zero <= 1: criterion hypothesis violated"}};
        std::cerr << "rayleigh: first zero " << format_number(table.zeros.front())
                  << " <= 1, zero sum and criterion not applicable\n";
    }
    csv.add_row({kind, format_number(nu), format_number(closed), zero_sum_cell, tail_cell,
                 std::to_string(table.count()), holds_cell, margin_cell});
    emit(s, rec, csv);
    return exit_ok;
}

int run_verify(const Settings& s, const std::string& function, double nu, double alpha, const Coefficients& coeffs) {
    const auto kind = parse_function(function);
    std::optional<sb::DiniCoefficients> dini;
    if (kind == sb::FunctionKind::HD) {
        dini = coeffs.require("--function hD");
    }
    const sb::NormalizedFunction fn(kind, sb::Order{nu}, dini);
    if (!(s.rmax > 0.0 && s.rmax < 1.0)) {
        throw sb::domain_error("--rmax must lie in (0, 1)");
    }
    std::vector<double> grid;
    for (double r : sb::default_r_grid()) {
        if (r < s.rmax) grid.push_back(r);
    }
    grid.push_back(s.rmax);
    const auto verdict = sb::certify(fn, alpha, grid, s.ntheta);

    OutputRecord rec{"verify"};
    rec.inputs = {{"function", function}, {"nu", nu}, {"alpha", alpha}, {"rmax", s.rmax}, {"ntheta", s.ntheta}};
    if (dini) coeffs.record(rec.inputs, *dini);
    rec.result = {{"verdict", sb::verdict_name(verdict.status)},
                  {"min_value", verdict.min_value},
                  {"witness", {{"r", verdict.witness_r}, {"theta", verdict.witness_theta}}},
                  {"evidence", "sampling"}};
    rec.diagnostics = {{"r_grid", grid}};

    std::string st_sum;
    std::string st_margin;
    std::string st_holds;
    if (const auto family = fn.zero_family()) {
        const auto table = sb::compute_zeros(*family, fn.order(), s.max_zeros);
        try {
            const auto st = sb::shah_trimble_holds(table);
            rec.result["shah_trimble"] = {{"holds", st.holds}, {"sum", st.sum}, {"margin", st.margin}};
            rec.diagnostics["tail_bound"] = st.tail_bound;
            st_sum = format_number(st.sum);
            st_margin = format_number(st.margin);
            st_holds = st.holds ? "true" : "false";
        } catch (const sb::hypothesis_error&) {
            rec.result["shah_trimble"] = {{"holds", false}, {"hypothesis_violated", true}};
            st_holds = "false";
        }
    }

    CsvTable csv({"function", "nu", "alpha", "verdict", "min_value", "witness_r", "witness_theta",
                  "shah_trimble_holds", "shah_trimble_sum", "margin"});
    csv.add_row({function, format_number(nu), format_number(alpha), sb::verdict_name(verdict.status),
                 format_number(verdict.min_value), format_number(verdict.witness_r),
                 format_number(verdict.witness_theta), st_holds, st_sum, st_margin});
    emit(s, rec, csv);
    switch (verdict.status) {
    case sb::VerdictStatus::Supported: return exit_ok;
    case sb::VerdictStatus::Refuted: return exit_refuted;
    case sb::VerdictStatus::Inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

int run_sweep(const Settings& s, const std::string& theorem, double from, double to, int steps,
              const std::string& out_path) {
    sb::Theorem t;
    if (theorem == "1") {
        t = sb::Theorem::T1;
    } else if (theorem == "2") {
        t = sb::Theorem::T2;
    } else {
        throw sb::domain_error("sweep supports --theorem 1 or 2 only");
    }
    if (steps < 1) {
        throw sb::domain_error("--steps must be at least 1");
    }
    std::vector<double> alphas;
    for (int i = 0; i < steps; ++i) {
        alphas.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
    }
    const auto curve = sb::threshold_curve(t, alphas, s.tol);

    CsvTable csv({"alpha", "nu"});
    json rows = json::array();
    std::optional<double> prev;
    for (const auto& pt : curve) {
        if (!pt.result) {
            throw sb::bracket_error("sweep: alpha = " + format_number(pt.alpha) + ": " + pt.error);
        }
        const double nu = pt.result->nu_star;
        if (prev && !(nu > *prev)) {
            throw sb::domain_error("sweep: threshold curve not strictly increasing at alpha = " +
                                   format_number(pt.alpha));
        }
        prev = nu;
        csv.add_row({format_number(pt.alpha), format_number(nu)});
        rows.push_back({pt.alpha, nu});
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            throw sb::domain_error("sweep: cannot open " + out_path + " for writing");
        }
        f << csv.str();
    }

    OutputRecord rec{"sweep"};
    rec.inputs = {{"theorem", theorem}, {"from", from}, {"to", to}, {"steps", steps}, {"tol", s.tol}};
    if (!out_path.empty()) rec.inputs["out"] = out_path;
    rec.result = {{"curve", rows}};
    rec.diagnostics = {{"monotone", true}};
    emit(s, rec, csv);
    return exit_ok;
}

int run_growth(const Settings& s, double nu, int n_max, const Coefficients& coeffs) {
    const auto dini = coeffs.require("growth-order");
    const auto g = sb::growth_order_estimate(dini, sb::Order{nu}, n_max);

    OutputRecord rec{"growth-order"};
    rec.inputs = {{"nu", nu}, {"nmax", n_max}};
    coeffs.record(rec.inputs, dini);
    rec.result = {{"estimate", g.estimate}};
    rec.diagnostics = {{"raw_quotient", g.raw_quotient}};

    CsvTable csv({"a", "b", "c", "nu", "nmax", "estimate", "raw_quotient"});
    csv.add_row({format_number(dini.a()), format_number(dini.b()), format_number(dini.c()), format_number(nu),
                 std::to_string(n_max), format_number(g.estimate), format_number(g.raw_quotient)});
    emit(s, rec, csv);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical Bessel orders for starlikeness on the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with defaults (flags override)");

    Settings s;
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", s.tol, "Bisection width for critical orders");
    app.add_option("--max-zeros", s.max_zeros, "Zeros summed for Rayleigh sums");
    app.add_option("--rmax", s.rmax, "Largest sampled radius for verify");
    app.add_option("--ntheta", s.ntheta, "Angular samples per circle for verify");

    Coefficients coeffs;
    std::string theorem;
    std::optional<double> alpha;
    auto* critical = app.add_subcommand("critical", "Solve a threshold equation");
    critical->add_option("--theorem", theorem, "1, 2, A, B, C or D")->required();
    critical->add_option("--alpha", alpha, "Order of starlikeness (theorems 1 and 2)");
    coeffs.add_to(critical);

    std::string kind;
    double nu = 0.0;
    std::size_t count = 1;
    auto* zeros = app.add_subcommand("zeros", "Tabulate positive zeros");
    zeros->add_option("--kind", kind, "j, j1, j2, j3 or dini")->required();
    zeros->add_option("--nu", nu, "Bessel order")->required();
    zeros->add_option("--count", count, "Number of zeros");
    coeffs.add_to(zeros);

    auto* rayleigh = app.add_subcommand("rayleigh", "Sum 1/(x_n^2 - 1) and the Shah-Trimble test");
    rayleigh->add_option("--kind", kind, "j, j1, j2, j3 or dini")->required();
    rayleigh->add_option("--nu", nu, "Bessel order")->required();
    coeffs.add_to(rayleigh);

    std::string function;
    double verify_alpha = 0.0;
    auto* verify = app.add_subcommand("verify", "Sample Re(z h'/h) on the disk");
    verify->add_option("--function", function, "f, g, hA, hB, hC or hD")->required();
    verify->add_option("--nu", nu, "Bessel order")->required();
    verify->add_option("--alpha", verify_alpha, "Order of starlikeness");
    coeffs.add_to(verify);

    double from = 0.0;
    double to = 0.9;
    int steps = 10;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Threshold curve nu(alpha) for theorem 1 or 2");
    sweep->add_option("--theorem", theorem, "1 or 2")->required();
    sweep->add_option("--from", from, "First alpha");
    sweep->add_option("--to", to, "Last alpha");
    sweep->add_option("--steps", steps, "Number of alpha values");
    sweep->add_option("--out", out_path, "CSV file to write");

    int n_max = 200;
    auto* growth = app.add_subcommand("growth-order", "Growth order of the Dini series");
    growth->add_option("--nu", nu, "Bessel order")->required();
    growth->add_option("--nmax", n_max, "Largest coefficient index");
    coeffs.add_to(growth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*critical) return run_critical(s, theorem, alpha, coeffs);
        if (*zeros) return run_zeros(s, kind, nu, count, coeffs);
        if (*rayleigh) return run_rayleigh(s, kind, nu, coeffs);
        if (*verify) return run_verify(s, function, nu, verify_alpha, coeffs);
        if (*sweep) return run_sweep(s, theorem, from, to, steps, out_path);
        if (*growth) return run_growth(s, nu, n_max, coeffs);
    } catch (const sb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
