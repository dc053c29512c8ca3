// Command-line front end. Subcommands:
//
//   bounds       stability bounds N1, N2, N and the witness decomposition
//   bps          refined invariant table up to N(beta)
//   betti-hilb   Betti numbers of the Hilbert scheme of points S^[n]
//   verify       exact identity suite for the generating functions
//   extract      extraction route vs formula route, per cell
//   chern-count  monomial-count route vs formula route, per cell
//
// Exit codes: 0 success, 2 verification mismatch, 1 usage or domain errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "delpezzo/bounds.hpp"
#include "delpezzo/cherncount.hpp"
#include "delpezzo/extract.hpp"
#include "delpezzo/genfun.hpp"
#include "delpezzo/qseries.hpp"
#include "delpezzo/specs.hpp"
#include "delpezzo/surface.hpp"

namespace {

using namespace delpezzo;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;

struct ClassArgs {
    std::string surface;
    std::string beta;
};

std::pair<Surface, CurveClass> resolve(const ClassArgs& args) {
    Surface s = parse_surface(args.surface);
    CurveClass beta = parse_class(s, args.beta);
    return {std::move(s), std::move(beta)};
}

std::string bound_text(const std::optional<std::int64_t>& value) {
    return value ? std::to_string(*value) : std::string("Infinite");
}

int run_bounds(const ClassArgs& args) {
    const auto [s, beta] = resolve(args);
    const CodimResult codim = integral_complement_codim(s, beta);
    std::cout << "surface: " << s.name() << "\n";
    std::cout << "beta:    " << class_spec(s, beta) << "\n";
    std::cout << "codim:   " << bound_text(codim.value) << "\n";
    if (!codim.infinite())
        std::cout << "witness: " << class_spec(s, codim.beta1) << " + "
                  << class_spec(s, codim.beta2) << "\n";
    std::cout << "N1:      " << bound_text(n1(s, beta)) << "\n";
    std::cout << "N2:      " << n2(s, beta) << "\n";
    std::cout << "N:       " << n_bound(s, beta) << "\n";
    return exit_ok;
}

// Cells are listed by total degree, then by ascending i. Odd total degrees
// are omitted: every factor of H has even total degree, so those cells
// vanish identically.
template <typename Fn>
void for_each_table_cell(const BpsTable& table, Fn&& fn) {
    for (int d = 0; d <= table.bound; d += 2)
        for (int i = 0; i <= d; ++i)
            fn(i, d - i, table.at(i, d - i));
}

int run_bps(const ClassArgs& args, const std::string& format) {
    const auto [s, beta] = resolve(args);
    const BpsTable table = bps_table(s, beta);

    if (format == "csv") {
        std::cout << "i,j,n\n";
        for_each_table_cell(table, [](int i, int j, const Int& n) {
            std::cout << i << "," << j << "," << n.get_str() << "\n";
        });
    } else if (format == "json") {
        nlohmann::ordered_json doc;
        doc["surface"] = table.surface;
        doc["beta"] = class_spec(s, beta);
        const auto first = n1(s, beta);
        if (first)
            doc["N1"] = *first;
        else
            doc["N1"] = "Infinite";
        doc["N2"] = n2(s, beta);
        doc["N"] = table.bound;
        doc["table"] = nlohmann::ordered_json::array();
        for_each_table_cell(table, [&](int i, int j, const Int& n) {
            doc["table"].push_back({{"i", i}, {"j", j}, {"n", n.get_str()}});
        });
        doc["route"] = route_name(table.route);
        std::cout << doc.dump(2) << "\n";
    } else { // table
        std::cout << "n^{i,j} for " << s.name() << ", beta = "
                  << class_spec(s, beta) << ", i+j <= " << table.bound
                  << "\n";
        for (int d = 0; d <= table.bound; d += 2) {
            std::cout << "degree " << d << ":";
            for (int i = 0; i <= d; ++i)
                std::cout << " " << table.at(i, d - i).get_str();
            std::cout << "\n";
        }
    }
    return exit_ok;
}

int run_betti_hilb(const std::string& surface, int n, int max_degree) {
    const Surface s = parse_surface(surface);
    if (n < 0)
        throw std::invalid_argument("point count must be nonnegative");
    const int top = max_degree >= 0 ? max_degree : 4 * n;
    if (n + top > max_series_cap)
        throw std::invalid_argument("n + max degree must stay within " +
                                    std::to_string(max_series_cap));
    std::cout << "s,b\n";
    for (int deg = 0; deg <= top; ++deg)
        std::cout << deg << "," << hilb_betti(s, n, deg).get_str() << "\n";
    return exit_ok;
}

int run_verify(int rho_arg, int cap) {
    int failures = 0;
    const int rho_lo = rho_arg > 0 ? rho_arg : 1;
    const int rho_hi = rho_arg > 0 ? rho_arg : 9;

    for (int rho = rho_lo; rho <= rho_hi; ++rho) {
        // T(q) equals H(q,q), coefficient by coefficient.
        {
            const std::vector<Int> diag =
                specialize_diagonal(h_series(rho, cap));
            const BiSeries t = t_series(rho, cap);
            bool ok = true;
            for (int k = 0; k <= cap; ++k)
                if (diag[k] != coeff(t, k, 0))
                    ok = false;
            std::cout << "rho=" << rho << " cap=" << cap
                      << " diagonal-identity " << (ok ? "ok" : "MISMATCH")
                      << "\n";
            if (!ok)
                ++failures;
        }
        // G(z,w)(1-w)/(1-z^2) under z=t, w=q/t equals H(q,t)/(1-qt).
        {
            const BiSeries lhs =
                expand(g_change_of_variables_form(rho, cap), cap);
            const BiSeries rhs =
                expand(h_over_one_minus_qt_form(rho, cap), cap);
            const bool ok = (lhs == rhs);
            std::cout << "rho=" << rho << " cap=" << cap
                      << " change-of-variables " << (ok ? "ok" : "MISMATCH")
                      << "\n";
            if (!ok)
                ++failures;
        }
        // [G]^{k,n} stabilizes to [T]^k once n >= k.
        {
            const int n = std::min(16, cap / 2);
            const BiSeries g = g_series(rho, 2 * n);
            const BiSeries t = t_series(rho, n);
            bool ok = true;
            for (int k = 0; k <= n; ++k)
                if (coeff(g, k, n) != coeff(t, k, 0))
                    ok = false;
            std::cout << "rho=" << rho << " n=" << n << " stabilization "
                      << (ok ? "ok" : "MISMATCH") << "\n";
            if (!ok)
                ++failures;
        }
    }
    std::cout << "verify: " << (failures == 0 ? "all identities hold"
                                              : "mismatches found")
              << "\n";
    return failures == 0 ? exit_ok : exit_mismatch;
}

int run_extract(const ClassArgs& args, const std::string& input_path) {
    const auto [s, beta] = resolve(args);

    RoundtripReport report;
    if (input_path.empty()) {
        report = roundtrip_verify(s, beta);
    } else {
        std::ifstream in(input_path);
        if (!in)
            throw std::invalid_argument("cannot open '" + input_path + "'");
        const BettiInput input = read_betti_csv(in);
        const auto first = n1(s, beta);
        if ((first && input.m_max > *first) || input.k_max > n2(s, beta))
            throw OutOfStableRange(
                "Betti input bounds exceed N2/N1 for this class");
        report = roundtrip_verify_input(s, beta, input);
    }

    std::cout << "surface: " << s.name() << "\n";
    std::cout << "beta:    " << class_spec(s, beta) << "\n";
    std::cout << "N:       " << report.bound << "\n";
    int mismatches = 0;
    for (const RoundtripCell& cell : report.cells) {
        if (!cell.ok) {
            ++mismatches;
            std::cout << "cell (" << cell.i << "," << cell.j
                      << "): extracted " << cell.actual.get_str()
                      << ", formula " << cell.expected.get_str() << "\n";
        }
    }
    std::cout << "cells:   " << report.cells.size() << " compared, "
              << mismatches << " mismatches\n";
    std::cout << (report.all_ok ? "ok" : "MISMATCH") << "\n";
    return report.all_ok ? exit_ok : exit_mismatch;
}

int run_chern_count(int rho, int m) {
    const ChernReport report = verify_chern_vs_h(rho, m);
    std::cout << "rho=" << report.rho << " m=" << report.m
              << " cells with i+j <= " << 2 * report.m << ": "
              << report.cells.size() << "\n";
    int mismatches = 0;
    for (const ChernCell& cell : report.cells) {
        if (!cell.ok) {
            ++mismatches;
            std::cout << "cell (" << cell.i << "," << cell.j << "): count "
                      << cell.count.get_str() << ", coefficient "
                      << cell.coefficient.get_str() << "\n";
        }
    }
    std::cout << (report.all_ok ? "all cells agree"
                                : std::to_string(mismatches) + " mismatches")
              << "\n";
    return report.all_ok ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stable-range invariants of del Pezzo surfaces"};
    app.require_subcommand(1);

    ClassArgs class_args;
    std::string format = "table";
    std::string input_path;
    int hilb_n = 0;
    int max_degree = -1;
    int rho = 0;
    int cap = 40;
    int chern_rho = 1;
    int chern_m = 1;

    auto add_class_options = [&](CLI::App* cmd) {
        cmd->add_option("-s,--surface", class_args.surface,
                        "surface spec: P2 | P1xP1 | dP:<n>")
            ->required();
        cmd->add_option("-b,--beta", class_args.beta,
                        "curve class spec, e.g. 6 | 3,5 | 5;2")
            ->required();
    };

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "stability bounds for a curve class");
    add_class_options(bounds_cmd);

    CLI::App* bps_cmd =
        app.add_subcommand("bps", "refined invariant table up to N(beta)");
    add_class_options(bps_cmd);
    bps_cmd->add_option("--format", format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* hilb_cmd = app.add_subcommand(
        "betti-hilb", "Betti numbers of the Hilbert scheme S^[n]");
    hilb_cmd
        ->add_option("-s,--surface", class_args.surface,
                     "surface spec: P2 | P1xP1 | dP:<n>")
        ->required();
    hilb_cmd->add_option("-n,--points", hilb_n, "number of points")
        ->required();
    hilb_cmd->add_option("--max-degree", max_degree,
                         "largest Betti degree to print (default 4n)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "exact generating-function identities");
    verify_cmd->add_option("--rho", rho, "restrict to one Picard number")
        ->check(CLI::Range(1, 9));
    verify_cmd->add_option("--cap", cap, "series degree cap")
        ->check(CLI::Range(0, max_series_cap));

    CLI::App* extract_cmd = app.add_subcommand(
        "extract", "extraction route vs formula route");
    add_class_options(extract_cmd);
    extract_cmd->add_option("--input", input_path,
                            "Betti table CSV (header k,m,b)");

    CLI::App* chern_cmd = app.add_subcommand(
        "chern-count", "monomial-count route vs formula route");
    chern_cmd->add_option("--rho", chern_rho, "Picard number")
        ->required()
        ->check(CLI::Range(1, 9));
    chern_cmd->add_option("-m,--monomial-bound", chern_m,
                          "compare for i+j <= 2m")
        ->required()
        ->check(CLI::Range(1, 100));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (bounds_cmd->parsed())
            return run_bounds(class_args);
        if (bps_cmd->parsed())
            return run_bps(class_args, format);
        if (hilb_cmd->parsed())
            return run_betti_hilb(class_args.surface, hilb_n, max_degree);
        if (verify_cmd->parsed())
            return run_verify(rho, cap);
        if (extract_cmd->parsed())
            return run_extract(class_args, input_path);
        if (chern_cmd->parsed())
            return run_chern_count(chern_rho, chern_m);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
