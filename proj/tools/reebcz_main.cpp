// Command-line surface: exact Conley-Zehnder index tables for the Reeb
// orbits on the A_n singularity link, equivariant symplectic homology rank
// tallies, the lens-space comparison, and the numerical verification sweep
// for every geometric identity the computation rests on.
//
// Exit codes: 0 success, 1 mathematical mismatch (an asserted check
// failed), 2 degenerate/resonant parameters, 3 environment or sampling
// failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reebcz/cz.hpp"
#include "reebcz/dynamics.hpp"
#include "reebcz/errors.hpp"
#include "reebcz/lens.hpp"
#include "reebcz/ranks.hpp"
#include "reebcz/report_io.hpp"
#include "reebcz/verify.hpp"

namespace {

constexpr int kExitOk         = 0;
constexpr int kExitMismatch   = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitSampling   = 3;

struct CliOptions {
    reebcz::RunConfig config;
    std::string a1_text = "1";
    std::string a2_text = "1001/1000";
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--n", opt.config.n, "Singularity parameter n of A_n (n >= 1)");
    cmd->add_option("--eps", opt.config.eps_text,
                    "Perturbation eps as \"p/q\", or \"auto\" to certify the smallest "
                    "admissible value");
    cmd->add_option("--n-max", opt.config.n_max, "Largest orbit iterate N");
    cmd->add_option("--degree-max", opt.config.degree_max, "Degree window for rank tables");
    cmd->add_option("--a1", opt.a1_text, "Lens coefficient a1 as \"p/q\"");
    cmd->add_option("--a2", opt.a2_text, "Lens coefficient a2 as \"p/q\"");
    cmd->add_option("--samples", opt.config.samples, "Sample count for verification sweeps");
    cmd->add_option("--seed", opt.config.seed, "RNG seed");
    cmd->add_option("--tol-identity", opt.config.tol.identity,
                    "Tolerance for analytic identities");
    cmd->add_option("--tol-onlink", opt.config.tol.on_link, "Tolerance for link membership");
    cmd->add_option("--tol-ode", opt.config.tol.ode, "Tolerance for integrator agreement");
    cmd->add_option("--format", opt.config.format, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
}

int run_cz_table(CliOptions& opt) {
    const reebcz::Rational eps = opt.config.resolve_eps();
    const reebcz::LinkParams params(opt.config.n, eps, opt.config.n_max);
    const auto rows = reebcz::build_cz_table(params, opt.config.n_max);
    std::cout << reebcz::render_cz_table(rows, opt.config, eps);
    for (const auto& row : rows) {
        if (row.mu_crossing != row.mu_closed) {
            std::cerr << "index mismatch between crossing form and closed form at gamma_"
                      << reebcz::family_name(row.family) << "^" << row.N << "\n";
            return kExitMismatch;
        }
    }
    return kExitOk;
}

int run_sh_ranks(CliOptions& opt) {
    const reebcz::Rational eps = opt.config.resolve_eps();
    const reebcz::LinkParams params(opt.config.n, eps, opt.config.n_max);
    const reebcz::RankTable table = reebcz::tally_ranks(params, opt.config.degree_max);
    const bool pattern_ok         = reebcz::check_thm_pattern(table, opt.config.n);
    std::cout << reebcz::render_rank_table(table, opt.config, eps, pattern_ok);
    return pattern_ok ? kExitOk : kExitMismatch;
}

int run_verify(CliOptions& opt) {
    const reebcz::VerificationReport report = reebcz::run_verification(opt.config);
    std::cout << reebcz::render_verification(report, opt.config);
    return report.all_asserted_pass ? kExitOk : kExitMismatch;
}

int run_lens_compare(CliOptions& opt) {
    const reebcz::Rational a1  = reebcz::parse_rational(opt.a1_text);
    const reebcz::Rational a2  = reebcz::parse_rational(opt.a2_text);
    const reebcz::Rational eps = opt.config.resolve_eps();
    opt.config.a1              = a1;
    opt.config.a2              = a2;

    const reebcz::LinkParams params(opt.config.n, eps, opt.config.n_max);
    const reebcz::RankTable link_table = reebcz::tally_ranks(params, opt.config.degree_max);
    const reebcz::RankTable lens_table =
        reebcz::lens_orbit_table(opt.config.n, a1, a2, opt.config.degree_max);
    const bool equal = reebcz::tables_have_equal_ranks(link_table, lens_table);
    const reebcz::Rational delta =
        reebcz::lens_admissible_delta(opt.config.n, opt.config.degree_max);
    std::cout << reebcz::render_lens_compare(link_table, lens_table, equal, delta, opt.config,
                                             eps);
    return equal ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reeb dynamics on the link of the A_n singularity: exact Conley-Zehnder "
                 "indices, homology rank tables and geometric verification"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* cz_table = app.add_subcommand("cz-table", "Index table for both orbit families");
    CLI::App* sh_ranks = app.add_subcommand("sh-ranks", "Graded rank table from the orbit tally");
    CLI::App* verify   = app.add_subcommand("verify", "Numerical verification sweep");
    CLI::App* lens     = app.add_subcommand("lens-compare",
                                            "Link table against the lens-space table");
    for (CLI::App* cmd : {cz_table, sh_ranks, verify, lens}) {
        add_common_flags(cmd, opt);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (cz_table->parsed()) {
            return run_cz_table(opt);
        }
        if (sh_ranks->parsed()) {
            return run_sh_ranks(opt);
        }
        if (verify->parsed()) {
            return run_verify(opt);
        }
        return run_lens_compare(opt);
    } catch (const reebcz::degenerate_orbit_error& e) {
        std::cerr << "degenerate/resonant parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const reebcz::regime_error& e) {
        std::cerr << "parameters outside formula regime: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const reebcz::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const reebcz::sampling_error& e) {
        std::cerr << "sampling failure: " << e.what() << "\n";
        return kExitSampling;
    } catch (const reebcz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
