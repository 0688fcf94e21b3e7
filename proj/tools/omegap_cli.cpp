// Command-line interface: Schatten norms, certified radii, single-law
// checks, the full suite with JSON/CSV reports, sharpness search, and the
// law catalog listing.
//
// Exit codes: 0 = all verdicts PASS; 1 = at least one FAIL or uncertified
// outcome; 2 = usage or configuration error.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "omegap/omegap.hpp"

namespace {

using namespace omegap;

int do_norm(const std::string& input, const std::string& p_str) {
    const ComplexMatrix a = load_matrix(input);
    const PNorm p = PNorm::parse(p_str);
    std::printf("%s\n", detail::format_double(schatten(a, p)).c_str());
    return 0;
}

int do_radius(const std::string& input, const std::string& p_str, double eps) {
    const ComplexMatrix a = load_matrix(input);
    const PNorm p = PNorm::parse(p_str);
    OptimizerConfig cfg;
    cfg.eps = eps;
    try {
        const CertifiedValue v = omega(a, p, cfg);
        std::printf("%s eps=%s arg=%s\n", detail::format_double(v.value).c_str(),
                    detail::format_double(v.eps).c_str(), detail::format_double(v.arg).c_str());
        return 0;
    } catch (const UncertifiedError& e) {
        std::printf("%s eps=%s arg=%s uncertified\n", detail::format_double(e.best_value).c_str(),
                    detail::format_double(e.achieved_eps).c_str(),
                    detail::format_double(e.best_arg).c_str());
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

void print_law_table(const Report& rep) {
    std::printf("%-9s %8s %8s %8s %12s %10s  %s\n", "law", "trials", "passes", "failures",
                "uncertified", "witnesses", "min slack");
    for (const LawSummary& l : rep.laws)
        std::printf("%-9s %8zu %8zu %8zu %12zu %10zu  %s\n", l.law_id.c_str(), l.trials, l.passes,
                    l.failures, l.uncertified, l.equality_witnesses,
                    l.has_slack ? detail::format_double(l.min_slack).c_str() : "-");
}

int finish_report(const Report& rep, const std::string& out_json, const std::string& out_csv) {
    if (!out_json.empty()) write_file(out_json, report_to_json(rep).dump(2) + "\n");
    if (!out_csv.empty()) write_file(out_csv, report_to_csv(rep));
    for (const TrialOutcome& f : rep.failures) {
        std::printf("FAIL %s p=%s dim=%zu trial=%zu kind=%s seed=%llu slack=%s budget=%s\n",
                    f.desc.law_id.c_str(), f.desc.p.to_string().c_str(), f.desc.dim, f.desc.trial,
                    f.desc.kind.c_str(), static_cast<unsigned long long>(f.desc.seed),
                    detail::format_double(f.check->slack).c_str(),
                    detail::format_double(f.check->eps_budget).c_str());
    }
    for (const TrialOutcome& u : rep.uncertified)
        std::printf("UNCERTIFIED %s p=%s dim=%zu trial=%zu: %s\n", u.desc.law_id.c_str(),
                    u.desc.p.to_string().c_str(), u.desc.dim, u.desc.trial, u.note.c_str());
    return rep.all_passed() ? 0 : 1;
}

int do_check(const std::string& law_id, const std::string& p_str, std::size_t dim,
             std::size_t trials, std::uint64_t seed, const std::string& out_json, double eps) {
    const Law& law = find_law(law_id);
    const PNorm p = PNorm::parse(p_str);
    if (!law.p_domain.contains(p))
        throw std::domain_error("law " + law.id + ": p = " + p.to_string() +
                                " outside asserted domain " + law.p_domain.to_string());
    SuiteConfig cfg;
    cfg.p_grid = {p};
    cfg.dims = {dim};
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.laws = {law_id};
    cfg.optimizer.eps = eps;
    Report rep = run_suite(cfg);
    print_law_table(rep);
    return finish_report(rep, out_json, "");
}

int do_suite(const std::string& config_path, const std::string& out_json,
             const std::string& out_csv, unsigned threads) {
    SuiteConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
        nlohmann::json j;
        in >> j;
        cfg = config_from_json(j);
    }
    Report rep = run_suite(cfg, threads);
    print_law_table(rep);
    std::printf("wall clock: %.1f ms\n", rep.wall_clock_ms);
    return finish_report(rep, out_json, out_csv);
}

int do_sharpness(const std::string& law_id, const std::string& p_str, std::size_t dim,
                 std::size_t restarts, std::size_t steps, std::uint64_t seed,
                 const std::string& out_json, double eps) {
    const PNorm p = PNorm::parse(p_str);
    OptimizerConfig cfg;
    cfg.eps = eps;
    LawCheck best = sharpness_search(law_id, p, dim, restarts, steps, seed, cfg);
    std::printf("law=%s p=%s dim=%zu min_slack=%s eps_budget=%s verdict=%s\n", best.law_id.c_str(),
                best.p.to_string().c_str(), dim, detail::format_double(best.slack).c_str(),
                detail::format_double(best.eps_budget).c_str(),
                verdict_name(best.verdict).c_str());
    for (const Side& s : best.sides)
        std::printf("  %s = %s\n", s.name.c_str(), detail::format_double(s.value).c_str());
    if (!out_json.empty()) write_file(out_json, check_to_json(best).dump(2) + "\n");
    return best.verdict == Verdict::fail ? 1 : 0;
}

int do_laws() {
    for (const Law& l : law_catalog())
        std::printf("%-9s %-10s %-9s %s\n", l.id.c_str(), l.p_domain.to_string().c_str(),
                    l.kind == LawKind::equality ? "equality" : "chain", l.anchor.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schatten p-norms, certified generalized numerical radii, and a "
                 "property-based verifier for a catalog of block-matrix laws"};
    app.set_version_flag("--version", omegap::kVersion);
    app.require_subcommand(1);

    std::string input, p_str = "2", law_id, config_path, out_json, out_csv;
    std::size_t dim = 2, trials = 100, restarts = 8, steps = 200;
    std::uint64_t seed = 1;
    double eps = 1e-6;
    unsigned threads = 0;

    auto* norm = app.add_subcommand("norm", "Schatten p-norm of a matrix file");
    norm->add_option("--input", input, "matrix JSON file")->required();
    norm->add_option("--p", p_str, "Schatten exponent (>= 1 or 'inf')")->required();

    auto* radius = app.add_subcommand("radius", "certified generalized numerical radius");
    radius->add_option("--input", input, "matrix JSON file")->required();
    radius->add_option("--p", p_str, "Schatten exponent (>= 1 or 'inf')")->required();
    radius->add_option("--eps", eps, "certificate target (default 1e-6)");

    auto* check = app.add_subcommand("check", "run seeded trials of one law");
    check->add_option("--law", law_id, "law id (see 'laws')")->required();
    check->add_option("--p", p_str, "Schatten exponent")->required();
    check->add_option("--dim", dim, "matrix dimension")->required();
    check->add_option("--trials", trials, "number of trials");
    check->add_option("--seed", seed, "master seed");
    check->add_option("--out", out_json, "write the report JSON here");
    check->add_option("--eps", eps, "certificate target (default 1e-6)");

    auto* suite = app.add_subcommand("suite", "run the full law suite");
    suite->add_option("--config", config_path, "suite config JSON");
    suite->add_option("--out", out_json, "write the report JSON here");
    suite->add_option("--csv", out_csv, "write the per-cell CSV here");
    suite->add_option("--threads", threads, "worker threads (default: hardware)");

    auto* sharp = app.add_subcommand("sharpness", "hill-climb toward an inequality's equality case");
    sharp->add_option("--law", law_id, "inequality law id")->required();
    sharp->add_option("--p", p_str, "Schatten exponent")->required();
    sharp->add_option("--dim", dim, "matrix dimension")->required();
    sharp->add_option("--restarts", restarts, "random restarts");
    sharp->add_option("--steps", steps, "perturbation steps per restart");
    sharp->add_option("--seed", seed, "master seed");
    sharp->add_option("--out", out_json, "write the witness check JSON here");
    sharp->add_option("--eps", eps, "certificate target (default 1e-6)");

    auto* laws = app.add_subcommand("laws", "list the law catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*norm) return do_norm(input, p_str);
        if (*radius) return do_radius(input, p_str, eps);
        if (*check) return do_check(law_id, p_str, dim, trials, seed, out_json, eps);
        if (*suite) return do_suite(config_path, out_json, out_csv, threads);
        if (*sharp) return do_sharpness(law_id, p_str, dim, restarts, steps, seed, out_json, eps);
        if (*laws) return do_laws();
    } catch (const UncertifiedError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
