// Seeded trial engine over the law catalog, report aggregation and
// serialization, and the random-restart sharpness search.
//
// Per-trial seed derivation (also echoed in every report under
// "seed_derivation"): starting from h = fnv1a64(law_id), fold in the p-grid
// index, the dimension, the trial index and the master seed through the
// SplitMix64 finalizer:
//     h = mix64(h ^ (K1 * (p_index + 1)))
//     h = mix64(h ^ (K2 * (dim + 1)))
//     h = mix64(h ^ (K3 * (trial + 1)))
//     h = mix64(h ^ master_seed)
// with K1 = 0x9E3779B97F4A7C15, K2 = 0xC2B2AE3D27D4EB4F,
// K3 = 0x165667B19E3779F9. Input k of a trial is drawn from
// mix64(h + K1 * (k + 1)). Trial results therefore do not depend on
// execution order or the degree of parallelism.
#pragma once

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "omegap/io.hpp"
#include "omegap/laws.hpp"
#include "omegap/random.hpp"
#include "omegap/version.hpp"

namespace omegap {

namespace detail {
inline constexpr std::uint64_t kSeedK1 = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kSeedK2 = 0xC2B2AE3D27D4EB4FULL;
inline constexpr std::uint64_t kSeedK3 = 0x165667B19E3779F9ULL;

inline const char* kSeedDerivation =
    "h=fnv1a64(law); h=mix64(h^(K1*(p_index+1))); h=mix64(h^(K2*(dim+1))); "
    "h=mix64(h^(K3*(trial+1))); h=mix64(h^master_seed); input k from "
    "mix64(h+K1*(k+1)); mix64 = SplitMix64 finalizer";
}  // namespace detail

inline std::uint64_t trial_seed(const std::string& law_id, std::size_t p_index, std::size_t dim,
                                std::size_t trial, std::uint64_t master_seed) {
    std::uint64_t h = fnv1a64(law_id);
    h = mix64(h ^ (detail::kSeedK1 * (static_cast<std::uint64_t>(p_index) + 1)));
    h = mix64(h ^ (detail::kSeedK2 * (static_cast<std::uint64_t>(dim) + 1)));
    h = mix64(h ^ (detail::kSeedK3 * (static_cast<std::uint64_t>(trial) + 1)));
    h = mix64(h ^ master_seed);
    return h;
}

inline std::uint64_t input_seed(std::uint64_t seed, std::size_t input_index) {
    return mix64(seed + detail::kSeedK1 * (static_cast<std::uint64_t>(input_index) + 1));
}

/// Proportions of the generator kinds, cycled deterministically by trial
/// index through a 10-slot pattern (largest-remainder apportionment).
struct GeneratorMix {
    double ginibre = 0.4;
    double hermitian = 0.2;
    double unitary = 0.2;
    double nilpotent_upper = 0.2;

    std::vector<MatrixKind> pattern() const {
        const double weights[4] = {ginibre, hermitian, unitary, nilpotent_upper};
        const MatrixKind kinds[4] = {MatrixKind::ginibre, MatrixKind::hermitian,
                                     MatrixKind::unitary, MatrixKind::nilpotent_upper};
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw std::invalid_argument("generator mix: negative proportion");
            total += w;
        }
        if (total <= 0.0) throw std::invalid_argument("generator mix: proportions sum to zero");
        int counts[4];
        double frac[4];
        int assigned = 0;
        for (int i = 0; i < 4; ++i) {
            const double share = 10.0 * weights[i] / total;
            counts[i] = static_cast<int>(share);
            frac[i] = share - counts[i];
            assigned += counts[i];
        }
        while (assigned < 10) {  // largest remainder, ties to the earlier kind
            int best = 0;
            for (int i = 1; i < 4; ++i)
                if (frac[i] > frac[best]) best = i;
            ++counts[best];
            frac[best] = -1.0;
            ++assigned;
        }
        std::vector<MatrixKind> out;
        for (int i = 0; i < 4; ++i)
            for (int c = 0; c < counts[i]; ++c) out.push_back(kinds[i]);
        return out;
    }
};

struct SuiteConfig {
    std::vector<PNorm> p_grid = {PNorm::finite(1),  PNorm::finite(1.25), PNorm::finite(1.5),
                                 PNorm::finite(2),  PNorm::finite(3),    PNorm::finite(4),
                                 PNorm::finite(10), PNorm::infinity()};
    std::vector<std::size_t> dims = {1, 2, 3, 5, 8};
    std::size_t trials = 100;  // per (law, p, dim)
    std::uint64_t master_seed = 1;
    GeneratorMix mix;
    OptimizerConfig optimizer;
    std::vector<std::string> laws;  // law-id filter; empty means the full catalog

    void validate() const {
        if (trials < 1) throw std::invalid_argument("suite config: trials must be >= 1");
        if (p_grid.empty()) throw std::invalid_argument("suite config: empty p grid");
        if (dims.empty()) throw std::invalid_argument("suite config: empty dims");
        for (std::size_t d : dims)
            if (d == 0) throw std::invalid_argument("suite config: dims must be positive");
        for (const std::string& id : laws) find_law(id);
        (void)mix.pattern();
    }
};

/// Everything needed to rebuild one trial's inputs exactly.
struct TrialDescriptor {
    std::string law_id;
    PNorm p;
    std::size_t p_index = 0;
    std::size_t dim = 0;
    std::size_t trial = 0;
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t grid = 0;  // partition grid; 0 for laws without one

    TrialDescriptor(std::string law, PNorm pn) : law_id(std::move(law)), p(pn) {}
};

/// Deterministic reconstruction of a trial's inputs from its descriptor.
inline LawInputs build_trial_inputs(const Law& law, const TrialDescriptor& d) {
    LawInputs in;
    std::size_t n = d.dim;
    if (law.needs_partition) {
        if (d.grid == 0)
            throw std::invalid_argument("trial inputs: law " + law.id + " needs a partition grid");
        in.partition = BlockPartition(d.grid, d.dim);
        n = d.grid * d.dim;
    }
    const MatrixKind kind = parse_kind(d.kind);
    for (int k = 0; k < law.arity; ++k)
        in.matrices.push_back(random_matrix(kind, n, input_seed(d.seed, static_cast<std::size_t>(k))));
    return in;
}

struct TrialOutcome {
    TrialDescriptor desc;
    std::optional<LawCheck> check;  // empty iff uncertified
    bool uncertified = false;
    std::string note;

    explicit TrialOutcome(TrialDescriptor d) : desc(std::move(d)) {}
};

inline TrialOutcome run_trial(const Law& law, const TrialDescriptor& d, const OptimizerConfig& cfg) {
    TrialOutcome out(d);
    LawInputs in = build_trial_inputs(law, d);
    try {
        LawCheck c = evaluate_law(law, in, d.p, cfg);
        c.generator = d.kind;
        c.dim = d.dim;
        c.seed = d.seed;
        c.trial = d.trial;
        c.grid = d.grid;
        out.check = std::move(c);
    } catch (const UncertifiedError& e) {
        out.uncertified = true;
        out.note = e.what();
    }
    return out;
}

struct CellSummary {
    PNorm p;
    std::size_t dim = 0;
    std::size_t trials = 0, passes = 0, failures = 0, uncertified = 0, equality_witnesses = 0;
    double min_slack = 0.0;
    bool has_slack = false;

    CellSummary(PNorm pn, std::size_t d) : p(pn), dim(d) {}
};

struct LawSummary {
    std::string law_id;
    std::string p_domain;
    std::size_t trials = 0, passes = 0, failures = 0, uncertified = 0, equality_witnesses = 0;
    double min_slack = 0.0;
    bool has_slack = false;
    std::optional<TrialDescriptor> min_slack_instance;
    std::vector<CellSummary> cells;
};

struct Report {
    std::string version;
    std::string generated_at;
    double wall_clock_ms = 0.0;
    std::string seed_derivation;
    SuiteConfig config;
    std::vector<LawSummary> laws;
    std::vector<TrialOutcome> failures;       // full detail, deterministic order
    std::vector<TrialOutcome> uncertified;    // descriptors of uncertified trials

    bool all_passed() const {
        for (const LawSummary& l : laws)
            if (l.failures > 0 || l.uncertified > 0) return false;
        return true;
    }
};

namespace detail {

// The trial "closest to failing": smallest slack for inequality chains,
// largest |slack| for equalities.
inline bool worse_than(const Law& law, const LawCheck& c, double cur, bool has_cur) {
    if (!has_cur) return true;
    return law.kind == LawKind::equality ? std::abs(c.slack) > std::abs(cur) : c.slack < cur;
}

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Run every configured (law, p, dim, trial) cell. Results are independent of
/// `threads`; aggregation is order-insensitive and the failure list keeps the
/// deterministic (law, p, dim, trial) enumeration order.
inline Report run_suite(const SuiteConfig& cfg, unsigned threads = 0) {
    cfg.validate();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<const Law*> selected;
    if (cfg.laws.empty())
        for (const Law& l : law_catalog()) selected.push_back(&l);
    else
        for (const std::string& id : cfg.laws) selected.push_back(&find_law(id));

    const std::vector<MatrixKind> pattern = cfg.mix.pattern();

    struct Task {
        const Law* law;
        TrialDescriptor desc;
    };
    std::vector<Task> tasks;
    for (const Law* law : selected) {
        for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
            const PNorm& p = cfg.p_grid[pi];
            if (!law->p_domain.contains(p)) continue;
            for (std::size_t dim : cfg.dims) {
                for (std::size_t t = 0; t < cfg.trials; ++t) {
                    TrialDescriptor d(law->id, p);
                    d.p_index = pi;
                    d.dim = dim;
                    d.trial = t;
                    d.kind = kind_name(pattern[t % pattern.size()]);
                    d.seed = trial_seed(law->id, pi, dim, t, cfg.master_seed);
                    if (law->needs_partition) d.grid = 2 + t % 2;
                    tasks.push_back({law, std::move(d)});
                }
            }
        }
    }

    std::vector<std::optional<TrialOutcome>> results(tasks.size());
    detail::parallel_for(tasks.size(), threads, [&](std::size_t i) {
        results[i] = run_trial(*tasks[i].law, tasks[i].desc, cfg.optimizer);
    });

    Report rep;
    rep.version = kVersion;
    rep.generated_at = detail::utc_timestamp();
    rep.seed_derivation = detail::kSeedDerivation;
    rep.config = cfg;

    std::size_t cursor = 0;
    for (const Law* law : selected) {
        LawSummary sum;
        sum.law_id = law->id;
        sum.p_domain = law->p_domain.to_string();
        for (std::size_t pi = 0; pi < cfg.p_grid.size(); ++pi) {
            const PNorm& p = cfg.p_grid[pi];
            if (!law->p_domain.contains(p)) continue;
            for (std::size_t dim : cfg.dims) {
                CellSummary cell(p, dim);
                for (std::size_t t = 0; t < cfg.trials; ++t) {
                    const TrialOutcome& out = *results[cursor++];
                    ++cell.trials;
                    if (out.uncertified) {
                        ++cell.uncertified;
                        rep.uncertified.push_back(out);
                        continue;
                    }
                    const LawCheck& c = *out.check;
                    if (c.verdict == Verdict::fail) {
                        ++cell.failures;
                        rep.failures.push_back(out);
                    } else {
                        ++cell.passes;
                        if (c.verdict == Verdict::equality_witness) ++cell.equality_witnesses;
                    }
                    if (!cell.has_slack || (law->kind == LawKind::equality
                                                ? std::abs(c.slack) > std::abs(cell.min_slack)
                                                : c.slack < cell.min_slack)) {
                        cell.min_slack = c.slack;
                        cell.has_slack = true;
                    }
                    if (detail::worse_than(*law, c, sum.min_slack, sum.has_slack)) {
                        sum.min_slack = c.slack;
                        sum.has_slack = true;
                        sum.min_slack_instance = out.desc;
                    }
                }
                sum.trials += cell.trials;
                sum.passes += cell.passes;
                sum.failures += cell.failures;
                sum.uncertified += cell.uncertified;
                sum.equality_witnesses += cell.equality_witnesses;
                sum.cells.push_back(std::move(cell));
            }
        }
        rep.laws.push_back(std::move(sum));
    }

    // Canonical serialization order for the flat lists.
    auto by_instance = [](const TrialOutcome& a, const TrialOutcome& b) {
        return std::tie(a.desc.law_id, a.desc.p_index, a.desc.dim, a.desc.trial) <
               std::tie(b.desc.law_id, b.desc.p_index, b.desc.dim, b.desc.trial);
    };
    std::stable_sort(rep.failures.begin(), rep.failures.end(), by_instance);
    std::stable_sort(rep.uncertified.begin(), rep.uncertified.end(), by_instance);

    rep.wall_clock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Random-restart hill climb toward the smallest slack of an inequality law.
/// Inputs are perturbed entrywise with geometrically decaying Gaussian steps;
/// a perturbation is kept when the slack decreases. The returned check
/// carries the witness matrices themselves.
inline LawCheck sharpness_search(const std::string& law_id, const PNorm& p, std::size_t dim,
                                 std::size_t restarts, std::size_t steps,
                                 std::uint64_t master_seed, const OptimizerConfig& cfg = {}) {
    const Law& law = find_law(law_id);
    if (law.kind == LawKind::equality)
        throw std::invalid_argument("sharpness_search: law " + law_id + " is an equality");
    if (!law.p_domain.contains(p))
        throw std::domain_error("sharpness_search: p = " + p.to_string() +
                                " outside asserted domain " + law.p_domain.to_string());
    if (restarts < 1 || steps < 1)
        throw std::invalid_argument("sharpness_search: restarts and steps must be >= 1");

    const double sigma0 = 0.5, sigma_end = 1e-3;
    const double decay =
        steps > 1 ? std::pow(sigma_end / sigma0, 1.0 / static_cast<double>(steps - 1)) : 1.0;

    std::optional<LawCheck> best;
    std::vector<ComplexMatrix> best_inputs;

    for (std::size_t r = 0; r < restarts; ++r) {
        TrialDescriptor d(law.id, p);
        d.dim = dim;
        d.trial = r;
        d.kind = kind_name(MatrixKind::ginibre);
        d.seed = mix64(master_seed ^ (detail::kSeedK1 * (r + 1)));
        if (law.needs_partition) d.grid = 2;
        LawInputs cur = build_trial_inputs(law, d);
        LawCheck cur_check = evaluate_law(law, cur, p, cfg);
        SplitMix64 rng(mix64(d.seed + 1));

        for (std::size_t k = 0; k < steps; ++k) {
            const double sigma = sigma0 * std::pow(decay, static_cast<double>(k));
            LawInputs prop = cur;
            for (ComplexMatrix& m : prop.matrices)
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j)
                        m(i, j) += sigma * rng.next_complex_gaussian();
            LawCheck prop_check = evaluate_law(law, prop, p, cfg);
            if (prop_check.slack < cur_check.slack) {
                cur = std::move(prop);
                cur_check = std::move(prop_check);
            }
        }
        if (!best || cur_check.slack < best->slack) {
            best = cur_check;
            best_inputs = cur.matrices;
            best->seed = d.seed;
            best->grid = d.grid;
        }
    }
    best->generator = "explicit";
    best->dim = dim;
    best->explicit_inputs = std::move(best_inputs);
    return *best;
}

}  // namespace omegap
