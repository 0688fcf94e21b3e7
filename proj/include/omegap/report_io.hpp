// JSON and CSV serialization of suite configs, law checks and reports.
// JSON reals use the shortest round-trip representation; CSV prints 17
// significant digits. Field order is fixed, so regenerating a report from
// the same config yields byte-identical output up to the timestamp fields.
#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "omegap/detail/format.hpp"
#include "omegap/suite.hpp"

namespace omegap {

using ojson = nlohmann::ordered_json;

inline ojson pnorm_to_json(const PNorm& p) {
    if (p.is_infinity()) return ojson("inf");
    return ojson(p.value());
}

inline PNorm pnorm_from_json(const nlohmann::json& j) {
    if (j.is_string()) return PNorm::parse(j.get<std::string>());
    if (j.is_number()) return PNorm::finite(j.get<double>());
    throw std::invalid_argument("p value must be a number or \"inf\"");
}

inline ojson config_to_json(const SuiteConfig& cfg) {
    ojson j;
    j["p_grid"] = ojson::array();
    for (const PNorm& p : cfg.p_grid) j["p_grid"].push_back(pnorm_to_json(p));
    j["dims"] = cfg.dims;
    j["trials"] = cfg.trials;
    j["master_seed"] = cfg.master_seed;
    j["generator_mix"] = {{"ginibre", cfg.mix.ginibre},
                          {"hermitian", cfg.mix.hermitian},
                          {"unitary", cfg.mix.unitary},
                          {"nilpotent_upper", cfg.mix.nilpotent_upper}};
    j["optimizer"] = {{"eps", cfg.optimizer.eps}, {"max_evals", cfg.optimizer.max_evals}};
    j["laws"] = cfg.laws;
    return j;
}

inline SuiteConfig config_from_json(const nlohmann::json& j) {
    SuiteConfig cfg;
    if (j.contains("p_grid")) {
        cfg.p_grid.clear();
        for (const auto& pj : j.at("p_grid")) cfg.p_grid.push_back(pnorm_from_json(pj));
    }
    if (j.contains("dims")) cfg.dims = j.at("dims").get<std::vector<std::size_t>>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::size_t>();
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("generator_mix")) {
        const auto& m = j.at("generator_mix");
        if (m.contains("ginibre")) cfg.mix.ginibre = m.at("ginibre").get<double>();
        if (m.contains("hermitian")) cfg.mix.hermitian = m.at("hermitian").get<double>();
        if (m.contains("unitary")) cfg.mix.unitary = m.at("unitary").get<double>();
        if (m.contains("nilpotent_upper"))
            cfg.mix.nilpotent_upper = m.at("nilpotent_upper").get<double>();
    }
    if (j.contains("optimizer")) {
        const auto& o = j.at("optimizer");
        if (o.contains("eps")) cfg.optimizer.eps = o.at("eps").get<double>();
        if (o.contains("max_evals")) cfg.optimizer.max_evals = o.at("max_evals").get<std::size_t>();
    }
    if (j.contains("laws")) cfg.laws = j.at("laws").get<std::vector<std::string>>();
    cfg.validate();
    return cfg;
}

inline ojson descriptor_to_json(const TrialDescriptor& d) {
    ojson j;
    j["law"] = d.law_id;
    j["p"] = pnorm_to_json(d.p);
    j["p_index"] = d.p_index;
    j["dim"] = d.dim;
    j["trial"] = d.trial;
    j["kind"] = d.kind;
    j["seed"] = d.seed;
    if (d.grid > 0) j["grid"] = d.grid;
    return j;
}

inline TrialDescriptor descriptor_from_json(const nlohmann::json& j) {
    TrialDescriptor d(j.at("law").get<std::string>(), pnorm_from_json(j.at("p")));
    d.p_index = j.value("p_index", std::size_t{0});
    d.dim = j.at("dim").get<std::size_t>();
    d.trial = j.value("trial", std::size_t{0});
    d.kind = j.value("kind", std::string("ginibre"));
    d.seed = j.value("seed", std::uint64_t{0});
    d.grid = j.value("grid", std::size_t{0});
    return d;
}

inline ojson check_to_json(const LawCheck& c) {
    ojson j;
    j["law"] = c.law_id;
    j["p"] = pnorm_to_json(c.p);
    j["generator"] = c.generator;
    j["dim"] = c.dim;
    j["seed"] = c.seed;
    j["trial"] = c.trial;
    if (c.grid > 0) j["grid"] = c.grid;
    j["sides"] = ojson::array();
    for (const Side& s : c.sides) j["sides"].push_back({{"name", s.name}, {"value", s.value}});
    j["slack"] = c.slack;
    j["eps_budget"] = c.eps_budget;
    j["verdict"] = verdict_name(c.verdict);
    if (!c.explicit_inputs.empty()) {
        j["inputs"] = ojson::array();
        for (const ComplexMatrix& m : c.explicit_inputs) j["inputs"].push_back(matrix_to_json(m));
    }
    return j;
}

inline LawCheck check_from_json(const nlohmann::json& j) {
    LawCheck c(j.at("law").get<std::string>(), pnorm_from_json(j.at("p")));
    c.generator = j.value("generator", std::string("explicit"));
    c.dim = j.value("dim", std::size_t{0});
    c.seed = j.value("seed", std::uint64_t{0});
    c.trial = j.value("trial", std::size_t{0});
    c.grid = j.value("grid", std::size_t{0});
    if (j.contains("sides"))
        for (const auto& sj : j.at("sides"))
            c.sides.push_back({sj.at("name").get<std::string>(), sj.at("value").get<double>()});
    c.slack = j.at("slack").get<double>();
    c.eps_budget = j.at("eps_budget").get<double>();
    const std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "PASS"               ? Verdict::pass
                : v == "EQUALITY_WITNESS" ? Verdict::equality_witness
                                          : Verdict::fail;
    if (j.contains("inputs"))
        for (const auto& mj : j.at("inputs")) c.explicit_inputs.push_back(matrix_from_json(mj));
    return c;
}

inline ojson outcome_to_json(const TrialOutcome& out) {
    ojson j;
    j["descriptor"] = descriptor_to_json(out.desc);
    if (out.check) j["check"] = check_to_json(*out.check);
    if (out.uncertified) {
        j["uncertified"] = true;
        j["note"] = out.note;
    }
    return j;
}

inline TrialOutcome outcome_from_json(const nlohmann::json& j) {
    TrialOutcome out(descriptor_from_json(j.at("descriptor")));
    if (j.contains("check")) out.check = check_from_json(j.at("check"));
    out.uncertified = j.value("uncertified", false);
    out.note = j.value("note", std::string());
    return out;
}

inline ojson report_to_json(const Report& rep) {
    ojson j;
    j["version"] = rep.version;
    j["generated_at"] = rep.generated_at;
    j["wall_clock_ms"] = rep.wall_clock_ms;
    j["seed_derivation"] = rep.seed_derivation;
    j["config"] = config_to_json(rep.config);
    j["laws"] = ojson::array();
    for (const LawSummary& l : rep.laws) {
        ojson lj;
        lj["law"] = l.law_id;
        lj["p_domain"] = l.p_domain;
        lj["trials"] = l.trials;
        lj["passes"] = l.passes;
        lj["failures"] = l.failures;
        lj["uncertified"] = l.uncertified;
        lj["equality_witnesses"] = l.equality_witnesses;
        if (l.has_slack) lj["min_slack"] = l.min_slack;
        if (l.min_slack_instance)
            lj["min_slack_instance"] = descriptor_to_json(*l.min_slack_instance);
        lj["cells"] = ojson::array();
        for (const CellSummary& c : l.cells) {
            ojson cj;
            cj["p"] = pnorm_to_json(c.p);
            cj["dim"] = c.dim;
            cj["trials"] = c.trials;
            cj["passes"] = c.passes;
            cj["failures"] = c.failures;
            cj["uncertified"] = c.uncertified;
            cj["equality_witnesses"] = c.equality_witnesses;
            if (c.has_slack) cj["min_slack"] = c.min_slack;
            lj["cells"].push_back(std::move(cj));
        }
        j["laws"].push_back(std::move(lj));
    }
    j["failures"] = ojson::array();
    for (const TrialOutcome& f : rep.failures) j["failures"].push_back(outcome_to_json(f));
    j["uncertified"] = ojson::array();
    for (const TrialOutcome& u : rep.uncertified) j["uncertified"].push_back(outcome_to_json(u));
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report rep;
    rep.version = j.at("version").get<std::string>();
    rep.generated_at = j.value("generated_at", std::string());
    rep.wall_clock_ms = j.value("wall_clock_ms", 0.0);
    rep.seed_derivation = j.value("seed_derivation", std::string());
    rep.config = config_from_json(j.at("config"));
    for (const auto& lj : j.at("laws")) {
        LawSummary l;
        l.law_id = lj.at("law").get<std::string>();
        l.p_domain = lj.at("p_domain").get<std::string>();
        l.trials = lj.at("trials").get<std::size_t>();
        l.passes = lj.at("passes").get<std::size_t>();
        l.failures = lj.at("failures").get<std::size_t>();
        l.uncertified = lj.at("uncertified").get<std::size_t>();
        l.equality_witnesses = lj.at("equality_witnesses").get<std::size_t>();
        if (lj.contains("min_slack")) {
            l.min_slack = lj.at("min_slack").get<double>();
            l.has_slack = true;
        }
        if (lj.contains("min_slack_instance"))
            l.min_slack_instance = descriptor_from_json(lj.at("min_slack_instance"));
        for (const auto& cj : lj.at("cells")) {
            CellSummary c(pnorm_from_json(cj.at("p")), cj.at("dim").get<std::size_t>());
            c.trials = cj.at("trials").get<std::size_t>();
            c.passes = cj.at("passes").get<std::size_t>();
            c.failures = cj.at("failures").get<std::size_t>();
            c.uncertified = cj.at("uncertified").get<std::size_t>();
            c.equality_witnesses = cj.at("equality_witnesses").get<std::size_t>();
            if (cj.contains("min_slack")) {
                c.min_slack = cj.at("min_slack").get<double>();
                c.has_slack = true;
            }
            l.cells.push_back(std::move(c));
        }
        rep.laws.push_back(std::move(l));
    }
    for (const auto& fj : j.at("failures")) rep.failures.push_back(outcome_from_json(fj));
    for (const auto& uj : j.at("uncertified")) rep.uncertified.push_back(outcome_from_json(uj));
    return rep;
}

/// One row per (law, p, dim) cell; reals at 17 significant digits.
inline std::string report_to_csv(const Report& rep) {
    std::ostringstream out;
    out << "law,p,dim,trials,passes,failures,uncertified,equality_witnesses,min_slack\n";
    for (const LawSummary& l : rep.laws)
        for (const CellSummary& c : l.cells) {
            out << l.law_id << ',' << c.p.to_string() << ',' << c.dim << ',' << c.trials << ','
                << c.passes << ',' << c.failures << ',' << c.uncertified << ','
                << c.equality_witnesses << ',';
            if (c.has_slack) out << detail::format_double_17(c.min_slack);
            out << '\n';
        }
    return out.str();
}

}  // namespace omegap
