// The law catalog: every equality and inequality the library verifies, with
// tolerance-sound evaluation. Each certified supremum contributes its error
// bound, weighted by the coefficient it enters the expression with, to the
// check's eps budget; a fixed 1e-8 relative allowance covers SVD round-off.
//
// Power-sum statements (the block-norm chains, the 2x2 block bound, the
// direct-sum composition) are evaluated in p-th-root form, i.e. both sides of
// sum_k x_k^p <= y^p are compared as (sum_k x_k^p)^{1/p} <= y. The forms are
// equivalent for p >= 1, and the root form keeps every side at norm scale, so
// the first-order error budget (each side is 1-Lipschitz in the certified
// inputs) stays honest for large p.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegap/matrix.hpp"
#include "omegap/pnorm.hpp"
#include "omegap/radius.hpp"
#include "omegap/schatten.hpp"

namespace omegap {

/// Closed p-range on which a law is asserted. `hi` may be infinite; whether
/// p = inf itself belongs is tracked separately since several statements are
/// power sums meaningful only for finite p.
struct PDomain {
    double lo;
    double hi;
    bool inf_ok;

    bool contains(const PNorm& p) const {
        if (p.is_infinity()) return inf_ok;
        return p.value() >= lo && p.value() <= hi;
    }

    std::string to_string() const {
        if (inf_ok) return "[" + detail::format_double(lo) + ", inf]";
        if (std::isinf(hi)) return "[" + detail::format_double(lo) + ", inf)";
        return "[" + detail::format_double(lo) + ", " + detail::format_double(hi) + "]";
    }
};

enum class LawKind { equality, inequality_chain };

struct Law {
    std::string id;
    LawKind kind;
    int arity;               // number of matrix inputs
    PDomain p_domain;
    std::string description;
    std::string anchor;      // the statement being checked, in formula form
    bool needs_partition = false;
};

enum class Verdict { pass, fail, equality_witness };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::equality_witness: return "EQUALITY_WITNESS";
    }
    return "?";
}

struct Side {
    std::string name;
    double value;
};

struct LawInputs {
    std::vector<ComplexMatrix> matrices;
    std::optional<BlockPartition> partition;
};

/// One evaluation of one law on one input. The generator descriptor fields
/// are filled by the trial harness; explicit inputs (e.g. sharpness
/// witnesses) carry the matrices themselves.
struct LawCheck {
    LawCheck(std::string id, PNorm pn) : law_id(std::move(id)), p(pn) {}

    std::string law_id;
    PNorm p;
    std::string generator = "explicit";
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::size_t grid = 0;  // block grid for the partition laws, 0 otherwise
    std::vector<Side> sides;
    double slack = 0.0;
    double eps_budget = 0.0;
    Verdict verdict = Verdict::fail;
    std::vector<ComplexMatrix> explicit_inputs;  // only set for explicit instances
};

inline const std::vector<Law>& law_catalog() {
    static const std::vector<Law> catalog = {
        {"EQ1", LawKind::equality, 1, {1, INFINITY, true},
         "direct sum with the adjoint has the same Schatten norm",
         "||A (+) A*||_p = ||A (+) A||_p"},
        {"EQ2", LawKind::equality, 2, {1, INFINITY, true},
         "direct sum and off-diagonal embedding share Schatten norms",
         "||A (+) B||_p = ||[[0,A],[B,0]]||_p"},
        {"EQ3", LawKind::equality, 2, {1, INFINITY, true},
         "Schatten norm of a direct sum composes as a p-power sum",
         "||A (+) B||_p = (||A||_p^p + ||B||_p^p)^(1/p)"},
        {"EQ4", LawKind::equality, 1, {1, INFINITY, true},
         "doubling a block scales the Schatten norm by 2^(1/p)",
         "||A (+) A||_p = 2^(1/p) ||A||_p"},
        {"BK-UPPER", LawKind::inequality_chain, 1, {2, INFINITY, false},
         "Bhatia-Kittaneh block chain, 2 <= p < inf",
         "n^(2-p) ||T||_p^p <= sum_ij ||T_ij||_p^p <= ||T||_p^p", true},
        {"BK-LOWER", LawKind::inequality_chain, 1, {1, 2, false},
         "Bhatia-Kittaneh block chain, 1 <= p <= 2",
         "||T||_p^p <= sum_ij ||T_ij||_p^p <= n^(2-p) ||T||_p^p", true},
        {"L14", LawKind::equality, 1, {1, INFINITY, true},
         "radius of the doubled off-diagonal block",
         "omega_p([[0,B],[B,0]]) = 2^(1/p) omega_p(B)"},
        {"L21", LawKind::equality, 2, {1, INFINITY, true},
         "rotating-sum representation of the off-diagonal radius",
         "omega_p([[0,A],[B,0]]) = 2^(1/p-1) sup_t ||e^{it}A + e^{-it}B*||_p"},
        {"P22", LawKind::inequality_chain, 2, {1, INFINITY, true},
         "radius of a block diagonal is bounded by the p-power sum",
         "omega_p(A (+) B) <= (omega_p^p(A) + omega_p^p(B))^(1/p)"},
        {"T23-HI", LawKind::inequality_chain, 4, {2, INFINITY, false},
         "2x2 block radius bound, 2 <= p < inf",
         "omega_p^p([A_ij]) <= 2^(p-2) sum_ij omega_p^p(a_ij)"},
        {"T23-LO", LawKind::inequality_chain, 4, {1, 2, false},
         "2x2 block radius bound, 1 <= p <= 2",
         "omega_p^p([A_ij]) <= sum_ij omega_p^p(a_ij)"},
        {"L31A", LawKind::equality, 2, {1, INFINITY, true},
         "off-diagonal radius is invariant under a corner phase",
         "omega_p([[0,A],[e^{it}B,0]]) = omega_p([[0,A],[B,0]])"},
        {"L31B", LawKind::equality, 2, {1, INFINITY, true},
         "off-diagonal radius is symmetric in its corners",
         "omega_p([[0,A],[B,0]]) = omega_p([[0,B],[A,0]])"},
        {"T32", LawKind::inequality_chain, 2, {1, INFINITY, true},
         "two-sided bound for the off-diagonal radius via A+B and A-B",
         "max(w(A+B), w(A-B))/2^(1-1/p) <= w([[0,A],[B,0]]) <= (w(A+B)+w(A-B))/2^(1-1/p)"},
        {"C33", LawKind::inequality_chain, 1, {1, INFINITY, true},
         "Cartesian off-diagonal sandwich for the radius",
         "w(T)/2 <= 2^(-1/p) w([[0,Re T],[Im T,0]]) <= w(T)"},
        {"R34", LawKind::equality, 1, {1, INFINITY, true},
         "the rotated imaginary part has the same supremum profile",
         "sup_t ||Im(e^{it}A)||_p = omega_p(A)"},
        {"R35", LawKind::inequality_chain, 1, {2, INFINITY, false},
         "repeated-block sign pattern bound, 2 <= p < inf",
         "omega_p([[X,X],[-X,-X]]) <= 2 omega_p(X)"},
        {"T36", LawKind::inequality_chain, 2, {2, INFINITY, false},
         "off-diagonal radius bound via the smaller corner radius",
         "w([[0,A],[B,0]]) <= 2^(1/p) min(w(A),w(B)) + min(w(A+B),w(A-B))"},
        {"R41A", LawKind::equality, 1, {1, INFINITY, true},
         "circle-parameterized Cartesian supremum equals the radius",
         "sup_{a^2+b^2=1} ||a Re T + b Im T||_p = omega_p(T)"},
        {"R41B", LawKind::inequality_chain, 1, {1, INFINITY, true},
         "the symmetrized matrix is dominated by twice the radius",
         "||T + T*||_p <= 2 omega_p(T)"},
        {"T42", LawKind::inequality_chain, 2, {1, INFINITY, true},
         "triangle-inequality refinement through the off-diagonal radius",
         "||A+B||_p <= 2^(1-1/p) w([[0,A],[B*,0]]) <= ||A||_p + ||B||_p"},
    };
    return catalog;
}

inline std::vector<Law> list_laws() { return law_catalog(); }

inline const Law& find_law(const std::string& id) {
    for (const Law& l : law_catalog())
        if (l.id == id) return l;
    throw std::invalid_argument("unknown law id '" + id + "'");
}

namespace detail {

/// (sum_k v_k^p)^{1/p} with the largest term factored out; max(v) for p = inf.
inline double root_power_sum(const std::vector<double>& values, const PNorm& p) {
    double vmax = 0.0;
    for (double v : values) vmax = std::max(vmax, v);
    if (vmax == 0.0) return 0.0;
    if (p.is_infinity()) return vmax;
    double acc = 0.0;
    for (double v : values) acc += std::pow(v / vmax, p.value());
    return vmax * std::pow(acc, 1.0 / p.value());
}

// Fixed phase samples for the corner-phase invariance law.
inline const std::vector<double>& phase_samples() {
    static const std::vector<double> thetas = {M_PI / 7, M_PI / 3, M_PI / 2, M_PI, 5 * M_PI / 3};
    return thetas;
}

struct LawEvaluator {
    const LawInputs& in;
    const PNorm& p;
    const OptimizerConfig& cfg;
    LawCheck check;
    double cert_sum = 0.0;

    LawEvaluator(const Law& l, const LawInputs& inputs, const PNorm& pn, const OptimizerConfig& c)
        : in(inputs), p(pn), cfg(c), check(l.id, pn) {}

    const ComplexMatrix& mat(std::size_t k) const { return in.matrices[k]; }

    // Certified radius consumed with the coefficient it carries in the law.
    double omega_term(const ComplexMatrix& m, double coeff = 1.0) {
        CertifiedValue v = omega(m, p, cfg);
        cert_sum += std::abs(coeff) * v.eps;
        return coeff * v.value;
    }

    double side(const std::string& name, double value) {
        check.sides.push_back({name, value});
        return value;
    }

    void finish_equality(double lhs, double rhs) { finish_equality_slack(lhs - rhs); }

    void finish_equality_slack(double slack) {
        check.slack = slack;
        finalize();
        check.verdict = std::abs(check.slack) <= check.eps_budget ? Verdict::pass : Verdict::fail;
    }

    // slack = min over links of rhs - lhs; a chain passes only if every link holds.
    void finish_chain(const std::vector<double>& link_slacks) {
        check.slack = *std::min_element(link_slacks.begin(), link_slacks.end());
        finalize();
        if (check.slack >= -check.eps_budget)
            check.verdict = check.slack <= check.eps_budget ? Verdict::equality_witness : Verdict::pass;
        else
            check.verdict = Verdict::fail;
    }

private:
    void finalize() {
        double scale = 1.0;
        for (const Side& s : check.sides) scale = std::max(scale, std::abs(s.value));
        check.eps_budget = cert_sum + 1e-8 * scale;
    }
};

}  // namespace detail

/// Evaluate one law on one input set. Throws std::domain_error if p lies
/// outside the law's asserted domain (never a silent skip) and
/// std::invalid_argument on arity or dimension mismatches.
inline LawCheck evaluate_law(const Law& law, const LawInputs& inputs, const PNorm& p,
                             const OptimizerConfig& cfg = {}) {
    if (!law.p_domain.contains(p))
        throw std::domain_error("law " + law.id + ": p = " + p.to_string() +
                                " outside asserted domain " + law.p_domain.to_string());
    if (static_cast<int>(inputs.matrices.size()) != law.arity)
        throw std::invalid_argument("law " + law.id + ": expected " + std::to_string(law.arity) +
                                    " matrix input(s), got " + std::to_string(inputs.matrices.size()));
    for (const ComplexMatrix& m : inputs.matrices) require_square(m, law.id.c_str());
    for (std::size_t k = 1; k < inputs.matrices.size(); ++k)
        if (inputs.matrices[k].rows() != inputs.matrices[0].rows())
            throw std::invalid_argument("law " + law.id + ": inputs must have equal dimension");
    if (law.needs_partition) {
        if (!inputs.partition)
            throw std::invalid_argument("law " + law.id + ": block partition required");
        if (inputs.partition->matrix_dim() != inputs.matrices[0].rows())
            throw std::invalid_argument("law " + law.id + ": partition does not match matrix dimension");
    }

    detail::LawEvaluator ev(law, inputs, p, cfg);
    LawCheck& c = ev.check;
    const std::string& id = law.id;

    if (id == "EQ1") {
        const ComplexMatrix& a = ev.mat(0);
        ev.finish_equality(ev.side("lhs", schatten(direct_sum(a, adjoint(a)), p)),
                           ev.side("rhs", schatten(direct_sum(a, a), p)));
    } else if (id == "EQ2") {
        ev.finish_equality(ev.side("lhs", schatten(direct_sum(ev.mat(0), ev.mat(1)), p)),
                           ev.side("rhs", schatten(off_diag(ev.mat(0), ev.mat(1)), p)));
    } else if (id == "EQ3") {
        const double lhs = ev.side("lhs", schatten(direct_sum(ev.mat(0), ev.mat(1)), p));
        const double rhs = ev.side(
            "rhs", detail::root_power_sum({schatten(ev.mat(0), p), schatten(ev.mat(1), p)}, p));
        ev.finish_equality(lhs, rhs);
    } else if (id == "EQ4") {
        const ComplexMatrix& a = ev.mat(0);
        ev.finish_equality(ev.side("lhs", schatten(direct_sum(a, a), p)),
                           ev.side("rhs", p.two_pow_inv() * schatten(a, p)));
    } else if (id == "BK-UPPER" || id == "BK-LOWER") {
        const ComplexMatrix& t = ev.mat(0);
        const double tn = ev.side("whole_norm", schatten(t, p));
        std::vector<double> block_norms;
        for (const ComplexMatrix& blk : extract_blocks(t, *inputs.partition))
            block_norms.push_back(schatten(blk, p));
        const double sum = ev.side("block_sum", detail::root_power_sum(block_norms, p));
        const double n = static_cast<double>(inputs.partition->grid);
        const double scaled =
            ev.side("scaled_norm", std::pow(n, (2.0 - p.value()) / p.value()) * tn);
        if (id == "BK-UPPER")
            ev.finish_chain({sum - scaled, tn - sum});
        else
            ev.finish_chain({sum - tn, scaled - sum});
    } else if (id == "L14") {
        const ComplexMatrix& b = ev.mat(0);
        ev.finish_equality(ev.side("lhs", ev.omega_term(off_diag(b, b))),
                           ev.side("rhs", ev.omega_term(b, p.two_pow_inv())));
    } else if (id == "L21") {
        const double lhs = ev.side("lhs", ev.omega_term(off_diag(ev.mat(0), ev.mat(1))));
        const double coeff = p.two_pow_inv() / 2.0;  // 2^(1/p - 1)
        CertifiedValue rot = rotating_sum_sup(ev.mat(0), ev.mat(1), p, cfg);
        ev.cert_sum += coeff * rot.eps;
        ev.finish_equality(lhs, ev.side("rhs", coeff * rot.value));
    } else if (id == "P22") {
        const double lhs = ev.side("lhs", ev.omega_term(direct_sum(ev.mat(0), ev.mat(1))));
        const double rhs = ev.side(
            "rhs", detail::root_power_sum({ev.omega_term(ev.mat(0)), ev.omega_term(ev.mat(1))}, p));
        ev.finish_chain({rhs - lhs});
    } else if (id == "T23-HI" || id == "T23-LO") {
        const ComplexMatrix &a11 = ev.mat(0), &a12 = ev.mat(1), &a21 = ev.mat(2), &a22 = ev.mat(3);
        const double lhs = ev.side("lhs", ev.omega_term(block2(a11, a12, a21, a22)));
        // The 2 <= p case carries the factor 2^(p-2) on the power sum, the one
        // the block-norm chain yields (tight at p = 2); the root form folds it
        // into the terms by homogeneity.
        const double factor =
            id == "T23-HI" ? std::pow(2.0, (p.value() - 2.0) / p.value()) : 1.0;
        const double half = 1.0 / p.two_pow_inv();  // 2^(-1/p)
        const std::vector<double> terms = {
            ev.omega_term(a11, factor), ev.omega_term(a22, factor),
            ev.omega_term(off_diag(a12, a21), factor * half),
            ev.omega_term(off_diag(a21, a12), factor * half)};
        const double rhs = ev.side("rhs", detail::root_power_sum(terms, p));
        ev.finish_chain({rhs - lhs});
    } else if (id == "L31A") {
        const double rhs = ev.side("rhs", ev.omega_term(off_diag(ev.mat(0), ev.mat(1))));
        double worst = 0.0;
        for (double theta : detail::phase_samples()) {
            const double lhs = ev.side("lhs_theta_" + detail::format_double(theta),
                                       ev.omega_term(off_diag(ev.mat(0), rotate(ev.mat(1), theta))));
            if (std::abs(lhs - rhs) > std::abs(worst)) worst = lhs - rhs;
        }
        ev.finish_equality_slack(worst);  // worst signed deviation over the phase samples
    } else if (id == "L31B") {
        ev.finish_equality(ev.side("lhs", ev.omega_term(off_diag(ev.mat(0), ev.mat(1)))),
                           ev.side("rhs", ev.omega_term(off_diag(ev.mat(1), ev.mat(0)))));
    } else if (id == "T32") {
        const ComplexMatrix &a = ev.mat(0), &b = ev.mat(1);
        const double c = 2.0 / p.two_pow_inv();  // 2^(1 - 1/p)
        const double mid = ev.side("mid", ev.omega_term(off_diag(a, b)));
        const double ws = ev.omega_term(a + b, 1.0 / c);
        const double wd = ev.omega_term(a - b, 1.0 / c);
        const double lower = ev.side("lower", std::max(ws, wd));
        const double upper = ev.side("upper", ws + wd);
        ev.finish_chain({mid - lower, upper - mid});
    } else if (id == "C33") {
        const ComplexMatrix& t = ev.mat(0);
        const double wt = ev.omega_term(t);
        const double mid = ev.side(
            "mid", ev.omega_term(off_diag(re_part(t), im_part(t)), 1.0 / p.two_pow_inv()));
        ev.side("lower", wt / 2.0);
        ev.side("upper", wt);
        ev.finish_chain({mid - wt / 2.0, wt - mid});
    } else if (id == "R34") {
        const ComplexMatrix& a = ev.mat(0);
        // Im(e^{i t} A) = cos(t) Im(A) + sin(t) Re(A)
        CertifiedValue vim = detail::sup_circle_norm(im_part(a), re_part(a), p, schatten(a, p), cfg);
        ev.cert_sum += vim.eps;
        ev.finish_equality(ev.side("lhs", vim.value), ev.side("rhs", ev.omega_term(a)));
    } else if (id == "R35") {
        const ComplexMatrix& x = ev.mat(0);
        const double lhs = ev.side("lhs", ev.omega_term(block2(x, x, -x, -x)));
        const double rhs = ev.side("rhs", ev.omega_term(x, 2.0));
        ev.finish_chain({rhs - lhs});
    } else if (id == "T36") {
        const ComplexMatrix &a = ev.mat(0), &b = ev.mat(1);
        const double lhs = ev.side("lhs", ev.omega_term(off_diag(a, b)));
        const double corner =
            std::min(ev.omega_term(a, p.two_pow_inv()), ev.omega_term(b, p.two_pow_inv()));
        const double mixed = std::min(ev.omega_term(a + b), ev.omega_term(a - b));
        const double rhs = ev.side("rhs", corner + mixed);
        ev.finish_chain({rhs - lhs});
    } else if (id == "R41A") {
        const ComplexMatrix& t = ev.mat(0);
        CertifiedValue circ = circle_sup(t, p, cfg);
        ev.cert_sum += circ.eps;
        ev.finish_equality(ev.side("lhs", circ.value), ev.side("rhs", ev.omega_term(t)));
    } else if (id == "R41B") {
        const ComplexMatrix& t = ev.mat(0);
        const double lhs = ev.side("lhs", schatten(t + adjoint(t), p));
        const double rhs = ev.side("rhs", ev.omega_term(t, 2.0));
        ev.finish_chain({rhs - lhs});
    } else if (id == "T42") {
        const ComplexMatrix &a = ev.mat(0), &b = ev.mat(1);
        const double c = 2.0 / p.two_pow_inv();  // 2^(1 - 1/p)
        const double lhs = ev.side("lhs", schatten(a + b, p));
        const double mid = ev.side("mid", ev.omega_term(off_diag(a, adjoint(b)), c));
        const double rhs = ev.side("rhs", schatten(a, p) + schatten(b, p));
        ev.finish_chain({mid - lhs, rhs - mid});
    } else {
        throw std::logic_error("evaluate_law: no evaluator for " + id);
    }

    return c;
}

inline LawCheck evaluate_law(const std::string& law_id, const LawInputs& inputs, const PNorm& p,
                             const OptimizerConfig& cfg = {}) {
    return evaluate_law(find_law(law_id), inputs, p, cfg);
}

}  // namespace omegap
