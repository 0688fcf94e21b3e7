#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "omegap/laws.hpp"
#include "omegap/random.hpp"
#include "oracle.hpp"

using namespace omegap;
using Catch::Approx;

namespace {
const OptimizerConfig kCfg{1e-6, 200000};

LawInputs seeded_inputs(const Law& law, std::size_t dim, std::uint64_t seed,
                        MatrixKind kind = MatrixKind::ginibre) {
    LawInputs in;
    std::size_t n = dim;
    if (law.needs_partition) {
        in.partition = BlockPartition(2, dim);
        n = 2 * dim;
    }
    for (int k = 0; k < law.arity; ++k)
        in.matrices.push_back(random_matrix(kind, n, mix64(seed + 1000003 * (k + 1))));
    return in;
}
}  // namespace

TEST_CASE("catalog is fixed, unique and anchored") {
    const auto& laws = law_catalog();
    CHECK(laws.size() == 21);
    std::set<std::string> ids;
    for (const Law& l : laws) {
        ids.insert(l.id);
        CHECK_FALSE(l.anchor.empty());
        CHECK_FALSE(l.description.empty());
        CHECK(l.arity >= 1);
    }
    CHECK(ids.size() == laws.size());
    const std::vector<std::string> expected = {
        "EQ1", "EQ2", "EQ3", "EQ4", "BK-UPPER", "BK-LOWER", "L14", "L21", "P22",
        "T23-HI", "T23-LO", "L31A", "L31B", "T32", "C33", "R34", "R35", "T36",
        "R41A", "R41B", "T42"};
    for (const auto& id : expected) CHECK(ids.count(id) == 1);
    CHECK_THROWS_AS(find_law("NOPE"), std::invalid_argument);
}

TEST_CASE("p domains match the asserted ranges") {
    CHECK(find_law("BK-UPPER").p_domain.contains(PNorm::finite(2)));
    CHECK(find_law("BK-UPPER").p_domain.contains(PNorm::finite(100)));
    CHECK_FALSE(find_law("BK-UPPER").p_domain.contains(PNorm::infinity()));
    CHECK_FALSE(find_law("BK-UPPER").p_domain.contains(PNorm::finite(1.5)));
    CHECK(find_law("BK-LOWER").p_domain.contains(PNorm::finite(1)));
    CHECK_FALSE(find_law("BK-LOWER").p_domain.contains(PNorm::finite(2.5)));
    CHECK(find_law("EQ3").p_domain.contains(PNorm::infinity()));
    CHECK_FALSE(find_law("T23-HI").p_domain.contains(PNorm::infinity()));
    CHECK_FALSE(find_law("R35").p_domain.contains(PNorm::finite(1.5)));
    CHECK(find_law("T42").p_domain.contains(PNorm::infinity()));
}

TEST_CASE("p outside the domain is a domain error, not a skip") {
    LawInputs in = seeded_inputs(find_law("BK-UPPER"), 2, 5);
    CHECK_THROWS_AS(evaluate_law("BK-UPPER", in, PNorm::finite(1.5), kCfg), std::domain_error);
    CHECK_THROWS_AS(evaluate_law("BK-UPPER", in, PNorm::infinity(), kCfg), std::domain_error);
}

TEST_CASE("arity and dimension preconditions") {
    LawInputs one;
    one.matrices.push_back(ComplexMatrix::identity(2));
    CHECK_THROWS_AS(evaluate_law("EQ2", one, PNorm::finite(2), kCfg), std::invalid_argument);

    LawInputs two;
    two.matrices.push_back(ComplexMatrix::identity(2));
    two.matrices.push_back(ComplexMatrix::identity(3));
    CHECK_THROWS_AS(evaluate_law("EQ2", two, PNorm::finite(2), kCfg), std::invalid_argument);

    LawInputs nopart;
    nopart.matrices.push_back(ComplexMatrix::identity(4));
    CHECK_THROWS_AS(evaluate_law("BK-UPPER", nopart, PNorm::finite(2), kCfg),
                    std::invalid_argument);
}

TEST_CASE("L14 on the Jordan block gives 1 = 1 at p = 2") {
    ComplexMatrix j{{0.0, 1.0}, {0.0, 0.0}};

    // Oracle: the doubled off-diagonal block has a flat radius profile at 1.
    auto grid = oracle::omega_grid(off_diag(j, j), PNorm::finite(2), 4000);
    CHECK(grid.value == Approx(1.0).margin(1e-9));

    LawInputs in;
    in.matrices.push_back(j);
    LawCheck c = evaluate_law("L14", in, PNorm::finite(2), kCfg);
    REQUIRE(c.sides.size() == 2);
    CHECK(c.sides[0].value == Approx(1.0).margin(2e-6));
    CHECK(c.sides[1].value == Approx(1.0).margin(2e-6));
    CHECK(c.verdict == Verdict::pass);
    CHECK(std::abs(c.slack) <= c.eps_budget);
}

TEST_CASE("T32 with equal corners witnesses equality on the lower link") {
    ComplexMatrix a = random_matrix(MatrixKind::ginibre, 2, 99);
    LawInputs in;
    in.matrices.push_back(a);
    in.matrices.push_back(a);
    LawCheck c = evaluate_law("T32", in, PNorm::finite(2), kCfg);
    CHECK(c.verdict == Verdict::equality_witness);
    CHECK(c.slack >= -c.eps_budget);
    CHECK(c.slack <= c.eps_budget);
}

TEST_CASE("T32 at dimension 1 with Hermitian corners is a lower-link witness") {
    // Real scalars make max(|a+b|, |a-b|) = |a| + |b|, which is exactly the
    // supremum of |a e^{it} + b e^{-it}|, so the lower bound is attained.
    LawInputs in = seeded_inputs(find_law("T32"), 1, 2024, MatrixKind::hermitian);
    LawCheck c = evaluate_law("T32", in, PNorm::finite(2), kCfg);
    CHECK(c.verdict == Verdict::equality_witness);
}

TEST_CASE("T42 with B = 0 witnesses equality in both links") {
    ComplexMatrix a = random_matrix(MatrixKind::ginibre, 3, 123);
    ComplexMatrix z = ComplexMatrix::zeros(3);

    // Oracle: omega of [[0,A],[0,0]] is the constant 2^(1/p-1) ||A||_p profile.
    const PNorm p2 = PNorm::finite(2);
    auto grid = oracle::omega_grid(off_diag(a, z), p2, 4000);
    CHECK(grid.value == Approx(std::pow(2.0, -0.5) * schatten(a, p2)).margin(1e-8));

    LawInputs in;
    in.matrices.push_back(a);
    in.matrices.push_back(z);
    LawCheck c = evaluate_law("T42", in, p2, kCfg);
    CHECK(c.verdict == Verdict::equality_witness);
    REQUIRE(c.sides.size() == 3);
    CHECK(c.sides[0].value == Approx(c.sides[1].value).margin(1e-5));
    CHECK(c.sides[1].value == Approx(c.sides[2].value).margin(1e-5));
}

TEST_CASE("BK-UPPER on the 4x4 identity is a tight chain") {
    LawInputs in;
    in.matrices.push_back(ComplexMatrix::identity(4));
    in.partition = BlockPartition(2, 2);
    LawCheck c = evaluate_law("BK-UPPER", in, PNorm::finite(2), kCfg);
    CHECK(c.verdict == Verdict::equality_witness);  // 2 <= 2 <= 2 in root form
    CHECK(std::abs(c.slack) <= c.eps_budget);
}

TEST_CASE("every law passes on seeded random inputs across kinds") {
    const std::vector<MatrixKind> kinds = {MatrixKind::ginibre, MatrixKind::hermitian,
                                           MatrixKind::unitary, MatrixKind::nilpotent_upper};
    for (const Law& law : law_catalog()) {
        const std::vector<PNorm> ps = {PNorm::finite(1), PNorm::finite(1.5), PNorm::finite(2),
                                       PNorm::finite(3), PNorm::infinity()};
        for (const PNorm& p : ps) {
            if (!law.p_domain.contains(p)) continue;
            for (std::size_t dim : {1, 2, 3}) {
                for (std::size_t t = 0; t < 2; ++t) {
                    const MatrixKind kind = kinds[(dim + t) % kinds.size()];
                    LawInputs in = seeded_inputs(law, dim, 42 + 7 * t + dim, kind);
                    LawCheck c = evaluate_law(law, in, p, kCfg);
                    INFO(law.id << " p=" << p.to_string() << " dim=" << dim << " trial=" << t
                                << " kind=" << kind_name(kind));
                    CHECK(c.verdict != Verdict::fail);
                    if (law.kind == LawKind::equality) CHECK(std::abs(c.slack) <= c.eps_budget);
                }
            }
        }
    }
}

TEST_CASE("T23 off-diagonal terms agree as the corner-symmetry law predicts") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const Law& law = find_law("T23-HI");
        LawInputs in = seeded_inputs(law, 2, seed);
        const PNorm p = PNorm::finite(3);
        CertifiedValue w12 = omega(off_diag(in.matrices[1], in.matrices[2]), p, kCfg);
        CertifiedValue w21 = omega(off_diag(in.matrices[2], in.matrices[1]), p, kCfg);
        CHECK(std::abs(w12.value - w21.value) <= w12.eps + w21.eps + 1e-8);
    }
}

TEST_CASE("zero matrices pass every applicable law") {
    ComplexMatrix z = ComplexMatrix::zeros(2);
    for (const Law& law : law_catalog()) {
        if (law.needs_partition) continue;
        LawInputs in;
        for (int k = 0; k < law.arity; ++k) in.matrices.push_back(z);
        const PNorm p = law.p_domain.contains(PNorm::finite(2)) ? PNorm::finite(2) : PNorm::finite(3);
        LawCheck c = evaluate_law(law, in, p, kCfg);
        INFO(law.id);
        CHECK(c.verdict != Verdict::fail);
        CHECK(std::abs(c.slack) <= c.eps_budget);
    }
}

TEST_CASE("equality laws stay within budget over a seeded sweep") {
    for (const char* id : {"EQ1", "EQ2", "EQ3", "EQ4", "L14", "L21", "L31A", "L31B", "R34", "R41A"}) {
        const Law& law = find_law(id);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            LawInputs in = seeded_inputs(law, 2, 900 + seed);
            for (const PNorm& p : {PNorm::finite(1.25), PNorm::finite(2), PNorm::infinity()}) {
                LawCheck c = evaluate_law(law, in, p, kCfg);
                INFO(id << " seed=" << seed << " p=" << p.to_string());
                CHECK(std::abs(c.slack) <= c.eps_budget);
                CHECK(c.verdict == Verdict::pass);
            }
        }
    }
}
