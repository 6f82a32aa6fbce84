#include <doctest.h>

#include "fixtures.hpp"
#include "s2rank/oracle.hpp"
#include "s2rank/probmodel.hpp"

using namespace s2rank;
using s2rank::testing::joint_b;
using s2rank::testing::joint_c;
using s2rank::testing::q;

TEST_SUITE("probmodel") {

TEST_CASE("joint invariants are enforced at construction") {
    CHECK_THROWS_AS(JointDistribution::from_masses(4, 2, {{q(1, 2), q(1, 2)}, {q(0), q(0)}, {q(0), q(0)}}),
                    ZeroPairMassError);
    CHECK_THROWS_AS(JointDistribution::from_masses(3, 2, {{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}}),
                    Error);  // total 2
    CHECK_THROWS_AS(JointDistribution::from_masses(3, 1, {{q(3, 2)}, {q(-1, 2)}}), Error);
    CHECK_THROWS_AS(JointDistribution::from_counts(3, 1, {{q(0)}, {q(0)}}), Error);

    const JointDistribution j = joint_b();
    CHECK(j.mass(2, 1) == q(1, 12));
    CHECK(j.window_mass({1, 4}) == q(1));
    CHECK(j.window_mass({2, 3}) == q(2, 3));
}

TEST_CASE("conditional matrix reproduces the published tables") {
    CHECK(conditional_matrix(joint_b()) == s2rank::testing::vb());
    CHECK(conditional_matrix(joint_c()) == s2rank::testing::vc());
}

TEST_CASE("uniform joint gives constant columns") {
    const auto j = JointDistribution::from_counts(3, 2, {{q(1), q(1)}, {q(1), q(1)}});
    const PairFamily fam = conditional_matrix(j);
    for (const auto& p : canonical_pairs(3)) {
        CHECK(fam.entry(p, 1) == q(1, 2));
        CHECK(fam.entry(p, 2) == q(1, 2));
    }
}

TEST_CASE("distribution vectors") {
    const DistributionVectors dv = distribution_vectors(joint_b());
    CHECK((dv.at(1) == std::vector<Rational>{q(0), q(0)}));
    CHECK((dv.at(2) == std::vector<Rational>{q(1, 12), q(1, 12)}));
    CHECK((dv.at(3) == std::vector<Rational>{q(7, 12), q(1, 4)}));
    CHECK((dv.at(4) == std::vector<Rational>{q(5, 8), q(3, 8)}));

    // Point mass at (x=s, a=1).
    const auto point = JointDistribution::from_counts(2, 3, {{q(5), q(0), q(0)}});
    const DistributionVectors pv = distribution_vectors(point);
    CHECK((pv.at(1) == std::vector<Rational>{q(0), q(0), q(0)}));
    CHECK((pv.at(2) == std::vector<Rational>{q(1), q(0), q(0)}));
}

TEST_CASE("weights") {
    const WeightAssignment wb = weights(joint_b());
    CHECK(wb.lambda({1, 2}) == q(4, 24));
    CHECK(wb.lambda({2, 3}) == q(16, 24));
    CHECK(wb.lambda({3, 4}) == q(4, 24));
    CHECK(wb.lambda({1, 3}) == q(20, 24));
    CHECK(wb.lambda({2, 4}) == q(20, 24));
    CHECK(wb.lambda({1, 4}) == q(1));
    CHECK(wb.is_additive());
    CHECK((wb.integer_ray() == std::vector<mpz_class>{1, 4, 1, 5, 5, 6}));

    const WeightAssignment wc = weights(joint_c());
    CHECK((wc.integer_ray() == std::vector<mpz_class>{2, 3, 5, 5, 8, 10}));
    for (const auto& p : canonical_pairs(4)) CHECK(wc.lambda(p) * q(10) == Rational(wc.integer_ray()[pair_position(4, p)], mpz_class(1)));

    const auto uniform = JointDistribution::from_counts(3, 1, {{q(1)}, {q(1)}});
    const WeightAssignment wu = weights(uniform);
    CHECK(wu.lambda({1, 2}) == q(1, 2));
    CHECK(wu.lambda({2, 3}) == q(1, 2));
    CHECK(wu.lambda({1, 3}) == q(1));
}

TEST_CASE("theorem-2 report on the worked tables") {
    const Theorem2Report rb = verify_theorem2(joint_b());
    CHECK(rb.all_ok());
    CHECK(rb.rank.verdict == S2RankVerdict::rank_one);
    CHECK((rb.triples[0].triple == std::array<int, 3>{1, 2, 3}));
    CHECK(rb.triples[0].alpha == q(1, 5));

    const Theorem2Report rc = verify_theorem2(joint_c());
    CHECK(rc.all_ok());
    CHECK(rc.triples[0].alpha == q(2, 5));
}

TEST_CASE("theorem-2 properties over seeded random joints") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.s_min = 4;
        cfg.s_max = 6;
        cfg.d_min = 2;
        cfg.d_max = 4;
        const JointDistribution j = gen_random_joint(cfg);
        const Theorem2Report r = verify_theorem2(j);
        CHECK(r.all_ok());
        CHECK(r.rank.verdict == S2RankVerdict::rank_one);

        // Cocycle identity (the proof's equation) on every triple.
        const PairFamily fam = conditional_matrix(j);
        const WeightAssignment w = weights(j);
        for (const auto& t : canonical_triples(j.s())) {
            const PairIndex ij{t[0], t[1]}, ik{t[0], t[2]}, jk{t[1], t[2]};
            for (int a = 1; a <= j.d(); ++a) {
                const Rational z = w.lambda(ij) * fam.entry(ij, a) - w.lambda(ik) * fam.entry(ik, a) +
                                   w.lambda(jk) * fam.entry(jk, a);
                CHECK(z.is_zero());
            }
        }
        CHECK(w.is_additive());
    }
}

TEST_CASE("conditional matrix is scale invariant in the counts") {
    const auto j1 = JointDistribution::from_counts(4, 2, {{q(2), q(2)}, {q(12), q(4)}, {q(1), q(3)}});
    const auto j2 = JointDistribution::from_counts(4, 2, {{q(14), q(14)}, {q(84), q(28)}, {q(7), q(21)}});
    CHECK(conditional_matrix(j1) == conditional_matrix(j2));
}

} // TEST_SUITE
