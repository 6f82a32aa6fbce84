#pragma once

#include <vector>

#include "s2rank/pair_family.hpp"
#include "s2rank/s2rank.hpp"

namespace s2rank {

/// Joint distribution of (X, Y) with X in {2..s} (X never takes the value 1)
/// and Y in {1..d}. Construction validates: total mass 1, no negative mass,
/// and P(X = x) > 0 for every x in 2..s, which is equivalent to every window
/// mass P(i < X <= j) being positive.
class JointDistribution {
public:
    /// masses[x-2][a-1] = P(X = x, Y = a). Must sum to 1.
    static JointDistribution from_masses(int s, int d, std::vector<std::vector<Rational>> masses);

    /// Nonnegative counts, normalized by their total.
    static JointDistribution from_counts(int s, int d, const std::vector<std::vector<Rational>>& counts);

    int s() const { return s_; }
    int d() const { return d_; }

    /// P(X = x, Y = a), x in 2..s, a in 1..d.
    const Rational& mass(int x, int a) const;

    /// P(i < X <= j).
    Rational window_mass(PairIndex p) const;

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

private:
    JointDistribution(int s, int d, std::vector<std::vector<Rational>> masses);

    int s_;
    int d_;
    std::vector<std::vector<Rational>> mass_;  // [x-2][a-1]
};

/// Cumulative vectors p_i^a = P(Y = a, X <= i); p_1 = 0.
struct DistributionVectors {
    int s = 0;
    int d = 0;
    std::vector<std::vector<Rational>> p;  // p[i-1], each of size d

    const std::vector<Rational>& at(int i) const { return p[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const DistributionVectors&, const DistributionVectors&) = default;
};

/// Pair weights lambda_{i,j} in canonical order, all positive.
class WeightAssignment {
public:
    WeightAssignment() : s_(0) {}
    WeightAssignment(int s, std::vector<Rational> lambdas);

    int s() const { return s_; }
    const Rational& lambda(PairIndex p) const { return lam_[pair_position(s_, p)]; }
    const std::vector<Rational>& values() const { return lam_; }

    /// lambda_{i,k} = lambda_{i,j} + lambda_{j,k} for every triple.
    bool is_additive() const;

    /// The weights as coprime positive integers (the generator of the ray).
    std::vector<mpz_class> integer_ray() const;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

private:
    int s_;
    std::vector<Rational> lam_;
};

/// v_{i,j}^a = P(Y = a | i < X <= j). Throws ZeroPairMassError if a window
/// has zero mass (cannot happen for a validated JointDistribution).
PairFamily conditional_matrix(const JointDistribution& joint);

DistributionVectors distribution_vectors(const JointDistribution& joint);

/// lambda_{i,j} = P(i < X <= j); lambda_{1,s} = 1.
WeightAssignment weights(const JointDistribution& joint);

/// Per-pair and per-triple checks behind the forward theorem: pair identity
/// lambda_{i,j} v_{i,j} = p_j - p_i with stochastic columns, convex triple
/// combination with alpha = lambda_{i,j}/lambda_{i,k} in (0,1), and the
/// S^2-rank-1 verdict.
struct Theorem2Report {
    struct PairCheck {
        PairIndex pair;
        Rational lambda;
        bool lambda_in_range = false;   // lambda in (0, 1]
        bool column_stochastic = false; // entries in [0,1], sum 1
        bool identity_holds = false;    // lambda * v = p_j - p_i
        bool ok() const { return lambda_in_range && column_stochastic && identity_holds; }
    };
    struct TripleCheck {
        std::array<int, 3> triple;
        Rational alpha;
        bool alpha_in_open_unit = false;
        bool convex_identity_holds = false; // v_ik = alpha v_ij + (1-alpha) v_jk
        bool additivity_holds = false;      // lambda_ik = lambda_ij + lambda_jk
        bool ok() const { return alpha_in_open_unit && convex_identity_holds && additivity_holds; }
    };

    std::vector<PairCheck> pairs;
    std::vector<TripleCheck> triples;
    S2RankReport rank;

    bool pairs_ok() const;
    bool triples_ok() const;
    bool all_ok() const;
};

Theorem2Report verify_theorem2(const JointDistribution& joint);

} // namespace s2rank
