#pragma once

#include <array>
#include <optional>
#include <vector>

#include "s2rank/probmodel.hpp"

namespace s2rank {

/// Every entry in [0,1] and every column sums to 1.
bool check_stochastic(const PairFamily& fam);

/// Solution of a v_{i,j} - b v_{i,k} + c v_{j,k} = 0 for one triple.
struct TripleCoefficients {
    enum class Status {
        unique_positive,       // 1-dim nullspace with a strictly positive representative
        no_positive_solution,  // nullspace is {0}, or its ray has mixed/zero signs
        degenerate_rank1,      // all three columns equal: solutions exist but are not unique
        underdetermined,       // nullspace dimension >= 2 without equal columns
    };

    std::array<int, 3> triple;
    Status status = Status::no_positive_solution;
    std::size_t nullspace_dim = 0;
    Rational a, b, c;  // valid when unique_positive, normalized so b = 1

    Rational alpha() const { return a / b; }
};

TripleCoefficients triple_coefficients(const PairFamily& fam, int i, int j, int k);

/// The coordinate-pair witness condition of the converse theorem: for every
/// quadruple and every coordinate a there must be a coordinate b such that
/// all four 2x3 triple restrictions have rank 2.
struct PairWitnessEntry {
    std::array<int, 4> quadruple;
    int coord;
    int witness;  // 0 when no witness exists
};

struct PairWitnessReport {
    bool ok = true;
    std::vector<PairWitnessEntry> entries;

    std::vector<PairWitnessEntry> failures() const;
};

PairWitnessReport check_pair_witness(const PairFamily& fam);

/// Outcome of solving the homogeneous weight system (all triples, all
/// coordinates) for positive pair weights.
struct WeightSolveResult {
    enum class Status {
        ok,              // unique ray with a strictly positive representative
        inconsistent,    // nullspace is {0}: no nontrivial weights exist
        no_positive_ray, // unique ray, but not strictly positive
        underdetermined, // nullspace dimension > 1 (e.g. independent variables)
    };

    Status status = Status::inconsistent;
    std::size_t nullspace_dim = 0;
    WeightAssignment weights;  // valid when ok; normalized so lambda_{1,s} = 1

    bool ok() const { return status == Status::ok; }
};

const char* to_string(WeightSolveResult::Status s);

WeightSolveResult solve_weights(const PairFamily& fam);

/// Points with p_1 = 0 and lambda_{i,j} v_{i,j} = p_j - p_i for all pairs.
struct PointConfiguration {
    int s = 0;
    int d = 0;
    std::vector<std::vector<Rational>> p;  // p[i-1], each of size d

    const std::vector<Rational>& at(int i) const { return p[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
};

/// p_1 = 0, p_j = lambda_{1,j} v_{1,j}; verifies the difference identity on
/// every pair and throws CocycleViolationError on the first failure.
PointConfiguration reconstruct_points(const PairFamily& fam, const WeightAssignment& w);

/// Realization of (X, Y) on (0,1] with Lebesgue measure: X = k on the k-th
/// weight block, Y sliced inside each block by the increments p_k - p_{k-1}.
/// Zero-length slices are dropped.
struct IntervalSegment {
    Rational lo, hi;  // the half-open interval (lo, hi]
    int x_label;
    int y_label;
};

struct IntervalModel {
    std::vector<IntervalSegment> segments;

    /// Lebesgue mass of {i < x_label <= j, y_label = h}.
    Rational measure(PairIndex window, int h) const;
    /// Lebesgue mass of {y_label = h}.
    Rational y_measure(int h) const;
};

IntervalModel build_interval_model(const PairFamily& fam, const WeightAssignment& w,
                                   const PointConfiguration& pts);

/// The least population N for which every count N*(p_k - p_{k-1}) is a
/// nonnegative integer, together with those counts.
struct PopulationTable {
    int s = 0;
    int d = 0;
    mpz_class total;                            // N
    std::vector<std::vector<mpz_class>> counts; // [x-2][a-1]

    const mpz_class& count(int x, int a) const {
        return counts[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(a - 1)];
    }
    /// Count of {i < X <= j, Y = a} (telescoped sum).
    mpz_class window_count(PairIndex p, int a) const;
};

PopulationTable minimal_population(const PairFamily& fam, const WeightAssignment& w);

} // namespace s2rank
