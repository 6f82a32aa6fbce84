#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "s2rank/exterior_det.hpp"
#include "s2rank/pair_family.hpp"

namespace s2rank {

/// One 2-minor of a pair family: a quadruple x1<x2<x3<x4 of indices and a
/// coordinate pair a1<a2.
struct MinorSelector {
    std::array<int, 4> quadruple;
    int a1;
    int a2;

    friend bool operator==(const MinorSelector&, const MinorSelector&) = default;
};

/// A 2-minor whose det_s2 is nonzero.
struct RankViolation {
    MinorSelector selector;
    Rational value;
};

enum class S2RankVerdict {
    rank_one,          // every 2-minor vanishes
    violations_found,  // at least one nonzero 2-minor
    vacuous,           // s < 4 or d < 2: there are no 2-minors to test
};

struct S2RankReport {
    S2RankVerdict verdict = S2RankVerdict::vacuous;
    std::vector<RankViolation> violations;
    std::uint64_t evaluations = 0;  // C(s,4) * C(d,2) when not vacuous

    bool is_rank_one() const { return verdict == S2RankVerdict::rank_one; }
};

/// Ascending lexicographic triples (i,j,k), 1 <= i < j < k <= s.
std::vector<std::array<int, 3>> canonical_triples(int s);

/// Ascending lexicographic quadruples.
std::vector<std::array<int, 4>> canonical_quadruples(int s);

/// Restrict the family to the selector's quadruple and coordinate rows:
/// w_{i,j} = (v_{x_i,x_j}^{a1}, v_{x_i,x_j}^{a2}) in canonical order.
/// Throws OutOfBoundsError for a selector outside the family.
SixColumnInput extract_minor(const PairFamily& fam, const MinorSelector& sel);

/// The S^2-rank-1 decision: evaluates det_s2 on every 2-minor and collects
/// every violation, ordered by selector (quadruple, then coordinate pair).
/// Throws ZeroFamilyError on the all-zero family.
S2RankReport s2_rank_is_one(const PairFamily& fam);

/// Short-circuiting variant: stops at the first violation.
S2RankReport s2_rank_is_one_quick(const PairFamily& fam);

struct TripleRank {
    std::array<int, 3> triple;
    std::size_t rank;  // exact rank of the d x 3 matrix [v_ij, v_ik, v_jk]
};

/// Per-triple rank of [v_{i,j}, v_{i,k}, v_{j,k}]; always <= 2 for a
/// conditional probability matrix.
std::vector<TripleRank> triple_rank_bound(const PairFamily& fam);

} // namespace s2rank
