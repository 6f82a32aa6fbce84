#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "s2rank/errors.hpp"
#include "s2rank/rational.hpp"

namespace s2rank {

/// Ordered index pair (i, j) with 1 <= i < j <= s. Indices are the 1-based
/// labels used throughout: they name cut points, not array offsets.
struct PairIndex {
    int i;
    int j;

    friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

/// Canonical column order: ascending j - i, then ascending i. For s = 4 this
/// is (1,2), (2,3), (3,4), (1,3), (2,4), (1,4).
std::vector<PairIndex> canonical_pairs(int s);

/// Position of (i, j) in canonical_pairs(s). Throws OutOfBoundsError.
std::size_t pair_position(int s, PairIndex p);

/// The pair-indexed matrix V = (v_{i,j})_{1<=i<j<=s} with columns in Q^d,
/// stored in canonical order.
class PairFamily {
public:
    PairFamily(int s, int d);

    int s() const { return s_; }
    int d() const { return d_; }
    std::size_t pair_count() const { return cols_.size(); }

    const std::vector<Rational>& column(PairIndex p) const;
    std::vector<Rational>& column(PairIndex p);

    /// Entry v_{i,j}^a with a in 1..d.
    const Rational& entry(PairIndex p, int a) const;
    Rational& entry(PairIndex p, int a);

    bool is_zero() const;

    friend bool operator==(const PairFamily&, const PairFamily&) = default;

private:
    int s_;
    int d_;
    std::vector<std::vector<Rational>> cols_;
};

} // namespace s2rank
