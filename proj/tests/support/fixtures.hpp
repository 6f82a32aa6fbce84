#pragma once

#include <random>
#include <string>
#include <vector>

#include "s2rank/completion.hpp"
#include "s2rank/exterior_det.hpp"
#include "s2rank/probmodel.hpp"

namespace s2rank::testing {

inline std::string data_path(const char* name) {
    return std::string(S2RANK_TEST_DATA_DIR) + "/" + name;
}

inline Rational q(long num, long den = 1) { return Rational(num, den); }

/// d=2 family over s=4 from its first row (second row complements to 1).
inline PairFamily family_from_top_row(const std::vector<Rational>& top) {
    PairFamily fam(4, 2);
    const auto pairs = canonical_pairs(4);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        fam.entry(pairs[c], 1) = top[c];
        fam.entry(pairs[c], 2) = Rational(1) - top[c];
    }
    return fam;
}

// The three worked 2x6 tables: A is internally inconsistent, B and C are not.
inline PairFamily va() {
    return family_from_top_row({q(1, 2), q(4, 5), q(1, 5), q(7, 10), q(7, 10), q(3, 5)});
}
inline PairFamily vb() {
    return family_from_top_row({q(1, 2), q(3, 4), q(1, 4), q(7, 10), q(13, 20), q(5, 8)});
}
inline PairFamily vc() {
    return family_from_top_row({q(1, 2), q(1), q(3, 5), q(4, 5), q(3, 4), q(7, 10)});
}

inline SixColumnInput six_columns(const PairFamily& fam) {
    return extract_minor(fam, MinorSelector{{1, 2, 3, 4}, 1, 2});
}

/// Count table behind vb: N = 24.
inline JointDistribution joint_b() {
    return JointDistribution::from_counts(4, 2, {{q(2), q(2)}, {q(12), q(4)}, {q(1), q(3)}});
}

/// Count table behind vc: N = 10.
inline JointDistribution joint_c() {
    return JointDistribution::from_counts(4, 2, {{q(1), q(1)}, {q(3), q(0)}, {q(3), q(2)}});
}

/// The d=3 extra-credit table with its six open cells.
inline PartialFamily partial_u3() {
    PartialFamily pf(4, 3);
    auto set_col = [&pf](PairIndex p, Rational r1, Rational r2, Rational r3) {
        pf.set_cell(p, 1, r1);
        pf.set_cell(p, 2, r2);
        pf.set_cell(p, 3, r3);
    };
    set_col({1, 2}, q(3, 8), q(1, 8), q(1, 2));
    set_col({2, 3}, q(7, 16), q(5, 16), q(1, 4));
    set_col({3, 4}, q(1, 8), q(1, 8), q(3, 4));
    pf.set_cell({1, 3}, 3, q(3, 10));
    pf.set_cell({2, 4}, 3, q(7, 20));
    pf.set_cell({1, 4}, 3, q(3, 8));
    return pf;
}

/// Cut-point identifications merging vb (grad students split off) with vc
/// (undergraduates only) into s = 5.
inline RefinementMap bc_refinement() {
    RefinementMap rm;
    rm.combined_s = 5;
    rm.maps = {{1, 2, 4, 5}, {1, 2, 3, 4}};
    return rm;
}

struct RandomRationals {
    std::mt19937_64 rng;

    explicit RandomRationals(std::uint64_t seed) : rng(seed) {}

    Rational next() {
        const long num = static_cast<long>(rng() % 19) - 9;  // -9..9
        const long den = static_cast<long>(rng() % 9) + 1;   // 1..9
        return Rational(num, den);
    }

    Vec2 next_vec2() {
        Rational a = next();
        Rational b = next();
        return Vec2{a, b};
    }

    SixColumnInput next_six() {
        SixColumnInput in;
        for (auto& c : in.columns) c = next_vec2();
        return in;
    }
};

} // namespace s2rank::testing
