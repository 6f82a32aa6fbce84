#pragma once

#include <cstdint>

#include "s2rank/matrix.hpp"
#include "s2rank/probmodel.hpp"

namespace s2rank {

/// Reproducible random-joint generator: the same config always yields the
/// same distribution, independent of the standard library in use.
struct GeneratorConfig {
    std::uint64_t seed = 1;
    int s_min = 4;
    int s_max = 4;
    int d_min = 2;
    int d_max = 2;
    unsigned den_bound = 20;  // per-cell numerators are drawn from 0..den_bound
};

/// Integer numerators over a common denominator, normalized by their total;
/// every X value is guaranteed positive mass, so all window masses are
/// positive and denominators stay bounded by (s-1)*d*den_bound.
JointDistribution gen_random_joint(const GeneratorConfig& cfg);

/// Determinant by recursive cofactor expansion. Deliberately shares no code
/// with det_exact; n is capped at 8 (throws TooLargeError beyond).
Rational cofactor_det(const RationalMatrix& m);

} // namespace s2rank
