#pragma once

#include <array>

#include "s2rank/matrix.hpp"
#include "s2rank/rational.hpp"

namespace s2rank {

/// A column of a 2-row pair table: (a, b) = (top, bottom) coordinates.
struct Vec2 {
    Rational a;
    Rational b;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Six 2-vectors indexed by the pairs of {1,2,3,4} in the fixed order
/// (1,2), (2,3), (3,4), (1,3), (2,4), (1,4). The order is part of the
/// data: columns must not be permuted.
struct SixColumnInput {
    std::array<Vec2, 6> columns;

    const Vec2& c12() const { return columns[0]; }
    const Vec2& c23() const { return columns[1]; }
    const Vec2& c34() const { return columns[2]; }
    const Vec2& c13() const { return columns[3]; }
    const Vec2& c24() const { return columns[4]; }
    const Vec2& c14() const { return columns[5]; }

    friend bool operator==(const SixColumnInput&, const SixColumnInput&) = default;
};

/// The multilinear map on six pair-indexed 2-vectors that generalizes the
/// determinant: it vanishes exactly when the six vectors can be realized as
/// scaled edges of a quadrilateral, and in particular whenever the three
/// columns of a triangle (x,y), (x,z), (y,z) coincide. Evaluated as the
/// explicit 12-monomial polynomial (6 positive, 6 negative).
Rational det_s2(const SixColumnInput& in);

/// The 6x6 matrix whose ordinary determinant equals det_s2: rows stack the
/// triangle relations (1,2,3), (1,2,4), (1,3,4) with the (1,3)- and
/// (1,4)-columns negated.
RationalMatrix det_s2_companion_matrix(const SixColumnInput& in);

/// det_s2 computed through the companion matrix. Equal (not merely
/// proportional) to det_s2 on every input; the test suite enforces this.
Rational det_s2_companion(const SixColumnInput& in);

} // namespace s2rank
