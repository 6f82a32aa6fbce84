#include "s2rank/exterior_det.hpp"

namespace s2rank {

Rational det_s2(const SixColumnInput& in) {
    const Rational& a12 = in.c12().a;
    const Rational& b12 = in.c12().b;
    const Rational& a23 = in.c23().a;
    const Rational& b23 = in.c23().b;
    const Rational& a34 = in.c34().a;
    const Rational& b34 = in.c34().b;
    const Rational& a13 = in.c13().a;
    const Rational& b13 = in.c13().b;
    const Rational& a24 = in.c24().a;
    const Rational& b24 = in.c24().b;
    const Rational& a14 = in.c14().a;
    const Rational& b14 = in.c14().b;

    return a12 * a23 * a34 * b13 * b24 * b14
         + a12 * b23 * a34 * b13 * b24 * a14
         + a12 * b23 * b34 * a13 * a24 * b14
         + b12 * b23 * a34 * a13 * a24 * b14
         + b12 * a23 * b34 * b13 * a24 * a14
         + b12 * a23 * b34 * a13 * b24 * a14
         - b12 * b23 * b34 * a13 * a24 * a14
         - b12 * a23 * b34 * a13 * a24 * b14
         - b12 * a23 * a34 * b13 * b24 * a14
         - a12 * a23 * b34 * b13 * b24 * a14
         - a12 * b23 * a34 * a13 * b24 * b14
         - a12 * b23 * a34 * b13 * a24 * b14;
}

RationalMatrix det_s2_companion_matrix(const SixColumnInput& in) {
    RationalMatrix m(6, 6);
    // triangle (1,2,3)
    m.at(0, 0) = in.c12().a;
    m.at(1, 0) = in.c12().b;
    m.at(0, 1) = in.c23().a;
    m.at(1, 1) = in.c23().b;
    m.at(0, 3) = -in.c13().a;
    m.at(1, 3) = -in.c13().b;
    // triangle (1,2,4)
    m.at(2, 0) = in.c12().a;
    m.at(3, 0) = in.c12().b;
    m.at(2, 4) = in.c24().a;
    m.at(3, 4) = in.c24().b;
    m.at(2, 5) = -in.c14().a;
    m.at(3, 5) = -in.c14().b;
    // triangle (1,3,4)
    m.at(4, 2) = in.c34().a;
    m.at(5, 2) = in.c34().b;
    m.at(4, 3) = in.c13().a;
    m.at(5, 3) = in.c13().b;
    m.at(4, 5) = -in.c14().a;
    m.at(5, 5) = -in.c14().b;
    return m;
}

Rational det_s2_companion(const SixColumnInput& in) {
    return det_exact(det_s2_companion_matrix(in));
}

} // namespace s2rank
