#include <doctest.h>

#include "fixtures.hpp"
#include "s2rank/exterior_det.hpp"

using namespace s2rank;
using s2rank::testing::q;
using s2rank::testing::RandomRationals;
using s2rank::testing::six_columns;

TEST_SUITE("exterior_det") {

TEST_CASE("worked 2x6 tables") {
    CHECK(det_s2(six_columns(s2rank::testing::va())) == q(-7, 1000));
    CHECK(det_s2(six_columns(s2rank::testing::vb())) == q(0));
    CHECK(det_s2_companion(six_columns(s2rank::testing::va())) == q(-7, 1000));
    CHECK(det_s2_companion(six_columns(s2rank::testing::vb())) == q(0));
}

TEST_CASE("vanishing cases") {
    SixColumnInput all_equal;
    for (auto& c : all_equal.columns) c = Vec2{q(1), q(0)};
    CHECK(det_s2(all_equal) == q(0));

    RandomRationals rr(11);
    SixColumnInput zero_col = rr.next_six();
    zero_col.columns[2] = Vec2{q(0), q(0)};
    CHECK(det_s2(zero_col) == q(0));

    // Triangle (1,2,3) columns equal, rest (1,0), (0,1), (1,1).
    SixColumnInput tri;
    tri.columns[0] = Vec2{q(1), q(1)};  // (1,2)
    tri.columns[1] = Vec2{q(1), q(1)};  // (2,3)
    tri.columns[3] = Vec2{q(1), q(1)};  // (1,3)
    tri.columns[2] = Vec2{q(1), q(0)};  // (3,4)
    tri.columns[4] = Vec2{q(0), q(1)};  // (2,4)
    tri.columns[5] = Vec2{q(1), q(1)};  // (1,4)
    CHECK(det_s2(tri) == q(0));
    CHECK(det_s2_companion(tri) == q(0));
}

TEST_CASE("companion matrix assembly matches the stacked triangle system") {
    // For the consistent worked table the companion matrix IS the weight
    // system of the triangles (1,2,3), (1,2,4), (1,3,4).
    const SixColumnInput in = six_columns(s2rank::testing::vb());
    const RationalMatrix m = det_s2_companion_matrix(in);
    const Rational expect[6][6] = {
        {q(1, 2), q(3, 4), q(0), q(-7, 10), q(0), q(0)},
        {q(1, 2), q(1, 4), q(0), q(-3, 10), q(0), q(0)},
        {q(1, 2), q(0), q(0), q(0), q(13, 20), q(-5, 8)},
        {q(1, 2), q(0), q(0), q(0), q(7, 20), q(-3, 8)},
        {q(0), q(0), q(1, 4), q(7, 10), q(0), q(-5, 8)},
        {q(0), q(0), q(3, 4), q(3, 10), q(0), q(-3, 8)},
    };
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) CHECK(m.at(r, c) == expect[r][c]);
}

TEST_CASE("both formulas agree on random rational inputs") {
    RandomRationals rr(12);
    for (int rep = 0; rep < 300; ++rep) {
        const SixColumnInput in = rr.next_six();
        CHECK(det_s2(in) == det_s2_companion(in));
    }
}

TEST_CASE("multilinearity in every column position") {
    RandomRationals rr(13);
    for (std::size_t pos = 0; pos < 6; ++pos) {
        for (int rep = 0; rep < 25; ++rep) {
            SixColumnInput base = rr.next_six();
            const Vec2 u = rr.next_vec2();
            const Vec2 w = rr.next_vec2();
            const Rational t = rr.next();

            SixColumnInput cu = base, cw = base, cs = base;
            cu.columns[pos] = u;
            cw.columns[pos] = w;
            cs.columns[pos] = Vec2{u.a + t * w.a, u.b + t * w.b};
            CHECK(det_s2(cs) == det_s2(cu) + t * det_s2(cw));
        }
    }
}

TEST_CASE("triangle vanishing for every triple") {
    // Column position of each pair of {1,2,3,4} in canonical order.
    const auto pos_of = [](int i, int j) -> std::size_t {
        const PairIndex want{i, j};
        const auto pairs = canonical_pairs(4);
        for (std::size_t c = 0; c < pairs.size(); ++c)
            if (pairs[c] == want) return c;
        return 6;
    };

    RandomRationals rr(14);
    for (int x = 1; x <= 4; ++x) {
        for (int y = x + 1; y <= 4; ++y) {
            for (int z = y + 1; z <= 4; ++z) {
                for (int rep = 0; rep < 25; ++rep) {
                    SixColumnInput in = rr.next_six();
                    const Vec2 shared = rr.next_vec2();
                    in.columns[pos_of(x, y)] = shared;
                    in.columns[pos_of(x, z)] = shared;
                    in.columns[pos_of(y, z)] = shared;
                    CHECK(det_s2(in) == q(0));
                }
            }
        }
    }
}

} // TEST_SUITE
