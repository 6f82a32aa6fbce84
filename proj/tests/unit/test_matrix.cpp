#include <doctest.h>

#include "fixtures.hpp"
#include "s2rank/matrix.hpp"
#include "s2rank/oracle.hpp"

using namespace s2rank;
using s2rank::testing::q;
using s2rank::testing::RandomRationals;

namespace {

RationalMatrix random_matrix(RandomRationals& rr, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rr.next();
    return m;
}

// Independent rank oracle: largest k with a nonzero k x k minor, checked by
// exhaustive enumeration through cofactor_det.
std::size_t brute_rank(const RationalMatrix& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t k = n; k >= 1; --k) {
        std::vector<std::size_t> rsel(k), csel(k);
        // enumerate k-subsets of rows and columns
        std::vector<std::size_t> ridx(k);
        for (std::size_t i = 0; i < k; ++i) ridx[i] = i;
        while (true) {
            std::vector<std::size_t> cidx(k);
            for (std::size_t i = 0; i < k; ++i) cidx[i] = i;
            while (true) {
                RationalMatrix sub(k, k);
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(ridx[r], cidx[c]);
                if (!cofactor_det(sub).is_zero()) return k;

                // next column subset
                std::size_t i = k;
                while (i > 0 && cidx[i - 1] == m.cols() - k + i - 1) --i;
                if (i == 0) break;
                ++cidx[i - 1];
                for (std::size_t j = i; j < k; ++j) cidx[j] = cidx[j - 1] + 1;
            }
            std::size_t i = k;
            while (i > 0 && ridx[i - 1] == m.rows() - k + i - 1) --i;
            if (i == 0) break;
            ++ridx[i - 1];
            for (std::size_t j = i; j < k; ++j) ridx[j] = ridx[j - 1] + 1;
        }
    }
    return 0;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("det_exact on small hand cases") {
    RationalMatrix one(1, 1);
    one.at(0, 0) = q(7, 2);
    CHECK(det_exact(one) == q(7, 2));

    RationalMatrix two(2, 2);
    two.at(0, 0) = q(1);
    two.at(0, 1) = q(2);
    two.at(1, 0) = q(3);
    two.at(1, 1) = q(4);
    CHECK(det_exact(two) == q(-2));

    RationalMatrix rect(2, 3);
    CHECK_THROWS_AS(det_exact(rect), NonSquareError);
}

TEST_CASE("det_exact agrees with the cofactor oracle up to 6x6") {
    RandomRationals rr(101);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            const RationalMatrix m = random_matrix(rr, n, n);
            CHECK(det_exact(m) == cofactor_det(m));
        }
    }
}

TEST_CASE("det_exact handles singular and permuted-pivot matrices") {
    // Zero leading pivot forces a row swap.
    RationalMatrix m(3, 3);
    m.at(0, 1) = q(1);
    m.at(1, 0) = q(1);
    m.at(2, 2) = q(5);
    CHECK(det_exact(m) == q(-5));

    // Rank-deficient: duplicate rows.
    RationalMatrix s(3, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        s.at(0, c) = q(static_cast<long>(c + 1));
        s.at(1, c) = q(static_cast<long>(c + 1));
        s.at(2, c) = q(static_cast<long>(2 * c + 1));
    }
    CHECK(det_exact(s) == q(0));
}

TEST_CASE("rank_exact on named cases") {
    RationalMatrix zero(3, 4);
    CHECK(rank_exact(zero) == 0);

    // First three columns of the inconsistent worked table: rank 2.
    RationalMatrix m(2, 3);
    m.at(0, 0) = q(1, 2);
    m.at(0, 1) = q(7, 10);
    m.at(0, 2) = q(4, 5);
    m.at(1, 0) = q(1, 2);
    m.at(1, 1) = q(3, 10);
    m.at(1, 2) = q(1, 5);
    CHECK(rank_exact(m) == 2);

    // Outer product => rank 1.
    RationalMatrix outer(3, 5);
    const Rational u[3] = {q(1, 2), q(2, 3), q(-1)};
    const Rational v[5] = {q(3), q(1, 7), q(0), q(2), q(-5, 4)};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 5; ++c) outer.at(r, c) = u[r] * v[c];
    CHECK(rank_exact(outer) == 1);
}

TEST_CASE("rank_exact agrees with the exhaustive-minor oracle up to 4x6") {
    RandomRationals rr(202);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t rows = 1 + rr.rng() % 4;
        const std::size_t cols = 1 + rr.rng() % 6;
        RationalMatrix m = random_matrix(rr, rows, cols);
        // Bias toward interesting ranks: sometimes overwrite a row with a
        // multiple of another.
        if (rows >= 2 && rr.rng() % 2 == 0) {
            const Rational f = rr.next();
            for (std::size_t c = 0; c < cols; ++c) m.at(rows - 1, c) = f * m.at(0, c);
        }
        CHECK(rank_exact(m) == brute_rank(m));
    }
}

TEST_CASE("nullspace basis spans the kernel") {
    RandomRationals rr(303);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t rows = 1 + rr.rng() % 4;
        const std::size_t cols = 1 + rr.rng() % 6;
        const RationalMatrix m = random_matrix(rr, rows, cols);
        const auto basis = nullspace(m);
        CHECK(basis.size() == cols - rank_exact(m));
        for (const auto& v : basis) {
            for (std::size_t r = 0; r < rows; ++r) {
                Rational dot(0);
                for (std::size_t c = 0; c < cols; ++c) dot += m.at(r, c) * v[c];
                CHECK(dot.is_zero());
            }
        }
    }
}

} // TEST_SUITE
