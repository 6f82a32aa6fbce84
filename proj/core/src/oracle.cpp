#include "s2rank/oracle.hpp"

#include <random>
#include <string>

namespace s2rank {

namespace {

// Bounded draw via modulo: biased in general but reproducible everywhere,
// which is what a test-data generator needs.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

} // namespace

JointDistribution gen_random_joint(const GeneratorConfig& cfg) {
    if (cfg.s_min < 2 || cfg.s_min > cfg.s_max || cfg.d_min < 1 || cfg.d_min > cfg.d_max)
        throw Error("invalid generator ranges");
    if (cfg.den_bound == 0) throw Error("den_bound must be positive");

    std::mt19937_64 rng(cfg.seed);
    const int s = static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.s_min),
                                        static_cast<std::uint64_t>(cfg.s_max)));
    const int d = static_cast<int>(draw(rng, static_cast<std::uint64_t>(cfg.d_min),
                                        static_cast<std::uint64_t>(cfg.d_max)));

    std::vector<std::vector<Rational>> counts(static_cast<std::size_t>(s - 1),
                                              std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int x = 2; x <= s; ++x) {
        auto& row = counts[static_cast<std::size_t>(x - 2)];
        bool any = false;
        for (int a = 1; a <= d; ++a) {
            const long n = static_cast<long>(draw(rng, 0, cfg.den_bound));
            row[static_cast<std::size_t>(a - 1)] = Rational(n);
            if (n > 0) any = true;
        }
        if (!any) {
            // P(X = x) must be positive: bump one outcome.
            const std::size_t a = static_cast<std::size_t>(draw(rng, 0, static_cast<std::uint64_t>(d - 1)));
            row[a] = Rational(static_cast<long>(draw(rng, 1, cfg.den_bound)));
        }
    }
    return JointDistribution::from_counts(s, d, counts);
}

Rational cofactor_det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n > 8) throw TooLargeError("cofactor expansion capped at 8x8, got " + std::to_string(n));
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);

    Rational total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Rational term = m.at(0, j) * cofactor_det(minor);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace s2rank
