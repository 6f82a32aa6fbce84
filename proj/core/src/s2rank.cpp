#include "s2rank/s2rank.hpp"

#include <string>

namespace s2rank {

std::vector<std::array<int, 3>> canonical_triples(int s) {
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            for (int k = j + 1; k <= s; ++k) out.push_back({i, j, k});
    return out;
}

std::vector<std::array<int, 4>> canonical_quadruples(int s) {
    std::vector<std::array<int, 4>> out;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            for (int k = j + 1; k <= s; ++k)
                for (int l = k + 1; l <= s; ++l) out.push_back({i, j, k, l});
    return out;
}

SixColumnInput extract_minor(const PairFamily& fam, const MinorSelector& sel) {
    const auto& q = sel.quadruple;
    if (!(1 <= q[0] && q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] <= fam.s()))
        throw OutOfBoundsError("minor quadruple out of range for s=" + std::to_string(fam.s()));
    if (!(1 <= sel.a1 && sel.a1 < sel.a2 && sel.a2 <= fam.d()))
        throw OutOfBoundsError("minor coordinates out of range for d=" + std::to_string(fam.d()));

    // Local pairs of {1,2,3,4} in canonical order.
    static constexpr std::array<std::array<int, 2>, 6> kLocal = {{{1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}}};
    SixColumnInput out;
    for (std::size_t c = 0; c < 6; ++c) {
        const PairIndex p{q[static_cast<std::size_t>(kLocal[c][0] - 1)],
                          q[static_cast<std::size_t>(kLocal[c][1] - 1)]};
        out.columns[c] = Vec2{fam.entry(p, sel.a1), fam.entry(p, sel.a2)};
    }
    return out;
}

namespace {

S2RankReport run_rank_test(const PairFamily& fam, bool stop_at_first) {
    if (fam.is_zero()) throw ZeroFamilyError("S^2-rank is defined only for nonzero families");

    S2RankReport report;
    if (fam.s() < 4 || fam.d() < 2) {
        report.verdict = S2RankVerdict::vacuous;
        return report;
    }

    report.verdict = S2RankVerdict::rank_one;
    for (const auto& quad : canonical_quadruples(fam.s())) {
        for (int a1 = 1; a1 <= fam.d(); ++a1) {
            for (int a2 = a1 + 1; a2 <= fam.d(); ++a2) {
                const MinorSelector sel{quad, a1, a2};
                const Rational v = det_s2(extract_minor(fam, sel));
                ++report.evaluations;
                if (!v.is_zero()) {
                    report.verdict = S2RankVerdict::violations_found;
                    report.violations.push_back({sel, v});
                    if (stop_at_first) return report;
                }
            }
        }
    }
    return report;
}

} // namespace

S2RankReport s2_rank_is_one(const PairFamily& fam) {
    return run_rank_test(fam, false);
}

S2RankReport s2_rank_is_one_quick(const PairFamily& fam) {
    return run_rank_test(fam, true);
}

std::vector<TripleRank> triple_rank_bound(const PairFamily& fam) {
    std::vector<TripleRank> out;
    for (const auto& t : canonical_triples(fam.s())) {
        const PairIndex pij{t[0], t[1]}, pik{t[0], t[2]}, pjk{t[1], t[2]};
        RationalMatrix m(static_cast<std::size_t>(fam.d()), 3);
        for (int a = 1; a <= fam.d(); ++a) {
            m.at(static_cast<std::size_t>(a - 1), 0) = fam.entry(pij, a);
            m.at(static_cast<std::size_t>(a - 1), 1) = fam.entry(pik, a);
            m.at(static_cast<std::size_t>(a - 1), 2) = fam.entry(pjk, a);
        }
        out.push_back({t, rank_exact(m)});
    }
    return out;
}

} // namespace s2rank
