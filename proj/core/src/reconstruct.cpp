#include "s2rank/reconstruct.hpp"

#include <string>

namespace s2rank {

bool check_stochastic(const PairFamily& fam) {
    const Rational one(1);
    for (const auto& p : canonical_pairs(fam.s())) {
        Rational sum(0);
        for (int a = 1; a <= fam.d(); ++a) {
            const Rational& v = fam.entry(p, a);
            if (v.sign() < 0 || v > one) return false;
            sum += v;
        }
        if (sum != one) return false;
    }
    return true;
}

namespace {

// Sign-normalize a nullspace basis vector so its first nonzero entry is
// positive; returns true if the result is strictly positive throughout.
bool make_positive(std::vector<Rational>& v) {
    int lead = 0;
    for (const auto& x : v) {
        if (!x.is_zero()) {
            lead = x.sign();
            break;
        }
    }
    if (lead < 0) {
        for (auto& x : v) x = -x;
    }
    for (const auto& x : v) {
        if (x.sign() <= 0) return false;
    }
    return true;
}

} // namespace

TripleCoefficients triple_coefficients(const PairFamily& fam, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= fam.s()))
        throw OutOfBoundsError("triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ") out of range");

    TripleCoefficients out;
    out.triple = {i, j, k};

    const PairIndex ij{i, j}, ik{i, k}, jk{j, k};
    RationalMatrix m(static_cast<std::size_t>(fam.d()), 3);
    for (int a = 1; a <= fam.d(); ++a) {
        m.at(static_cast<std::size_t>(a - 1), 0) = fam.entry(ij, a);
        m.at(static_cast<std::size_t>(a - 1), 1) = -fam.entry(ik, a);
        m.at(static_cast<std::size_t>(a - 1), 2) = fam.entry(jk, a);
    }

    auto basis = nullspace(m);
    out.nullspace_dim = basis.size();
    if (basis.empty()) {
        out.status = TripleCoefficients::Status::no_positive_solution;
        return out;
    }
    if (basis.size() >= 2) {
        out.status = (fam.column(ij) == fam.column(ik) && fam.column(ij) == fam.column(jk))
                         ? TripleCoefficients::Status::degenerate_rank1
                         : TripleCoefficients::Status::underdetermined;
        return out;
    }

    std::vector<Rational> v = basis.front();
    if (!make_positive(v)) {
        out.status = TripleCoefficients::Status::no_positive_solution;
        return out;
    }
    out.status = TripleCoefficients::Status::unique_positive;
    out.a = v[0] / v[1];
    out.b = Rational(1);
    out.c = v[2] / v[1];
    return out;
}

std::vector<PairWitnessEntry> PairWitnessReport::failures() const {
    std::vector<PairWitnessEntry> out;
    for (const auto& e : entries) {
        if (e.witness == 0) out.push_back(e);
    }
    return out;
}

PairWitnessReport check_pair_witness(const PairFamily& fam) {
    PairWitnessReport report;

    auto triple_rank2 = [&fam](const std::array<int, 3>& t, int a, int b) {
        RationalMatrix m(2, 3);
        const PairIndex ps[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (std::size_t c = 0; c < 3; ++c) {
            m.at(0, c) = fam.entry(ps[c], a);
            m.at(1, c) = fam.entry(ps[c], b);
        }
        return rank_exact(m) == 2;
    };

    for (const auto& quad : canonical_quadruples(fam.s())) {
        const std::array<std::array<int, 3>, 4> triples = {{{quad[0], quad[1], quad[2]},
                                                            {quad[0], quad[1], quad[3]},
                                                            {quad[0], quad[2], quad[3]},
                                                            {quad[1], quad[2], quad[3]}}};
        for (int a = 1; a <= fam.d(); ++a) {
            int witness = 0;
            for (int b = 1; b <= fam.d() && witness == 0; ++b) {
                if (b == a) continue;
                bool all_rank2 = true;
                for (const auto& t : triples) {
                    if (!triple_rank2(t, a, b)) {
                        all_rank2 = false;
                        break;
                    }
                }
                if (all_rank2) witness = b;
            }
            report.entries.push_back({quad, a, witness});
            if (witness == 0) report.ok = false;
        }
    }
    return report;
}

const char* to_string(WeightSolveResult::Status s) {
    switch (s) {
        case WeightSolveResult::Status::ok: return "ok";
        case WeightSolveResult::Status::inconsistent: return "inconsistent";
        case WeightSolveResult::Status::no_positive_ray: return "no-positive-ray";
        case WeightSolveResult::Status::underdetermined: return "underdetermined";
    }
    return "?";
}

WeightSolveResult solve_weights(const PairFamily& fam) {
    const auto pairs = canonical_pairs(fam.s());
    const auto triples = canonical_triples(fam.s());

    RationalMatrix m(triples.size() * static_cast<std::size_t>(fam.d()), pairs.size());
    std::size_t r = 0;
    for (const auto& t : triples) {
        const std::size_t cij = pair_position(fam.s(), {t[0], t[1]});
        const std::size_t cik = pair_position(fam.s(), {t[0], t[2]});
        const std::size_t cjk = pair_position(fam.s(), {t[1], t[2]});
        for (int a = 1; a <= fam.d(); ++a, ++r) {
            m.at(r, cij) = fam.entry({t[0], t[1]}, a);
            m.at(r, cik) = -fam.entry({t[0], t[2]}, a);
            m.at(r, cjk) = fam.entry({t[1], t[2]}, a);
        }
    }

    WeightSolveResult result;
    auto basis = nullspace(m);
    result.nullspace_dim = basis.size();
    if (basis.empty()) {
        result.status = WeightSolveResult::Status::inconsistent;
        return result;
    }
    if (basis.size() > 1) {
        result.status = WeightSolveResult::Status::underdetermined;
        return result;
    }

    std::vector<Rational> v = basis.front();
    if (!make_positive(v)) {
        result.status = WeightSolveResult::Status::no_positive_ray;
        return result;
    }
    const Rational scale = v.back();  // position of (1, s) is last in canonical order
    for (auto& x : v) x /= scale;
    result.status = WeightSolveResult::Status::ok;
    result.weights = WeightAssignment(fam.s(), std::move(v));
    return result;
}

PointConfiguration reconstruct_points(const PairFamily& fam, const WeightAssignment& w) {
    PointConfiguration pts;
    pts.s = fam.s();
    pts.d = fam.d();
    pts.p.assign(static_cast<std::size_t>(fam.s()), std::vector<Rational>(fam.d()));
    for (int j = 2; j <= fam.s(); ++j) {
        const PairIndex p1j{1, j};
        for (int a = 1; a <= fam.d(); ++a)
            pts.p[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(a - 1)] =
                w.lambda(p1j) * fam.entry(p1j, a);
    }
    for (const auto& p : canonical_pairs(fam.s())) {
        for (int a = 1; a <= fam.d(); ++a) {
            const Rational lhs = w.lambda(p) * fam.entry(p, a);
            const Rational rhs = pts.at(p.j)[static_cast<std::size_t>(a - 1)] -
                                 pts.at(p.i)[static_cast<std::size_t>(a - 1)];
            if (lhs != rhs)
                throw CocycleViolationError(p.i, p.j,
                                            "lambda*v != p_j - p_i on pair (" + std::to_string(p.i) +
                                                "," + std::to_string(p.j) + ")");
        }
    }
    return pts;
}

Rational IntervalModel::measure(PairIndex window, int h) const {
    Rational sum(0);
    for (const auto& seg : segments) {
        if (seg.y_label == h && window.i < seg.x_label && seg.x_label <= window.j)
            sum += seg.hi - seg.lo;
    }
    return sum;
}

Rational IntervalModel::y_measure(int h) const {
    Rational sum(0);
    for (const auto& seg : segments) {
        if (seg.y_label == h) sum += seg.hi - seg.lo;
    }
    return sum;
}

IntervalModel build_interval_model(const PairFamily& fam, const WeightAssignment& w,
                                   const PointConfiguration& pts) {
    if (w.lambda({1, fam.s()}) != Rational(1))
        throw Error("interval model needs probability-normalized weights (lambda_{1,s} = 1)");

    IntervalModel model;
    Rational cursor(0);
    for (int k = 2; k <= fam.s(); ++k) {
        for (int h = 1; h <= fam.d(); ++h) {
            const Rational len = pts.at(k)[static_cast<std::size_t>(h - 1)] -
                                 pts.at(k - 1)[static_cast<std::size_t>(h - 1)];
            if (len.sign() < 0) throw Error("negative increment in interval model");
            if (len.is_zero()) continue;
            model.segments.push_back({cursor, cursor + len, k, h});
            cursor += len;
        }
    }
    if (cursor != Rational(1)) throw Error("interval model does not cover (0,1]");
    return model;
}

PopulationTable minimal_population(const PairFamily& fam, const WeightAssignment& w) {
    const PointConfiguration pts = reconstruct_points(fam, w);

    PopulationTable table;
    table.s = fam.s();
    table.d = fam.d();

    mpz_class n(1);
    for (int k = 2; k <= fam.s(); ++k) {
        for (int a = 1; a <= fam.d(); ++a) {
            const Rational inc = pts.at(k)[static_cast<std::size_t>(a - 1)] -
                                 pts.at(k - 1)[static_cast<std::size_t>(a - 1)];
            n = lcm(n, inc.denominator());
        }
    }
    table.total = n;
    table.counts.assign(static_cast<std::size_t>(fam.s() - 1), std::vector<mpz_class>(fam.d()));
    for (int k = 2; k <= fam.s(); ++k) {
        for (int a = 1; a <= fam.d(); ++a) {
            const Rational inc = pts.at(k)[static_cast<std::size_t>(a - 1)] -
                                 pts.at(k - 1)[static_cast<std::size_t>(a - 1)];
            table.counts[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(a - 1)] =
                inc.numerator() * (n / inc.denominator());
        }
    }
    return table;
}

mpz_class PopulationTable::window_count(PairIndex p, int a) const {
    mpz_class sum(0);
    for (int x = p.i + 1; x <= p.j; ++x) {
        if (x >= 2) sum += count(x, a);
    }
    return sum;
}

} // namespace s2rank
