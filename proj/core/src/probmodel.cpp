#include "s2rank/probmodel.hpp"

#include <string>

namespace s2rank {

JointDistribution::JointDistribution(int s, int d, std::vector<std::vector<Rational>> masses)
    : s_(s), d_(d), mass_(std::move(masses)) {}

JointDistribution JointDistribution::from_masses(int s, int d, std::vector<std::vector<Rational>> masses) {
    if (s < 2 || d < 1) throw Error("joint distribution needs s >= 2 and d >= 1");
    if (masses.size() != static_cast<std::size_t>(s - 1))
        throw Error("expected " + std::to_string(s - 1) + " X-values (2.." + std::to_string(s) + ")");

    Rational total(0);
    for (int x = 2; x <= s; ++x) {
        const auto& row = masses[static_cast<std::size_t>(x - 2)];
        if (row.size() != static_cast<std::size_t>(d))
            throw Error("expected " + std::to_string(d) + " Y-values for X=" + std::to_string(x));
        Rational row_sum(0);
        for (const auto& m : row) {
            if (m.sign() < 0) throw Error("negative probability mass at X=" + std::to_string(x));
            row_sum += m;
        }
        if (row_sum.is_zero())
            throw ZeroPairMassError("P(X=" + std::to_string(x) + ") = 0 violates the positive-window hypothesis");
        total += row_sum;
    }
    if (total != Rational(1)) throw Error("joint masses sum to " + total.str() + ", not 1");
    return JointDistribution(s, d, std::move(masses));
}

JointDistribution JointDistribution::from_counts(int s, int d, const std::vector<std::vector<Rational>>& counts) {
    Rational total(0);
    for (const auto& row : counts) {
        for (const auto& c : row) {
            if (c.sign() < 0) throw Error("negative count");
            total += c;
        }
    }
    if (total.is_zero()) throw Error("all counts are zero");
    std::vector<std::vector<Rational>> masses = counts;
    for (auto& row : masses) {
        for (auto& c : row) c /= total;
    }
    return from_masses(s, d, std::move(masses));
}

const Rational& JointDistribution::mass(int x, int a) const {
    if (x < 2 || x > s_ || a < 1 || a > d_)
        throw OutOfBoundsError("mass(" + std::to_string(x) + "," + std::to_string(a) + ") out of range");
    return mass_[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(a - 1)];
}

Rational JointDistribution::window_mass(PairIndex p) const {
    if (p.i < 1 || p.i >= p.j || p.j > s_)
        throw OutOfBoundsError("window (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") out of range");
    Rational sum(0);
    for (int x = p.i + 1; x <= p.j; ++x) {
        if (x < 2) continue;  // X never takes the value 1
        for (int a = 1; a <= d_; ++a) sum += mass(x, a);
    }
    return sum;
}

WeightAssignment::WeightAssignment(int s, std::vector<Rational> lambdas) : s_(s), lam_(std::move(lambdas)) {
    if (lam_.size() != static_cast<std::size_t>(s) * (s - 1) / 2)
        throw Error("weight assignment size does not match s");
}

bool WeightAssignment::is_additive() const {
    for (const auto& t : canonical_triples(s_)) {
        if (lambda({t[0], t[2]}) != lambda({t[0], t[1]}) + lambda({t[1], t[2]})) return false;
    }
    return true;
}

std::vector<mpz_class> WeightAssignment::integer_ray() const {
    mpz_class l(1);
    for (const auto& x : lam_) l = lcm(l, x.denominator());
    std::vector<mpz_class> ray;
    ray.reserve(lam_.size());
    mpz_class g(0);
    for (const auto& x : lam_) {
        ray.push_back(x.numerator() * (l / x.denominator()));
        g = gcd(g, ray.back());
    }
    if (g > 1) {
        for (auto& v : ray) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return ray;
}

PairFamily conditional_matrix(const JointDistribution& joint) {
    PairFamily fam(joint.s(), joint.d());
    for (const auto& p : canonical_pairs(joint.s())) {
        const Rational w = joint.window_mass(p);
        if (w.is_zero())
            throw ZeroPairMassError("P(" + std::to_string(p.i) + " < X <= " + std::to_string(p.j) + ") = 0");
        for (int a = 1; a <= joint.d(); ++a) {
            Rational num(0);
            for (int x = p.i + 1; x <= p.j; ++x) {
                if (x >= 2) num += joint.mass(x, a);
            }
            fam.entry(p, a) = num / w;
        }
    }
    return fam;
}

DistributionVectors distribution_vectors(const JointDistribution& joint) {
    DistributionVectors dv;
    dv.s = joint.s();
    dv.d = joint.d();
    dv.p.assign(static_cast<std::size_t>(joint.s()), std::vector<Rational>(joint.d()));
    for (int i = 2; i <= joint.s(); ++i) {
        for (int a = 1; a <= joint.d(); ++a) {
            dv.p[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a - 1)] =
                dv.p[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(a - 1)] + joint.mass(i, a);
        }
    }
    return dv;
}

WeightAssignment weights(const JointDistribution& joint) {
    std::vector<Rational> lam;
    for (const auto& p : canonical_pairs(joint.s())) lam.push_back(joint.window_mass(p));
    return WeightAssignment(joint.s(), std::move(lam));
}

bool Theorem2Report::pairs_ok() const {
    for (const auto& c : pairs) {
        if (!c.ok()) return false;
    }
    return true;
}

bool Theorem2Report::triples_ok() const {
    for (const auto& c : triples) {
        if (!c.ok()) return false;
    }
    return true;
}

bool Theorem2Report::all_ok() const {
    return pairs_ok() && triples_ok() && rank.verdict != S2RankVerdict::violations_found;
}

Theorem2Report verify_theorem2(const JointDistribution& joint) {
    const PairFamily fam = conditional_matrix(joint);
    const DistributionVectors dv = distribution_vectors(joint);
    const WeightAssignment w = weights(joint);

    Theorem2Report report;
    const Rational one(1);

    for (const auto& p : canonical_pairs(joint.s())) {
        Theorem2Report::PairCheck check;
        check.pair = p;
        check.lambda = w.lambda(p);
        check.lambda_in_range = check.lambda.sign() > 0 && check.lambda <= one;

        Rational col_sum(0);
        check.column_stochastic = true;
        for (int a = 1; a <= joint.d(); ++a) {
            const Rational& v = fam.entry(p, a);
            if (v.sign() < 0 || v > one) check.column_stochastic = false;
            col_sum += v;
        }
        if (col_sum != one) check.column_stochastic = false;

        check.identity_holds = true;
        for (int a = 1; a <= joint.d(); ++a) {
            const Rational lhs = check.lambda * fam.entry(p, a);
            const Rational rhs = dv.at(p.j)[static_cast<std::size_t>(a - 1)] -
                                 dv.at(p.i)[static_cast<std::size_t>(a - 1)];
            if (lhs != rhs) check.identity_holds = false;
        }
        report.pairs.push_back(std::move(check));
    }

    for (const auto& t : canonical_triples(joint.s())) {
        Theorem2Report::TripleCheck check;
        check.triple = t;
        const PairIndex ij{t[0], t[1]}, ik{t[0], t[2]}, jk{t[1], t[2]};
        check.alpha = w.lambda(ij) / w.lambda(ik);
        check.alpha_in_open_unit = check.alpha.sign() > 0 && check.alpha < one;
        check.additivity_holds = w.lambda(ik) == w.lambda(ij) + w.lambda(jk);
        check.convex_identity_holds = true;
        for (int a = 1; a <= joint.d(); ++a) {
            const Rational lhs = fam.entry(ik, a);
            const Rational rhs = check.alpha * fam.entry(ij, a) + (one - check.alpha) * fam.entry(jk, a);
            if (lhs != rhs) check.convex_identity_holds = false;
        }
        report.triples.push_back(std::move(check));
    }

    report.rank = s2_rank_is_one(fam);
    return report;
}

} // namespace s2rank
