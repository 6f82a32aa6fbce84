#include "s2rank/matrix.hpp"

namespace s2rank {

Rational det_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquareError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators: scale row r by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
    mpz_class row_scales(1);
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l(1);
        for (std::size_t c = 0; c < n; ++c) l = lcm(l, m.at(r, c).denominator());
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& x = m.at(r, c);
            z[r][c] = x.numerator() * (l / x.denominator());
        }
        row_scales *= l;
    }

    // Bareiss: z[i][j] <- (z[i][j]*pivot - z[i][k]*z[k][j]) / prev, division exact.
    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (z[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && z[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(z[k], z[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }

    mpz_class det_z = z[n - 1][n - 1];
    if (sign < 0) det_z = -det_z;
    return Rational(det_z, row_scales);
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>& pivot_cols) {
    RationalMatrix r = m;
    pivot_cols.clear();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        std::size_t p = lead;
        while (p < r.rows() && r.at(p, c).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != lead) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(lead, j));
        }
        const Rational inv_pivot = Rational(1) / r.at(lead, c);
        for (std::size_t j = c; j < r.cols(); ++j) r.at(lead, j) *= inv_pivot;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, c).is_zero()) continue;
            const Rational f = r.at(i, c);
            for (std::size_t j = c; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        pivot_cols.push_back(c);
        ++lead;
    }
    return r;
}

std::size_t rank_exact(const RationalMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m, piv);
    return piv.size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    std::vector<std::size_t> piv;
    const RationalMatrix r = rref(m, piv);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : piv) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = Rational(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace s2rank
