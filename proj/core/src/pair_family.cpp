#include "s2rank/pair_family.hpp"

#include <string>

namespace s2rank {

std::vector<PairIndex> canonical_pairs(int s) {
    std::vector<PairIndex> out;
    if (s < 2) return out;
    out.reserve(static_cast<std::size_t>(s) * (s - 1) / 2);
    for (int diff = 1; diff < s; ++diff) {
        for (int i = 1; i + diff <= s; ++i) out.push_back({i, i + diff});
    }
    return out;
}

std::size_t pair_position(int s, PairIndex p) {
    if (p.i < 1 || p.i >= p.j || p.j > s)
        throw OutOfBoundsError("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                               ") out of range for s=" + std::to_string(s));
    // Pairs with difference < (j-i) come first: sum of (s - t) for t < j-i.
    const int diff = p.j - p.i;
    const std::size_t before = static_cast<std::size_t>(diff - 1) * s - static_cast<std::size_t>(diff - 1) * diff / 2;
    return before + static_cast<std::size_t>(p.i - 1);
}

PairFamily::PairFamily(int s, int d) : s_(s), d_(d) {
    if (s < 2 || d < 1)
        throw OutOfBoundsError("pair family needs s >= 2 and d >= 1");
    cols_.assign(static_cast<std::size_t>(s) * (s - 1) / 2, std::vector<Rational>(d));
}

const std::vector<Rational>& PairFamily::column(PairIndex p) const {
    return cols_[pair_position(s_, p)];
}

std::vector<Rational>& PairFamily::column(PairIndex p) {
    return cols_[pair_position(s_, p)];
}

const Rational& PairFamily::entry(PairIndex p, int a) const {
    if (a < 1 || a > d_) throw OutOfBoundsError("coordinate " + std::to_string(a) + " out of 1.." + std::to_string(d_));
    return column(p)[static_cast<std::size_t>(a - 1)];
}

Rational& PairFamily::entry(PairIndex p, int a) {
    if (a < 1 || a > d_) throw OutOfBoundsError("coordinate " + std::to_string(a) + " out of 1.." + std::to_string(d_));
    return column(p)[static_cast<std::size_t>(a - 1)];
}

bool PairFamily::is_zero() const {
    for (const auto& col : cols_) {
        for (const auto& x : col) {
            if (!x.is_zero()) return false;
        }
    }
    return true;
}

} // namespace s2rank
