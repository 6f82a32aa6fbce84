#include "s2rank/completion.hpp"

#include <algorithm>

namespace s2rank {

PartialFamily::PartialFamily(int s, int d) : s_(s), d_(d) {
    if (s < 2 || d < 1) throw OutOfBoundsError("partial family needs s >= 2 and d >= 1");
    cells_.assign(static_cast<std::size_t>(s) * (s - 1) / 2,
                  std::vector<std::optional<Rational>>(static_cast<std::size_t>(d)));
}

PartialFamily PartialFamily::from_family(const PairFamily& fam) {
    PartialFamily pf(fam.s(), fam.d());
    for (const auto& p : canonical_pairs(fam.s()))
        for (int a = 1; a <= fam.d(); ++a) pf.set_cell(p, a, fam.entry(p, a));
    return pf;
}

const std::optional<Rational>& PartialFamily::cell(PairIndex p, int a) const {
    if (a < 1 || a > d_) throw OutOfBoundsError("coordinate out of range");
    return cells_[pair_position(s_, p)][static_cast<std::size_t>(a - 1)];
}

void PartialFamily::set_cell(PairIndex p, int a, Rational value) {
    if (a < 1 || a > d_) throw OutOfBoundsError("coordinate out of range");
    cells_[pair_position(s_, p)][static_cast<std::size_t>(a - 1)] = std::move(value);
}

void PartialFamily::clear_cell(PairIndex p, int a) {
    if (a < 1 || a > d_) throw OutOfBoundsError("coordinate out of range");
    cells_[pair_position(s_, p)][static_cast<std::size_t>(a - 1)].reset();
}

bool PartialFamily::column_known(PairIndex p) const {
    const auto& col = cells_[pair_position(s_, p)];
    return std::all_of(col.begin(), col.end(), [](const auto& c) { return c.has_value(); });
}

bool PartialFamily::column_unknown(PairIndex p) const {
    const auto& col = cells_[pair_position(s_, p)];
    return std::none_of(col.begin(), col.end(), [](const auto& c) { return c.has_value(); });
}

bool PartialFamily::fully_known() const {
    for (const auto& col : cells_)
        for (const auto& c : col)
            if (!c.has_value()) return false;
    return true;
}

std::size_t PartialFamily::known_column_count() const {
    std::size_t n = 0;
    for (const auto& p : canonical_pairs(s_))
        if (column_known(p)) ++n;
    return n;
}

std::vector<PairIndex> PartialFamily::unknown_cells() const {
    std::vector<PairIndex> out;
    for (const auto& p : canonical_pairs(s_)) {
        for (int a = 1; a <= d_; ++a) {
            if (!cell(p, a).has_value()) out.push_back(p);
        }
    }
    return out;
}

PairFamily PartialFamily::to_family() const {
    PairFamily fam(s_, d_);
    for (const auto& p : canonical_pairs(s_)) {
        for (int a = 1; a <= d_; ++a) {
            const auto& c = cell(p, a);
            if (!c.has_value())
                throw Error("cell (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                            ")#" + std::to_string(a) + " is unknown");
            fam.entry(p, a) = *c;
        }
    }
    return fam;
}

void RefinementMap::validate(const std::vector<int>& source_sizes) const {
    if (maps.size() != source_sizes.size()) throw Error("refinement map count does not match source count");
    if (combined_s < 2) throw Error("combined index set needs s >= 2");
    std::vector<bool> covered(static_cast<std::size_t>(combined_s) + 1, false);
    for (std::size_t t = 0; t < maps.size(); ++t) {
        const auto& m = maps[t];
        if (m.size() != static_cast<std::size_t>(source_sizes[t]))
            throw Error("refinement map " + std::to_string(t + 1) + " has " + std::to_string(m.size()) +
                        " entries, expected " + std::to_string(source_sizes[t]));
        if (m.empty() || m.front() != 1)
            throw Error("refinement map " + std::to_string(t + 1) + " must send cut 1 to 1");
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] < 1 || m[k] > combined_s)
                throw Error("refinement map " + std::to_string(t + 1) + " leaves 1.." + std::to_string(combined_s));
            if (k > 0 && m[k] <= m[k - 1])
                throw Error("refinement map " + std::to_string(t + 1) + " is not strictly increasing");
            covered[static_cast<std::size_t>(m[k])] = true;
        }
    }
    for (int v = 1; v <= combined_s; ++v) {
        if (!covered[static_cast<std::size_t>(v)])
            throw Error("combined cut point " + std::to_string(v) + " is not the image of any source cut");
    }
}

MergeResult merge_tables(const PairFamily& t1, const PairFamily& t2, const RefinementMap& rm) {
    if (t1.d() != t2.d()) throw Error("tables have different d");
    rm.validate({t1.s(), t2.s()});

    MergeResult result{PartialFamily(rm.combined_s, t1.d()), {}, {}};
    result.provenance.assign(static_cast<std::size_t>(rm.combined_s) * (rm.combined_s - 1) / 2, 0);

    const PairFamily* sources[2] = {&t1, &t2};
    for (int t = 0; t < 2; ++t) {
        const auto& m = rm.maps[static_cast<std::size_t>(t)];
        const PairFamily& src = *sources[t];
        for (const auto& p : canonical_pairs(src.s())) {
            const PairIndex cp{m[static_cast<std::size_t>(p.i - 1)], m[static_cast<std::size_t>(p.j - 1)]};
            const std::size_t pos = pair_position(rm.combined_s, cp);
            if (result.provenance[pos] == 0) {
                for (int a = 1; a <= src.d(); ++a) result.merged.set_cell(cp, a, src.entry(p, a));
                result.provenance[pos] = t + 1;
            } else {
                bool equal = true;
                std::vector<Rational> existing;
                for (int a = 1; a <= src.d(); ++a) {
                    existing.push_back(*result.merged.cell(cp, a));
                    if (existing.back() != src.entry(p, a)) equal = false;
                }
                if (!equal) result.conflicts.push_back({cp, existing, src.column(p)});
                result.provenance[pos] = 3;
            }
        }
    }
    return result;
}

const char* to_string(CompletionResult::Status s) {
    switch (s) {
        case CompletionResult::Status::ok: return "ok";
        case CompletionResult::Status::underdetermined: return "underdetermined";
        case CompletionResult::Status::inconsistent: return "inconsistent";
    }
    return "?";
}

namespace {

// Sign-normalize; true when strictly positive throughout.
bool make_positive(std::vector<Rational>& v) {
    int lead = 0;
    for (const auto& x : v) {
        if (!x.is_zero()) {
            lead = x.sign();
            break;
        }
    }
    if (lead < 0)
        for (auto& x : v) x = -x;
    for (const auto& x : v)
        if (x.sign() <= 0) return false;
    return true;
}

} // namespace

CompletionResult complete_table(const PartialFamily& pf) {
    CompletionResult result{CompletionResult::Status::inconsistent, PairFamily(pf.s(), pf.d()),
                            WeightAssignment(), {}, ""};
    const Rational one(1);
    const auto pairs = canonical_pairs(pf.s());
    const auto triples = canonical_triples(pf.s());

    // Preconditions: some known column, known columns stochastic, known cells in [0,1].
    if (pf.known_column_count() == 0) {
        result.status = CompletionResult::Status::underdetermined;
        result.note = "no fully known column";
        return result;
    }
    for (const auto& p : pairs) {
        Rational sum(0);
        bool complete = true;
        for (int a = 1; a <= pf.d(); ++a) {
            const auto& c = pf.cell(p, a);
            if (!c.has_value()) {
                complete = false;
                continue;
            }
            if (c->sign() < 0 || *c > one) {
                result.note = "known cell outside [0,1] at (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
                return result;
            }
            sum += *c;
        }
        if (complete && sum != one) {
            result.note = "known column (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") is not stochastic";
            return result;
        }
    }

    // Weight system over all pairs: additivity rows for every triple plus
    // cocycle rows restricted to coordinates whose three cells are known.
    std::vector<std::vector<Rational>> rows;
    for (const auto& t : triples) {
        const PairIndex ij{t[0], t[1]}, ik{t[0], t[2]}, jk{t[1], t[2]};
        const std::size_t cij = pair_position(pf.s(), ij);
        const std::size_t cik = pair_position(pf.s(), ik);
        const std::size_t cjk = pair_position(pf.s(), jk);

        std::vector<Rational> add(pairs.size());
        add[cij] = Rational(1);
        add[cik] = Rational(-1);
        add[cjk] = Rational(1);
        rows.push_back(std::move(add));

        for (int a = 1; a <= pf.d(); ++a) {
            const auto& x = pf.cell(ij, a);
            const auto& y = pf.cell(ik, a);
            const auto& z = pf.cell(jk, a);
            if (x.has_value() && y.has_value() && z.has_value()) {
                std::vector<Rational> row(pairs.size());
                row[cij] = *x;
                row[cik] = -*y;
                row[cjk] = *z;
                rows.push_back(std::move(row));
            }
        }
    }

    RationalMatrix m(rows.size(), pairs.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < pairs.size(); ++c) m.at(r, c) = rows[r][c];

    auto basis = nullspace(m);
    if (basis.empty()) {
        result.note = "weight system has only the trivial solution";
        return result;
    }
    if (basis.size() > 1) {
        result.status = CompletionResult::Status::underdetermined;
        result.note = "weight system nullspace has dimension " + std::to_string(basis.size());
        return result;
    }
    std::vector<Rational> lam = basis.front();
    if (!make_positive(lam)) {
        result.note = "weight ray is not strictly positive";
        return result;
    }
    const Rational scale = lam.back();  // canonical order ends with (1, s)
    for (auto& x : lam) x /= scale;
    const WeightAssignment w(pf.s(), lam);

    // Fixpoint: fill any cell whose triple has the other two cells known.
    PartialFamily work = pf;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : triples) {
            const PairIndex ij{t[0], t[1]}, ik{t[0], t[2]}, jk{t[1], t[2]};
            for (int a = 1; a <= pf.d(); ++a) {
                const auto& x = work.cell(ij, a);
                const auto& y = work.cell(ik, a);
                const auto& z = work.cell(jk, a);
                const int unknowns = int(!x.has_value()) + int(!y.has_value()) + int(!z.has_value());
                if (unknowns != 1) continue;
                if (!x.has_value()) {
                    work.set_cell(ij, a, (w.lambda(ik) * *y - w.lambda(jk) * *z) / w.lambda(ij));
                    result.inferred_pairs.push_back(ij);
                } else if (!y.has_value()) {
                    work.set_cell(ik, a, (w.lambda(ij) * *x + w.lambda(jk) * *z) / w.lambda(ik));
                    result.inferred_pairs.push_back(ik);
                } else {
                    work.set_cell(jk, a, (w.lambda(ik) * *y - w.lambda(ij) * *x) / w.lambda(jk));
                    result.inferred_pairs.push_back(jk);
                }
                changed = true;
            }
        }
    }

    if (!work.fully_known()) {
        result.status = CompletionResult::Status::underdetermined;
        auto open = work.unknown_cells();
        result.note = "unresolved cells remain on " + std::to_string(open.size()) + " coordinate(s)";
        return result;
    }

    // Validation: stochastic columns and every cocycle identity.
    PairFamily fam = work.to_family();
    if (!check_stochastic(fam)) {
        result.note = "a completed column is not stochastic";
        return result;
    }
    for (const auto& t : triples) {
        const PairIndex ij{t[0], t[1]}, ik{t[0], t[2]}, jk{t[1], t[2]};
        for (int a = 1; a <= pf.d(); ++a) {
            const Rational lhs = w.lambda(ij) * fam.entry(ij, a) - w.lambda(ik) * fam.entry(ik, a) +
                                 w.lambda(jk) * fam.entry(jk, a);
            if (!lhs.is_zero()) {
                result.note = "cocycle identity fails on triple (" + std::to_string(t[0]) + "," +
                              std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
                return result;
            }
        }
    }

    // Deduplicate the inferred-pair list, keeping canonical order.
    std::vector<PairIndex> dedup;
    for (const auto& p : pairs) {
        if (std::find(result.inferred_pairs.begin(), result.inferred_pairs.end(), p) !=
            result.inferred_pairs.end())
            dedup.push_back(p);
    }
    result.inferred_pairs = std::move(dedup);

    result.status = CompletionResult::Status::ok;
    result.family = std::move(fam);
    result.weights = w;
    return result;
}

} // namespace s2rank
