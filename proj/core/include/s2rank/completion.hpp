#pragma once

#include <optional>
#include <string>
#include <vector>

#include "s2rank/reconstruct.hpp"

namespace s2rank {

/// A pair table with unknown cells. A column is "known" when all d of its
/// cells are; the paper-style partial tables may leave single coordinates
/// open, so the granularity here is per cell.
class PartialFamily {
public:
    PartialFamily(int s, int d);

    static PartialFamily from_family(const PairFamily& fam);

    int s() const { return s_; }
    int d() const { return d_; }

    const std::optional<Rational>& cell(PairIndex p, int a) const;
    void set_cell(PairIndex p, int a, Rational value);
    void clear_cell(PairIndex p, int a);

    bool column_known(PairIndex p) const;
    bool column_unknown(PairIndex p) const;  // no cell known
    bool fully_known() const;
    std::size_t known_column_count() const;
    std::vector<PairIndex> unknown_cells() const;  // pairs listed once per open cell's pair

    /// Throws Error if any cell is unknown.
    PairFamily to_family() const;

    friend bool operator==(const PartialFamily&, const PartialFamily&) = default;

private:
    int s_;
    int d_;
    std::vector<std::vector<std::optional<Rational>>> cells_;
};

/// Order-preserving identification of source cut points with combined cut
/// points. maps[t][i-1] is the combined cut for source t's cut i. Each map
/// must be strictly increasing, start at 1, and stay within 1..combined_s;
/// jointly the images must cover every combined cut point.
struct RefinementMap {
    int combined_s = 0;
    std::vector<std::vector<int>> maps;

    void validate(const std::vector<int>& source_sizes) const;  // throws Error
};

struct MergeConflict {
    PairIndex combined;
    std::vector<Rational> from_first;
    std::vector<Rational> from_second;
};

struct MergeResult {
    PartialFamily merged;
    std::vector<MergeConflict> conflicts;

    /// Per canonical combined pair: 0 = uncovered, 1 = first source,
    /// 2 = second source, 3 = both (and equal, unless listed in conflicts).
    std::vector<int> provenance;

    bool ok() const { return conflicts.empty(); }
};

/// Map both tables through the refinement; where both land on the same
/// combined pair their columns must agree exactly.
MergeResult merge_tables(const PairFamily& t1, const PairFamily& t2, const RefinementMap& rm);

/// Fill the unknown cells of a partial table. The pair weights are pinned
/// first from one homogeneous system over all pairs: the cocycle rows whose
/// three cells are known, plus, for every triple, the additivity row
/// lambda_{i,j} - lambda_{i,k} + lambda_{j,k} = 0 that stochastic columns
/// force. Unknown cells then propagate through triples to a fixpoint, and
/// the final table is validated (stochastic columns, every cocycle identity).
struct CompletionResult {
    enum class Status { ok, underdetermined, inconsistent };

    Status status = Status::inconsistent;
    PairFamily family;             // valid when ok
    WeightAssignment weights;      // valid when ok; lambda_{1,s} = 1
    std::vector<PairIndex> inferred_pairs;  // pairs that had at least one cell filled
    std::string note;

    bool ok() const { return status == Status::ok; }
};

const char* to_string(CompletionResult::Status s);

CompletionResult complete_table(const PartialFamily& pf);

} // namespace s2rank
