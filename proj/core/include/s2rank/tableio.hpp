#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s2rank/completion.hpp"
#include "s2rank/probmodel.hpp"

namespace s2rank {

enum class TableKind { conditional, joint_counts, partial_conditional };
enum class TableFormat { csv, json };

/// Lossless text form of a table.
///
/// CSV, conditional: header `pair,(1,2),(2,3),...` in canonical order, one
/// row per Y-outcome, cells decimal/fraction strings or "?". When only one
/// row is given the table is read as d = 2 with the second row completed to
/// sum 1. CSV, joint: header `x,2,3,...,s`, one row per Y-outcome, cells
/// are counts or probability masses.
///
/// JSON: {"kind", "s", "d", "labels"?, "columns": {"i,j": [entries]}} with
/// string-encoded rationals ("?" allowed in partial tables); joint columns
/// are keyed by the X value ("2".."s").
struct TableDocument {
    TableKind kind = TableKind::conditional;
    int s = 0;
    int d = 0;
    std::vector<std::string> row_labels;                      // size d
    std::vector<std::vector<std::optional<Rational>>> body;   // [row a-1][column]

    std::size_t column_count() const;

    PairFamily to_pair_family() const;       // throws Error on unknown cells
    PartialFamily to_partial_family() const;
    JointDistribution to_joint() const;

    static TableDocument from_pair_family(const PairFamily& fam,
                                          std::vector<std::string> labels = {});
    static TableDocument from_partial_family(const PartialFamily& pf,
                                             std::vector<std::string> labels = {});
    static TableDocument from_joint_counts(int s, int d,
                                           const std::vector<std::vector<Rational>>& counts,
                                           std::vector<std::string> labels = {});

    friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Throws ParseError / BadHeaderError with 1-based line and field positions.
TableDocument parse_table(std::string_view text, TableFormat format);

std::string serialize_table(const TableDocument& doc, TableFormat format);

/// {"s": combined, "maps": [[...], [...]]}, one strictly increasing map per
/// source table.
RefinementMap parse_refinement_map(std::string_view json_text);

} // namespace s2rank
