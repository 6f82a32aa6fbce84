#include "s2rank/tableio.hpp"

#include <json.hpp>

#include <sstream>

namespace s2rank {

namespace {

std::vector<std::string> default_labels(int d) {
    std::vector<std::string> out;
    for (int a = 1; a <= d; ++a) out.push_back("Y=" + std::to_string(a));
    return out;
}

std::string cell_text(const std::optional<Rational>& c) {
    if (!c.has_value()) return "?";
    if (auto dec = c->decimal_str()) return *dec;
    return c->str();
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& t) {
    std::size_t b = t.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = t.find_last_not_of(" \t\r");
    return t.substr(b, e - b + 1);
}

// Derive s from a conditional column count n = s(s-1)/2, or 0 if none fits.
int s_from_pair_count(std::size_t n) {
    for (int s = 2; s <= 512; ++s) {
        const std::size_t expect = static_cast<std::size_t>(s) * (s - 1) / 2;
        if (expect == n) return s;
        if (expect > n) break;
    }
    return 0;
}

std::optional<Rational> parse_cell(const std::string& raw, int line, int field, bool allow_unknown) {
    const std::string t = trim(raw);
    if (t == "?") {
        if (!allow_unknown) throw ParseError(line, field, "'?' is not allowed here");
        return std::nullopt;
    }
    try {
        return Rational::parse(t);
    } catch (const Error& e) {
        throw ParseError(line, field, e.what());
    }
}

TableDocument parse_csv(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!trim(cur).empty()) lines.push_back(cur);
    }
    // Drop blank lines at the end only; interior blanks are errors later.
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, 1, "empty table");

    // Pair headers carry an interior comma ("(1,2)"): stitch split halves
    // back together before validating.
    std::vector<std::string> header;
    {
        const auto raw = split_fields(lines[0]);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            std::string f = trim(raw[k]);
            if (!f.empty() && f.front() == '(' && f.back() != ')' && k + 1 < raw.size()) {
                f += "," + trim(raw[k + 1]);
                ++k;
            }
            header.push_back(std::move(f));
        }
    }
    const std::string head0 = header[0];

    TableDocument doc;
    if (head0 == "pair") {
        const std::size_t ncols = header.size() - 1;
        doc.s = s_from_pair_count(ncols);
        if (doc.s == 0)
            throw BadHeaderError(1, 1, std::to_string(ncols) + " pair columns do not form a full pair set");
        const auto pairs = canonical_pairs(doc.s);
        for (std::size_t c = 0; c < ncols; ++c) {
            const std::string expect =
                "(" + std::to_string(pairs[c].i) + "," + std::to_string(pairs[c].j) + ")";
            // A pair header cell contains a comma, so it spans two fields only
            // if written unquoted; accept the exact canonical token instead.
            if (trim(header[c + 1]) != expect)
                throw BadHeaderError(1, static_cast<int>(c + 2),
                                     "expected header " + expect + ", got '" + trim(header[c + 1]) + "'");
        }
        doc.kind = TableKind::conditional;
    } else if (head0 == "x") {
        const std::size_t ncols = header.size() - 1;
        if (ncols == 0) throw BadHeaderError(1, 1, "joint table has no X columns");
        for (std::size_t c = 0; c < ncols; ++c) {
            if (trim(header[c + 1]) != std::to_string(c + 2))
                throw BadHeaderError(1, static_cast<int>(c + 2),
                                     "expected header " + std::to_string(c + 2));
        }
        doc.s = static_cast<int>(ncols) + 1;
        doc.kind = TableKind::joint_counts;
    } else {
        throw BadHeaderError(1, 1, "first header field must be 'pair' or 'x'");
    }

    const std::size_t ncols = header.size() - 1;
    const bool conditional = doc.kind != TableKind::joint_counts;
    bool any_unknown = false;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const auto fields = split_fields(lines[ln]);
        if (fields.size() != ncols + 1)
            throw ParseError(static_cast<int>(ln + 1), static_cast<int>(fields.size()),
                             "expected " + std::to_string(ncols + 1) + " fields, got " +
                                 std::to_string(fields.size()));
        doc.row_labels.push_back(trim(fields[0]));
        std::vector<std::optional<Rational>> row;
        for (std::size_t c = 0; c < ncols; ++c) {
            auto cell = parse_cell(fields[c + 1], static_cast<int>(ln + 1), static_cast<int>(c + 2), conditional);
            if (!cell.has_value()) any_unknown = true;
            row.push_back(std::move(cell));
        }
        doc.body.push_back(std::move(row));
    }
    if (doc.body.empty()) throw ParseError(2, 1, "table has no data rows");

    if (conditional && doc.body.size() == 1) {
        // Single-row shorthand: d = 2, second outcome completes each column to 1.
        std::vector<std::optional<Rational>> row2;
        for (const auto& c : doc.body[0]) {
            if (c.has_value()) {
                row2.push_back(Rational(1) - *c);
                continue;
            }
            row2.push_back(std::nullopt);
            any_unknown = true;
        }
        doc.body.push_back(std::move(row2));
        doc.row_labels.push_back(doc.row_labels[0] + " (complement)");
    }

    doc.d = static_cast<int>(doc.body.size());
    if (conditional) doc.kind = any_unknown ? TableKind::partial_conditional : TableKind::conditional;
    return doc;
}

void position_of_byte(std::string_view text, std::size_t byte, int& line, int& col) {
    line = 1;
    col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

TableKind kind_from_name(const std::string& name, int line) {
    if (name == "conditional") return TableKind::conditional;
    if (name == "joint-counts") return TableKind::joint_counts;
    if (name == "partial-conditional") return TableKind::partial_conditional;
    throw ParseError(line, 1, "unknown table kind '" + name + "'");
}

std::string kind_name(TableKind k) {
    switch (k) {
        case TableKind::conditional: return "conditional";
        case TableKind::joint_counts: return "joint-counts";
        case TableKind::partial_conditional: return "partial-conditional";
    }
    return "?";
}

std::optional<Rational> parse_json_entry(const nlohmann::json& e, bool allow_unknown) {
    if (e.is_string()) {
        const std::string t = e.get<std::string>();
        if (t == "?") {
            if (!allow_unknown) throw Error("'?' is not allowed here");
            return std::nullopt;
        }
        return Rational::parse(t);
    }
    if (e.is_number_integer()) return Rational(static_cast<long>(e.get<std::int64_t>()));
    throw Error("entries must be strings ('1/2', '0.5', '?') or integers");
}

TableDocument parse_json_doc(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, col = 1;
        position_of_byte(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        throw ParseError(line, col, "invalid JSON");
    }

    try {
        TableDocument doc;
        doc.kind = kind_from_name(j.at("kind").get<std::string>(), 1);
        doc.s = j.at("s").get<int>();
        doc.d = j.at("d").get<int>();
        if (doc.s < 2 || doc.d < 1) throw Error("need s >= 2 and d >= 1");

        const bool joint = doc.kind == TableKind::joint_counts;
        const bool allow_unknown = doc.kind == TableKind::partial_conditional;

        if (j.contains("labels")) {
            doc.row_labels = j.at("labels").get<std::vector<std::string>>();
            if (doc.row_labels.size() != static_cast<std::size_t>(doc.d))
                throw Error("labels must have d entries");
        } else {
            doc.row_labels = default_labels(doc.d);
        }

        const auto& columns = j.at("columns");
        std::vector<std::string> keys;
        if (joint) {
            for (int x = 2; x <= doc.s; ++x) keys.push_back(std::to_string(x));
        } else {
            for (const auto& p : canonical_pairs(doc.s))
                keys.push_back(std::to_string(p.i) + "," + std::to_string(p.j));
        }
        if (columns.size() != keys.size()) throw Error("wrong number of columns");

        doc.body.assign(static_cast<std::size_t>(doc.d), {});
        bool any_unknown = false;
        for (const auto& key : keys) {
            if (!columns.contains(key)) throw Error("missing column '" + key + "'");
            const auto& col = columns.at(key);
            if (!col.is_array() || col.size() != static_cast<std::size_t>(doc.d))
                throw Error("column '" + key + "' must be an array of d entries");
            for (int a = 1; a <= doc.d; ++a) {
                auto cell = parse_json_entry(col[static_cast<std::size_t>(a - 1)], allow_unknown);
                if (!cell.has_value()) any_unknown = true;
                doc.body[static_cast<std::size_t>(a - 1)].push_back(std::move(cell));
            }
        }
        if (doc.kind == TableKind::partial_conditional && !any_unknown) doc.kind = TableKind::conditional;
        return doc;
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, e.what());
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
}

} // namespace

std::size_t TableDocument::column_count() const {
    return body.empty() ? 0 : body[0].size();
}

PairFamily TableDocument::to_pair_family() const {
    if (kind == TableKind::joint_counts) throw Error("not a conditional table");
    return to_partial_family().to_family();
}

PartialFamily TableDocument::to_partial_family() const {
    if (kind == TableKind::joint_counts) throw Error("not a conditional table");
    PartialFamily pf(s, d);
    const auto pairs = canonical_pairs(s);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        for (int a = 1; a <= d; ++a) {
            const auto& cell = body[static_cast<std::size_t>(a - 1)][c];
            if (cell.has_value()) pf.set_cell(pairs[c], a, *cell);
        }
    }
    return pf;
}

JointDistribution TableDocument::to_joint() const {
    if (kind != TableKind::joint_counts) throw Error("not a joint table");
    std::vector<std::vector<Rational>> counts(static_cast<std::size_t>(s - 1),
                                              std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int x = 2; x <= s; ++x) {
        for (int a = 1; a <= d; ++a) {
            const auto& cell = body[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(x - 2)];
            if (!cell.has_value()) throw Error("joint table has unknown cells");
            counts[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(a - 1)] = *cell;
        }
    }
    return JointDistribution::from_counts(s, d, counts);
}

TableDocument TableDocument::from_pair_family(const PairFamily& fam, std::vector<std::string> labels) {
    TableDocument doc;
    doc.kind = TableKind::conditional;
    doc.s = fam.s();
    doc.d = fam.d();
    doc.row_labels = labels.empty() ? default_labels(fam.d()) : std::move(labels);
    doc.body.assign(static_cast<std::size_t>(fam.d()), {});
    for (const auto& p : canonical_pairs(fam.s()))
        for (int a = 1; a <= fam.d(); ++a)
            doc.body[static_cast<std::size_t>(a - 1)].push_back(fam.entry(p, a));
    return doc;
}

TableDocument TableDocument::from_partial_family(const PartialFamily& pf, std::vector<std::string> labels) {
    TableDocument doc;
    doc.kind = TableKind::partial_conditional;
    doc.s = pf.s();
    doc.d = pf.d();
    doc.row_labels = labels.empty() ? default_labels(pf.d()) : std::move(labels);
    doc.body.assign(static_cast<std::size_t>(pf.d()), {});
    bool any_unknown = false;
    for (const auto& p : canonical_pairs(pf.s())) {
        for (int a = 1; a <= pf.d(); ++a) {
            doc.body[static_cast<std::size_t>(a - 1)].push_back(pf.cell(p, a));
            if (!pf.cell(p, a).has_value()) any_unknown = true;
        }
    }
    if (!any_unknown) doc.kind = TableKind::conditional;
    return doc;
}

TableDocument TableDocument::from_joint_counts(int s, int d,
                                               const std::vector<std::vector<Rational>>& counts,
                                               std::vector<std::string> labels) {
    TableDocument doc;
    doc.kind = TableKind::joint_counts;
    doc.s = s;
    doc.d = d;
    doc.row_labels = labels.empty() ? default_labels(d) : std::move(labels);
    doc.body.assign(static_cast<std::size_t>(d), {});
    for (int x = 2; x <= s; ++x)
        for (int a = 1; a <= d; ++a)
            doc.body[static_cast<std::size_t>(a - 1)].push_back(
                counts[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(a - 1)]);
    return doc;
}

TableDocument parse_table(std::string_view text, TableFormat format) {
    return format == TableFormat::csv ? parse_csv(text) : parse_json_doc(text);
}

std::string serialize_table(const TableDocument& doc, TableFormat format) {
    if (format == TableFormat::csv) {
        std::ostringstream out;
        if (doc.kind == TableKind::joint_counts) {
            out << "x";
            for (int x = 2; x <= doc.s; ++x) out << "," << x;
        } else {
            out << "pair";
            for (const auto& p : canonical_pairs(doc.s)) out << ",(" << p.i << "," << p.j << ")";
        }
        out << "\n";
        for (int a = 1; a <= doc.d; ++a) {
            out << doc.row_labels[static_cast<std::size_t>(a - 1)];
            for (const auto& cell : doc.body[static_cast<std::size_t>(a - 1)]) out << "," << cell_text(cell);
            out << "\n";
        }
        return out.str();
    }

    nlohmann::ordered_json j;
    j["kind"] = kind_name(doc.kind);
    j["s"] = doc.s;
    j["d"] = doc.d;
    j["labels"] = doc.row_labels;
    nlohmann::ordered_json columns = nlohmann::ordered_json::object();
    if (doc.kind == TableKind::joint_counts) {
        for (int x = 2; x <= doc.s; ++x) {
            nlohmann::ordered_json col = nlohmann::ordered_json::array();
            for (int a = 1; a <= doc.d; ++a) {
                const auto& cell = doc.body[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(x - 2)];
                col.push_back(cell.has_value() ? cell->str() : "?");
            }
            columns[std::to_string(x)] = std::move(col);
        }
    } else {
        const auto pairs = canonical_pairs(doc.s);
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            nlohmann::ordered_json col = nlohmann::ordered_json::array();
            for (int a = 1; a <= doc.d; ++a) {
                const auto& cell = doc.body[static_cast<std::size_t>(a - 1)][c];
                col.push_back(cell.has_value() ? cell->str() : "?");
            }
            columns[std::to_string(pairs[c].i) + "," + std::to_string(pairs[c].j)] = std::move(col);
        }
    }
    j["columns"] = std::move(columns);
    return j.dump(2) + "\n";
}

RefinementMap parse_refinement_map(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, col = 1;
        position_of_byte(json_text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        throw ParseError(line, col, "invalid JSON");
    }
    try {
        RefinementMap rm;
        rm.combined_s = j.at("s").get<int>();
        rm.maps = j.at("maps").get<std::vector<std::vector<int>>>();
        return rm;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, e.what());
    }
}

} // namespace s2rank
