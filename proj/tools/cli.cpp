#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "s2rank/completion.hpp"
#include "s2rank/oracle.hpp"
#include "s2rank/reconstruct.hpp"
#include "s2rank/tableio.hpp"

namespace s2rank::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;

struct UsageFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageFailure{"cannot read '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TableFormat format_for(const std::string& path, const std::string& override_name) {
    if (override_name == "csv") return TableFormat::csv;
    if (override_name == "json") return TableFormat::json;
    if (!override_name.empty()) throw UsageFailure{"unknown format '" + override_name + "'"};
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? TableFormat::json
                                                                       : TableFormat::csv;
}

TableDocument load_table(const std::string& path, const std::string& format_name) {
    try {
        return parse_table(read_file(path), format_for(path, format_name));
    } catch (const ParseError& e) {
        throw UsageFailure{path + ": " + e.what()};
    }
}

PairFamily load_family(const std::string& path, const std::string& format_name) {
    const TableDocument doc = load_table(path, format_name);
    try {
        return doc.to_pair_family();
    } catch (const Error& e) {
        throw UsageFailure{path + ": " + e.what()};
    }
}

std::string pretty(const Rational& r) {
    if (r.is_integer()) return r.str();
    if (auto dec = r.decimal_str()) return r.str() + " (" + *dec + ")";
    return r.str();
}

std::string pair_str(PairIndex p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string vec_str(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += v[k].str();
    }
    return out + ")";
}

void print_violation(std::ostream& out, const RankViolation& v) {
    const auto& q = v.selector.quadruple;
    out << "  minor (" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ") coords ("
        << v.selector.a1 << "," << v.selector.a2 << "): det_s2 = " << pretty(v.value) << "\n";
}

int cmd_eval(const std::string& path, const std::string& format_name, std::ostream& out) {
    const PairFamily fam = load_family(path, format_name);
    if (fam.s() != 4 || fam.d() != 2)
        throw UsageFailure{"eval needs a 2x6 table (s=4, d=2), got s=" + std::to_string(fam.s()) +
                           ", d=" + std::to_string(fam.d())};
    const SixColumnInput in = extract_minor(fam, MinorSelector{{1, 2, 3, 4}, 1, 2});
    out << "det_s2           = " << pretty(det_s2(in)) << "\n";
    out << "det_s2_companion = " << pretty(det_s2_companion(in)) << "\n";
    return kExitOk;
}

int check_family(const PairFamily& fam, std::ostream& out) {
    const bool stochastic = check_stochastic(fam);
    out << "columns stochastic: " << (stochastic ? "yes" : "no") << "\n";

    const S2RankReport report = s2_rank_is_one(fam);
    switch (report.verdict) {
        case S2RankVerdict::rank_one:
            out << "S^2-rank 1: yes (" << report.evaluations << " minors, all vanish)\n";
            break;
        case S2RankVerdict::vacuous:
            out << "S^2-rank 1: vacuous (s < 4 or d < 2: no 2-minors exist)\n";
            break;
        case S2RankVerdict::violations_found:
            out << "S^2-rank 1: no (" << report.violations.size() << " of " << report.evaluations
                << " minors nonzero)\n";
            for (const auto& v : report.violations) print_violation(out, v);
            break;
    }
    return (stochastic && report.verdict != S2RankVerdict::violations_found) ? kExitOk
                                                                             : kExitInconsistent;
}

int cmd_check(const std::string& path, const std::string& format_name, std::ostream& out) {
    return check_family(load_family(path, format_name), out);
}

int cmd_audit(const std::vector<std::string>& paths, const std::string& format_name,
              std::ostream& out) {
    int exit = kExitOk;
    for (const auto& path : paths) {
        const PairFamily fam = load_family(path, format_name);
        std::string verdict;
        try {
            const bool stochastic = check_stochastic(fam);
            const S2RankReport report = s2_rank_is_one(fam);
            if (!stochastic) {
                verdict = "FAIL (columns not stochastic)";
            } else if (report.verdict == S2RankVerdict::violations_found) {
                verdict = "FAIL (" + std::to_string(report.violations.size()) +
                          " nonzero 2-minor(s); first det_s2 = " + report.violations[0].value.str() + ")";
            } else if (report.verdict == S2RankVerdict::vacuous) {
                verdict = "OK (rank test vacuous)";
            } else {
                verdict = "OK";
            }
        } catch (const ZeroFamilyError&) {
            verdict = "FAIL (all entries zero)";
        }
        if (verdict.compare(0, 4, "FAIL") == 0) exit = kExitInconsistent;
        out << path << ": " << verdict << "\n";
    }
    return exit;
}

int cmd_reconstruct(const std::string& path, const std::string& format_name, bool intervals,
                    std::ostream& out) {
    const PairFamily fam = load_family(path, format_name);

    if (!check_stochastic(fam)) {
        out << "stochastic: no\n";
        return kExitInconsistent;
    }
    out << "stochastic: yes\n";

    const PairWitnessReport witness = check_pair_witness(fam);
    out << "pair-witness condition: " << (witness.ok ? "holds" : "fails") << "\n";
    for (const auto& f : witness.failures()) {
        out << "  no witness for quadruple (" << f.quadruple[0] << "," << f.quadruple[1] << ","
            << f.quadruple[2] << "," << f.quadruple[3] << ") coordinate " << f.coord << "\n";
    }

    const WeightSolveResult solved = solve_weights(fam);
    if (!solved.ok()) {
        out << "weights: " << to_string(solved.status);
        if (solved.status == WeightSolveResult::Status::underdetermined)
            out << " (nullspace dimension " << solved.nullspace_dim << ")";
        out << "\n";
        return kExitInconsistent;
    }

    out << "weight ray:";
    for (const auto& v : solved.weights.integer_ray()) out << " " << v.get_str();
    out << "\n";
    out << "weights (lambda_{1," << fam.s() << "} = 1):\n";
    for (const auto& p : canonical_pairs(fam.s()))
        out << "  " << pair_str(p) << " = " << solved.weights.lambda(p).str() << "\n";

    const PointConfiguration pts = reconstruct_points(fam, solved.weights);
    out << "points:\n";
    for (int i = 1; i <= fam.s(); ++i) out << "  p_" << i << " = " << vec_str(pts.at(i)) << "\n";

    const PopulationTable pop = minimal_population(fam, solved.weights);
    out << "minimal population N = " << pop.total.get_str() << "\n";
    out << "counts (rows Y=1.." << fam.d() << ", columns X=2.." << fam.s() << "):\n";
    for (int a = 1; a <= fam.d(); ++a) {
        out << " ";
        for (int x = 2; x <= fam.s(); ++x) out << " " << pop.count(x, a).get_str();
        out << "\n";
    }
    out << "window counts:\n";
    for (const auto& p : canonical_pairs(fam.s())) {
        out << "  " << pair_str(p) << ":";
        for (int a = 1; a <= fam.d(); ++a) out << " " << pop.window_count(p, a).get_str();
        out << "\n";
    }

    if (intervals) {
        const IntervalModel model = build_interval_model(fam, solved.weights, pts);
        out << "interval model:\n";
        for (const auto& seg : model.segments)
            out << "  (" << seg.lo.str() << ", " << seg.hi.str() << "] X=" << seg.x_label
                << " Y=" << seg.y_label << "\n";
    }
    return kExitOk;
}

void write_output(const TableDocument& doc, TableFormat fmt, const std::string& out_path,
                  std::ostream& out) {
    const std::string text = serialize_table(doc, fmt);
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageFailure{"cannot write '" + out_path + "'"};
    f << text;
}

int cmd_complete(const std::string& path, const std::string& format_name,
                 const std::string& out_path, const std::string& out_format_name,
                 std::ostream& out) {
    const TableDocument doc = load_table(path, format_name);
    if (doc.kind == TableKind::joint_counts) throw UsageFailure{"complete needs a conditional table"};

    const CompletionResult result = complete_table(doc.to_partial_family());
    if (!result.ok()) {
        out << "completion: " << to_string(result.status) << " (" << result.note << ")\n";
        return kExitInconsistent;
    }

    const TableDocument completed = TableDocument::from_pair_family(result.family, doc.row_labels);
    const TableFormat fmt = format_for(out_path.empty() ? path : out_path, out_format_name);
    write_output(completed, fmt, out_path, out);
    if (!out_path.empty()) {
        out << "completion: ok\n";
        out << "inferred pairs:";
        for (const auto& p : result.inferred_pairs) out << " " << pair_str(p);
        out << "\n";
        out << "weight ray:";
        for (const auto& v : result.weights.integer_ray()) out << " " << v.get_str();
        out << "\n";
        out << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_merge(const std::string& path1, const std::string& path2, const std::string& map_path,
              const std::string& format_name, const std::string& out_path,
              const std::string& out_format_name, std::ostream& out) {
    const PairFamily t1 = load_family(path1, format_name);
    const PairFamily t2 = load_family(path2, format_name);
    RefinementMap rm;
    try {
        rm = parse_refinement_map(read_file(map_path));
    } catch (const ParseError& e) {
        throw UsageFailure{map_path + ": " + e.what()};
    }

    const MergeResult result = merge_tables(t1, t2, rm);
    if (!result.ok()) {
        out << "incompatible tables: " << result.conflicts.size() << " conflicting pair(s)\n";
        for (const auto& c : result.conflicts)
            out << "  " << pair_str(c.combined) << ": " << vec_str(c.from_first) << " vs "
                << vec_str(c.from_second) << "\n";
        return kExitInconsistent;
    }

    const TableDocument merged = TableDocument::from_partial_family(result.merged);
    const TableFormat fmt = format_for(out_path.empty() ? path1 : out_path, out_format_name);
    write_output(merged, fmt, out_path, out);
    if (!out_path.empty()) out << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_gen_joint(std::uint64_t seed, int s, int d, unsigned den_bound,
                  const std::string& out_format_name, std::ostream& out) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.s_min = cfg.s_max = s;
    cfg.d_min = cfg.d_max = d;
    cfg.den_bound = den_bound;
    const JointDistribution joint = gen_random_joint(cfg);

    // Emit integral counts: scale the masses by their common denominator.
    mpz_class l(1);
    for (int x = 2; x <= joint.s(); ++x)
        for (int a = 1; a <= joint.d(); ++a) l = lcm(l, joint.mass(x, a).denominator());
    std::vector<std::vector<Rational>> counts(static_cast<std::size_t>(joint.s() - 1),
                                              std::vector<Rational>(static_cast<std::size_t>(joint.d())));
    for (int x = 2; x <= joint.s(); ++x)
        for (int a = 1; a <= joint.d(); ++a)
            counts[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(a - 1)] =
                joint.mass(x, a) * Rational(l, mpz_class(1));

    const TableDocument doc = TableDocument::from_joint_counts(joint.s(), joint.d(), counts);
    out << serialize_table(doc, out_format_name == "json" ? TableFormat::json : TableFormat::csv);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact S^2-rank toolkit for pair-indexed conditional probability tables"};
    app.name("s2rank");
    app.require_subcommand(1);

    std::string format_name;
    app.add_option("--format", format_name, "Force input format (csv or json)")->capture_default_str();

    std::string path1, path2, map_path, out_path, out_format_name;
    bool intervals = false;

    auto* eval = app.add_subcommand("eval", "Evaluate det_s2 of a 2x6 table by both formulas");
    eval->add_option("table", path1, "table file")->required();

    auto* check = app.add_subcommand("check", "S^2-rank-1 audit with all violating minors");
    check->add_option("table", path1, "table file")->required();

    std::vector<std::string> audit_paths;
    auto* audit = app.add_subcommand("audit", "Audit several tables and flag the inconsistent ones");
    audit->add_option("tables", audit_paths, "table files")->required()->expected(-1);

    auto* reconstruct = app.add_subcommand(
        "reconstruct", "Recover weights, points, minimal population and counts from a table");
    reconstruct->add_option("table", path1, "table file")->required();
    reconstruct->add_flag("--intervals", intervals, "also print the interval realization of (X, Y)");

    auto* complete = app.add_subcommand("complete", "Fill the '?' cells of a partial table");
    complete->add_option("table", path1, "table file")->required();
    complete->add_option("-o,--output", out_path, "write the completed table here");
    complete->add_option("--out-format", out_format_name, "output format (csv or json)");

    auto* merge = app.add_subcommand("merge", "Merge two tables over a combined index set");
    merge->add_option("first", path1, "first table")->required();
    merge->add_option("second", path2, "second table")->required();
    merge->add_option("--map", map_path, "refinement map JSON file")->required();
    merge->add_option("-o,--output", out_path, "write the merged partial table here");
    merge->add_option("--out-format", out_format_name, "output format (csv or json)");

    std::uint64_t seed = 1;
    bool seed_given = false;
    int gen_s = 4, gen_d = 2;
    unsigned den_bound = 20;
    auto* gen = app.add_subcommand("gen-joint", "Generate a seeded random joint distribution");
    gen->add_option("--seed", seed, "generator seed")->each([&](const std::string&) { seed_given = true; });
    gen->add_option("--s", gen_s, "number of X cut points")->check(CLI::Range(2, 64));
    gen->add_option("--d", gen_d, "number of Y outcomes")->check(CLI::Range(1, 64));
    gen->add_option("--den-bound", den_bound, "per-cell numerator bound")->check(CLI::PositiveNumber);
    gen->add_option("--out-format", out_format_name, "output format (csv or json)");

    std::vector<const char*> argv;
    argv.push_back("s2rank");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(path1, format_name, out);
        if (check->parsed()) return cmd_check(path1, format_name, out);
        if (audit->parsed()) return cmd_audit(audit_paths, format_name, out);
        if (reconstruct->parsed()) return cmd_reconstruct(path1, format_name, intervals, out);
        if (complete->parsed())
            return cmd_complete(path1, format_name, out_path, out_format_name, out);
        if (merge->parsed())
            return cmd_merge(path1, path2, map_path, format_name, out_path, out_format_name, out);
        if (gen->parsed()) {
            if (!seed_given) {
                if (const char* env = std::getenv("S2RANK_SEED")) seed = std::strtoull(env, nullptr, 10);
            }
            return cmd_gen_joint(seed, gen_s, gen_d, den_bound, out_format_name, out);
        }
    } catch (const UsageFailure& e) {
        err << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ZeroFamilyError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace s2rank::cli
