#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "s2rank/tableio.hpp"

using namespace s2rank;
using s2rank::testing::data_path;
using s2rank::testing::q;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_SUITE("tableio") {

TEST_CASE("single-row CSV parses with the complement rule") {
    const TableDocument doc = parse_table(slurp(data_path("table_b.csv")), TableFormat::csv);
    CHECK(doc.kind == TableKind::conditional);
    CHECK(doc.s == 4);
    CHECK(doc.d == 2);
    CHECK(doc.row_labels[0] == "P(Y=1|i<X<=j)");
    CHECK(doc.to_pair_family() == s2rank::testing::vb());
}

TEST_CASE("explicit rows and fraction cells") {
    const std::string text =
        "pair,(1,2),(2,3),(3,4),(1,3),(2,4),(1,4)\n"
        "top,1/2,3/4,1/4,7/10,13/20,5/8\n"
        "bottom,1/2,1/4,3/4,3/10,7/20,3/8\n";
    const TableDocument doc = parse_table(text, TableFormat::csv);
    CHECK(doc.d == 2);
    CHECK(doc.to_pair_family() == s2rank::testing::vb());
}

TEST_CASE("partial tables carry '?' cells") {
    const TableDocument doc = parse_table(slurp(data_path("combined_partial.csv")), TableFormat::csv);
    CHECK(doc.kind == TableKind::partial_conditional);
    CHECK(doc.s == 5);
    const PartialFamily pf = doc.to_partial_family();
    CHECK(pf.column_unknown({3, 5}));
    CHECK(pf.known_column_count() == 9);

    const TableDocument u3 = parse_table(slurp(data_path("table_u3.csv")), TableFormat::csv);
    CHECK(u3.d == 3);
    const PartialFamily pu = u3.to_partial_family();
    CHECK(pu == s2rank::testing::partial_u3());
}

TEST_CASE("joint-count tables") {
    const TableDocument doc = parse_table(slurp(data_path("joint_b.csv")), TableFormat::csv);
    CHECK(doc.kind == TableKind::joint_counts);
    CHECK(doc.s == 4);
    CHECK(doc.d == 2);
    CHECK(doc.row_labels[1] == "did not watch");
    CHECK(conditional_matrix(doc.to_joint()) == s2rank::testing::vb());
}

TEST_CASE("header errors") {
    CHECK_THROWS_AS(parse_table("pair,(1,2),(1,3),(2,3)\nr,1,1,1\n", TableFormat::csv),
                    BadHeaderError);  // wrong order
    CHECK_THROWS_AS(parse_table("pair,(1,2),(2,3)\nr,1,1\n", TableFormat::csv),
                    BadHeaderError);  // not a full pair set
    CHECK_THROWS_AS(parse_table("pairs,(1,2)\nr,1\n", TableFormat::csv), BadHeaderError);
    CHECK_THROWS_AS(parse_table("x,2,4\nr,1,1\n", TableFormat::csv), BadHeaderError);
}

TEST_CASE("cell errors carry line and field positions") {
    const std::string text =
        "pair,(1,2),(2,3),(3,4),(1,3),(2,4),(1,4)\n"
        "r,0.5,0.75,0.25,0.7,oops,0.625\n";
    try {
        parse_table(text, TableFormat::csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }

    // '?' is rejected in joint tables.
    CHECK_THROWS_AS(parse_table("x,2,3\nr,1,?\n", TableFormat::csv), ParseError);

    // Ragged row.
    CHECK_THROWS_AS(parse_table("x,2,3\nr,1\n", TableFormat::csv), ParseError);
}

TEST_CASE("JSON documents") {
    const TableDocument doc = parse_table(slurp(data_path("table_b.json")), TableFormat::json);
    CHECK(doc.kind == TableKind::conditional);
    CHECK(doc.to_pair_family() == s2rank::testing::vb());

    CHECK_THROWS_AS(parse_table("{", TableFormat::json), ParseError);
    CHECK_THROWS_AS(parse_table("{\"kind\":\"conditional\",\"s\":4,\"d\":2,\"columns\":{}}",
                                TableFormat::json),
                    ParseError);  // missing columns
    CHECK_THROWS_AS(parse_table("{\"kind\":\"conditional\",\"s\":4,\"d\":2}", TableFormat::json),
                    ParseError);
    // Binary floating point is not accepted.
    const std::string float_doc =
        "{\"kind\":\"joint-counts\",\"s\":2,\"d\":1,\"columns\":{\"2\":[0.5]}}";
    CHECK_THROWS_AS(parse_table(float_doc, TableFormat::json), ParseError);
}

TEST_CASE("parse of serialize is the identity") {
    const TableDocument docs[] = {
        parse_table(slurp(data_path("table_b.csv")), TableFormat::csv),
        parse_table(slurp(data_path("combined_partial.csv")), TableFormat::csv),
        parse_table(slurp(data_path("table_u3.csv")), TableFormat::csv),
        parse_table(slurp(data_path("joint_b.csv")), TableFormat::csv),
    };
    for (const auto& doc : docs) {
        CHECK(parse_table(serialize_table(doc, TableFormat::csv), TableFormat::csv) == doc);
        CHECK(parse_table(serialize_table(doc, TableFormat::json), TableFormat::json) == doc);
    }

    // Non-terminating rationals serialize as fractions and survive CSV.
    PairFamily thirds(2, 3);
    thirds.entry({1, 2}, 1) = q(1, 3);
    thirds.entry({1, 2}, 2) = q(1, 3);
    thirds.entry({1, 2}, 3) = q(1, 3);
    const TableDocument doc = TableDocument::from_pair_family(thirds);
    const std::string csv = serialize_table(doc, TableFormat::csv);
    CHECK(csv.find("1/3") != std::string::npos);
    CHECK(parse_table(csv, TableFormat::csv) == doc);
}

TEST_CASE("refinement map files") {
    const RefinementMap rm = parse_refinement_map(slurp(data_path("merge_map.json")));
    CHECK(rm.combined_s == 5);
    REQUIRE(rm.maps.size() == 2);
    CHECK((rm.maps[0] == std::vector<int>{1, 2, 4, 5}));
    CHECK((rm.maps[1] == std::vector<int>{1, 2, 3, 4}));
    CHECK_THROWS_AS(parse_refinement_map("{\"maps\": []}"), ParseError);
    CHECK_THROWS_AS(parse_refinement_map("not json"), ParseError);
}

} // TEST_SUITE
