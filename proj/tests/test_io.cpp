#include "qtensor/io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace qtensor;

namespace {

const char* kR3 =
    "quandle\n"
    "n 3\n"
    "table\n"
    "0 2 1\n"
    "2 1 0\n"
    "1 0 2\n";

QdlFile load_text(const std::string& text) {
    std::istringstream in(text);
    return load_qdl(in, "<test>");
}

} // namespace

TEST_CASE("reads a plain quandle file") {
    const QdlFile f = load_text(kR3);
    CHECK(f.quandle == make_dihedral(3));
    CHECK(!f.involution.has_value());
}

TEST_CASE("tolerates comments, blank lines, odd spacing") {
    const QdlFile f = load_text(
        "# dihedral, order 3\n"
        "quandle   # header\n"
        "\n"
        "n 3\n"
        "table\n"
        "  0 2 1  \n"
        "2\t1 0\n"
        "\n"
        "1 0 2   # last row\n");
    CHECK(f.quandle == make_dihedral(3));
}

TEST_CASE("reads an involution line and validates it") {
    const QdlFile f = load_text(
        "quandle\nn 4\ntable\n0 2 0 2\n3 1 3 1\n2 0 2 0\n1 3 1 3\ninvolution 2 3 0 1\n");
    REQUIRE(f.involution.has_value());
    CHECK(f.involution->rho == std::vector<int>{2, 3, 0, 1});

    // (0 1) is an involution of R_4 but not a good one.
    CHECK_THROWS_AS(
        load_text("quandle\nn 4\ntable\n0 2 0 2\n3 1 3 1\n2 0 2 0\n1 3 1 3\ninvolution 1 0 2 3\n"),
        ValidationError);
}

TEST_CASE("accepts a matching invtable and rejects a wrong one") {
    // Dihedral tables are self-inverse.
    const QdlFile f = load_text(
        "quandle\nn 3\ntable\n0 2 1\n2 1 0\n1 0 2\ninvtable\n0 2 1\n2 1 0\n1 0 2\n");
    CHECK(f.quandle == make_dihedral(3));
    CHECK_THROWS_AS(
        load_text("quandle\nn 3\ntable\n0 2 1\n2 1 0\n1 0 2\ninvtable\n0 2 1\n2 1 0\n1 2 0\n"),
        ValidationError);
}

TEST_CASE("structural problems raise ParseError with a location") {
    const auto expect_parse_error = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(load_qdl(in, "bad.qdl"), ParseError);
    };
    expect_parse_error("");
    expect_parse_error("rack\nn 1\ntable\n0\n");
    expect_parse_error("quandle\ntable\n0\n");
    expect_parse_error("quandle\nn 0\ntable\n");
    expect_parse_error("quandle\nn -2\ntable\n");
    expect_parse_error("quandle\nn two\ntable\n0\n");
    expect_parse_error("quandle\nn 2\ntable\n0 0\n");             // missing row
    expect_parse_error("quandle\nn 2\ntable\n0 0 0\n1 1\n");      // long row
    expect_parse_error("quandle\nn 2\ntable\n0 x\n1 1\n");        // not an integer
    expect_parse_error(std::string(kR3) + "involution 0 1\n");    // short involution
    expect_parse_error(std::string(kR3) + "extra\n");             // trailing garbage

    try {
        std::istringstream in("quandle\nn 2\ntable\n0 0\n");
        load_qdl(in, "bad.qdl");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.file == "bad.qdl");
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("bad.qdl:4") != std::string::npos);
    }
}

TEST_CASE("axiom failures raise ValidationError, not ParseError") {
    // Well-formed file, broken algebra (1*1 = 0).
    std::istringstream in("quandle\nn 2\ntable\n0 0\n0 0\n");
    CHECK_THROWS_AS(load_qdl(in, "<test>"), ValidationError);
}

TEST_CASE("out of range entries are rejected") {
    CHECK_THROWS_AS(load_text("quandle\nn 2\ntable\n0 3\n1 1\n"), ValidationError);
}

TEST_CASE("missing file raises ParseError") {
    CHECK_THROWS_AS(read_qdl_file("/nonexistent/definitely_not_here.qdl"), ParseError);
}

TEST_CASE("write then read round trips") {
    std::mt19937 rng(20260816);
    for (int i = 0; i < 25; ++i) {
        const Quandle q = support::random_quandle(rng, 8);
        std::optional<GoodInvolution> rho;
        const auto good = enumerate_good_involutions(q, 10000);
        if (!good.empty()) rho = good.back();

        std::ostringstream out;
        write_qdl(out, q, rho);
        const QdlFile f = load_text(out.str());
        CHECK(f.quandle == q);
        CHECK(f.involution == rho);
    }
}

TEST_CASE("read_qdl returns raw data without validating") {
    std::istringstream in("quandle\nn 2\ntable\n0 0\n0 0\n");
    const QdlData d = read_qdl(in, "<test>");
    CHECK(d.n == 2);
    CHECK(d.table == std::vector<std::vector<int>>{{0, 0}, {0, 0}});
}
