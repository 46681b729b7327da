#include "helpers.hpp"

#include <sdc/catalog.hpp>
#include <sdc/io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sdc;
using namespace sdctest;

TEST_CASE("code file round trips") {
    const LinearCode rep = parse_code_string("2 1\n11\n");
    REQUIRE(rep == repetition2());

    const LinearCode h8 = extended_hamming8();
    REQUIRE(parse_code_string(render_code(h8)) == h8);

    const LinearCode zero = parse_code_string("3 0\n");
    REQUIRE(zero.length() == 3);
    REQUIRE(zero.dimension() == 0);

    // comments and blank lines are skipped
    const LinearCode commented = parse_code_string("# header\n\n2 1\n# row\n11\n");
    REQUIRE(commented == rep);
}

TEST_CASE("code file errors are distinct") {
    try {
        parse_code_string("x y\n");
        FAIL("no header error");
    } catch (const parse_error& e) {
        REQUIRE(e.kind == parse_error::Kind::Header);
    }
    try {
        parse_code_string("2 3\n11\n10\n01\n");
        FAIL("k > n accepted");
    } catch (const parse_error& e) {
        REQUIRE(e.kind == parse_error::Kind::Header);
    }
    try {
        parse_code_string("4 1\n111\n");
        FAIL("short row accepted");
    } catch (const parse_error& e) {
        REQUIRE(e.kind == parse_error::Kind::RowLength);
    }
    try {
        parse_code_string("3 1\n121\n");
        FAIL("bad character accepted");
    } catch (const parse_error& e) {
        REQUIRE(e.kind == parse_error::Kind::BadCharacter);
    }
    try {
        parse_code_string("3 2\n111\n");
        FAIL("missing row accepted");
    } catch (const parse_error& e) {
        REQUIRE(e.kind == parse_error::Kind::RowCount);
    }
}

TEST_CASE("support list parsing") {
    REQUIRE(parse_support_line("{2, 3, 10}") == std::vector<int>{2, 3, 10});
    REQUIRE(parse_support_line("2,3,10") == std::vector<int>{2, 3, 10});
    REQUIRE(parse_support_line("  2 3   10 ") == std::vector<int>{2, 3, 10});
    REQUIRE_THROWS_AS(parse_support_line("2, x"), parse_error);
    REQUIRE_THROWS_AS(parse_support_line("0, 3"), parse_error);
    REQUIRE_THROWS_AS(parse_support_line("   "), parse_error);

    std::istringstream file("# two sets\n{1,2}\n3 4\n");
    const auto vecs = parse_support_file(file, 4);
    REQUIRE(vecs.size() == 2);
    REQUIRE(vecs[0] == BitVector::from_support(4, {1, 2}));
    REQUIRE(vecs[1] == BitVector::from_support(4, {3, 4}));

    std::istringstream toolong("{5}\n");
    REQUIRE_THROWS_AS(parse_support_file(toolong, 4), parse_error);
}

TEST_CASE("catalog lookups") {
    REQUIRE(catalog_has("C46"));
    REQUIRE(catalog_has("C56"));
    REQUIRE(catalog_has("N56.7"));
    REQUIRE(catalog_has("S44.1.24"));
    REQUIRE_FALSE(catalog_has("C99"));
    REQUIRE_THROWS_AS(catalog_entry("C99"), std::invalid_argument);
    REQUIRE(catalog_entries().size() == 2 + 20 + 45);
    REQUIRE(s44_class_representatives().size() == 29);
    REQUIRE(named_support("t.60").coords.size() == 11);
    REQUIRE(named_support("x1.64").coords.size() == 18);
    REQUIRE(named_support("x2.64").coords.size() == 14);
}

TEST_CASE("C46 materializes to the unique [46,23,10] code") {
    const LinearCode c46 = materialize("C46");
    REQUIRE(c46.length() == 46);
    REQUIRE(c46.dimension() == 23);
    REQUIRE(is_self_dual(c46));
    REQUIRE(parity_class(c46) == ParityClass::SinglyEven);
    const WeightEnumerator we = weight_enumerator(c46);
    for (int w = 1; w <= 9; ++w) REQUIRE(we.counts[static_cast<size_t>(w)] == 0);
    REQUIRE(we.counts[10] > 0);
    REQUIRE(min_weight(c46) == 10);

    // the length is exceptional: the shadow weight is forced two weight
    // classes above the generic bound value
    const SExtremalReport se = s_extremal_report(c46);
    REQUIRE(se.exceptional);
    REQUIRE(se.shadow_weight == 11);
    REQUIRE(se.s_extremal);
}

TEST_CASE("verify_entry C46 passes every check") {
    const VerifyReport rep = verify_entry("C46");
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        REQUIRE(c.pass);
    }
    REQUIRE(rep.all_pass());
}

TEST_CASE("S44 subtraction entry verifies") {
    const VerifyReport rep = verify_entry("S44.1.24");
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        REQUIRE(c.pass);
    }
}

TEST_CASE("corrupted expectation fails verification") {
    CodeExpectation bad = catalog_entry("S44.1.2").expected;
    bad.d = 6; // deliberately wrong minimum weight
    const VerifyReport rep = verify_against(materialize("S44.1.2"), bad, "S44.1.2-bad");
    REQUIRE_FALSE(rep.all_pass());
    bool minweight_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "min-weight" && !c.pass) minweight_failed = true;
    REQUIRE(minweight_failed);
}

TEST_CASE("catalog codes round trip through the file format") {
    const LinearCode c46 = materialize("C46");
    REQUIRE(parse_code_string(render_code(c46)) == c46);

    std::mt19937_64 rng(8301);
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 20);
        const int rows = 1 + static_cast<int>(rng() % n);
        const LinearCode c = LinearCode::from_generator(random_matrix(rows, n, rng));
        REQUIRE(parse_code_string(render_code(c)) == c);
    }
}

TEST_CASE("the doubly even subcode of C56 has dimension 27") {
    REQUIRE(doubly_even_subcode(materialize("C56")).dimension() == 27);
}
