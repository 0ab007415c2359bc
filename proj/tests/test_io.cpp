#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/io.hpp"
#include "prc/rat.hpp"

using namespace prc;

TEST_CASE("rational strings") {
    CHECK(rat_to_string(Rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-7/2") == Rat(-7, 2));
    CHECK(rat_from_string("12") == Rat(12));
}

TEST_CASE("block multiset round trip") {
    BlockMultiset B;
    B.v = 13;
    B.add(0b1011, 4);
    B.add(0b1110000, 1);
    auto text = format_blocks(B);
    CHECK(text.find("0 1 3 * 4") != std::string::npos);
    auto back = parse_blocks(text);
    CHECK(back.v == 13);
    CHECK(back.blocks == B.blocks);
}

TEST_CASE("jacobi formats") {
    JacobiPolynomial J;
    J.t = 2;
    J.n = 13;
    J.coeff[{0, 0}] = 1;
    J.coeff[{0, 4}] = 168;
    J.coeff[{2, 2}] = 28;
    auto text = format_jacobi_text(J);
    CHECK(text.find("1 w^2 x^11") != std::string::npos);
    CHECK(text.find("168 w^2 x^7 y^4") != std::string::npos);
    CHECK(text.find("28 z^2 x^9 y^2") != std::string::npos);

    auto js = format_jacobi_json(J);
    CHECK(js.find("168") != std::string::npos);
}

TEST_CASE("subset function round trip") {
    SubsetFunction f;
    f.k = 2;
    f.v = 6;
    f.values[0b11] = Rat(1, 3);
    f.values[0b101000] = Rat(-2);
    auto back = parse_subset_function(format_subset_function(f), 6);
    CHECK(back == f);
}

TEST_CASE("enumerator format") {
    WeightEnumerator e(5, Rat(0));
    e[2] = Rat(7, 3);
    e[4] = Rat(-1);
    auto text = format_enumerator(e);
    CHECK(text == "2 7/3\n4 -1\n");
}
