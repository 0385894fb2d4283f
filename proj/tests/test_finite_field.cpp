#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zdg/finite_field.hpp"

using namespace zdg;

TEST_CASE("prime field construction") {
    auto f2 = FieldSpec::make(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.n() == 1);
    auto f4 = FieldSpec::make(2, 2, std::vector<int>{1, 1, 1});
    CHECK(f4.q() == 4);
    CHECK(f4.n() == 3);
    CHECK_THROWS_AS(FieldSpec::make(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(FieldSpec::make(2, 7), UnsupportedOrder); // q = 128 > cap
    CHECK_THROWS_AS(FieldSpec::make(2, 2, std::vector<int>{1, 0, 1}), ReducibleModulus); // x^2+1 = (x+1)^2
}

TEST_CASE("basic arithmetic") {
    auto f2 = FieldSpec::make(2, 1);
    CHECK(f2.add(f2.one(), f2.one()) == f2.zero());

    auto f5 = FieldSpec::make(5, 1);
    CHECK(f5.inv(f5.element(2)) == f5.element(3)); // 2*3 = 1 mod 5
    CHECK_THROWS_AS(f5.inv(f5.zero()), DivisionByZero);

    // GF(4) with modulus x^2+x+1: x * x = x + 1
    auto f4 = FieldSpec::make(2, 2);
    FieldElement x = f4.element(2); // coefficient vector (0,1)
    CHECK(f4.label(x) == "x");
    CHECK(f4.mul(x, x) == f4.element(3));
    CHECK(f4.label(f4.element(3)) == "x+1");
}

TEST_CASE("enumeration is canonical") {
    auto f2 = FieldSpec::make(2, 1);
    auto e2 = f2.enumerate();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == f2.zero());
    CHECK(e2[1] == f2.one());

    auto f3 = FieldSpec::make(3, 1);
    auto e3 = f3.enumerate();
    REQUIRE(e3.size() == 3);
    CHECK(f3.label(e3[2]) == "2");

    auto f4 = FieldSpec::make(2, 2);
    auto e4 = f4.enumerate();
    REQUIRE(e4.size() == 4);
    CHECK(f4.label(e4[0]) == "0");
    CHECK(f4.label(e4[1]) == "1");
    CHECK(f4.label(e4[2]) == "x");
    CHECK(f4.label(e4[3]) == "x+1");
}

TEST_CASE("field axioms hold exhaustively") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}}) {
        auto f = FieldSpec::make(p, k);
        const unsigned q = f.q();
        // inverses
        for (unsigned a = 1; a < q; ++a)
            CHECK(f.mul(f.element(a), f.inv(f.element(a))) == f.one());
        // commutativity and identities
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f.mul(f.element(a), f.one()) == f.element(a));
            CHECK(f.add(f.element(a), f.zero()) == f.element(a));
            for (unsigned b = 0; b < q; ++b) {
                CHECK(f.add(f.element(a), f.element(b)) == f.add(f.element(b), f.element(a)));
                CHECK(f.mul(f.element(a), f.element(b)) == f.mul(f.element(b), f.element(a)));
            }
        }
        // associativity + distributivity, exhaustive for q <= 9
        if (q <= 9) {
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b)
                    for (unsigned c = 0; c < q; ++c) {
                        auto A = f.element(a), B = f.element(b), C = f.element(c);
                        CHECK(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
                        CHECK(f.add(f.add(A, B), C) == f.add(A, f.add(B, C)));
                        CHECK(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
                    }
        }
    }
}

TEST_CASE("every built-in modulus builds a field, randomized axioms for larger q") {
    std::mt19937_64 rng(20250809);
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 4}, {2, 5}, {2, 6}, {3, 3}, {5, 2}, {7, 2}}) {
        auto f = FieldSpec::make(p, k);
        const unsigned q = f.q();
        for (unsigned a = 1; a < q; ++a)
            CHECK(f.mul(f.element(a), f.inv(f.element(a))) == f.one());
        std::uniform_int_distribution<unsigned> pick(0, q - 1);
        for (int t = 0; t < 200; ++t) {
            auto A = f.element(pick(rng)), B = f.element(pick(rng)), C = f.element(pick(rng));
            CHECK(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
            CHECK(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
        }
    }
}

TEST_CASE("subtraction and negation") {
    auto f7 = FieldSpec::make(7, 1);
    for (unsigned a = 0; a < 7; ++a) {
        CHECK(f7.add(f7.element(a), f7.neg(f7.element(a))) == f7.zero());
        for (unsigned b = 0; b < 7; ++b)
            CHECK(f7.add(f7.sub(f7.element(a), f7.element(b)), f7.element(b)) == f7.element(a));
    }
}

TEST_CASE("field argument parsing round-trips") {
    for (const char* s : {"2", "3", "4", "5", "7", "8", "9", "2^4", "3^2"}) {
        auto f = parse_field(s);
        auto g = parse_field(field_to_string(f));
        CHECK(f == g);
    }
    CHECK(parse_field("9").p() == 3);
    CHECK(parse_field("9").degree() == 2);
    CHECK_THROWS_AS(parse_field("6"), NonPrimeCharacteristic);
    CHECK_THROWS_AS(parse_field("1"), NonPrimeCharacteristic);
    // explicit modulus: GF(4) with x^2+x+1 encodes as 1+2+4 = 7
    auto f4 = parse_field("2^2:7");
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
}
