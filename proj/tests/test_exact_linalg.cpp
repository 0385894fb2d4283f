#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zdg/exact_linalg.hpp"

using namespace zdg;

namespace {
IntMatrix complete_adj(size_t n) {
    IntMatrix m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) m.at(i, j) = 1;
    return m;
}
} // namespace

TEST_CASE("char poly basics") {
    CHECK(char_poly(IntMatrix(3)).c == std::vector<mpz_class>{0, 0, 0, 1}); // x^3

    // K3: x^3 - 3x - 2
    CHECK(char_poly(complete_adj(3)).c == std::vector<mpz_class>{-2, -3, 0, 1});

    CHECK_THROWS_AS(char_poly(IntMatrix(10), 5), DimensionTooLarge);
}

TEST_CASE("char poly coefficient identities against the expansion oracle") {
    std::mt19937_64 rng(20250809);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 40; ++t) {
        const size_t d = 1 + t % 5;
        IntMatrix m(d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) m.at(i, j) = entry(rng);
        CharPoly p = char_poly(m);
        CHECK(p.c[d] == 1);
        CHECK(p.c[d - 1] == -m.trace());
        mpz_class det_oracle = oracles::det_expansion(m);
        mpz_class from_poly = (d % 2 == 0) ? p.c[0] : -p.c[0];
        CHECK(from_poly == det_oracle);
        CHECK(exact_det(m) == det_oracle);
    }
}

TEST_CASE("poly division") {
    // (x-2)(x+1)^2 = x^3 - 3x - 2
    CharPoly p = poly_mul(poly_linear(2), poly_pow(poly_linear(-1), 2));
    CHECK(p.c == std::vector<mpz_class>{-2, -3, 0, 1});
    CharPoly q;
    CHECK(poly_try_divide(p, poly_linear(2), q));
    CHECK(q.c == std::vector<mpz_class>{1, 2, 1});
    CHECK(!poly_try_divide(p, poly_linear(3), q));
    CHECK(poly_eval(p, mpz_class(2)) == 0);
    CHECK(poly_eval(p, mpz_class(1)) == -4);
}

TEST_CASE("multiplicity via exact nullity") {
    IntMatrix k4 = complete_adj(4);
    CHECK(multiplicity(k4, mpq_class(-1)) == 3);
    CHECK(multiplicity(k4, mpq_class(3)) == 1);
    CHECK(multiplicity(k4, mpq_class(0)) == 0);
    CHECK(multiplicity(k4, mpq_class(1, 2)) == 0);
}

TEST_CASE("surd pair multiplicity") {
    // [[0,1],[1,0]] has eigenvalues +-1 (not a surd); [[0,2],[1,0]] has +-sqrt2
    IntMatrix m(2);
    m.at(0, 1) = 2;
    m.at(1, 0) = 1;
    CHECK(surd_pair_multiplicity(m, 0, -2) == 2); // x^2 - 2
    CHECK_THROWS_AS(surd_pair_multiplicity(m, 2, 1), ReduciblePolynomial); // (x-1)^2
    CHECK_THROWS_AS(surd_pair_multiplicity(m, 0, -4), ReduciblePolynomial); // (x-2)(x+2)

    // the 9-vertex Gamma(M2(GF(2))): factors (x^2-3x-8) once and (x^2-2) twice
    auto f2 = zdg::FieldSpec::make(2, 1);
    IntMatrix g2 = IntMatrix::from_graph(build_gamma(f2));
    CHECK(surd_pair_multiplicity(g2, 3, -8) == 2);
    CHECK(surd_pair_multiplicity(g2, 0, -2) == 4);
}

TEST_CASE("block structured determinant") {
    // B = 0 => det(C)^n
    IntMatrix c(2), b(2);
    c.at(0, 0) = 2; c.at(0, 1) = 1; c.at(1, 0) = -1; c.at(1, 1) = 3; // det 7
    CHECK(block_structured_det(c, b, 3) == 343);
    // C = B, n >= 2 => 0
    CHECK(block_structured_det(c, c, 2) == 0);

    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 50; ++t) {
        const size_t dim = 1 + t % 3;
        const unsigned nblocks = 1 + t % 4;
        IntMatrix C(dim), B(dim);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) { C.at(i, j) = entry(rng); B.at(i, j) = entry(rng); }
        CHECK(block_structured_det(C, B, nblocks) ==
              exact_det(assemble_block_matrix(C, B, nblocks)));
    }
}

TEST_CASE("numeric spectrum") {
    IntMatrix kbar(5); // empty graph
    auto z = numeric_spectrum(kbar);
    for (double v : z) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));

    auto k4 = numeric_spectrum(complete_adj(4));
    CHECK(k4[0] == doctest::Approx(3.0).epsilon(1e-10));
    for (int i = 1; i < 4; ++i) CHECK(k4[i] == doctest::Approx(-1.0).epsilon(1e-10));

    IntMatrix bad(2);
    bad.at(0, 1) = 1; // asymmetric
    CHECK_THROWS_AS(numeric_spectrum(bad), NonSymmetric);
}

TEST_CASE("modular rank") {
    CHECK(rank_modular(IntMatrix::identity(7)) == 7);
    IntMatrix ones(4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) ones.at(i, j) = 1;
    CHECK(rank_modular(ones) == 1);
    // agrees with exact rank on random integer matrices
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < 20; ++t) {
        IntMatrix m(6);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) m.at(i, j) = entry(rng);
        CHECK(rank_modular(m) == exact_rank(m));
    }
}

TEST_CASE("multiplicities on the quotient graph H") {
    auto f3 = zdg::FieldSpec::make(3, 1);
    IntMatrix h3 = IntMatrix::from_graph(build_H(f3, zdg::LoopPolicy::LoopsAllowed));
    CHECK(multiplicity(h3, mpq_class(1)) == 3); // n(n+1)/2 at n = 2
    CHECK(multiplicity(h3, mpq_class(5)) == 0);
    CHECK(multiplicity(h3, mpq_class(7)) == 1); // 2n+3

    auto f5 = zdg::FieldSpec::make(5, 1);
    IntMatrix h5 = IntMatrix::from_graph(build_H(f5, zdg::LoopPolicy::LoopsAllowed));
    // nullity of A(H) - I at q = 5 is n(n+1)/2 = 10; rank = 36 - 10
    IntMatrix shifted = h5.add_scaled_identity(-1);
    CHECK(exact_rank(shifted) == 26);
    CHECK(rank_modular(shifted) == 26);
}

TEST_CASE("rank deficiency of singular constructions") {
    // rank of the all-ones matrix plus t*I
    IntMatrix m(5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) m.at(i, j) = 1;
    CHECK(exact_rank(m) == 1);
    CHECK(multiplicity(m, mpq_class(0)) == 4);
    CHECK(multiplicity(m, mpq_class(5)) == 1);
}
