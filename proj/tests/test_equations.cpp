#include <doctest.h>

#include <algorithm>

#include "rado/equations.hpp"
#include "rado/harness.hpp"

using namespace rado;

TEST_CASE("parse_equation") {
    CHECK(parse_equation("4x1+2x2+3x3-5x4-x5-2x6=0").coefficients() ==
          std::vector<Int>{4, 2, 3, -5, -1, -2});
    CHECK(parse_equation("x1+x2-x3").coefficients() == std::vector<Int>{1, 1, -1});
    CHECK(parse_equation("  -x2 + 3x1 = 0 ").coefficients() == std::vector<Int>{3, -1});
    CHECK_THROWS_AS(parse_equation("0x1+x2"), ParseError);
    CHECK_THROWS_AS(parse_equation("x1+x1"), ParseError);
    CHECK_THROWS_AS(parse_equation("x1+x3"), ParseError);
    CHECK_THROWS_AS(parse_equation("x1"), ParseError);
    CHECK_THROWS_AS(parse_equation("x1+x2=1"), ParseError);
    CHECK_THROWS_AS(parse_equation("x1+y2"), ParseError);
}

TEST_CASE("is_rado") {
    auto schur = is_rado(LinearEquation({1, 1, -1}));
    CHECK(schur.regular);
    CHECK(schur.witness == std::vector<std::size_t>{1, 3});

    auto full = is_rado(LinearEquation({2, 3, -5}));
    CHECK(full.regular);
    CHECK(full.witness == std::vector<std::size_t>{1, 2, 3});

    CHECK_FALSE(is_rado(LinearEquation({1, 2})).regular);
}

TEST_CASE("content_normalize") {
    auto [eq1, g1] = content_normalize(LinearEquation({4, -4, 2}));
    CHECK(eq1.coefficients() == std::vector<Int>{2, -2, 1});
    CHECK(g1 == 2);
    auto [eq2, g2] = content_normalize(LinearEquation({1, 1, -1}));
    CHECK(eq2.coefficients() == std::vector<Int>{1, 1, -1});
    CHECK(g2 == 1);
    auto [eq3, g3] = content_normalize(LinearEquation({6, -9}));
    CHECK(eq3.coefficients() == std::vector<Int>{2, -3});
    CHECK(g3 == 3);
}

TEST_CASE("is_rado invariance and render round trip") {
    Rng rng(20240903);
    for (int t = 0; t < 300; ++t) {
        auto eq = random_equation(rng, 2, 6, 5);
        CHECK(parse_equation(render_equation(eq)) == eq);

        bool base = is_rado(eq).regular;

        auto coeffs = eq.coefficients();
        std::shuffle(coeffs.begin(), coeffs.end(),
                     std::mt19937_64(static_cast<std::uint64_t>(t)));
        CHECK(is_rado(LinearEquation(coeffs)).regular == base);

        Int k = rng.nonzero_uniform(-4, 4);
        std::vector<Int> scaled;
        for (Int c : eq.coefficients()) scaled.push_back(checked_mul(k, c));
        CHECK(is_rado(LinearEquation(std::move(scaled))).regular == base);

        Int sum = 0;
        for (Int c : eq.coefficients()) sum = checked_add(sum, c);
        if (sum == 0) CHECK(base);
    }
}

TEST_CASE("LinearEquation invariants") {
    CHECK_THROWS_AS(LinearEquation({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LinearEquation({5}), std::invalid_argument);
}
