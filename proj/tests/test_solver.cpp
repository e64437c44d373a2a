#include <doctest.h>

#include <algorithm>

#include "rado/harness.hpp"
#include "rado/solver.hpp"

using namespace rado;

namespace {
const ReducedString kOne(ZString{1});
}

TEST_CASE("Schur equation has the expected injective witness in class (1)") {
    auto v = solve_in_class(LinearEquation({1, 1, -1}), kOne, /*injective=*/true);
    REQUIRE(v.status == SolveStatus::Sat);
    // (0,1,1) and (1,0,1) are the only nonzero {0,1}-rows annihilating
    // (1,1,-1); the lex-least pairing with distinct, coherent columns puts
    // (0,1,1) first. Cross-checked against the brute-force oracle.
    WitnessMatrix expected{{{0, 1, 1}, {1, 0, 1}}};
    CHECK(*v.witness == expected);
    CHECK(verify_witness(LinearEquation({1, 1, -1}), kOne, *v.witness, true, true));
}

TEST_CASE("2x1-2x2-x3-x4: injective UNSAT, non-injective SAT in class (1)") {
    LinearEquation eq({2, -2, -1, -1});
    CHECK(solve_in_class(eq, kOne, true).status == SolveStatus::Unsat);
    auto v = solve_in_class(eq, kOne, false);
    REQUIRE(v.status == SolveStatus::Sat);
    CHECK(verify_witness(eq, kOne, *v.witness, false, true));
}

TEST_CASE("six-variable example admits an injective solution in class (1)") {
    auto v = solve_in_class(LinearEquation({4, 2, 3, -5, -1, -2}), kOne, true);
    REQUIRE(v.status == SolveStatus::Sat);
    CHECK(verify_witness(LinearEquation({4, 2, 3, -5, -1, -2}), kOne, *v.witness, true, true));
}

TEST_CASE("verify_witness") {
    LinearEquation big({4, 2, 3, -5, -1, -2});
    WitnessMatrix reference{{{1, 1, 0, 1, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 0, 1, 1}, {0, 1, 0, 0, 0, 1}}};
    CHECK(verify_witness(big, kOne, reference, true));

    CHECK_FALSE(verify_witness(LinearEquation({1, 1, -1}), kOne, WitnessMatrix{{{1, 1, 1}}}, false));
    CHECK(verify_witness(LinearEquation({2, 3, -5}), kOne, WitnessMatrix{{{1, 1, 1}}}, false));

    // zero rows pass unless canonicity is demanded
    WitnessMatrix padded{{{1, 1, 1}, {0, 0, 0}}};
    CHECK(verify_witness(LinearEquation({2, 3, -5}), kOne, padded, false));
    CHECK_FALSE(verify_witness(LinearEquation({2, 3, -5}), kOne, padded, false, true));

    CHECK_THROWS_AS(verify_witness(big, kOne, WitnessMatrix{{{1, 1}}}, false),
                    std::invalid_argument);
}

TEST_CASE("degenerate one-coefficient rows force zero: m=2 with no cancellation") {
    // every row must satisfy c1 v1 + c2 v2 = 0 with entries in {0,1}
    CHECK(solve_in_class(LinearEquation({1, 2}), kOne, false).status == SolveStatus::Unsat);
}

TEST_CASE("brute_force_oracle examples") {
    CHECK(brute_force_oracle(LinearEquation({1, 1, -1}), kOne, false, 2).status == OracleStatus::Sat);
    auto r = brute_force_oracle(LinearEquation({1, -1}), kOne, false, 1);
    REQUIRE(r.status == OracleStatus::Sat);
    CHECK(r.witness->rows == std::vector<std::vector<Int>>{{1, 1}});
    CHECK(brute_force_oracle(LinearEquation({1, -1, 2}), kOne, false, 4).status ==
          OracleStatus::UnsatUpToBound);
}

TEST_CASE("constant witness whenever the coefficients sum to zero") {
    Rng rng(20240904);
    for (int t = 0; t < 50; ++t) {
        auto eq = random_equation(rng, 2, 5, 4);
        Int sum = 0;
        for (Int c : eq.coefficients()) sum = checked_add(sum, c);
        if (sum != 0) continue;
        auto sigma = random_reduced_string(rng, 1, 3, -4, 4);
        auto v = solve_in_class(eq, sigma, false);
        REQUIRE(v.status == SolveStatus::Sat);
        // minimal canonical witness is the all-constant-columns matrix, k = n
        CHECK(v.witness->row_count() == sigma.size());
        for (std::size_t j = 0; j < eq.arity(); ++j)
            CHECK(v.witness->column(j) == sigma.entries());
    }
}

TEST_CASE("status invariant under scaling of eq and sigma") {
    Rng rng(20240905);
    for (int t = 0; t < 40; ++t) {
        auto eq = random_equation(rng, 2, 3, 3);
        auto sigma = random_reduced_string(rng, 1, 2, -2, 2);
        bool injective = rng.coin();
        auto base = solve_in_class(eq, sigma, injective).status;

        Int k = rng.nonzero_uniform(-3, 3);
        std::vector<Int> scaled_c;
        for (Int c : eq.coefficients()) scaled_c.push_back(checked_mul(k, c));
        CHECK(solve_in_class(LinearEquation(scaled_c), sigma, injective).status == base);

        Int h = rng.nonzero_uniform(-3, 3);
        ZString scaled_s;
        for (Int a : sigma.entries()) scaled_s.push_back(checked_mul(h, a));
        CHECK(solve_in_class(eq, ReducedString(scaled_s), injective).status == base);
        CHECK(solve_in_class(LinearEquation(scaled_c), ReducedString(scaled_s), injective).status ==
              base);
    }
}

TEST_CASE("status invariant under coefficient permutation") {
    Rng rng(20240906);
    for (int t = 0; t < 40; ++t) {
        auto eq = random_equation(rng, 2, 4, 3);
        auto sigma = random_reduced_string(rng, 1, 2, -2, 2);
        bool injective = rng.coin();
        auto base = solve_in_class(eq, sigma, injective).status;
        auto coeffs = eq.coefficients();
        std::shuffle(coeffs.begin(), coeffs.end(), std::mt19937_64(static_cast<std::uint64_t>(t)));
        CHECK(solve_in_class(LinearEquation(coeffs), sigma, injective).status == base);
    }
}

TEST_CASE("injective SAT implies non-injective SAT, and runs are deterministic") {
    Rng rng(20240907);
    for (int t = 0; t < 40; ++t) {
        auto eq = random_equation(rng, 2, 3, 3);
        auto sigma = random_reduced_string(rng, 1, 2, -3, 3);
        auto inj = solve_in_class(eq, sigma, true);
        if (inj.status == SolveStatus::Sat) {
            CHECK(solve_in_class(eq, sigma, false).status == SolveStatus::Sat);
            auto again = solve_in_class(eq, sigma, true);
            CHECK(*again.witness == *inj.witness);
        }
    }
}

TEST_CASE("state limit yields Indeterminate, never Unsat") {
    // Schur in class (1) needs a handful of states; a cap of 1 cannot finish.
    auto v = solve_in_class(LinearEquation({1, 1, -1}), kOne, true, SolverLimits{1});
    CHECK(v.status == SolveStatus::Indeterminate);
    CHECK(v.indeterminate_reason == "state-limit");
}

TEST_CASE("empty sigma is rejected") {
    CHECK_THROWS_AS(solve_in_class(LinearEquation({1, -1}), ReducedString{}, false),
                    std::invalid_argument);
}
