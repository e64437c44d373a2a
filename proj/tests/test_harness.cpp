#include <doctest.h>

#include "rado/harness.hpp"

using namespace rado;

namespace {

Coloring parity_coloring(Int N) {
    Coloring c;
    c.N = N;
    c.r = 2;
    for (Int v = -N; v <= N; ++v)
        if (v != 0) c.colors[v] = (checked_abs(v) % 2 == 0) ? 1 : 2;
    return c;
}

}  // namespace

TEST_CASE("color_check finds a monochromatic Schur triple under the parity coloring") {
    auto found = color_check(LinearEquation({1, 1, -1}), parity_coloring(5));
    REQUIRE(found.has_value());
    auto& y = *found;
    REQUIRE(y.size() == 3);
    CHECK(y[0] + y[1] - y[2] == 0);
    int parity = static_cast<int>(checked_abs(y[0]) % 2);
    for (Int v : y) {
        CHECK(v != 0);
        CHECK(checked_abs(v) <= 5);
        CHECK(static_cast<int>(checked_abs(v) % 2) == parity);
    }
}

TEST_CASE("non-Rado x1+2x2 under small colorings") {
    for (Int N : {5, 10, 20}) {
        // Sign-based 2-coloring: a monochromatic pair has entries of one
        // sign, so x1 + 2*x2 can never vanish.
        Coloring sign;
        sign.N = N;
        sign.r = 2;
        for (Int v = -N; v <= N; ++v)
            if (v != 0) sign.colors[v] = v > 0 ? 1 : 2;
        CHECK_FALSE(color_check(LinearEquation({1, 2}), sign).has_value());

        // The parity coloring does admit a mixed-sign solution over
        // [-N, N] \ {0}, e.g. (-4, 2); check any hit is genuine.
        auto found = color_check(LinearEquation({1, 2}), parity_coloring(N));
        if (N >= 4) {
            REQUIRE(found.has_value());
            auto& y = *found;
            REQUIRE(y.size() == 2);
            CHECK(y[0] + 2 * y[1] == 0);
            CHECK(y[0] != 0);
            CHECK(y[1] != 0);
            CHECK(checked_abs(y[0]) % 2 == checked_abs(y[1]) % 2);
        }
    }
}

TEST_CASE("sum-zero equations always have constant monochromatic solutions") {
    auto found = color_check(LinearEquation({2, 3, -5}), Coloring::random(6, 3, 99));
    REQUIRE(found.has_value());
    CHECK((*found)[0] == (*found)[1]);
    CHECK((*found)[1] == (*found)[2]);
}

TEST_CASE("random coloring is total with colors in range and deterministic in the seed") {
    auto c = Coloring::random(8, 3, 1234);
    CHECK(c.colors.size() == 16);
    for (auto& [v, col] : c.colors) {
        CHECK(v != 0);
        CHECK(col >= 1);
        CHECK(col <= 3);
    }
    CHECK(Coloring::random(8, 3, 1234).colors == c.colors);
}

TEST_CASE("cross_validate reports no disagreements") {
    auto report = cross_validate(40, 20240914);
    CHECK(report.trials_run == 120);
    CHECK(report.disagreements == 0);
    for (auto& f : report.failures) MESSAGE(f);
}
