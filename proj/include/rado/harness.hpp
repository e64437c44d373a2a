#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rado/characterizations.hpp"
#include "rado/equations.hpp"
#include "rado/solver.hpp"
#include "rado/strings.hpp"

namespace rado {

// Seeded RNG with portable draws (uniform_int_distribution is
// implementation-defined, so we roll the reductions ourselves).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    Int uniform(Int lo, Int hi) {  // inclusive
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<Int>(engine_() % span);
    }
    Int nonzero_uniform(Int lo, Int hi) {
        Int v;
        do v = uniform(lo, hi);
        while (v == 0);
        return v;
    }
    bool coin() { return (engine_() & 1) != 0; }
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

ZString random_zstring(Rng& rng, std::size_t max_len, Int lo, Int hi);
ReducedString random_reduced_string(Rng& rng, std::size_t min_len, std::size_t max_len, Int lo,
                                    Int hi);
LinearEquation random_equation(Rng& rng, std::size_t min_m, std::size_t max_m, Int max_abs_coeff);
// Random triple with c1+c2+c3 = 0 and all entries nonzero, |c_i| <= max_abs.
LinearEquation random_sum_zero_triple(Rng& rng, Int max_abs);

// Finite-evidence coloring of [-N, N] \ {0}.
struct Coloring {
    Int N = 0;
    int r = 1;
    std::map<Int, int> colors;  // every nonzero value in [-N, N] -> color in [1, r]

    static Coloring random(Int N, int r, std::uint64_t seed);
};

// Searches for a monochromatic tuple of nonzero values in [-N, N] solving
// eq; m = 3 solves for the third variable in O(N^2), other arities use
// bounded exhaustive search.
std::optional<std::vector<Int>> color_check(const LinearEquation& eq, const Coloring& coloring);

struct CrossValidateReport {
    std::uint64_t trials_run = 0;
    std::uint64_t disagreements = 0;
    std::vector<std::string> failures;
};

// Randomized agreement suites: sigma-(1) fast path vs solver, 3-variable
// Case 1 fast path (and its adjacent-pair reduction) vs injective solver,
// and solver vs brute-force oracle on tiny instances.
CrossValidateReport cross_validate(std::uint64_t trials, std::uint64_t seed);

}  // namespace rado
