#pragma once

#include <optional>
#include <vector>

#include "rado/equations.hpp"
#include "rado/strings.hpp"

namespace rado {

// Fast paths for sigma = (1) and for three-variable equations; each is
// cross-checkable against the general solver.

// True iff eq has a solution in the class of (1): for every j there is a
// nonempty H_j of the other indices with c_j + sum_{l in H_j} c_l = 0.
bool sigma_one_criterion(const LinearEquation& eq);

enum class ThreeVarKind { TripleSumZero, PairSumZero, NotRado };

struct ThreeVarClass {
    ThreeVarKind kind;
    std::vector<std::size_t> detail;  // 1-based indices of the zero-sum set
};

// Requires m == 3. The kinds are mutually exclusive for nonzero coefficients.
ThreeVarClass classify_three_var(const LinearEquation& eq);

// Requires m == 3 and c1+c2+c3 == 0, sigma nonempty. True iff eq has an
// injective solution in the class of sigma: some adjacent pair of sigma is
// proportional to some (c_i, -c_j). Exact integer cross-multiplication.
bool three_var_sum_zero_injective(const LinearEquation& eq, const ReducedString& sigma);

// Same preconditions; returns the least h (1-based) such that eq has an
// injective solution in the class of (a_h, a_{h+1}), or nullopt.
std::optional<std::size_t> reduce_to_adjacent_pair(const LinearEquation& eq,
                                                   const ReducedString& sigma);

// For the equation c(x1 - x2) + d*x3 = 0 with gcd(|c|,|d|) = 1: true iff
// |c| = |d| = 1, in which case the equation is solvable in every nonempty
// reduced class; false means solvable in none.
bool schur_only_test(Int c, Int d);

}  // namespace rado
