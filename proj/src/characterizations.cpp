#include "rado/characterizations.hpp"

namespace rado {

bool sigma_one_criterion(const LinearEquation& eq) {
    const auto& c = eq.coefficients();
    const std::size_t m = c.size();
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Int> others;
        for (std::size_t l = 0; l < m; ++l)
            if (l != j) others.push_back(c[l]);
        bool found = false;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << others.size()) && !found; ++mask) {
            Int sum = c[j];
            for (std::size_t i = 0; i < others.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) sum = checked_add(sum, others[i]);
            found = (sum == 0);
        }
        if (!found) return false;
    }
    return true;
}

ThreeVarClass classify_three_var(const LinearEquation& eq) {
    if (eq.arity() != 3) throw std::invalid_argument("classify_three_var: m must be 3");
    const auto& c = eq.coefficients();
    if (checked_add(checked_add(c[0], c[1]), c[2]) == 0)
        return {ThreeVarKind::TripleSumZero, {1, 2, 3}};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = j + 1; l < 3; ++l)
            if (checked_add(c[j], c[l]) == 0) return {ThreeVarKind::PairSumZero, {j + 1, l + 1}};
    return {ThreeVarKind::NotRado, {}};
}

namespace {

void require_case1(const LinearEquation& eq, const ReducedString& sigma) {
    if (eq.arity() != 3) throw std::invalid_argument("three-variable fast path: m must be 3");
    const auto& c = eq.coefficients();
    if (checked_add(checked_add(c[0], c[1]), c[2]) != 0)
        throw std::invalid_argument("three-variable fast path: coefficients must sum to zero");
    if (sigma.empty()) throw std::invalid_argument("three-variable fast path: sigma must be non-empty");
}

// (a, b) is a nonzero-integer multiple pair of (u, w): r(a,b) = s(u,w) for
// some nonzero r,s. For nonzero entries this is exactly cross-product zero.
bool proportional(Int a, Int b, Int u, Int w) {
    return checked_mul(a, w) == checked_mul(b, u);
}

bool pair_admits_injective(const LinearEquation& eq, Int ah, Int ah1) {
    // Only pairs (c_i, -c_j) with i != j can arise: the underlying solutions
    // take the values {0, c_i*u, -c_j*u} with distinct slots, and the i == j
    // reading would wrongly certify every (a, -a) pair.
    const auto& c = eq.coefficients();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j && proportional(ah, ah1, c[i], checked_neg(c[j]))) return true;
    return false;
}

}  // namespace

bool three_var_sum_zero_injective(const LinearEquation& eq, const ReducedString& sigma) {
    return reduce_to_adjacent_pair(eq, sigma).has_value();
}

std::optional<std::size_t> reduce_to_adjacent_pair(const LinearEquation& eq,
                                                   const ReducedString& sigma) {
    require_case1(eq, sigma);
    for (std::size_t h = 0; h + 1 < sigma.size(); ++h)
        if (pair_admits_injective(eq, sigma.at(h), sigma.at(h + 1))) return h + 1;
    return std::nullopt;
}

bool schur_only_test(Int c, Int d) {
    if (c == 0 || d == 0) throw std::invalid_argument("schur_only_test: c, d must be nonzero");
    if (gcd_abs(c, d) != 1) throw std::invalid_argument("schur_only_test: gcd(|c|,|d|) must be 1");
    return checked_abs(c) == 1 && checked_abs(d) == 1;
}

}  // namespace rado
