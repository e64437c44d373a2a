#include "rado/harness.hpp"

#include <algorithm>

namespace rado {

ZString random_zstring(Rng& rng, std::size_t max_len, Int lo, Int hi) {
    std::size_t len = static_cast<std::size_t>(rng.uniform(0, static_cast<Int>(max_len)));
    ZString s(len);
    for (auto& v : s) v = rng.uniform(lo, hi);
    return s;
}

ReducedString random_reduced_string(Rng& rng, std::size_t min_len, std::size_t max_len, Int lo,
                                    Int hi) {
    std::size_t len =
        static_cast<std::size_t>(rng.uniform(static_cast<Int>(min_len), static_cast<Int>(max_len)));
    ZString s;
    while (s.size() < len) {
        Int v = rng.nonzero_uniform(lo, hi);
        if (!s.empty() && s.back() == v) continue;
        s.push_back(v);
    }
    return ReducedString(std::move(s));
}

LinearEquation random_equation(Rng& rng, std::size_t min_m, std::size_t max_m, Int max_abs_coeff) {
    std::size_t m =
        static_cast<std::size_t>(rng.uniform(static_cast<Int>(min_m), static_cast<Int>(max_m)));
    std::vector<Int> c(m);
    for (auto& v : c) v = rng.nonzero_uniform(-max_abs_coeff, max_abs_coeff);
    return LinearEquation(std::move(c));
}

LinearEquation random_sum_zero_triple(Rng& rng, Int max_abs) {
    while (true) {
        Int c1 = rng.nonzero_uniform(-max_abs, max_abs);
        Int c2 = rng.nonzero_uniform(-max_abs, max_abs);
        Int c3 = checked_neg(checked_add(c1, c2));
        if (c3 == 0 || checked_abs(c3) > max_abs) continue;
        return LinearEquation({c1, c2, c3});
    }
}

Coloring Coloring::random(Int N, int r, std::uint64_t seed) {
    if (N < 1 || r < 1) throw std::invalid_argument("coloring needs N >= 1 and r >= 1");
    Rng rng(seed);
    Coloring c;
    c.N = N;
    c.r = r;
    for (Int v = -N; v <= N; ++v) {
        if (v == 0) continue;
        c.colors[v] = static_cast<int>(rng.uniform(1, r));
    }
    return c;
}

namespace {

int color_of(const Coloring& coloring, Int v) {
    auto it = coloring.colors.find(v);
    if (it == coloring.colors.end())
        throw std::invalid_argument("coloring is not total on its domain");
    return it->second;
}

// Choose the first m-1 values from one color cell, solve the equation for
// the last variable and check it lands in the same cell.
bool search_cell(const LinearEquation& eq, const std::vector<Int>& cell, Int N, int color,
                 const Coloring& coloring, std::vector<Int>& chosen) {
    const std::size_t m = eq.arity();
    if (chosen.size() == m - 1) {
        Int partial = 0;
        for (std::size_t i = 0; i < m - 1; ++i)
            partial = checked_add(partial, checked_mul(eq.at(i), chosen[i]));
        Int cm = eq.at(m - 1);
        if (partial % cm != 0) return false;
        Int last = checked_neg(partial / cm);
        if (last == 0 || checked_abs(last) > N) return false;
        if (color_of(coloring, last) != color) return false;
        chosen.push_back(last);
        return true;
    }
    for (Int v : cell) {
        chosen.push_back(v);
        if (search_cell(eq, cell, N, color, coloring, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Int>> color_check(const LinearEquation& eq, const Coloring& coloring) {
    std::map<int, std::vector<Int>> cells;
    for (auto& [v, col] : coloring.colors) cells[col].push_back(v);
    for (auto& [color, cell] : cells) {
        std::vector<Int> chosen;
        if (search_cell(eq, cell, coloring.N, color, coloring, chosen)) return chosen;
    }
    return std::nullopt;
}

namespace {

void record(CrossValidateReport& report, const std::string& what) {
    ++report.disagreements;
    if (report.failures.size() < 20) report.failures.push_back(what);
}

std::string describe(const LinearEquation& eq, const ReducedString& sigma) {
    std::string s = render_equation(eq) + " sigma=[";
    for (std::size_t i = 0; i < sigma.size(); ++i)
        s += (i ? "," : "") + std::to_string(sigma.at(i));
    return s + "]";
}

}  // namespace

CrossValidateReport cross_validate(std::uint64_t trials, std::uint64_t seed) {
    CrossValidateReport report;
    const ReducedString one(ZString{1});

    Rng rng_a(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto eq = random_equation(rng_a, 2, 5, 4);
        bool fast = sigma_one_criterion(eq);
        auto verdict = solve_in_class(eq, one, /*injective=*/false);
        bool sat = verdict.status == SolveStatus::Sat;
        if (sat && !verify_witness(eq, one, *verdict.witness, false, /*require_canonical=*/true))
            record(report, "unsound sigma-(1) witness for " + describe(eq, one));
        if (fast != sat) record(report, "sigma-(1) fast path disagrees for " + describe(eq, one));
        ++report.trials_run;
    }

    Rng rng_b(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto eq = random_sum_zero_triple(rng_b, 5);
        auto sigma = random_reduced_string(rng_b, 1, 3, -5, 5);
        bool fast = three_var_sum_zero_injective(eq, sigma);
        auto h = reduce_to_adjacent_pair(eq, sigma);
        auto verdict = solve_in_class(eq, sigma, /*injective=*/true);
        bool sat = verdict.status == SolveStatus::Sat;
        if (sat && !verify_witness(eq, sigma, *verdict.witness, true, /*require_canonical=*/true))
            record(report, "unsound injective witness for " + describe(eq, sigma));
        if (fast != sat) record(report, "3-var fast path disagrees for " + describe(eq, sigma));
        if (h.has_value() != fast)
            record(report, "adjacent-pair reduction disagrees for " + describe(eq, sigma));
        // the adjacent-pair lemma, checked against the pair instances
        bool any_pair = false;
        for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
            ReducedString pair(ZString{sigma.at(i), sigma.at(i + 1)});
            if (three_var_sum_zero_injective(eq, pair)) any_pair = true;
        }
        if (sigma.size() >= 2 && any_pair != fast)
            record(report, "adjacent-pair lemma fails for " + describe(eq, sigma));
        ++report.trials_run;
    }

    Rng rng_c(seed ^ 0xc2b2ae3d27d4eb4fULL);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto eq = random_equation(rng_c, 2, 3, 3);
        auto sigma = random_reduced_string(rng_c, 1, 2, -2, 2);
        bool injective = rng_c.coin();
        auto verdict = solve_in_class(eq, sigma, injective);
        if (verdict.status == SolveStatus::Sat) {
            if (!verify_witness(eq, sigma, *verdict.witness, injective, /*require_canonical=*/true))
                record(report, "unsound witness for " + describe(eq, sigma));
            int k = static_cast<int>(verdict.witness->row_count());
            auto oracle = brute_force_oracle(eq, sigma, injective, k);
            if (oracle.status != OracleStatus::Sat)
                record(report, "oracle misses solver witness for " + describe(eq, sigma));
        } else {
            auto oracle = brute_force_oracle(eq, sigma, injective, 3);
            if (oracle.status == OracleStatus::Sat)
                record(report, "oracle refutes solver UNSAT for " + describe(eq, sigma));
        }
        ++report.trials_run;
    }

    return report;
}

}  // namespace rado
