#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rado/equations.hpp"
#include "rado/strings.hpp"

namespace rado {

// k x m integer matrix; each column, read top to bottom, is a string
// coherent with the query's sigma, and every row annihilates the
// coefficient vector.
struct WitnessMatrix {
    std::vector<std::vector<Int>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
    ZString column(std::size_t j) const;

    friend bool operator==(const WitnessMatrix&, const WitnessMatrix&) = default;
};

enum class SolveStatus { Sat, Unsat, Indeterminate };

struct SolverLimits {
    std::uint64_t max_states = 50'000'000;
};

struct SolverVerdict {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<WitnessMatrix> witness;
    std::uint64_t states_explored = 0;
    std::uint64_t frontier_peak = 0;
    std::string indeterminate_reason;  // set only when status == Indeterminate
};

// Decides whether eq has a (injective) solution in the coherence class of
// sigma, by breadth-first reachability over the product of per-column
// expansion automata (plus pairwise "has differed" bits in injective mode).
// SAT returns the witness of minimum row count, ties broken by the
// lexicographically smallest row sequence. The state graph is finite, so
// exhausting it is a definitive UNSAT; exceeding the state limit yields
// Indeterminate, never Unsat. Empty sigma is an argument error.
SolverVerdict solve_in_class(const LinearEquation& eq, const ReducedString& sigma, bool injective,
                             const SolverLimits& limits = {});

// True iff every column of M reduces to sigma, every row annihilates the
// coefficient vector, and (injective) columns are pairwise distinct tuples.
// With require_canonical, all-zero rows are rejected as well.
// Throws std::invalid_argument on a column-count mismatch.
bool verify_witness(const LinearEquation& eq, const ReducedString& sigma, const WitnessMatrix& M,
                    bool injective, bool require_canonical = false);

enum class OracleStatus { Sat, UnsatUpToBound };

struct OracleResult {
    OracleStatus status = OracleStatus::UnsatUpToBound;
    std::optional<WitnessMatrix> witness;
    int max_rows_tried = 0;
};

// Independent differential-testing oracle: enumerates matrices with at most
// max_rows rows and entries in {0} union entries(sigma) and keeps those
// accepted by verify_witness. Exponential; small instances only.
OracleResult brute_force_oracle(const LinearEquation& eq, const ReducedString& sigma,
                                bool injective, int max_rows);

}  // namespace rado
