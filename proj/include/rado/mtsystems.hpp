#pragma once

#include <cstdint>
#include <vector>

#include "rado/equations.hpp"
#include "rado/solver.hpp"
#include "rado/strings.hpp"

namespace rado {

// Sequence x_1..x_T of nonzero integers with the growth property
// |x_{t+1}| > M * sum_{i<=t} |x_i| at every prefix.
class SparseSequence {
public:
    SparseSequence(std::vector<Int> values, Int sparsity);

    const std::vector<Int>& values() const { return values_; }
    Int sparsity() const { return sparsity_; }
    std::size_t size() const { return values_.size(); }
    // 1-based, matching the usual index of x_t.
    Int at(std::size_t t) const { return values_.at(t - 1); }

private:
    std::vector<Int> values_;
    Int sparsity_;
};

enum class SignPolicy { AllPositive, Alternating, SeededRandom };

// M = sum_i sum_j |a_i * c_j| + 1 for sigma = (a_1..a_n), eq = (c_1..c_m).
Int sparsity_constant(const ReducedString& sigma, const LinearEquation& eq);

// Deterministic generator: x_1 = 1, |x_{t+1}| = M*(sum of |x_i|) + 1 + jitter
// with jitter in [0, M] (identically zero when seed == 0), sign per policy.
SparseSequence gen_sparse_sequence(Int sparsity, std::size_t length, std::uint64_t seed,
                                   SignPolicy signs);

// One element of the Milliken-Taylor system MT(sigma, seq):
// value = sum_i a_i * (sum_{j in F_i} x_j) for blocks F_1 < ... < F_n.
struct MTElement {
    Int value;
    std::vector<std::vector<std::size_t>> blocks;  // 1-based indices into seq

    friend bool operator==(const MTElement&, const MTElement&) = default;
};

// Every element whose blocks use indices <= max_index with |F_i| <=
// max_block_size, in lexicographic order of the flattened block indices.
std::vector<MTElement> mt_enumerate(const ReducedString& sigma, const SparseSequence& seq,
                                    std::size_t max_index, std::size_t max_block_size);

// Maps row d of a verified witness to x_d: y_j = sum_d M[d][j] * x_d.
// P(y_1..y_m) = 0 exactly by construction.
std::vector<Int> instantiate_witness(const WitnessMatrix& M, const LinearEquation& eq,
                                     const ReducedString& sigma, const SparseSequence& seq);

// Given level coefficients e_0..e_D with |e_d| < bound_M and a sequence of
// sparsity >= bound_M, returns whether sum_d e_d * x_{d+1} = 0; under the
// sparsity hypothesis this holds iff every e_d = 0.
bool levelwise_cancellation_check(const std::vector<Int>& level_sums, const SparseSequence& seq,
                                  Int bound_M);

}  // namespace rado
