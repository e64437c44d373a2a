#include "rado/mtsystems.hpp"

#include <random>
#include <stdexcept>

namespace rado {

SparseSequence::SparseSequence(std::vector<Int> values, Int sparsity)
    : values_(std::move(values)), sparsity_(sparsity) {
    if (sparsity_ < 1) throw std::invalid_argument("sparsity must be positive");
    // Growth is measured against the sum of absolute values, not |sum|:
    // with mixed signs the weaker form admits sequences like (1,-3,6,-9)
    // whose levels cancel, e.g. -(-3) + 6 - 9 = 0 with coefficients < M.
    Int abs_sum = 0;
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (values_[t] == 0) throw std::invalid_argument("sparse sequence entries must be nonzero");
        if (t > 0 && checked_abs(values_[t]) <= checked_mul(sparsity_, abs_sum))
            throw std::invalid_argument("sequence violates the sparsity growth condition");
        abs_sum = checked_add(abs_sum, checked_abs(values_[t]));
    }
}

Int sparsity_constant(const ReducedString& sigma, const LinearEquation& eq) {
    if (sigma.empty()) throw std::invalid_argument("sparsity_constant: sigma must be non-empty");
    Int total = 0;
    for (Int a : sigma.entries())
        for (Int c : eq.coefficients()) total = checked_add(total, checked_abs(checked_mul(a, c)));
    return checked_add(total, 1);
}

SparseSequence gen_sparse_sequence(Int sparsity, std::size_t length, std::uint64_t seed,
                                   SignPolicy signs) {
    if (length < 1) throw std::invalid_argument("gen_sparse_sequence: length must be >= 1");
    if (sparsity < 1) throw std::invalid_argument("gen_sparse_sequence: sparsity must be positive");
    std::mt19937_64 rng(seed);
    auto jitter = [&]() -> Int {
        if (seed == 0) return 0;
        return static_cast<Int>(rng() % static_cast<std::uint64_t>(sparsity + 1));
    };
    auto sign = [&](std::size_t t) -> Int {
        switch (signs) {
            case SignPolicy::AllPositive: return 1;
            case SignPolicy::Alternating: return (t % 2 == 0) ? 1 : -1;
            case SignPolicy::SeededRandom: return (rng() & 1) ? 1 : -1;
        }
        return 1;
    };
    std::vector<Int> values{1};
    Int abs_sum = 1;
    for (std::size_t t = 1; t < length; ++t) {
        Int magnitude = checked_add(checked_add(checked_mul(sparsity, abs_sum), 1), jitter());
        Int x = checked_mul(sign(t), magnitude);
        values.push_back(x);
        abs_sum = checked_add(abs_sum, magnitude);
    }
    return SparseSequence(std::move(values), sparsity);
}

namespace {

// Enumerate blocks F_level, ..., F_n in lexicographic order of the flattened
// index list; each block is a nonempty increasing list of at most
// max_block_size indices, all greater than `floor`.
void enumerate_blocks(const ReducedString& sigma, const SparseSequence& seq, std::size_t max_index,
                      std::size_t max_block_size, std::size_t level,
                      std::vector<std::vector<std::size_t>>& blocks, Int partial,
                      std::vector<MTElement>& out) {
    if (level == sigma.size()) {
        out.push_back({partial, blocks});
        return;
    }
    std::size_t floor = level == 0 ? 0 : blocks[level - 1].back();
    // Grow the current block depth-first: after placing index t we either
    // descend to the next block or extend the block with a larger index,
    // which is precisely flattened-lex order.
    auto grow = [&](auto&& self, Int block_sum) -> void {
        std::size_t last = blocks[level].back();
        Int contrib = checked_mul(sigma.at(level), block_sum);
        Int next_partial = checked_add(partial, contrib);
        // values before extension: close this block here
        std::vector<std::vector<std::size_t>> saved = blocks;
        Int saved_partial = partial;
        partial = next_partial;
        enumerate_blocks(sigma, seq, max_index, max_block_size, level + 1, blocks, partial, out);
        partial = saved_partial;
        blocks = std::move(saved);
        if (blocks[level].size() < max_block_size) {
            for (std::size_t t = last + 1; t <= max_index; ++t) {
                blocks[level].push_back(t);
                self(self, checked_add(block_sum, seq.at(t)));
                blocks[level].pop_back();
            }
        }
    };
    for (std::size_t t = floor + 1; t <= max_index; ++t) {
        blocks.push_back({t});
        grow(grow, seq.at(t));
        blocks.pop_back();
    }
}

}  // namespace

std::vector<MTElement> mt_enumerate(const ReducedString& sigma, const SparseSequence& seq,
                                    std::size_t max_index, std::size_t max_block_size) {
    if (sigma.empty()) throw std::invalid_argument("mt_enumerate: sigma must be non-empty");
    if (max_index > seq.size()) throw std::invalid_argument("mt_enumerate: max_index exceeds sequence");
    std::vector<MTElement> out;
    std::vector<std::vector<std::size_t>> blocks;
    enumerate_blocks(sigma, seq, max_index, max_block_size, 0, blocks, 0, out);
    return out;
}

std::vector<Int> instantiate_witness(const WitnessMatrix& M, const LinearEquation& eq,
                                     const ReducedString& sigma, const SparseSequence& seq) {
    if (!verify_witness(eq, sigma, M, /*injective=*/false))
        throw std::invalid_argument("instantiate_witness: matrix is not a valid witness");
    if (seq.size() < M.row_count())
        throw std::invalid_argument("instantiate_witness: sequence shorter than witness");
    const std::size_t m = eq.arity();
    std::vector<Int> y(m, 0);
    for (std::size_t d = 0; d < M.row_count(); ++d)
        for (std::size_t j = 0; j < m; ++j)
            y[j] = checked_add(y[j], checked_mul(M.rows[d][j], seq.at(d + 1)));
    return y;
}

bool levelwise_cancellation_check(const std::vector<Int>& level_sums, const SparseSequence& seq,
                                  Int bound_M) {
    if (bound_M < 1) throw std::invalid_argument("levelwise_cancellation_check: bound must be positive");
    if (seq.sparsity() < bound_M)
        throw std::invalid_argument("levelwise_cancellation_check: sequence sparsity too small");
    if (seq.size() < level_sums.size())
        throw std::invalid_argument("levelwise_cancellation_check: sequence too short");
    for (Int e : level_sums)
        if (checked_abs(e) >= bound_M)
            throw std::invalid_argument("levelwise_cancellation_check: level coefficient out of range");
    Int total = 0;
    for (std::size_t d = 0; d < level_sums.size(); ++d)
        total = checked_add(total, checked_mul(level_sums[d], seq.at(d + 1)));
    return total == 0;
}

}  // namespace rado
