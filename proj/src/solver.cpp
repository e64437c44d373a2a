#include "rado/solver.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_map>

namespace rado {

ZString WitnessMatrix::column(std::size_t j) const {
    ZString col;
    col.reserve(rows.size());
    for (const auto& row : rows) col.push_back(row.at(j));
    return col;
}

bool verify_witness(const LinearEquation& eq, const ReducedString& sigma, const WitnessMatrix& M,
                    bool injective, bool require_canonical) {
    const std::size_t m = eq.arity();
    if (M.rows.empty()) throw std::invalid_argument("verify_witness: empty matrix");
    for (const auto& row : M.rows)
        if (row.size() != m) throw std::invalid_argument("verify_witness: column count mismatch");

    for (const auto& row : M.rows) {
        if (checked_dot(row, eq.coefficients()) != 0) return false;
        if (require_canonical && std::all_of(row.begin(), row.end(), [](Int v) { return v == 0; }))
            return false;
    }
    std::vector<ZString> cols;
    cols.reserve(m);
    for (std::size_t j = 0; j < m; ++j) cols.push_back(M.column(j));
    for (const auto& col : cols)
        if (!is_coherent(col, sigma)) return false;
    if (injective) {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = j + 1; l < m; ++l)
                if (cols[j] == cols[l]) return false;
    }
    return true;
}

namespace {

// BFS state = per-column automaton positions, plus (injective mode) one
// "has differed" bit per unordered column pair. Encoded as a byte string:
// m little-endian uint16 positions followed by the packed pair bits.

struct Node {
    std::uint64_t parent;
    std::uint64_t choices;  // 2 bits per column: index into that column's emission list
};

constexpr std::uint64_t kNoParent = ~std::uint64_t{0};

std::string encode_state(const std::vector<std::uint16_t>& q, const std::vector<std::uint8_t>& bits) {
    std::string key(q.size() * 2 + bits.size(), '\0');
    for (std::size_t j = 0; j < q.size(); ++j) {
        key[2 * j] = static_cast<char>(q[j] & 0xff);
        key[2 * j + 1] = static_cast<char>(q[j] >> 8);
    }
    std::memcpy(key.data() + q.size() * 2, bits.data(), bits.size());
    return key;
}

void decode_state(const std::string& key, std::size_t m, std::vector<std::uint16_t>& q,
                  std::vector<std::uint8_t>& bits) {
    q.resize(m);
    for (std::size_t j = 0; j < m; ++j)
        q[j] = static_cast<std::uint16_t>(static_cast<std::uint8_t>(key[2 * j]) |
                                          (static_cast<std::uint8_t>(key[2 * j + 1]) << 8));
    bits.assign(key.begin() + static_cast<std::ptrdiff_t>(m * 2), key.end());
}

std::size_t pair_index(std::size_t j, std::size_t l, std::size_t m) {
    // j < l
    return j * m - j * (j + 1) / 2 + (l - j - 1);
}

}  // namespace

SolverVerdict solve_in_class(const LinearEquation& eq, const ReducedString& sigma, bool injective,
                             const SolverLimits& limits) {
    if (sigma.empty()) throw std::invalid_argument("solve_in_class: sigma must be non-empty");
    const std::size_t m = eq.arity();
    const std::size_t n = sigma.size();
    if (m > 32) throw std::invalid_argument("solve_in_class: at most 32 variables supported");
    if (n > 0xffff) throw std::invalid_argument("solve_in_class: sigma too long");

    const std::size_t num_pairs = injective ? m * (m - 1) / 2 : 0;
    const std::size_t bit_bytes = (num_pairs + 7) / 8;

    // Emission lists per automaton position, sorted ascending so that the
    // choice odometer enumerates candidate rows in lexicographic value order.
    std::vector<std::vector<Int>> emissions(n + 1);
    for (std::size_t s = 0; s <= n; ++s) emissions[s] = allowed_emissions(sigma, s);

    std::vector<Node> nodes;
    std::unordered_map<std::string, std::uint64_t> visited;
    std::deque<std::uint64_t> frontier;
    std::vector<std::string> keys;  // parallel to nodes

    std::vector<std::uint16_t> q0(m, 0);
    std::vector<std::uint8_t> bits0(bit_bytes, 0);
    std::string root = encode_state(q0, bits0);
    nodes.push_back({kNoParent, 0});
    keys.push_back(root);
    visited.emplace(root, 0);
    frontier.push_back(0);

    SolverVerdict verdict;
    verdict.frontier_peak = 1;

    auto accepting = [&](const std::vector<std::uint16_t>& q, const std::vector<std::uint8_t>& bits) {
        for (std::size_t j = 0; j < m; ++j)
            if (q[j] != n) return false;
        for (std::size_t p = 0; p < num_pairs; ++p)
            if (!(bits[p / 8] & (1u << (p % 8)))) return false;
        return true;
    };

    auto reconstruct = [&](std::uint64_t leaf) {
        std::vector<std::uint64_t> chain;
        for (std::uint64_t at = leaf; at != kNoParent; at = nodes[at].parent) chain.push_back(at);
        std::reverse(chain.begin(), chain.end());
        WitnessMatrix M;
        std::vector<std::uint16_t> q(m, 0);
        for (std::size_t step = 1; step < chain.size(); ++step) {
            std::uint64_t choices = nodes[chain[step]].choices;
            std::vector<Int> row(m);
            for (std::size_t j = 0; j < m; ++j) {
                std::size_t choice = (choices >> (2 * j)) & 0x3;
                row[j] = emissions[q[j]][choice];
                if (q[j] < n && row[j] == sigma.at(q[j])) ++q[j];
            }
            M.rows.push_back(std::move(row));
        }
        return M;
    };

    std::vector<std::uint16_t> q(m), cq(m);
    std::vector<std::uint8_t> bits(bit_bytes), cbits(bit_bytes);
    std::vector<Int> row(m);
    std::vector<std::size_t> choice(m);

    while (!frontier.empty()) {
        const std::uint64_t cur = frontier.front();
        frontier.pop_front();
        decode_state(keys[cur], m, q, bits);

        // Odometer over per-column choices, lexicographic in row values.
        std::fill(choice.begin(), choice.end(), 0);
        bool more = true;
        while (more) {
            bool all_zero = true;
            for (std::size_t j = 0; j < m; ++j) {
                row[j] = emissions[q[j]][choice[j]];
                if (row[j] != 0) all_zero = false;
            }
            if (!all_zero && checked_dot(row, eq.coefficients()) == 0) {
                cq = q;
                cbits = bits;
                std::uint64_t packed = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    packed |= static_cast<std::uint64_t>(choice[j]) << (2 * j);
                    if (cq[j] < n && row[j] == sigma.at(cq[j])) ++cq[j];
                }
                for (std::size_t j = 0; injective && j < m; ++j)
                    for (std::size_t l = j + 1; l < m; ++l)
                        if (row[j] != row[l]) {
                            std::size_t p = pair_index(j, l, m);
                            cbits[p / 8] |= static_cast<std::uint8_t>(1u << (p % 8));
                        }
                std::string key = encode_state(cq, cbits);
                auto [it, inserted] = visited.emplace(std::move(key), nodes.size());
                if (inserted) {
                    nodes.push_back({cur, packed});
                    keys.push_back(it->first);
                    if (accepting(cq, cbits)) {
                        verdict.status = SolveStatus::Sat;
                        verdict.witness = reconstruct(nodes.size() - 1);
                        verdict.states_explored = nodes.size();
                        verdict.frontier_peak = std::max<std::uint64_t>(verdict.frontier_peak,
                                                                        frontier.size());
                        return verdict;
                    }
                    if (nodes.size() > limits.max_states) {
                        verdict.status = SolveStatus::Indeterminate;
                        verdict.indeterminate_reason = "state-limit";
                        verdict.states_explored = nodes.size();
                        return verdict;
                    }
                    frontier.push_back(nodes.size() - 1);
                    verdict.frontier_peak = std::max<std::uint64_t>(verdict.frontier_peak,
                                                                    frontier.size());
                }
            }
            // advance odometer
            more = false;
            for (std::size_t j = m; j-- > 0;) {
                if (++choice[j] < emissions[q[j]].size()) {
                    more = true;
                    break;
                }
                choice[j] = 0;
            }
        }
    }

    verdict.status = SolveStatus::Unsat;
    verdict.states_explored = nodes.size();
    return verdict;
}

OracleResult brute_force_oracle(const LinearEquation& eq, const ReducedString& sigma,
                                bool injective, int max_rows) {
    if (sigma.empty()) throw std::invalid_argument("brute_force_oracle: sigma must be non-empty");
    const std::size_t m = eq.arity();

    std::vector<Int> values = sigma.entries();
    values.push_back(0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    // Candidate rows: all value tuples annihilating the coefficient vector.
    // Rows failing that can never appear in a matrix accepted by
    // verify_witness, so they are filtered here before assembly.
    std::vector<std::vector<Int>> rows;
    std::vector<std::size_t> odo(m, 0);
    std::vector<Int> row(m);
    bool more = true;
    while (more) {
        for (std::size_t j = 0; j < m; ++j) row[j] = values[odo[j]];
        if (checked_dot(row, eq.coefficients()) == 0) rows.push_back(row);
        more = false;
        for (std::size_t j = m; j-- > 0;) {
            if (++odo[j] < values.size()) {
                more = true;
                break;
            }
            odo[j] = 0;
        }
    }

    OracleResult result;
    result.max_rows_tried = max_rows;
    for (int k = 1; k <= max_rows; ++k) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
        bool go = !rows.empty();
        while (go) {
            WitnessMatrix M;
            for (std::size_t i = 0; i < pick.size(); ++i) M.rows.push_back(rows[pick[i]]);
            if (verify_witness(eq, sigma, M, injective)) {
                result.status = OracleStatus::Sat;
                result.witness = std::move(M);
                return result;
            }
            go = false;
            for (std::size_t i = pick.size(); i-- > 0;) {
                if (++pick[i] < rows.size()) {
                    go = true;
                    break;
                }
                pick[i] = 0;
            }
        }
    }
    return result;
}

}  // namespace rado
