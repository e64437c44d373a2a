#pragma once

#include <cstddef>
#include <vector>

#include "rado/ints.hpp"

namespace rado {

// A finite string of integers. The empty string is legal.
using ZString = std::vector<Int>;

// Canonical representative of a coherence class: no zero entries, no two
// adjacent entries equal.
class ReducedString {
public:
    ReducedString() = default;

    // Throws std::invalid_argument unless `entries` is already reduced.
    explicit ReducedString(ZString entries);

    const ZString& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // 0-based access; entry i is a_{i+1} in the usual 1-based notation.
    Int at(std::size_t i) const { return entries_.at(i); }

    friend bool operator==(const ReducedString&, const ReducedString&) = default;

private:
    ZString entries_;
};

bool is_reduced(const ZString& s);

// Canonical form: delete all zeros, then collapse each maximal run of equal
// adjacent entries to a single entry.
ReducedString reduce(const ZString& s);

bool are_equivalent(const ZString& s, const ZString& t);

// reduce(s) == sigma.
bool is_coherent(const ZString& s, const ReducedString& sigma);

// Values a coherent string may emit next when its reduced prefix so far is
// the first `state` entries of sigma: {0} plus the current entry (repeat,
// state unchanged) plus the next entry (advance). Sorted ascending.
// state must lie in [0, sigma.size()].
std::vector<Int> allowed_emissions(const ReducedString& sigma, std::size_t state);

}  // namespace rado
