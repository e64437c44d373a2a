#include "rado/strings.hpp"

#include <algorithm>
#include <stdexcept>

namespace rado {

ReducedString::ReducedString(ZString entries) : entries_(std::move(entries)) {
    if (!is_reduced(entries_)) throw std::invalid_argument("string is not reduced");
}

bool is_reduced(const ZString& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) return false;
        if (i + 1 < s.size() && s[i] == s[i + 1]) return false;
    }
    return true;
}

ReducedString reduce(const ZString& s) {
    ZString out;
    for (Int v : s) {
        if (v == 0) continue;
        if (!out.empty() && out.back() == v) continue;
        out.push_back(v);
    }
    return ReducedString(std::move(out));
}

bool are_equivalent(const ZString& s, const ZString& t) { return reduce(s) == reduce(t); }

bool is_coherent(const ZString& s, const ReducedString& sigma) { return reduce(s) == sigma; }

std::vector<Int> allowed_emissions(const ReducedString& sigma, std::size_t state) {
    if (state > sigma.size()) throw std::invalid_argument("allowed_emissions: state out of range");
    std::vector<Int> out{0};
    if (state >= 1) out.push_back(sigma.at(state - 1));
    if (state < sigma.size()) out.push_back(sigma.at(state));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rado
