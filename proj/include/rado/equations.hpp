#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rado/ints.hpp"

namespace rado {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// c_1 x_1 + ... + c_m x_m = 0 with every c_i nonzero and m >= 2.
class LinearEquation {
public:
    // Throws std::invalid_argument on a zero coefficient or m < 2.
    explicit LinearEquation(std::vector<Int> coefficients);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    std::size_t arity() const { return coeffs_.size(); }
    Int at(std::size_t i) const { return coeffs_.at(i); }

    friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

private:
    std::vector<Int> coeffs_;
};

// Grammar: signed integer-coefficient terms in x1..xm (coefficient 1 may be
// omitted; "-x5" is -1*x5), joined by +/-, optionally followed by "= 0";
// every index 1..m appears exactly once, in any order.
LinearEquation parse_equation(const std::string& text);

// Canonical text form; parse_equation(render_equation(eq)) == eq.
std::string render_equation(const LinearEquation& eq);

struct RadoVerdict {
    bool regular;
    // 1-based indices of the lexicographically least zero-sum subset,
    // empty when not regular.
    std::vector<std::size_t> witness;
};

// Rado's condition: some nonempty subset of the coefficients sums to zero.
// Exhaustive over 2^m - 1 subsets; exponential in m, intended for small m.
RadoVerdict is_rado(const LinearEquation& eq);

// Divides all coefficients by their positive gcd.
std::pair<LinearEquation, Int> content_normalize(const LinearEquation& eq);

}  // namespace rado
