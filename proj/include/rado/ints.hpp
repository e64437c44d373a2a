#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rado {

using Int = std::int64_t;

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All arithmetic that combines user-supplied integers goes through these;
// results are exact or the operation throws.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int checked_dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
    return acc;
}

inline Int gcd_abs(Int a, Int b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace rado
