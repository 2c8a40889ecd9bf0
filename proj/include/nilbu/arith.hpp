#pragma once

#include "nilbu/errors.hpp"

#include <cstdint>
#include <numeric>

// Checked 64-bit integer arithmetic. Every operation that could wrap throws
// OverflowError instead.
namespace nilbu::arith {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

// Quotient rounded toward negative infinity; b != 0.
inline Int floor_div(Int a, Int b) {
    if (b == -1)
        return neg(a);
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Representative in [0, |b|).
inline Int mod(Int a, Int b) {
    Int r = a % b;
    if (r < 0)
        r += (b < 0 ? -b : b);
    return r;
}

inline Int ceil_div(Int a, Int b) { return neg(floor_div(neg(a), b)); }

inline Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }

inline Int lcm(Int a, Int b) {
    if (a == 0 || b == 0)
        return 0;
    return mul(abs(a) / gcd(a, b), abs(b));
}

} // namespace nilbu::arith
