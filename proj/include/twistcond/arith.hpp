#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace twistcond {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// Overflow-checked product; throws std::overflow_error rather than wrapping.
inline u64 checked_mul(u64 a, u64 b) {
    if (a != 0 && b > std::numeric_limits<u64>::max() / a)
        throw std::overflow_error("integer overflow in checked_mul");
    return a * b;
}

inline u64 checked_add(u64 a, u64 b) {
    if (b > std::numeric_limits<u64>::max() - a)
        throw std::overflow_error("integer overflow in checked_add");
    return a + b;
}

inline u64 checked_pow(u64 base, u64 exp) {
    u64 result = 1;
    for (u64 i = 0; i < exp; ++i)
        result = checked_mul(result, base);
    return result;
}

/// p-adic valuation of a non-zero integer.
inline u64 valuation(u64 value, u64 p) {
    u64 v = 0;
    while (value != 0 && value % p == 0) {
        value /= p;
        ++v;
    }
    return v;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// True iff n = p^f for a prime p and f >= 1.
inline bool is_prime_power(u64 n) {
    if (n < 2) return false;
    u64 p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) return true; // n itself is prime
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace twistcond
