#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hessmult {

// Enumeration sizes grow factorially; callers opt into larger n explicitly.
inline constexpr int kDefaultCap = 9;

struct CapExceeded : std::runtime_error {
    CapExceeded(int n, int cap)
        : std::runtime_error("n = " + std::to_string(n) +
                             " exceeds enumeration cap " + std::to_string(cap)),
          n(n), cap(cap) {}
    int n;
    int cap;
};

inline void require_within_cap(int n, int cap = kDefaultCap) {
    if (n > cap) throw CapExceeded(n, cap);
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

// All counts in this project are bounded by n! at the enumeration cap, but the
// solver multiplies counts by matrix entries; keep the arithmetic checked.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

// Closed integer interval [lo, hi], 1-based, as used for staircases and steps.
struct Interval {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace hessmult
