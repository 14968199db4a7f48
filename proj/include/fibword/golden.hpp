#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "fibword/word.hpp"

// Exact integer arithmetic around the golden ratio. Floating point is
// never used here: near a Beatty boundary, a one-ulp rounding error in
// n*phi flips the computed symbol, so floor(n*phi) is evaluated as
// (n + isqrt(5*n^2)) / 2 in integers only.
namespace fibword {

using uint128 = unsigned __int128;

// Largest k with k*k <= x.
constexpr std::uint64_t isqrt_u128(uint128 x) {
    if (x == 0) return 0;
    int bits = 0;
    for (uint128 t = x; t != 0; t >>= 1) ++bits;
    // start >= sqrt(x), then Newton steps decrease monotonically to the floor
    uint128 cur = uint128(1) << ((bits + 1) / 2);
    while (true) {
        uint128 next = (cur + x / cur) / 2;
        if (next >= cur) break;
        cur = next;
    }
    return static_cast<std::uint64_t>(cur);
}

// 5*n^2 must fit in 128 bits and the result in 64 bits.
inline constexpr std::uint64_t max_floor_phi_arg = 4'000'000'000'000'000'000ULL;

constexpr std::uint64_t floor_n_phi(std::uint64_t n) {
    if (n > max_floor_phi_arg)
        throw std::domain_error("floor_n_phi: argument too large for the exact path");
    uint128 nn = uint128(n) * n;
    return static_cast<std::uint64_t>((uint128(n) + isqrt_u128(5 * nn)) / 2);
}

// p-th symbol (1-based) of the infinite word under the concatenation
// convention: floor((p+1)*phi) - floor(p*phi) - 1, which is 1 or 0.
constexpr Symbol beatty_symbol(std::uint64_t position) {
    if (position == 0)
        throw std::invalid_argument("beatty_symbol: positions are 1-based");
    std::uint64_t step = floor_n_phi(position + 1) - floor_n_phi(position);
    return step == 2 ? Symbol::one : Symbol::zero;
}

// Reporting-only decimal approximation; never used in computations.
inline constexpr std::string_view phi_decimal = "1.6180339887";

}  // namespace fibword
