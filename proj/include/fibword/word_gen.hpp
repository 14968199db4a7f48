#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fibword/word.hpp"

namespace fibword {

// The two constructions of the word. ConcatRule: f0="0", f1="1",
// f_n = f_{n-1} f_{n-2}; the infinite word begins 1011010110110...
// MorphismFix: f1="1", f2="0", f_n = sigma(f_{n-1}) with
// sigma: 0 -> 01, 1 -> 0; the fixed point begins 0100101001001...
// The two infinite words are letter-swaps of each other.
enum class Convention { concat_rule, morphism_fix };

std::string to_string(Convention conv);
Convention convention_from_string(std::string_view name);

struct MorphismRule {
    static constexpr std::string_view image_of_zero = "01";
    static constexpr std::string_view image_of_one = "0";
};

// Guardrail on generated word length.
inline constexpr std::size_t default_length_cap = 10'000'000;

class resource_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// F_0 = 1, F_1 = 1, F_n = F_{n-1} + F_{n-2}; |f_n| under the
// concatenation convention. Exact for n <= 92 (64-bit range).
std::uint64_t fib_number(int n);

Word fib_word_concat(int n, std::size_t cap = default_length_cap);

// f_1 = "1", f_2 = "0", then letterwise images under sigma.
// |f_n| = fib_number(n - 1).
Word fib_word_morphism(int n, std::size_t cap = default_length_cap);

// First `len` symbols of the infinite word under `conv`.
Word fib_prefix(std::size_t len, Convention conv,
                std::size_t cap = default_length_cap);

// Same prefix computed position-by-position from the Beatty difference
// formula; an independent generation route used to cross-check
// fib_prefix. threads <= 1 runs the serial reference loop.
Word beatty_prefix(std::size_t len, Convention conv, int threads = 1,
                   std::size_t cap = default_length_cap);
Word beatty_prefix_serial(std::size_t len, Convention conv,
                          std::size_t cap = default_length_cap);
Word beatty_prefix_parallel(std::size_t len, Convention conv, int threads,
                            std::size_t cap = default_length_cap);

}  // namespace fibword
