#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>

#include "fibword/word.hpp"
#include "fibword/word_gen.hpp"

namespace fibword {

// Distinct factors of a source word, grouped by length. Sets are ordered,
// so every iteration over a length bucket is lexicographic ('0' < '1').
struct FactorSet {
    int max_len = 0;
    // Generation index of the word that was scanned; -1 when the set was
    // built from a raw word rather than a generated one.
    int source_generation = -1;
    bool saturated = false;
    std::optional<Convention> convention;
    std::map<int, std::set<Word>> by_length;

    std::size_t total_count() const;
    bool same_factors(const FactorSet& other) const {
        return by_length == other.by_length;
    }
};

// All distinct substrings of w with length in [1, max_len].
// threads <= 1 runs the serial reference implementation.
FactorSet unique_factors(const Word& w, int max_len, int threads = 1);
FactorSet unique_factors_serial(const Word& w, int max_len);
FactorSet unique_factors_parallel(const Word& w, int max_len, int threads);

// Grows generations of the word until two consecutive ones yield the
// same factor sets for every length <= max_len, which makes the result
// equal to the factor set of the infinite word up to that bound.
// source_generation is the first index whose set matches the next one.
FactorSet saturated_factor_set(int max_len, Convention conv, int threads = 1,
                               std::size_t cap = default_length_cap);

// Number of distinct factors of the given length.
std::size_t factor_complexity(const FactorSet& fs, int n);

// Produced only on a balance violation: two same-length factors whose
// counts of `letter` differ by at least two.
struct BalanceWitness {
    Word u;
    Word v;
    Symbol letter = Symbol::one;
    std::size_t count_u = 0;
    std::size_t count_v = 0;

    friend bool operator==(const BalanceWitness&,
                           const BalanceWitness&) = default;
};

// Empty optional means balanced: for every pair of same-length factors
// the counts of '1' differ by at most one (and hence those of '0' too).
std::optional<BalanceWitness> is_balanced(const FactorSet& fs,
                                          int threads = 1);

}  // namespace fibword
