#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fibword/factor_enum.hpp"
#include "fibword/word.hpp"

namespace fibword {

Word reverse(const Word& w);

// The empty word counts as a palindrome.
bool is_palindrome(const Word& w);

// Distinct palindromic factors per length, filtered out of a FactorSet.
// Lists are sorted lexicographically; every length in [1, max_len] has an
// entry (possibly empty) so tables always cover the full range.
struct PalindromeCensus {
    int max_len = 0;
    bool from_saturated = false;
    std::map<int, std::vector<Word>> by_length;

    std::size_t count_at(int n) const {
        auto it = by_length.find(n);
        return it == by_length.end() ? 0 : it->second.size();
    }
    std::size_t total_count() const;
};

PalindromeCensus palindrome_census(const FactorSet& fs, int threads = 1);

// The empirical per-length law for this word: two palindromic factors at
// odd lengths, one at even lengths. Serves as the oracle the census is
// checked against.
std::size_t expected_palindromic_complexity(std::size_t n);

// All L in [1, |w|] whose length-L prefix is a palindrome.
std::vector<std::size_t> palindromic_prefix_lengths(const Word& w);

// "length count" rows, one per length; with list_words a third column
// holds the palindromes comma-separated.
std::string census_table(const PalindromeCensus& census,
                         bool list_words = false);

}  // namespace fibword
