#include "fibword/palindromes.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace fibword {

Word reverse(const Word& w) {
    std::string out(w.view());
    std::reverse(out.begin(), out.end());
    return Word(std::move(out));
}

bool is_palindrome(const Word& w) {
    const std::string_view v = w.view();
    return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin());
}

std::size_t PalindromeCensus::total_count() const {
    std::size_t total = 0;
    for (const auto& [n, words] : by_length) total += words.size();
    return total;
}

PalindromeCensus palindrome_census(const FactorSet& fs, int threads) {
    PalindromeCensus census;
    census.max_len = fs.max_len;
    census.from_saturated = fs.saturated;
    std::vector<std::vector<Word>> slots(
        static_cast<std::size_t>(fs.max_len) + 1);

#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    if (threads > 1)
    for (int n = 1; n <= fs.max_len; ++n) {
        auto it = fs.by_length.find(n);
        if (it == fs.by_length.end()) continue;
        std::vector<Word>& out = slots[static_cast<std::size_t>(n)];
        for (const Word& w : it->second)  // lexicographic
            if (is_palindrome(w)) out.push_back(w);
    }

    for (int n = 1; n <= fs.max_len; ++n)
        census.by_length.emplace(n,
                                 std::move(slots[static_cast<std::size_t>(n)]));
    return census;
}

std::size_t expected_palindromic_complexity(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument(
            "expected_palindromic_complexity: length must be >= 1");
    return n % 2 == 1 ? 2 : 1;
}

std::vector<std::size_t> palindromic_prefix_lengths(const Word& w) {
    std::vector<std::size_t> lengths;
    const std::string_view v = w.view();
    for (std::size_t len = 1; len <= v.size(); ++len) {
        std::string_view p = v.substr(0, len);
        if (std::equal(p.begin(), p.begin() + p.size() / 2, p.rbegin()))
            lengths.push_back(len);
    }
    return lengths;
}

std::string census_table(const PalindromeCensus& census, bool list_words) {
    std::string out;
    for (int n = 1; n <= census.max_len; ++n) {
        out += std::to_string(n);
        out += ' ';
        auto it = census.by_length.find(n);
        const std::size_t count = it == census.by_length.end()
                                      ? 0
                                      : it->second.size();
        out += std::to_string(count);
        if (list_words && count > 0) {
            out += ' ';
            bool first = true;
            for (const Word& w : it->second) {
                if (!first) out += ',';
                out += w.str();
                first = false;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace fibword
