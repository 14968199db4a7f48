#include "fibword/factor_enum.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fibword {

std::size_t FactorSet::total_count() const {
    std::size_t total = 0;
    for (const auto& [n, bucket] : by_length) total += bucket.size();
    return total;
}

namespace {

// A length-n window count can never exceed |w| - n + 1.
void check_window_bound(std::size_t distinct, std::size_t word_len,
                        std::size_t n) {
    if (distinct > word_len - n + 1)
        throw std::logic_error("factor extraction exceeded the window bound");
}

}  // namespace

FactorSet unique_factors_serial(const Word& w, int max_len) {
    FactorSet fs;
    fs.max_len = max_len;
    const std::string_view v = w.view();
    const int top = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(max_len), v.size()));
    for (int n = 1; n <= top; ++n) {
        std::set<Word> bucket;
        const std::size_t un = static_cast<std::size_t>(n);
        for (std::size_t i = 0; i + un <= v.size(); ++i)
            bucket.emplace(std::string(v.substr(i, un)));
        check_window_bound(bucket.size(), v.size(), un);
        fs.by_length.emplace(n, std::move(bucket));
    }
    return fs;
}

FactorSet unique_factors_parallel(const Word& w, int max_len, int threads) {
    FactorSet fs;
    fs.max_len = max_len;
    const std::string_view v = w.view();
    if (v.empty()) return fs;
    const int top = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(max_len), v.size()));
    const int chunks = threads;
    const std::size_t chunk_len = (v.size() + chunks - 1) / chunks;

    // Each chunk deduplicates its own windows; the chunk boundaries are
    // fixed by the chunk count, not the thread schedule.
    std::vector<std::vector<std::unordered_set<std::string_view>>> local(
        static_cast<std::size_t>(chunks));
    for (auto& per_len : local)
        per_len.resize(static_cast<std::size_t>(top) + 1);

#pragma omp parallel for num_threads(threads) schedule(static, 1)
    for (int c = 0; c < chunks; ++c) {
        auto& mine = local[static_cast<std::size_t>(c)];
        const std::size_t lo = static_cast<std::size_t>(c) * chunk_len;
        const std::size_t hi = std::min(v.size(), lo + chunk_len);
        for (int n = 1; n <= top; ++n) {
            const std::size_t un = static_cast<std::size_t>(n);
            const std::size_t upper = v.size() - un + 1;  // starts in [0, upper)
            for (std::size_t i = lo; i < hi && i < upper; ++i)
                mine[un].insert(v.substr(i, un));
        }
    }

    for (int n = 1; n <= top; ++n) {
        std::set<Word> bucket;
        for (int c = 0; c < chunks; ++c)
            for (std::string_view sv : local[static_cast<std::size_t>(c)]
                                            [static_cast<std::size_t>(n)])
                bucket.emplace(std::string(sv));
        check_window_bound(bucket.size(), v.size(),
                           static_cast<std::size_t>(n));
        fs.by_length.emplace(n, std::move(bucket));
    }
    return fs;
}

FactorSet unique_factors(const Word& w, int max_len, int threads) {
    if (max_len < 1)
        throw std::invalid_argument("unique_factors: max_len must be >= 1");
    return threads <= 1 ? unique_factors_serial(w, max_len)
                        : unique_factors_parallel(w, max_len, threads);
}

FactorSet saturated_factor_set(int max_len, Convention conv, int threads,
                               std::size_t cap) {
    if (max_len < 1)
        throw std::invalid_argument(
            "saturated_factor_set: max_len must be >= 1");

    // Successive generations under either convention; from the third word
    // on both obey next = cur + prev, which for the morphism convention
    // coincides with iterating sigma.
    int idx = conv == Convention::concat_rule ? 0 : 1;
    std::string prev;
    std::string cur = conv == Convention::concat_rule ? "0" : "1";
    FactorSet cur_fs = unique_factors(Word(cur), max_len, threads);

    while (true) {
        std::string next;
        if (conv == Convention::concat_rule && idx == 0) {
            next = "1";
        } else if (conv == Convention::morphism_fix && idx == 1) {
            next = "0";
        } else {
            next.reserve(cur.size() + prev.size());
            next.append(cur).append(prev);
        }
        if (next.size() > cap)
            throw resource_limit_error(
                "saturation exceeded the length cap of " + std::to_string(cap) +
                " before stabilizing");

        FactorSet next_fs = unique_factors(Word(next), max_len, threads);
        if (next_fs.by_length == cur_fs.by_length) {
            cur_fs.saturated = true;
            cur_fs.source_generation = idx;
            cur_fs.convention = conv;
            return cur_fs;
        }
        prev = std::move(cur);
        cur = std::move(next);
        cur_fs = std::move(next_fs);
        ++idx;
    }
}

std::size_t factor_complexity(const FactorSet& fs, int n) {
    if (n < 1 || n > fs.max_len)
        throw std::out_of_range("factor_complexity: length out of range");
    auto it = fs.by_length.find(n);
    return it == fs.by_length.end() ? 0 : it->second.size();
}

std::optional<BalanceWitness> is_balanced(const FactorSet& fs, int threads) {
    struct PerLength {
        bool violated = false;
        Word min_word, max_word;
        std::size_t min_ones = 0, max_ones = 0;
    };
    std::vector<int> lengths;
    lengths.reserve(fs.by_length.size());
    for (const auto& [n, bucket] : fs.by_length)
        if (!bucket.empty()) lengths.push_back(n);
    std::vector<PerLength> slots(lengths.size());

#pragma omp parallel for num_threads(threads) schedule(dynamic) \
    if (threads > 1)
    for (std::size_t li = 0; li < lengths.size(); ++li) {
        const auto& bucket = fs.by_length.at(lengths[li]);
        PerLength r;
        bool first = true;
        for (const Word& u : bucket) {  // lexicographic scan
            std::size_t ones = u.count(Symbol::one);
            if (first || ones < r.min_ones) {
                r.min_ones = ones;
                r.min_word = u;
            }
            if (first || ones > r.max_ones) {
                r.max_ones = ones;
                r.max_word = u;
            }
            first = false;
        }
        r.violated = r.max_ones - r.min_ones >= 2;
        slots[li] = std::move(r);
    }

    for (const PerLength& r : slots)
        if (r.violated)
            return BalanceWitness{r.min_word, r.max_word, Symbol::one,
                                  r.min_ones, r.max_ones};
    return std::nullopt;
}

}  // namespace fibword
