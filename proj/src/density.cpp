#include "fibword/density.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "fibword/analysis_record.hpp"
#include "fibword/golden.hpp"
#include "fibword/palindromes.hpp"

namespace fibword {

Density density(const Word& w, Symbol c) {
    if (w.empty())
        throw std::invalid_argument("density: undefined on the empty word");
    return Density{static_cast<std::int64_t>(w.count(c)),
                   static_cast<std::int64_t>(w.size())};
}

std::pair<Rational, Rational> density_delta(const Word& w) {
    const Word rev = reverse(w);
    const Density d0 = density(w, Symbol::zero);
    const Density d1 = density(w, Symbol::one);
    const Density r0 = density(rev, Symbol::zero);
    const Density r1 = density(rev, Symbol::one);
    return {d0.ratio() - r0.ratio(), d1.ratio() - r1.ratio()};
}

namespace {

LengthProfile profile_of_bucket(int n, const std::set<Word>& bucket) {
    // All members share length n, so extreme ratios are extreme counts.
    std::int64_t min_zeros = n + 1;
    std::int64_t max_zeros = -1;
    std::int64_t total_zeros = 0;
    for (const Word& w : bucket) {
        const auto zeros = static_cast<std::int64_t>(w.count(Symbol::zero));
        min_zeros = std::min(min_zeros, zeros);
        max_zeros = std::max(max_zeros, zeros);
        total_zeros += zeros;
    }
    const auto k = static_cast<std::int64_t>(bucket.size());
    LengthProfile p;
    p.length = n;
    p.min0 = Rational(min_zeros, n);
    p.max0 = Rational(max_zeros, n);
    p.mean0 = Rational(total_zeros, k * n);
    p.min1 = Rational(n - max_zeros, n);
    p.max1 = Rational(n - min_zeros, n);
    p.mean1 = Rational(k * n - total_zeros, k * n);
    return p;
}

}  // namespace

std::vector<LengthProfile> length_profiles(const FactorSet& fs, int threads) {
    std::vector<const std::map<int, std::set<Word>>::value_type*> buckets;
    buckets.reserve(fs.by_length.size());
    for (const auto& entry : fs.by_length)
        if (!entry.second.empty()) buckets.push_back(&entry);

    std::vector<LengthProfile> out(buckets.size());
    const auto total = static_cast<long long>(buckets.size());
#pragma omp parallel for num_threads(threads > 1 ? threads : 1) \
    schedule(dynamic) if (threads > 1)
    for (long long i = 0; i < total; ++i)
        out[static_cast<std::size_t>(i)] =
            profile_of_bucket(buckets[static_cast<std::size_t>(i)]->first,
                              buckets[static_cast<std::size_t>(i)]->second);
    return out;
}

namespace {

// Lexicographically first violator within one bucket, if any.
std::optional<ConvergenceViolation> bucket_violation(
    int n, const std::set<Word>& bucket) {
    const std::uint64_t low =
        floor_n_phi(static_cast<std::uint64_t>(n)) -
        static_cast<std::uint64_t>(n);
    for (const Word& w : bucket) {
        const std::size_t ones = w.count(Symbol::one);
        if (ones != low && ones != low + 1)
            return ConvergenceViolation{w, ones, low};
    }
    return std::nullopt;
}

}  // namespace

std::optional<ConvergenceViolation> convergence_check(const FactorSet& fs,
                                                      int threads) {
    std::vector<const std::map<int, std::set<Word>>::value_type*> buckets;
    buckets.reserve(fs.by_length.size());
    for (const auto& entry : fs.by_length)
        if (!entry.second.empty()) buckets.push_back(&entry);

    std::vector<std::optional<ConvergenceViolation>> found(buckets.size());
    const auto total = static_cast<long long>(buckets.size());
#pragma omp parallel for num_threads(threads > 1 ? threads : 1) \
    schedule(dynamic) if (threads > 1)
    for (long long i = 0; i < total; ++i)
        found[static_cast<std::size_t>(i)] =
            bucket_violation(buckets[static_cast<std::size_t>(i)]->first,
                             buckets[static_cast<std::size_t>(i)]->second);

    // Buckets were collected in ascending length order, so the first slot
    // holding a violation is the overall first by (length, lex).
    for (auto& v : found)
        if (v) return v;
    return std::nullopt;
}

Rational average_density(std::span<const AnalysisRecord> records,
                         Symbol letter, RecordFilter filter,
                         AverageWeighting weighting) {
    Rational sum;
    std::int64_t matched = 0;
    std::int64_t total_count = 0;
    std::int64_t total_length = 0;
    for (const AnalysisRecord& rec : records) {
        if (filter == RecordFilter::palindromic && !rec.is_palindrome)
            continue;
        if (filter == RecordFilter::non_palindromic && rec.is_palindrome)
            continue;
        const Density& d =
            letter == Symbol::zero ? rec.density0 : rec.density1;
        if (weighting == AverageWeighting::per_record)
            sum = sum + d.ratio();
        else {
            total_count += d.count;
            total_length += d.length;
        }
        ++matched;
    }
    if (matched == 0)
        throw std::invalid_argument(
            "average_density: no records match the filter");
    if (weighting == AverageWeighting::per_record)
        return sum / Rational(matched, 1);
    return Rational(total_count, total_length);
}

}  // namespace fibword
