#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibword/factor_enum.hpp"
#include "fibword/rational.hpp"
#include "fibword/word.hpp"

namespace fibword {

// Letter density of one word, kept unreduced: count is the number of
// occurrences, length the word length. The ratio is formed on demand.
struct Density {
    std::int64_t count = 0;
    std::int64_t length = 1;

    Rational ratio() const { return Rational(count, length); }
    std::string rendered() const { return render_fixed4(ratio()); }

    friend bool operator==(const Density&, const Density&) = default;
};

// Occurrences of c in w over |w|. Undefined on the empty word.
Density density(const Word& w, Symbol c);

// (density(w,0) - density(reverse(w),0), same for 1). Computed from the
// actual reversal, not assumed to vanish.
std::pair<Rational, Rational> density_delta(const Word& w);

enum class RecordFilter { all, palindromic, non_palindromic };

// per_record: every record contributes one term to the mean.
// length_weighted: records contribute their letter counts and lengths,
// i.e. the mean is total occurrences over total symbols.
enum class AverageWeighting { per_record, length_weighted };

// Density statistics of one length bucket, exact rationals throughout.
struct LengthProfile {
    int length = 0;
    Rational min0, max0, mean0;
    Rational min1, max1, mean1;

    friend bool operator==(const LengthProfile&,
                           const LengthProfile&) = default;
};

std::vector<LengthProfile> length_profiles(const FactorSet& fs,
                                           int threads = 1);

// First factor (by length, then lexicographic) whose count of '1' falls
// outside {floor(n*phi) - n, floor(n*phi) - n + 1}, the only two integers
// within distance 1 of n*(phi-1).
struct ConvergenceViolation {
    Word factor;
    std::size_t ones = 0;
    std::uint64_t expected_low = 0;

    friend bool operator==(const ConvergenceViolation&,
                           const ConvergenceViolation&) = default;
};

std::optional<ConvergenceViolation> convergence_check(const FactorSet& fs,
                                                      int threads = 1);

}  // namespace fibword
