#pragma once

#include <span>

#include "fibword/density.hpp"
#include "fibword/rational.hpp"
#include "fibword/word.hpp"

namespace fibword {

// One dataset row: a factor, its reversal, both letter densities on each
// side, and the density deltas between the two sides.
struct AnalysisRecord {
    Word subword;
    int length = 0;
    Density density0;
    Density density1;
    Word palindrome;
    bool is_palindrome = false;
    Density pal_density0;
    Density pal_density1;
    Rational delta0;
    Rational delta1;

    friend bool operator==(const AnalysisRecord&,
                           const AnalysisRecord&) = default;
};

// Mean density of `letter` over the records passing `filter`, exact.
// Throws std::invalid_argument when the filtered subset is empty.
Rational average_density(std::span<const AnalysisRecord> records,
                         Symbol letter, RecordFilter filter,
                         AverageWeighting weighting =
                             AverageWeighting::per_record);

}  // namespace fibword
