#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibword/analysis_record.hpp"
#include "fibword/density.hpp"
#include "fibword/factor_enum.hpp"
#include "fibword/rational.hpp"

namespace fibword {

// One record per factor, ordered by length ascending, then
// lexicographically within a length.
std::vector<AnalysisRecord> build_analysis_records(const FactorSet& fs,
                                                   int threads = 1);

// JSON array of objects, fixed key order, 4-decimal density strings,
// one object per line. Byte-stable for a given record list.
std::string to_json_text(std::span<const AnalysisRecord> records);
void write_json(std::span<const AnalysisRecord> records,
                const std::string& path);

// Parses a write_json artifact back into records. Every derived field is
// recomputed from the subword and checked against the serialized value;
// any disagreement throws with the element index.
std::vector<AnalysisRecord> read_json(const std::string& path);

std::string to_csv_text(std::span<const AnalysisRecord> records);
void write_csv(std::span<const AnalysisRecord> records,
               const std::string& path);

// fig1/fig2: density of the letter in the subword (x) against the same
// letter in its reversal (y), letter 0 and 1 respectively. fig3/fig4:
// length (x) against density (y), two tagged series, subword first.
enum class Figure { fig1, fig2, fig3, fig4 };

Figure figure_from_name(std::string_view name);
std::string to_string(Figure f);

struct PlotRow {
    std::string series;
    std::string x;
    std::string y;
};

struct PlotTable {
    bool tagged = false;
    std::vector<PlotRow> rows;

    // Space-separated columns: "series x y" when tagged, "x y" otherwise.
    std::string to_text() const;
};

PlotTable emit_plot_points(std::span<const AnalysisRecord> records,
                           Figure figure);

// Aggregate counts and mean densities, kept exact; rendering happens in
// summary_text.
struct SummaryStats {
    std::size_t total_records = 0;
    std::size_t palindromic_count = 0;
    Rational avg0_all, avg1_all;
    Rational avg0_pal, avg1_pal;
    Rational avg0_nonpal, avg1_nonpal;
};

SummaryStats summary(std::span<const AnalysisRecord> records,
                     AverageWeighting weighting =
                         AverageWeighting::per_record);

std::string summary_text(const SummaryStats& s);

}  // namespace fibword
