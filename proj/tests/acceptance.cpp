#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fibword/density.hpp"
#include "fibword/factor_enum.hpp"
#include "fibword/golden.hpp"
#include "fibword/palindromes.hpp"
#include "fibword/rational.hpp"
#include "fibword/report_io.hpp"
#include "fibword/verify.hpp"
#include "fibword/word_gen.hpp"

namespace {

using namespace fibword;

int passed = 0;
int total = 0;

// budget_s == 0 means untimed; otherwise the body must finish within budget.
void criterion(int num, const std::string& name, double budget_s,
               const std::function<std::string()>& body) {
    ++total;
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
        why = body();
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (why.empty() && budget_s > 0.0 && elapsed >= budget_s)
        why = "exceeded the " + std::to_string(budget_s) + "s budget";
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", elapsed);
    if (why.empty()) {
        ++passed;
        std::cout << "PASS  criterion " << num << " " << name << " ("
                  << timing << ")\n";
    } else {
        std::cout << "FAIL  criterion " << num << " " << name << " ("
                  << timing << "): " << why << '\n';
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

Word random_word(std::mt19937& rng, std::size_t min_len,
                 std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::string s;
    const std::size_t len = len_dist(rng);
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        s.push_back(bit(rng) ? '1' : '0');
    return Word(s);
}

std::string check_generation_fidelity() {
    const char* expected[] = {"0",
                              "1",
                              "10",
                              "101",
                              "10110",
                              "10110101",
                              "1011010110110"};
    for (int n = 0; n <= 6; ++n) {
        const Word w = fib_word_concat(n);
        if (w.str() != expected[n])
            return "generation " + std::to_string(n) + " is " + w.str();
    }
    const Word p = fib_prefix(34, Convention::morphism_fix);
    if (p.str() != "0100101001001010010100100101001001")
        return "34-symbol morphism prefix is " + p.str();
    return "";
}

std::string check_beatty_agreement() {
    const std::size_t n = 100000;
    for (Convention conv :
         {Convention::concat_rule, Convention::morphism_fix}) {
        const Word direct = fib_prefix(n, conv);
        const Word serial = beatty_prefix(n, conv, 1);
        const Word parallel = beatty_prefix(n, conv, 4);
        if (direct != serial)
            return std::string("serial oracle mismatch under ") +
                   to_string(conv);
        if (direct != parallel)
            return std::string("parallel oracle mismatch under ") +
                   to_string(conv);
    }
    return "";
}

std::string check_factor_enumeration() {
    const FactorSet fs = saturated_factor_set(29, Convention::concat_rule);
    if (!fs.saturated) return "factor set not marked saturated";
    if (fs.source_generation != 10)
        return "stabilized at generation " +
               std::to_string(fs.source_generation);
    if (fs.total_count() != 464)
        return "total factors " + std::to_string(fs.total_count());
    for (int n = 1; n <= 29; ++n)
        if (factor_complexity(fs, n) != static_cast<std::size_t>(n) + 1)
            return "complexity at length " + std::to_string(n) + " is " +
                   std::to_string(factor_complexity(fs, n));
    const FactorSet later =
        unique_factors(fib_word_concat(fs.source_generation + 2), 29);
    if (!fs.same_factors(later))
        return "factors changed two generations past saturation";
    return "";
}

std::string check_palindrome_census() {
    const FactorSet fs = saturated_factor_set(30, Convention::concat_rule);
    const PalindromeCensus census = palindrome_census(fs);
    for (int n = 1; n <= 30; ++n) {
        const std::size_t want = expected_palindromic_complexity(n);
        if (census.count_at(n) != want)
            return "length " + std::to_string(n) + " holds " +
                   std::to_string(census.count_at(n)) + " palindromes, not " +
                   std::to_string(want);
    }
    std::size_t up_to_29 = 0;
    for (int n = 1; n <= 29; ++n) up_to_29 += census.count_at(n);
    if (up_to_29 != 44)
        return "lengths 1..29 hold " + std::to_string(up_to_29) +
               " palindromes";
    return "";
}

std::string check_reversal_symmetry(
    const std::vector<AnalysisRecord>& records) {
    const Rational zero;
    for (const AnalysisRecord& rec : records) {
        if (!(rec.delta0 == zero) || !(rec.delta1 == zero))
            return "nonzero delta for " + rec.subword.str();
    }
    for (Figure fig : {Figure::fig1, Figure::fig2}) {
        const PlotTable table = emit_plot_points(records, fig);
        if (table.rows.size() != records.size())
            return std::string(to_string(fig)) + " row count " +
                   std::to_string(table.rows.size());
        for (const PlotRow& row : table.rows)
            if (row.x != row.y)
                return std::string(to_string(fig)) + " point off diagonal: " +
                       row.x + " " + row.y;
    }
    return "";
}

std::string check_average_densities(
    const std::vector<AnalysisRecord>& records) {
    struct Expectation {
        Symbol symbol;
        RecordFilter filter;
        const char* rendered;
        long long reference;
    };
    const Expectation cases[] = {
        {Symbol::zero, RecordFilter::all, "0.3828", 3828},
        {Symbol::one, RecordFilter::all, "0.6172", 6172},
        {Symbol::zero, RecordFilter::palindromic, "0.3840", 3840},
        {Symbol::one, RecordFilter::palindromic, "0.6160", 6160},
        {Symbol::zero, RecordFilter::non_palindromic, "0.3827", 3827},
        {Symbol::one, RecordFilter::non_palindromic, "0.6173", 6173},
    };
    const Rational tolerance(5, 10000);
    for (const Expectation& c : cases) {
        const Rational exact = average_density(records, c.symbol, c.filter);
        if (render_fixed4(exact) != std::string(c.rendered))
            return "average renders as " + render_fixed4(exact) + " not " +
                   c.rendered + " (exact " + exact.to_string() + ")";
        const Rational gap = (exact - Rational(c.reference, 10000)).abs();
        if (!(gap <= tolerance))
            return std::string("average ") + c.rendered +
                   " misses the reference by " + gap.to_string() +
                   " (exact " + exact.to_string() + ")";
    }
    return "";
}

std::string check_convergence() {
    const FactorSet fs = saturated_factor_set(29, Convention::concat_rule);
    if (const auto witness = is_balanced(fs); witness.has_value())
        return "balance fails at " + witness->u.str() + " vs " +
               witness->v.str();
    if (const auto violation = convergence_check(fs); violation.has_value())
        return violation->factor.str() + " carries " +
               std::to_string(violation->ones) + " ones";
    const Rational target(618034, 1000000);
    for (const LengthProfile& profile : length_profiles(fs)) {
        const Rational gap = (profile.mean1 - target).abs();
        const Rational bound(1, profile.length);
        if (!(gap < bound))
            return "mean one-density at length " +
                   std::to_string(profile.length) + " is " +
                   profile.mean1.to_string();
    }
    return "";
}

std::string check_artifact_stability() {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() /
        ("fibword-acceptance-" +
         std::to_string(
             std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);
    std::string why;
    std::vector<AnalysisRecord> first;
    for (int pass = 0; pass < 2 && why.empty(); ++pass) {
        const int threads = pass == 0 ? 1 : 4;
        const FactorSet factor_set =
            saturated_factor_set(29, Convention::concat_rule, threads);
        const std::vector<AnalysisRecord> records =
            build_analysis_records(factor_set, threads);
        const fs::path json_path =
            dir / ("run" + std::to_string(pass) + ".json");
        const fs::path csv_path =
            dir / ("run" + std::to_string(pass) + ".csv");
        write_json(records, json_path.string());
        write_csv(records, csv_path.string());
        const std::vector<AnalysisRecord> reread =
            read_json(json_path.string());
        if (reread != records) {
            why = "JSON round trip altered the records";
        } else if (pass == 0) {
            first = records;
        } else if (read_file(dir / "run0.json") !=
                   read_file(dir / "run1.json")) {
            why = "JSON artifacts differ across thread counts";
        } else if (read_file(dir / "run0.csv") !=
                   read_file(dir / "run1.csv")) {
            why = "CSV artifacts differ across thread counts";
        } else if (records != first) {
            why = "records differ across thread counts";
        }
    }
    fs::remove_all(dir);
    return why;
}

std::string check_properties(const std::vector<AnalysisRecord>& records) {
    std::mt19937 rng(20260816);
    for (int i = 0; i < 1000; ++i) {
        const Word w = random_word(rng, 1, 64);
        if (reverse(reverse(w)) != w)
            return "reversal involution fails on " + w.str();
        const Word r = reverse(w);
        if (r.count(Symbol::zero) != w.count(Symbol::zero) ||
            r.count(Symbol::one) != w.count(Symbol::one))
            return "reversal changes letter counts on " + w.str();
        const Rational sum =
            density(w, Symbol::zero).ratio() + density(w, Symbol::one).ratio();
        if (!(sum == Rational(1, 1)))
            return "densities of " + w.str() + " sum to " + sum.to_string();
    }
    const std::string concat_prefix =
        fib_prefix(10000, Convention::concat_rule).str();
    const std::string morphism_prefix =
        fib_prefix(10000, Convention::morphism_fix).str();
    for (std::size_t i = 0; i < concat_prefix.size(); ++i) {
        if (opposite(symbol_from_char(concat_prefix[i])) !=
            symbol_from_char(morphism_prefix[i]))
            return "conventions disagree at position " + std::to_string(i);
    }
    std::uniform_int_distribution<std::size_t> cut(1, 10000);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t k = cut(rng);
        if (swap_letters(Word(concat_prefix.substr(0, k))) !=
            Word(morphism_prefix.substr(0, k)))
            return "letter swap breaks at prefix length " + std::to_string(k);
    }
    for (const AnalysisRecord& rec : records) {
        const Word r = reverse(rec.subword);
        if (rec.density0.ratio() + rec.density1.ratio() != Rational(1, 1))
            return "record densities of " + rec.subword.str() +
                   " do not sum to 1";
        if (rec.palindrome != r)
            return "stored reversal of " + rec.subword.str() + " is wrong";
        if (density(r, Symbol::zero).ratio() != rec.density0.ratio())
            return "reversal shifts density of " + rec.subword.str();
    }
    return "";
}

}  // namespace

int main() {
    const FactorSet shared_fs =
        saturated_factor_set(29, Convention::concat_rule);
    const std::vector<AnalysisRecord> records =
        build_analysis_records(shared_fs);

    criterion(1, "generation-fidelity", 1.0, check_generation_fidelity);
    criterion(2, "beatty-oracle-agreement", 5.0, check_beatty_agreement);
    criterion(3, "factor-enumeration", 5.0, check_factor_enumeration);
    std::cout << "      note: factors of length up to 29 stabilize at "
                 "generation 10, a word of 89 symbols\n";
    criterion(4, "palindrome-census", 5.0, check_palindrome_census);
    criterion(5, "reversal-symmetry",
              0.0, [&] { return check_reversal_symmetry(records); });
    criterion(6, "average-densities",
              0.0, [&] { return check_average_densities(records); });
    criterion(7, "convergence", 0.0, check_convergence);
    criterion(8, "artifact-stability", 0.0, check_artifact_stability);
    criterion(9, "property-suite", 10.0,
              [&] { return check_properties(records); });

    // Unnumbered tenth gate: the self-verification report must pass and
    // must surface the window-count notice.
    ++total;
    {
        std::string why;
        try {
            const VerifyReport report = run_verification(1);
            if (!report.all_pass()) {
                for (const CheckResult& c : report.checks)
                    if (!c.pass) why += c.name + "; ";
                why = "failing checks: " + why;
            } else {
                bool found = false;
                for (const std::string& note : report.notices)
                    if (note.find("length 55") != std::string::npos)
                        found = true;
                if (!found) why = "missing the length-55 notice";
            }
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) {
            ++passed;
            std::cout << "PASS  verify-window-note\n";
        } else {
            std::cout << "FAIL  verify-window-note: " << why << '\n';
        }
    }

    std::cout << "acceptance: " << passed << "/" << total
              << " checks passed\n";
    return passed == total ? 0 : 1;
}
