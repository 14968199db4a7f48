#include "fibword/verify.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "fibword/density.hpp"
#include "fibword/factor_enum.hpp"
#include "fibword/golden.hpp"
#include "fibword/palindromes.hpp"
#include "fibword/report_io.hpp"
#include "fibword/word_gen.hpp"

namespace fibword {

bool VerifyReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["pass"] = all_pass();
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        doc["checks"].push_back(std::move(entry));
    }
    doc["notices"] = notices;
    return doc.dump(2) + "\n";
}

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

// q < phi, decided in exact integer arithmetic: with q = a/b (b > 0),
// q < (1+sqrt(5))/2 iff 2a-b < 0 or (2a-b)^2 < 5b^2. Safe for the small
// components that appear in per-length means.
bool less_than_phi(const Rational& q) {
    const detail::int128 a = q.num();
    const detail::int128 b = q.den();
    const detail::int128 t = 2 * a - b;
    if (t < 0) return true;
    return t * t < 5 * b * b;
}

// |r - (phi-1)| < eps. phi is irrational, so strict and non-strict agree.
bool within_of_phi_minus_one(const Rational& r, const Rational& eps) {
    const Rational one(1, 1);
    return less_than_phi(r - eps + one) && !less_than_phi(r + eps + one);
}

Word random_word(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::string bits;
    const std::size_t len = len_dist(rng);
    bits.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        bits.push_back(bit(rng) ? '1' : '0');
    return Word(std::move(bits));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

VerifyReport run_verification(int threads) {
    VerifyReport report;

    const auto check = [&](const char* name,
                           const std::function<Outcome()>& body) {
        CheckResult result;
        result.name = name;
        try {
            Outcome outcome = body();
            result.pass = outcome.pass;
            result.detail = std::move(outcome.detail);
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(result));
    };

    // Shared context. Failures here would surface in every dependent
    // check, so build eagerly and let exceptions fail the first one.
    const FactorSet fs_c =
        saturated_factor_set(29, Convention::concat_rule, threads);
    const FactorSet fs_m =
        saturated_factor_set(29, Convention::morphism_fix, threads);
    const std::vector<AnalysisRecord> records =
        build_analysis_records(fs_c, threads);

    check("arithmetic-known-values", [&] {
        if (fib_number(0) != 1 || fib_number(1) != 1 || fib_number(2) != 2 ||
            fib_number(6) != 13 || fib_number(9) != 55 ||
            fib_number(10) != 89)
            return bad("fib_number mismatch on small indices");
        if (fib_number(90) != 4660046610375530309ULL)
            return bad("fib_number(90) mismatch");
        if (floor_n_phi(0) != 0 || floor_n_phi(4) != 6 || floor_n_phi(9) != 14)
            return bad("floor_n_phi mismatch on known values");
        std::string first8;
        for (std::uint64_t p = 1; p <= 8; ++p)
            first8.push_back(to_char(beatty_symbol(p)));
        if (first8 != "10110101")
            return bad("beatty_symbol positions 1..8 gave " + first8);
        return ok("fib_number, floor_n_phi, beatty_symbol known values");
    });

    check("generation-known-words", [&] {
        if (fib_word_concat(0).str() != "0" ||
            fib_word_concat(1).str() != "1" ||
            fib_word_concat(2).str() != "10" ||
            fib_word_concat(3).str() != "101" ||
            fib_word_concat(4).str() != "10110" ||
            fib_word_concat(5).str() != "10110101" ||
            fib_word_concat(6).str() != "1011010110110")
            return bad("concatenation generations 0..6 mismatch");
        if (fib_word_morphism(1).str() != "1" ||
            fib_word_morphism(2).str() != "0" ||
            fib_word_morphism(3).str() != "01" ||
            fib_word_morphism(4).str() != "010" ||
            fib_word_morphism(5).str() != "01001" ||
            fib_word_morphism(6).str() != "01001010" ||
            fib_word_morphism(7).str() != "0100101001001")
            return bad("morphism generations 1..7 mismatch");
        if (fib_prefix(34, Convention::morphism_fix).str() !=
            "0100101001001010010100100101001001")
            return bad("34-symbol morphism prefix mismatch");
        return ok("generations 0..7 and the 34-symbol prefix match");
    });

    check("concat-recurrence-2-25", [&] {
        for (int n = 2; n <= 25; ++n) {
            const std::string whole = fib_word_concat(n).str();
            const std::string glued =
                fib_word_concat(n - 1).str() + fib_word_concat(n - 2).str();
            if (whole != glued)
                return bad("recurrence fails at n=" + std::to_string(n));
        }
        return ok("f_n = f_{n-1} f_{n-2} for n in [2,25]");
    });

    check("generation-lengths-fib", [&] {
        for (int n = 0; n <= 25; ++n)
            if (fib_word_concat(n).size() != fib_number(n))
                return bad("concat length off at n=" + std::to_string(n));
        for (int n = 1; n <= 25; ++n)
            if (fib_word_morphism(n).size() != fib_number(n - 1))
                return bad("morphism length off at n=" + std::to_string(n));
        return ok("lengths follow the Fibonacci recurrence");
    });

    check("beatty-oracle-100000", [&] {
        const Word generated = fib_prefix(100000, Convention::concat_rule);
        const Word serial =
            beatty_prefix_serial(100000, Convention::concat_rule);
        const Word parallel =
            beatty_prefix_parallel(100000, Convention::concat_rule,
                                   threads > 1 ? threads : 2);
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < 100000; ++i)
            if (generated[i] != serial[i]) ++mismatches;
        if (mismatches != 0)
            return bad(std::to_string(mismatches) +
                       " mismatches against the Beatty formula");
        if (serial != parallel)
            return bad("serial and parallel Beatty prefixes disagree");
        return ok("100000 symbols agree with the Beatty formula");
    });

    check("prefix-consistency-sample", [&] {
        const Word full = fib_prefix(10000, Convention::concat_rule);
        for (std::size_t k : {std::size_t(1), std::size_t(2), std::size_t(3),
                              std::size_t(5), std::size_t(8),
                              std::size_t(13), std::size_t(100),
                              std::size_t(999), std::size_t(4181),
                              std::size_t(9999)}) {
            if (fib_prefix(k, Convention::concat_rule).view() !=
                full.view().substr(0, k))
                return bad("prefix of length " + std::to_string(k) +
                           " is not a prefix of the longer word");
        }
        return ok("sampled prefixes nest correctly");
    });

    check("convention-duality-10000", [&] {
        const Word concat = fib_prefix(10000, Convention::concat_rule);
        const Word morphism = fib_prefix(10000, Convention::morphism_fix);
        if (swap_letters(concat) != morphism)
            return bad("letter swap does not map one convention onto the "
                       "other");
        return ok("the conventions are letter-swaps over 10000 symbols");
    });

    check("floor-phi-consecutive-steps-1e6", [&] {
        std::uint64_t prev = floor_n_phi(0);
        for (std::uint64_t n = 1; n <= 1000000; ++n) {
            const std::uint64_t cur = floor_n_phi(n);
            const std::uint64_t step = cur - prev;
            if (step != 1 && step != 2)
                return bad("step " + std::to_string(step) + " at n=" +
                           std::to_string(n));
            prev = cur;
        }
        return ok("floor(n*phi) steps are 1 or 2 up to n=10^6");
    });

    check("swap-involution-random", [&] {
        std::mt19937 rng(20260816u);
        for (int i = 0; i < 1000; ++i) {
            const Word w = random_word(rng, 200);
            if (swap_letters(swap_letters(w)) != w)
                return bad("involution broken on case " + std::to_string(i));
        }
        return ok("swap_letters is an involution on 1000 random words");
    });

    check("factor-window-bound", [&] {
        std::mt19937 rng(7u);
        for (int i = 0; i < 50; ++i) {
            const Word w = random_word(rng, 120);
            if (w.empty()) continue;
            const FactorSet fs = unique_factors(w, 12, threads);
            for (const auto& [n, bucket] : fs.by_length)
                if (bucket.size() >
                    w.size() - static_cast<std::size_t>(n) + 1)
                    return bad("window bound broken at n=" +
                               std::to_string(n));
        }
        return ok("factor counts stay within the window bound");
    });

    check("factor-known-values", [&] {
        const FactorSet fs = unique_factors(Word("10110101"), 3, threads);
        const std::set<Word> expect3{Word("010"), Word("011"), Word("101"),
                                     Word("110")};
        if (fs.by_length.at(3) != expect3)
            return bad("length-3 factors of 10110101 mismatch");
        if (factor_complexity(fs, 3) != 4)
            return bad("length-3 complexity of 10110101 is not 4");
        const FactorSet single = unique_factors(Word("0"), 1);
        if (single.by_length.at(1) != std::set<Word>{Word("0")})
            return bad("factors of the single-letter word mismatch");
        const std::set<Word> letters{Word("0"), Word("1")};
        if (fs.by_length.at(1) != letters)
            return bad("length-1 factors of 10110101 mismatch");
        return ok("small factor enumerations match hand enumeration");
    });

    check("saturation-small", [&] {
        const FactorSet one = saturated_factor_set(1, Convention::concat_rule,
                                                   threads);
        if (one.total_count() != 2 || factor_complexity(one, 1) != 2)
            return bad("saturated(1) is not {0,1}");
        const FactorSet five = saturated_factor_set(5,
                                                    Convention::concat_rule,
                                                    threads);
        for (int n = 1; n <= 5; ++n)
            if (factor_complexity(five, n) !=
                static_cast<std::size_t>(n) + 1)
                return bad("saturated(5) complexity off at n=" +
                           std::to_string(n));
        return ok("small saturated sets have complexity n+1");
    });

    check("saturated-complexity-n-plus-1", [&] {
        for (int n = 1; n <= 29; ++n)
            if (factor_complexity(fs_c, n) != static_cast<std::size_t>(n) + 1)
                return bad("complexity at n=" + std::to_string(n) + " is " +
                           std::to_string(factor_complexity(fs_c, n)));
        return ok("factor complexity is n+1 for n in [1,29]");
    });

    check("factor-total-464", [&] {
        if (fs_c.total_count() != 464)
            return bad("total factor count is " +
                       std::to_string(fs_c.total_count()));
        return ok("464 distinct factors up to length 29");
    });

    check("saturation-stable-plus-two", [&] {
        const Word later = fib_word_concat(fs_c.source_generation + 2);
        const FactorSet again = unique_factors(later, 29, threads);
        if (!fs_c.same_factors(again))
            return bad("factor sets change two generations later");
        return ok("saturated sets are unchanged two generations later");
    });

    check("balanced-both-conventions", [&] {
        const auto witness_c = is_balanced(fs_c, threads);
        if (witness_c)
            return bad("violation " + witness_c->u.str() + " vs " +
                       witness_c->v.str());
        const auto witness_m = is_balanced(fs_m, threads);
        if (witness_m)
            return bad("violation " + witness_m->u.str() + " vs " +
                       witness_m->v.str() + " (morphism)");
        return ok("both conventions yield balanced factor sets");
    });

    check("balanced-witness-adhoc", [&] {
        FactorSet adhoc;
        adhoc.max_len = 2;
        adhoc.by_length[2] = {Word("00"), Word("11")};
        const auto witness = is_balanced(adhoc);
        if (!witness) return bad("constructed violation went undetected");
        const std::size_t lo = std::min(witness->count_u, witness->count_v);
        const std::size_t hi = std::max(witness->count_u, witness->count_v);
        if (lo != 0 || hi != 2)
            return bad("witness counts are " + std::to_string(lo) + " and " +
                       std::to_string(hi));
        return ok("an unbalanced set produces a concrete witness");
    });

    check("convergence-letter-count", [&] {
        const auto violation = convergence_check(fs_c, threads);
        if (violation)
            return bad("factor " + violation->factor.str() + " has " +
                       std::to_string(violation->ones) + " ones, expected " +
                       std::to_string(violation->expected_low) + " or +1");
        return ok("every factor's count of 1s is within 1 of n*(phi-1)");
    });

    check("reversal-involution-random", [&] {
        std::mt19937 rng(31337u);
        for (int i = 0; i < 1000; ++i) {
            const Word w = random_word(rng, 200);
            if (reverse(reverse(w)) != w)
                return bad("involution broken on case " + std::to_string(i));
        }
        return ok("reverse is an involution on 1000 random words");
    });

    check("reversal-count-preservation-random", [&] {
        std::mt19937 rng(97u);
        for (int i = 0; i < 1000; ++i) {
            const Word w = random_word(rng, 200);
            const Word r = reverse(w);
            if (w.count(Symbol::zero) != r.count(Symbol::zero) ||
                w.count(Symbol::one) != r.count(Symbol::one))
                return bad("counts changed on case " + std::to_string(i));
        }
        return ok("reversal preserves letter counts on 1000 random words");
    });

    check("census-law-1-30", [&] {
        const FactorSet fs30 =
            saturated_factor_set(30, Convention::concat_rule, threads);
        const PalindromeCensus census = palindrome_census(fs30, threads);
        for (int n = 1; n <= 30; ++n)
            if (census.count_at(n) != expected_palindromic_complexity(
                                          static_cast<std::size_t>(n)))
                return bad("count at n=" + std::to_string(n) + " is " +
                           std::to_string(census.count_at(n)));
        return ok("palindrome counts are 2 at odd, 1 at even lengths up to "
                  "30");
    });

    check("census-total-44", [&] {
        const PalindromeCensus census = palindrome_census(fs_c, threads);
        if (census.total_count() != 44)
            return bad("total is " + std::to_string(census.total_count()));
        return ok("44 palindromic factors up to length 29");
    });

    check("census-membership", [&] {
        const PalindromeCensus census = palindrome_census(fs_c, threads);
        for (const auto& [n, listed] : census.by_length)
            for (const Word& w : listed) {
                if (!is_palindrome(w))
                    return bad(w.str() + " listed but not a palindrome");
                if (!fs_c.by_length.at(n).contains(w))
                    return bad(w.str() + " listed but not a factor");
            }
        return ok("every census entry is a palindromic factor");
    });

    check("reversal-closure-saturated", [&] {
        for (const auto& [n, bucket] : fs_c.by_length)
            for (const Word& w : bucket)
                if (!bucket.contains(reverse(w)))
                    return bad("reversal of " + w.str() +
                               " is not a factor");
        return ok("the factor set is closed under reversal");
    });

    check("density-known-values", [&] {
        if (density(Word("10110"), Symbol::zero).ratio() != Rational(2, 5))
            return bad("density(10110, 0) mismatch");
        if (density(Word("0"), Symbol::zero).ratio() != Rational(1, 1))
            return bad("density(0, 0) mismatch");
        if (density(Word("10110101"), Symbol::one).ratio() != Rational(5, 8))
            return bad("density(10110101, 1) mismatch");
        for (const char* bits : {"10110", "0", "0100101"}) {
            const auto [d0, d1] = density_delta(Word(bits));
            if (!d0.is_zero() || !d1.is_zero())
                return bad(std::string("delta nonzero for ") + bits);
        }
        return ok("point densities and deltas match hand computation");
    });

    check("density-sum-unity-464", [&] {
        const Rational one(1, 1);
        for (const AnalysisRecord& rec : records)
            if (rec.density0.ratio() + rec.density1.ratio() != one)
                return bad("densities of " + rec.subword.str() +
                           " do not sum to 1");
        return ok("density_0 + density_1 = 1 for all records");
    });

    check("density-reversal-invariance-464", [&] {
        for (const AnalysisRecord& rec : records) {
            if (!rec.delta0.is_zero() || !rec.delta1.is_zero())
                return bad("nonzero delta for " + rec.subword.str());
            if (rec.density0.rendered() != rec.pal_density0.rendered() ||
                rec.density1.rendered() != rec.pal_density1.rendered())
                return bad("rendered densities differ for " +
                           rec.subword.str());
        }
        return ok("densities are invariant under reversal for all records");
    });

    check("profile-mean-sandwich", [&] {
        const Rational one(1, 1);
        for (const LengthProfile& p : length_profiles(fs_c, threads)) {
            if (!(p.min0 <= p.mean0 && p.mean0 <= p.max0))
                return bad("letter-0 sandwich fails at n=" +
                           std::to_string(p.length));
            if (!(p.min1 <= p.mean1 && p.mean1 <= p.max1))
                return bad("letter-1 sandwich fails at n=" +
                           std::to_string(p.length));
            if (p.mean0 + p.mean1 != one)
                return bad("means do not sum to 1 at n=" +
                           std::to_string(p.length));
        }
        return ok("per-length min <= mean <= max and means sum to 1");
    });

    check("profile-known-values", [&] {
        const auto profiles = length_profiles(fs_c, threads);
        const LengthProfile& p1 = profiles.at(0);
        if (p1.length != 1 || p1.min0 != Rational(0, 1) ||
            p1.max0 != Rational(1, 1))
            return bad("length-1 profile mismatch");
        const LengthProfile& p2 = profiles.at(1);
        if (p2.length != 2 || p2.min0 != Rational(0, 1) ||
            p2.max0 != Rational(1, 2) || p2.mean0 != Rational(1, 3))
            return bad("length-2 profile mismatch");
        if (fs_c.by_length.at(2) !=
            std::set<Word>{Word("01"), Word("10"), Word("11")})
            return bad("length-2 factors are not {01,10,11}");
        return ok("length-1 and length-2 profiles match hand computation");
    });

    check("mean-ones-within-1-over-n", [&] {
        for (const LengthProfile& p : length_profiles(fs_c, threads))
            if (!within_of_phi_minus_one(p.mean1, Rational(1, p.length)))
                return bad("mean of 1s strays beyond 1/n at n=" +
                           std::to_string(p.length));
        return ok("per-length mean density of 1s stays within 1/n of "
                  "phi-1");
    });

    check("average-exact-sum-over-464", [&] {
        Rational sum0;
        for (auto it = records.rbegin(); it != records.rend(); ++it)
            sum0 = sum0 + it->density0.ratio();
        const Rational avg = average_density(records, Symbol::zero,
                                             RecordFilter::all);
        if (avg * Rational(static_cast<std::int64_t>(records.size()), 1) !=
            sum0)
            return bad("mean times count differs from the direct sum");
        return ok("average equals the exact rational sum over 464 records");
    });

    check("summary-expected-renderings", [&] {
        const SummaryStats s = summary(records);
        const struct {
            const char* name;
            const Rational& value;
            const char* expect;
        } rows[] = {
            {"avg0_all", s.avg0_all, "0.3828"},
            {"avg1_all", s.avg1_all, "0.6172"},
            {"avg0_pal", s.avg0_pal, "0.3840"},
            {"avg1_pal", s.avg1_pal, "0.6160"},
            {"avg0_nonpal", s.avg0_nonpal, "0.3827"},
            {"avg1_nonpal", s.avg1_nonpal, "0.6173"},
        };
        for (const auto& row : rows)
            if (render_fixed4(row.value) != row.expect)
                return bad(std::string(row.name) + " renders as " +
                           render_fixed4(row.value) + ", exact " +
                           row.value.to_string() + ", expected " +
                           row.expect);
        if (s.total_records != 464 || s.palindromic_count != 44)
            return bad("record counts are " +
                       std::to_string(s.total_records) + " and " +
                       std::to_string(s.palindromic_count));
        return ok("summary renders the six expected average densities");
    });

    check("palindromic-prefixes-30", [&] {
        const auto lengths = palindromic_prefix_lengths(
            fib_prefix(30, Convention::concat_rule));
        const std::vector<std::size_t> expect{1, 3, 6, 11, 19};
        if (lengths != expect) {
            std::string got;
            for (std::size_t v : lengths)
                got += (got.empty() ? "" : ",") + std::to_string(v);
            return bad("palindromic prefix lengths are {" + got + "}");
        }
        return ok("palindromic prefixes in the first 30 symbols sit at "
                  "1, 3, 6, 11, 19");
    });

    check("json-round-trip", [&] {
        namespace fs = std::filesystem;
        const auto stamp = std::chrono::steady_clock::now()
                               .time_since_epoch()
                               .count();
        const fs::path path =
            fs::temp_directory_path() /
            ("fibword-verify-" + std::to_string(stamp) + ".json");
        write_json(records, path.string());
        const std::vector<AnalysisRecord> reread = read_json(path.string());
        fs::remove(path);
        if (reread != records)
            return bad("parsed records differ from the originals");
        if (to_json_text(reread) != to_json_text(records))
            return bad("re-serialized text differs");
        return ok("JSON artifact round-trips losslessly");
    });

    check("csv-json-consistency", [&] {
        const std::vector<std::string> lines =
            split(to_csv_text(records), '\n');
        // split leaves one empty trailing element after the final newline.
        if (lines.size() != records.size() + 2)
            return bad("unexpected CSV line count " +
                       std::to_string(lines.size()));
        if (lines[0] !=
            "subword,length,density_0,density_1,palindrome,is_palindrome,"
            "palindrome_density_0,palindrome_density_1,delta_0,delta_1")
            return bad("CSV header mismatch");
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto fields = split(lines[i + 1], ',');
            const AnalysisRecord& rec = records[i];
            if (fields.size() != 10)
                return bad("row " + std::to_string(i) + " has " +
                           std::to_string(fields.size()) + " fields");
            if (fields[0] != rec.subword.str() ||
                fields[1] != std::to_string(rec.length) ||
                fields[2] != rec.density0.rendered() ||
                fields[3] != rec.density1.rendered() ||
                fields[4] != rec.palindrome.str() ||
                fields[5] != (rec.is_palindrome ? "true" : "false") ||
                fields[6] != rec.pal_density0.rendered() ||
                fields[7] != rec.pal_density1.rendered() ||
                fields[8] != "0.0000" || fields[9] != "0.0000")
                return bad("row " + std::to_string(i) +
                           " disagrees with the record");
        }
        return ok("CSV rows carry the same data as the JSON records");
    });

    check("fig-points-x-equals-y", [&] {
        for (Figure fig : {Figure::fig1, Figure::fig2}) {
            const PlotTable table = emit_plot_points(records, fig);
            for (const PlotRow& row : table.rows)
                if (row.x != row.y)
                    return bad(to_string(fig) + " point (" + row.x + ", " +
                               row.y + ") leaves the diagonal");
        }
        for (Figure fig : {Figure::fig3, Figure::fig4}) {
            const PlotTable table = emit_plot_points(records, fig);
            const std::size_t half = records.size();
            if (table.rows.size() != 2 * half)
                return bad(to_string(fig) + " row count mismatch");
            for (std::size_t i = 0; i < half; ++i) {
                const PlotRow& a = table.rows[i];
                const PlotRow& b = table.rows[i + half];
                if (a.x != b.x || a.y != b.y)
                    return bad(to_string(fig) + " series diverge at point " +
                               std::to_string(i));
            }
        }
        return ok("scatter points lie on the diagonal; the two series "
                  "overlap pointwise");
    });

    check("artifact-stability-threads", [&] {
        const std::string text1 = to_json_text(records);
        const std::vector<AnalysisRecord> serial_records =
            build_analysis_records(fs_c, 1);
        const std::vector<AnalysisRecord> parallel_records =
            build_analysis_records(fs_c, threads > 1 ? threads : 3);
        if (to_json_text(serial_records) != text1 ||
            to_json_text(parallel_records) != text1)
            return bad("JSON text varies with thread count");
        if (to_csv_text(serial_records) != to_csv_text(parallel_records))
            return bad("CSV text varies with thread count");
        return ok("artifacts are byte-identical across thread counts");
    });

    report.notices.push_back(
        "saturation note: the factor scan stabilized at generation " +
        std::to_string(fs_c.source_generation) + " (word length " +
        std::to_string(fib_number(fs_c.source_generation)) +
        ") under the concatenation convention; a word of length 55 offers "
        "only 27 windows of length 29, fewer than the 30 distinct length-29 "
        "factors, so no length-55 word can contain them all");
    report.notices.push_back(
        "morphism note: generation 7 under the morphism convention is "
        "0100101001001 (13 symbols); any 14-symbol rendition of this "
        "generation contradicts the length recurrence");
    report.notices.push_back(
        "palindromic prefix note: within the first 30 symbols of the "
        "concatenation-convention word, palindromic prefixes occur at "
        "lengths 1, 3, 6, 11, 19; lengths 8 and 21 are not palindromic "
        "prefixes");
    report.notices.push_back(
        "averaging note: summary averages are unweighted per-record means "
        "over distinct factors; length-weighted averaging is available as "
        "an option");

    return report;
}

}  // namespace fibword
