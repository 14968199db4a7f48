#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fibword/density.hpp"
#include "fibword/factor_enum.hpp"
#include "fibword/palindromes.hpp"
#include "fibword/report_io.hpp"
#include "fibword/verify.hpp"
#include "fibword/word_gen.hpp"

namespace {

using namespace fibword;

int run_generate(int index, const std::string& convention, std::size_t cap) {
    const Convention conv = convention_from_string(convention);
    const Word w = conv == Convention::concat_rule
                       ? fib_word_concat(index, cap)
                       : fib_word_morphism(index, cap);
    std::cout << w.str() << '\n';
    return 0;
}

int run_analyze(int max_len, const std::string& convention,
                const std::string& json_path, const std::string& csv_path,
                int threads, const std::string& weighting_name,
                std::size_t cap) {
    const Convention conv = convention_from_string(convention);
    const AverageWeighting weighting =
        weighting_name == "length-weighted" ? AverageWeighting::length_weighted
                                            : AverageWeighting::per_record;
    const FactorSet fs = saturated_factor_set(max_len, conv, threads, cap);
    const auto records = build_analysis_records(fs, threads);
    write_json(records, json_path);
    write_csv(records, csv_path);
    const SummaryStats stats = summary(records, weighting);
    std::cout << "convention " << to_string(conv) << '\n'
              << "max_len " << max_len << '\n'
              << "saturated_generation " << fs.source_generation << '\n'
              << summary_text(stats) << "json " << json_path << '\n'
              << "csv " << csv_path << '\n';
    return 0;
}

int run_census(int max_len, const std::string& convention, bool list_words,
               int threads, std::size_t cap) {
    const Convention conv = convention_from_string(convention);
    const FactorSet fs = saturated_factor_set(max_len, conv, threads, cap);
    const PalindromeCensus census = palindrome_census(fs, threads);
    std::cout << census_table(census, list_words);
    return 0;
}

int run_plot(const std::string& figure_name, int max_len,
             const std::string& convention, const std::string& out_path,
             int threads, std::size_t cap) {
    const Convention conv = convention_from_string(convention);
    const Figure figure = figure_from_name(figure_name);
    const FactorSet fs = saturated_factor_set(max_len, conv, threads, cap);
    const auto records = build_analysis_records(fs, threads);
    const std::string text = emit_plot_points(records, figure).to_text();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("plot: cannot open " + out_path);
        out << text;
        out.flush();
        if (!out)
            throw std::runtime_error("plot: write failed on " + out_path);
    }
    return 0;
}

int run_verify(int threads) {
    const VerifyReport report = run_verification(threads);
    std::cout << report.to_json();
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibonacci word generation and factor analysis"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    int index = 0;
    int max_len = 29;
    int threads = 1;
    std::size_t cap = fibword::default_length_cap;
    std::string convention = "concat";
    std::string weighting = "per-record";
    std::string figure;
    std::string json_path = "fibonacci-word-analysis-results.json";
    std::string csv_path = "processed-fibonacci-analysis.csv";
    std::string out_path;
    bool list_words = false;

    const auto add_convention = [&](CLI::App* cmd) {
        cmd->add_option("--convention", convention,
                        "Generation convention")
            ->check(CLI::IsMember({"concat", "morphism"}))
            ->capture_default_str();
    };
    const auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "Worker threads")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    const auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, "Generated word length cap")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    const auto add_max_len = [&](CLI::App* cmd) {
        cmd->add_option("--max-len", max_len, "Factor length bound")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* generate =
        app.add_subcommand("generate", "Print one Fibonacci word generation");
    generate->add_option("--index", index, "Generation index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_convention(generate);
    add_cap(generate);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Build the saturated factor dataset and artifacts");
    add_max_len(analyze);
    add_convention(analyze);
    analyze->add_option("--json", json_path, "JSON artifact path")
        ->capture_default_str();
    analyze->add_option("--csv", csv_path, "CSV artifact path")
        ->capture_default_str();
    analyze->add_option("--weighting", weighting, "Averaging mode")
        ->check(CLI::IsMember({"per-record", "length-weighted"}))
        ->capture_default_str();
    add_threads(analyze);
    add_cap(analyze);

    CLI::App* census =
        app.add_subcommand("census", "Per-length palindromic factor counts");
    add_max_len(census);
    add_convention(census);
    census->add_flag("--list", list_words, "List the palindromes");
    add_threads(census);
    add_cap(census);

    CLI::App* plot =
        app.add_subcommand("plot", "Emit plot points for one figure");
    plot->add_option("--figure", figure, "One of fig1..fig4")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    add_max_len(plot);
    add_convention(plot);
    plot->add_option("--out", out_path, "Output path (default stdout)");
    add_threads(plot);
    add_cap(plot);

    CLI::App* verify =
        app.add_subcommand("verify", "Run the full invariant suite");
    add_threads(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed())
            return run_generate(index, convention, cap);
        if (analyze->parsed())
            return run_analyze(max_len, convention, json_path, csv_path,
                               threads, weighting, cap);
        if (census->parsed())
            return run_census(max_len, convention, list_words, threads, cap);
        if (plot->parsed())
            return run_plot(figure, max_len, convention, out_path, threads,
                            cap);
        if (verify->parsed()) return run_verify(threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
