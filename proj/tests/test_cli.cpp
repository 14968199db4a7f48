#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "json.hpp"

#include "fibword/factor_enum.hpp"
#include "fibword/palindromes.hpp"
#include "fibword/report_io.hpp"
#include "fibword/word_gen.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    RunResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.out.append(buf, n);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -2;
    return result;
}

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::cout << "ok   " << what << '\n';
    } else {
        ++failures;
        std::cout << "FAIL " << what << '\n';
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-fibword-binary>\n";
        return 2;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";
    const std::string quiet = " 2>/dev/null";

    using namespace fibword;
    namespace fs = std::filesystem;

    {
        const RunResult r = run_cmd(bin + " generate --index 6" + quiet);
        expect(r.code == 0 && r.out == "1011010110110\n",
               "generate --index 6 prints the generation");
    }
    {
        const RunResult r = run_cmd(
            bin + " generate --index 7 --convention morphism" + quiet);
        expect(r.code == 0 && r.out == "0100101001001\n",
               "generate --index 7 --convention morphism");
    }
    {
        const RunResult r = run_cmd(
            bin + " generate --index 9 --convention morphism" + quiet);
        expect(r.code == 0 &&
                   r.out == "0100101001001010010100100101001001\n",
               "generate --index 9 --convention morphism");
    }
    {
        const RunResult r = run_cmd(
            bin + " generate --index 0 --convention morphism" + quiet);
        expect(r.code == 2, "morphism index 0 is an argument error");
    }
    expect(run_cmd(bin + " generate" + quiet).code == 2,
           "generate without --index exits 2");
    expect(run_cmd(bin + " generate --index -3" + quiet).code == 2,
           "negative index exits 2");
    expect(run_cmd(bin + " generate --index 5 --convention bogus" +
                   quiet).code == 2,
           "unknown convention exits 2");
    expect(run_cmd(bin + quiet).code == 2, "missing subcommand exits 2");
    expect(run_cmd(bin + " frobnicate" + quiet).code == 2,
           "unknown subcommand exits 2");
    expect(run_cmd(bin + " --help" + quiet).code == 0, "--help exits 0");
    expect(run_cmd(bin + " generate --index 40 --cap 1000" + quiet).code == 1,
           "cap overflow exits 1");

    {
        const RunResult r = run_cmd(bin + " census --max-len 10" + quiet);
        expect(r.code == 0 &&
                   r.out == "1 2\n2 1\n3 2\n4 1\n5 2\n6 1\n7 2\n8 1\n9 2\n"
                            "10 1\n",
               "census --max-len 10 prints the per-length counts");
    }
    {
        const RunResult r = run_cmd(
            bin + " census --max-len 4 --list" + quiet);
        const std::string expected = census_table(
            palindrome_census(
                saturated_factor_set(4, Convention::concat_rule)),
            true);
        expect(r.code == 0 && r.out == expected,
               "census --list matches the library table");
    }
    {
        const RunResult r = run_cmd(
            bin + " census --max-len 29 --convention morphism" + quiet);
        expect(r.code == 0 && count_lines(r.out) == 29 &&
                   contains(r.out, "29 2"),
               "morphism census has 29 rows ending in 29 2");
    }

    const fs::path dir =
        fs::temp_directory_path() /
        ("fibword-cli-" +
         std::to_string(
             std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir);
    const std::string json1 = (dir / "a.json").string();
    const std::string csv1 = (dir / "a.csv").string();
    const std::string json2 = (dir / "b.json").string();
    const std::string csv2 = (dir / "b.csv").string();

    {
        const RunResult r = run_cmd(bin + " analyze --threads 2 --json " +
                                    json1 + " --csv " + csv1 + quiet);
        expect(r.code == 0, "analyze exits 0");
        expect(contains(r.out, "convention concat\n") &&
                   contains(r.out, "max_len 29\n") &&
                   contains(r.out, "saturated_generation 10\n"),
               "analyze reports convention, bound, generation");
        expect(contains(r.out, "records 464\n") &&
                   contains(r.out, "palindromic 44\n"),
               "analyze reports the record counts");
        expect(contains(r.out, "avg_density_0_all 0.3828\n") &&
                   contains(r.out, "avg_density_1_all 0.6172\n") &&
                   contains(r.out, "avg_density_0_palindromic 0.3840\n") &&
                   contains(r.out, "avg_density_1_palindromic 0.6160\n") &&
                   contains(r.out,
                            "avg_density_0_non_palindromic 0.3827\n") &&
                   contains(r.out,
                            "avg_density_1_non_palindromic 0.6173\n"),
               "analyze reports the six averages");
        expect(fs::exists(json1) && fs::exists(csv1),
               "analyze writes both artifacts");
        expect(read_json(json1).size() == 464,
               "the JSON artifact holds 464 records");
    }
    {
        const RunResult r = run_cmd(bin + " analyze --threads 3 --json " +
                                    json2 + " --csv " + csv2 + quiet);
        expect(r.code == 0, "second analyze exits 0");
        expect(read_file(json1) == read_file(json2),
               "JSON artifacts are byte-identical across runs");
        expect(read_file(csv1) == read_file(csv2),
               "CSV artifacts are byte-identical across runs");
    }
    {
        const RunResult r = run_cmd(
            bin + " analyze --weighting length-weighted --json " + json2 +
            " --csv " + csv2 + quiet);
        expect(r.code == 0 && contains(r.out, "avg_density_0_all "),
               "length-weighted analyze runs");
    }
    expect(run_cmd(bin + " analyze --json /nonexistent-dir-xyz/x.json" +
                   " --csv " + csv2 + quiet).code == 1,
           "unwritable artifact path exits 1");

    {
        const RunResult r = run_cmd(bin + " plot --figure fig1" + quiet);
        expect(r.code == 0 && count_lines(r.out) == 464,
               "plot fig1 emits 464 points");
        bool diagonal = true;
        std::size_t pos = 0;
        while (pos < r.out.size()) {
            const std::size_t eol = r.out.find('\n', pos);
            const std::string line = r.out.substr(pos, eol - pos);
            const std::size_t sp = line.find(' ');
            if (sp == std::string::npos ||
                line.substr(0, sp) != line.substr(sp + 1))
                diagonal = false;
            pos = eol + 1;
        }
        expect(diagonal, "plot fig1 points satisfy x = y");
    }
    {
        const std::string out_path = (dir / "fig3.txt").string();
        const RunResult r = run_cmd(bin + " plot --figure fig3 --out " +
                                    out_path + quiet);
        expect(r.code == 0 && count_lines(read_file(out_path)) == 928,
               "plot fig3 --out writes 928 tagged points");
    }
    expect(run_cmd(bin + " plot --figure fig9" + quiet).code == 2,
           "unknown figure exits 2");

    {
        const RunResult r = run_cmd(bin + " verify --threads 2" + quiet);
        expect(r.code == 0, "verify exits 0");
        bool parsed = false;
        bool all_pass = false;
        bool has_window_note = false;
        try {
            const auto doc = nlohmann::json::parse(r.out);
            parsed = true;
            all_pass = doc.at("pass").get<bool>();
            for (const auto& c : doc.at("checks"))
                if (!c.at("pass").get<bool>()) all_pass = false;
            for (const auto& note : doc.at("notices"))
                if (contains(note.get<std::string>(), "length 55"))
                    has_window_note = true;
        } catch (...) {
        }
        expect(parsed, "verify output parses as JSON");
        expect(all_pass, "verify reports every check passing");
        expect(has_window_note,
               "verify notices include the length-55 window note");
    }

    fs::remove_all(dir);

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cout << "test_cli: " << failures << " checks failed\n";
    return 1;
}
