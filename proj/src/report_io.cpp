#include "fibword/report_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "fibword/palindromes.hpp"

namespace fibword {

namespace {

AnalysisRecord make_record(const Word& w) {
    AnalysisRecord rec;
    rec.subword = w;
    rec.length = static_cast<int>(w.size());
    rec.density0 = density(w, Symbol::zero);
    rec.density1 = density(w, Symbol::one);
    rec.palindrome = reverse(w);
    rec.is_palindrome = (w == rec.palindrome);
    rec.pal_density0 = density(rec.palindrome, Symbol::zero);
    rec.pal_density1 = density(rec.palindrome, Symbol::one);
    auto [d0, d1] = density_delta(w);
    rec.delta0 = d0;
    rec.delta1 = d1;
    return rec;
}

}  // namespace

std::vector<AnalysisRecord> build_analysis_records(const FactorSet& fs,
                                                   int threads) {
    std::vector<const Word*> ordered;
    ordered.reserve(fs.total_count());
    for (const auto& [n, bucket] : fs.by_length)
        for (const Word& w : bucket) ordered.push_back(&w);

    std::vector<AnalysisRecord> records(ordered.size());
    const auto total = static_cast<long long>(ordered.size());
#pragma omp parallel for num_threads(threads > 1 ? threads : 1) \
    schedule(static) if (threads > 1)
    for (long long i = 0; i < total; ++i)
        records[static_cast<std::size_t>(i)] =
            make_record(*ordered[static_cast<std::size_t>(i)]);
    return records;
}

namespace {

void append_json_object(std::string& out, const AnalysisRecord& rec) {
    out += "{\"subword\":\"";
    out += rec.subword.str();
    out += "\",\"length\":";
    out += std::to_string(rec.length);
    out += ",\"density_0\":\"";
    out += rec.density0.rendered();
    out += "\",\"density_1\":\"";
    out += rec.density1.rendered();
    out += "\",\"palindrome\":\"";
    out += rec.palindrome.str();
    out += "\",\"is_palindrome\":";
    out += rec.is_palindrome ? "true" : "false";
    out += ",\"palindrome_density_0\":\"";
    out += rec.pal_density0.rendered();
    out += "\",\"palindrome_density_1\":\"";
    out += rec.pal_density1.rendered();
    out += "\"}";
}

void write_text_file(const std::string& text, const std::string& path,
                     const char* op) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(std::string(op) + ": cannot open " + path);
    out << text;
    out.flush();
    if (!out)
        throw std::runtime_error(std::string(op) + ": write failed on " +
                                 path);
}

}  // namespace

std::string to_json_text(std::span<const AnalysisRecord> records) {
    if (records.empty()) return "[]\n";
    std::string out = "[\n";
    bool first = true;
    for (const AnalysisRecord& rec : records) {
        if (!first) out += ",\n";
        first = false;
        out += "  ";
        append_json_object(out, rec);
    }
    out += "\n]\n";
    return out;
}

void write_json(std::span<const AnalysisRecord> records,
                const std::string& path) {
    write_text_file(to_json_text(records), path, "write_json");
}

std::vector<AnalysisRecord> read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_json: cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error("read_json: " + path + ": " + e.what());
    }
    if (!doc.is_array())
        throw std::runtime_error("read_json: " + path +
                                 ": top level is not an array");

    std::vector<AnalysisRecord> records;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto fail = [&](const std::string& what) -> std::runtime_error {
            return std::runtime_error("read_json: " + path + ": element " +
                                      std::to_string(i) + ": " + what);
        };
        const nlohmann::json& el = doc[i];
        if (!el.is_object()) throw fail("not an object");
        if (el.size() != 8) throw fail("expected exactly 8 keys");
        for (const char* key :
             {"subword", "length", "density_0", "density_1", "palindrome",
              "is_palindrome", "palindrome_density_0",
              "palindrome_density_1"})
            if (!el.contains(key))
                throw fail(std::string("missing key ") + key);
        if (!el["subword"].is_string() || !el["length"].is_number_integer() ||
            !el["density_0"].is_string() || !el["density_1"].is_string() ||
            !el["palindrome"].is_string() ||
            !el["is_palindrome"].is_boolean() ||
            !el["palindrome_density_0"].is_string() ||
            !el["palindrome_density_1"].is_string())
            throw fail("key with unexpected type");

        AnalysisRecord rec;
        try {
            rec = make_record(Word(el["subword"].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
        // Every serialized field must agree with recomputation from the
        // subword; the artifact carries no independent degrees of freedom.
        if (rec.length != el["length"].get<int>())
            throw fail("length disagrees with subword");
        if (rec.density0.rendered() != el["density_0"].get<std::string>() ||
            rec.density1.rendered() != el["density_1"].get<std::string>())
            throw fail("density disagrees with subword");
        if (rec.palindrome.str() != el["palindrome"].get<std::string>())
            throw fail("palindrome disagrees with subword");
        if (rec.is_palindrome != el["is_palindrome"].get<bool>())
            throw fail("is_palindrome disagrees with subword");
        if (rec.pal_density0.rendered() !=
                el["palindrome_density_0"].get<std::string>() ||
            rec.pal_density1.rendered() !=
                el["palindrome_density_1"].get<std::string>())
            throw fail("palindrome density disagrees with subword");
        records.push_back(std::move(rec));
    }
    return records;
}

std::string to_csv_text(std::span<const AnalysisRecord> records) {
    std::string out =
        "subword,length,density_0,density_1,palindrome,is_palindrome,"
        "palindrome_density_0,palindrome_density_1,delta_0,delta_1\n";
    for (const AnalysisRecord& rec : records) {
        out += rec.subword.str();
        out += ',';
        out += std::to_string(rec.length);
        out += ',';
        out += rec.density0.rendered();
        out += ',';
        out += rec.density1.rendered();
        out += ',';
        out += rec.palindrome.str();
        out += ',';
        out += rec.is_palindrome ? "true" : "false";
        out += ',';
        out += rec.pal_density0.rendered();
        out += ',';
        out += rec.pal_density1.rendered();
        out += ',';
        out += render_fixed4(rec.delta0);
        out += ',';
        out += render_fixed4(rec.delta1);
        out += '\n';
    }
    return out;
}

void write_csv(std::span<const AnalysisRecord> records,
               const std::string& path) {
    write_text_file(to_csv_text(records), path, "write_csv");
}

Figure figure_from_name(std::string_view name) {
    if (name == "fig1") return Figure::fig1;
    if (name == "fig2") return Figure::fig2;
    if (name == "fig3") return Figure::fig3;
    if (name == "fig4") return Figure::fig4;
    throw std::invalid_argument("figure_from_name: expected fig1..fig4");
}

std::string to_string(Figure f) {
    switch (f) {
        case Figure::fig1: return "fig1";
        case Figure::fig2: return "fig2";
        case Figure::fig3: return "fig3";
        case Figure::fig4: return "fig4";
    }
    throw std::logic_error("to_string: bad Figure");
}

std::string PlotTable::to_text() const {
    std::string out;
    for (const PlotRow& row : rows) {
        if (tagged) {
            out += row.series;
            out += ' ';
        }
        out += row.x;
        out += ' ';
        out += row.y;
        out += '\n';
    }
    return out;
}

PlotTable emit_plot_points(std::span<const AnalysisRecord> records,
                           Figure figure) {
    if (records.empty())
        throw std::invalid_argument("emit_plot_points: no records");
    PlotTable table;
    switch (figure) {
        case Figure::fig1:
            for (const AnalysisRecord& rec : records)
                table.rows.push_back({"", rec.density0.rendered(),
                                      rec.pal_density0.rendered()});
            break;
        case Figure::fig2:
            for (const AnalysisRecord& rec : records)
                table.rows.push_back({"", rec.density1.rendered(),
                                      rec.pal_density1.rendered()});
            break;
        case Figure::fig3:
        case Figure::fig4: {
            table.tagged = true;
            const bool zero = (figure == Figure::fig3);
            for (const AnalysisRecord& rec : records)
                table.rows.push_back(
                    {"subword", std::to_string(rec.length),
                     (zero ? rec.density0 : rec.density1).rendered()});
            for (const AnalysisRecord& rec : records)
                table.rows.push_back(
                    {"palindrome", std::to_string(rec.length),
                     (zero ? rec.pal_density0 : rec.pal_density1)
                         .rendered()});
            break;
        }
    }
    return table;
}

SummaryStats summary(std::span<const AnalysisRecord> records,
                     AverageWeighting weighting) {
    if (records.empty())
        throw std::invalid_argument("summary: no records");
    SummaryStats s;
    s.total_records = records.size();
    for (const AnalysisRecord& rec : records)
        if (rec.is_palindrome) ++s.palindromic_count;
    s.avg0_all = average_density(records, Symbol::zero, RecordFilter::all,
                                 weighting);
    s.avg1_all = average_density(records, Symbol::one, RecordFilter::all,
                                 weighting);
    s.avg0_pal = average_density(records, Symbol::zero,
                                 RecordFilter::palindromic, weighting);
    s.avg1_pal = average_density(records, Symbol::one,
                                 RecordFilter::palindromic, weighting);
    s.avg0_nonpal = average_density(records, Symbol::zero,
                                    RecordFilter::non_palindromic, weighting);
    s.avg1_nonpal = average_density(records, Symbol::one,
                                    RecordFilter::non_palindromic, weighting);
    return s;
}

std::string summary_text(const SummaryStats& s) {
    std::string out;
    out += "records " + std::to_string(s.total_records) + "\n";
    out += "palindromic " + std::to_string(s.palindromic_count) + "\n";
    out += "avg_density_0_all " + render_fixed4(s.avg0_all) + "\n";
    out += "avg_density_1_all " + render_fixed4(s.avg1_all) + "\n";
    out += "avg_density_0_palindromic " + render_fixed4(s.avg0_pal) + "\n";
    out += "avg_density_1_palindromic " + render_fixed4(s.avg1_pal) + "\n";
    out += "avg_density_0_non_palindromic " + render_fixed4(s.avg0_nonpal) +
           "\n";
    out += "avg_density_1_non_palindromic " + render_fixed4(s.avg1_nonpal) +
           "\n";
    return out;
}

}  // namespace fibword
