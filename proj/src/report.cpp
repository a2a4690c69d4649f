#include "hsx/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "hsx/common.hpp"
#include "hsx/csv.hpp"
#include "hsx/numfmt.hpp"

namespace hsx {

using nlohmann::json;

ReportFormat parse_report_format(std::string_view s) {
    if (s == "csv") return ReportFormat::Csv;
    if (s == "markdown" || s == "md") return ReportFormat::Markdown;
    throw Error("unknown report format: '" + std::string(s) + "' (use csv or markdown)");
}

namespace {

std::string markdown_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const std::string& cell : cells) {
        out += ' ';
        out += cell;
        out += " |";
    }
    out += '\n';
    return out;
}

std::string markdown_separator(std::size_t columns) {
    std::string out = "|";
    for (std::size_t i = 0; i < columns; ++i) out += " --- |";
    out += '\n';
    return out;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::Csv) {
        out += csv_join(header);
        out += '\n';
        for (const auto& row : rows) {
            out += csv_join(row);
            out += '\n';
        }
    } else {
        out += markdown_row(header);
        out += markdown_separator(header.size());
        for (const auto& row : rows) out += markdown_row(row);
    }
    return out;
}

// Integer cents under the same half-away rounding as format_2dp, for
// comparing displayed values when marking column maxima.
long long rounded_cents(double v) {
    const double mag = std::abs(v) * 100.0 * (1.0 + 1e-12);
    long long cents = static_cast<long long>(std::floor(mag + 0.5));
    return v < 0 ? -cents : cents;
}

}  // namespace

std::string render_similarity_matrix(const SimilarityMatrix& matrix, ReportFormat format) {
    const std::size_t n = matrix.dataset_ids.size();
    std::vector<std::string> header;
    header.push_back("");
    for (const std::string& id : matrix.dataset_ids) header.push_back(id);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> row;
        row.push_back(format == ReportFormat::Markdown ? "**" + matrix.dataset_ids[i] + "**"
                                                       : matrix.dataset_ids[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i) {
                row.push_back("");  // lower triangle stays blank
            } else if (j == i) {
                row.push_back(matrix.measure == Measure::Definition ? "X" : "1.00");
            } else {
                const auto& cell = matrix.cells[i][j];
                row.push_back(cell ? format_2dp(*cell) : "X");
            }
        }
        rows.push_back(std::move(row));
    }
    return render_table(header, rows, format);
}

std::string render_results_table(const std::vector<ExperimentResult>& results,
                                 ReportFormat format) {
    if (results.empty()) throw Error("cannot render an empty result list");

    struct Column {
        std::string csv_name;
        std::string md_name;
        double (*value)(const ExperimentResult&);
    };
    static const std::vector<Column> columns = {
        {"nonhate_precision", "NonHate Prec.",
         [](const ExperimentResult& r) { return r.metrics.nonhate.precision; }},
        {"nonhate_recall", "NonHate Rec.",
         [](const ExperimentResult& r) { return r.metrics.nonhate.recall; }},
        {"hate_precision", "Hate Prec.",
         [](const ExperimentResult& r) { return r.metrics.hate.precision; }},
        {"hate_recall", "Hate Rec.",
         [](const ExperimentResult& r) { return r.metrics.hate.recall; }},
        {"f1", "F1", [](const ExperimentResult& r) { return r.metrics.macro_f1; }},
    };

    // column maxima over displayed precision; ties are all marked
    std::vector<long long> max_cents(columns.size(), std::numeric_limits<long long>::min());
    for (const ExperimentResult& r : results) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            max_cents[c] = std::max(max_cents[c], rounded_cents(columns[c].value(r)));
        }
    }

    auto training_cell = [](const ExperimentResult& r) {
        std::string out = r.spec.target;
        for (const std::string& augment : r.spec.augments) {
            out += '+';
            out += augment;
        }
        return out;
    };

    std::vector<std::string> header = {"Target", "Training Datasets"};
    for (const Column& c : columns) {
        header.push_back(format == ReportFormat::Csv ? c.csv_name : c.md_name);
    }
    if (format == ReportFormat::Csv) header.push_back("max_flags");

    std::vector<std::vector<std::string>> rows;
    for (const ExperimentResult& r : results) {
        std::vector<std::string> row = {r.spec.target, training_cell(r)};
        std::string flags;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const double v = columns[c].value(r);
            const bool is_max = rounded_cents(v) == max_cents[c];
            std::string cell = format_2dp(v);
            if (is_max) {
                if (format == ReportFormat::Markdown) {
                    cell = "**" + cell + "**";
                } else {
                    if (!flags.empty()) flags += ';';
                    flags += columns[c].csv_name;
                }
            }
            row.push_back(std::move(cell));
        }
        if (format == ReportFormat::Csv) row.push_back(flags);
        rows.push_back(std::move(row));
    }
    return render_table(header, rows, format);
}

std::string render_dataset_stats(const std::vector<DatasetMeta>& metas, ReportFormat format) {
    if (metas.empty()) throw Error("cannot render stats for an empty registry");
    const std::vector<std::string> header = {"Data set", "Language", "Platform",
                                             "Size",     "% Hate",   "Availability"};
    std::vector<std::vector<std::string>> rows;
    for (const DatasetMeta& meta : metas) {
        rows.push_back({meta.dataset_id, meta.language, std::string(to_string(meta.platform)),
                        std::to_string(meta.size), format_2dp_trunc(meta.hate_fraction * 100.0),
                        std::string(to_string(meta.availability))});
    }
    return render_table(header, rows, format);
}

std::string render_reliability(const ReliabilitySummary& summary, ReportFormat format) {
    std::vector<std::string> header;
    header.push_back("");
    for (const std::string& id : summary.annotator_ids) header.push_back(id);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < summary.annotator_ids.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(summary.annotator_ids[i]);
        for (std::size_t j = 0; j < summary.annotator_ids.size(); ++j) {
            row.push_back(format_2dp(summary.kappa[i][j]));
        }
        rows.push_back(std::move(row));
    }
    std::string out = render_table(header, rows, format);
    out += format == ReportFormat::Csv ? "aggregate," + format_2dp(summary.aggregate) + "\n"
                                       : "\nAggregate kappa: " + format_2dp(summary.aggregate)
                                             + "\n";
    return out;
}

std::string render_metrics(const Metrics& m) {
    std::string out;
    out += "confusion tp=" + std::to_string(m.confusion.tp) + " fp="
           + std::to_string(m.confusion.fp) + " fn=" + std::to_string(m.confusion.fn)
           + " tn=" + std::to_string(m.confusion.tn) + "\n";
    out += "nonhate precision=" + format_2dp(m.nonhate.precision)
           + " recall=" + format_2dp(m.nonhate.recall) + " f1=" + format_2dp(m.nonhate.f1) + "\n";
    out += "hate precision=" + format_2dp(m.hate.precision)
           + " recall=" + format_2dp(m.hate.recall) + " f1=" + format_2dp(m.hate.f1) + "\n";
    out += "macro_f1=" + format_2dp(m.macro_f1) + "\n";
    return out;
}

namespace {

json spec_to_json(const ExperimentSpec& spec) {
    json obj;
    obj["target"] = spec.target;
    obj["augments"] = spec.augments;
    obj["sampling"] = to_string(spec.sampling);
    obj["sampling_scope"] = to_string(spec.sampling_scope);
    obj["split_ratio"] = spec.split_ratio;
    obj["seed"] = spec.seed;
    obj["features"] = {{"dimension", spec.features.dimension},
                       {"hash_seed", spec.features.hash_seed}};
    obj["model"] = {{"learning_rate", spec.model.learning_rate},
                    {"epochs", spec.model.epochs},
                    {"l2_penalty", spec.model.l2_penalty},
                    {"seed", spec.model.seed}};
    return obj;
}

ExperimentSpec spec_from_json(const json& obj) {
    ExperimentSpec spec;
    spec.target = obj.at("target").get<std::string>();
    spec.augments = obj.at("augments").get<std::vector<std::string>>();
    spec.sampling = parse_sampling(obj.at("sampling").get<std::string>());
    spec.sampling_scope = parse_sampling_scope(obj.at("sampling_scope").get<std::string>());
    spec.split_ratio = obj.at("split_ratio").get<double>();
    spec.seed = obj.at("seed").get<std::uint64_t>();
    spec.features.dimension = obj.at("features").at("dimension").get<std::uint32_t>();
    spec.features.hash_seed = obj.at("features").at("hash_seed").get<std::uint64_t>();
    spec.model.learning_rate = obj.at("model").at("learning_rate").get<double>();
    spec.model.epochs = obj.at("model").at("epochs").get<std::uint32_t>();
    spec.model.l2_penalty = obj.at("model").at("l2_penalty").get<double>();
    spec.model.seed = obj.at("model").at("seed").get<std::uint64_t>();
    return spec;
}

json metrics_to_json(const Metrics& m) {
    json obj;
    obj["confusion"] = {{"tp", m.confusion.tp},
                        {"fp", m.confusion.fp},
                        {"fn", m.confusion.fn},
                        {"tn", m.confusion.tn}};
    obj["hate"] = {{"precision", m.hate.precision},
                   {"recall", m.hate.recall},
                   {"f1", m.hate.f1}};
    obj["nonhate"] = {{"precision", m.nonhate.precision},
                      {"recall", m.nonhate.recall},
                      {"f1", m.nonhate.f1}};
    obj["macro_f1"] = m.macro_f1;
    return obj;
}

Metrics metrics_from_json(const json& obj) {
    Metrics m;
    m.confusion.tp = obj.at("confusion").at("tp").get<std::uint64_t>();
    m.confusion.fp = obj.at("confusion").at("fp").get<std::uint64_t>();
    m.confusion.fn = obj.at("confusion").at("fn").get<std::uint64_t>();
    m.confusion.tn = obj.at("confusion").at("tn").get<std::uint64_t>();
    m.hate.precision = obj.at("hate").at("precision").get<double>();
    m.hate.recall = obj.at("hate").at("recall").get<double>();
    m.hate.f1 = obj.at("hate").at("f1").get<double>();
    m.nonhate.precision = obj.at("nonhate").at("precision").get<double>();
    m.nonhate.recall = obj.at("nonhate").at("recall").get<double>();
    m.nonhate.f1 = obj.at("nonhate").at("f1").get<double>();
    m.macro_f1 = obj.at("macro_f1").get<double>();
    return m;
}

}  // namespace

std::string export_results(const std::vector<ExperimentResult>& results) {
    std::string out;
    for (const ExperimentResult& r : results) {
        json obj;
        obj["spec"] = spec_to_json(r.spec);
        obj["metrics"] = metrics_to_json(r.metrics);
        obj["test_fingerprint"] = r.test_fingerprint;
        obj["train_size"] = r.train_size;
        obj["test_size"] = r.test_size;
        obj["contributions"] = r.contributions;
        out += obj.dump();
        out += '\n';
    }
    return out;
}

std::vector<ExperimentResult> parse_results(const std::string& text) {
    std::vector<ExperimentResult> results;
    std::size_t start = 0;
    std::size_t lineno = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        ++lineno;
        std::string_view line(text.data() + start, end - start);
        start = end + 1;
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw Error("results line " + std::to_string(lineno) + ": " + e.what());
        }
        try {
            ExperimentResult r;
            r.spec = spec_from_json(obj.at("spec"));
            r.metrics = metrics_from_json(obj.at("metrics"));
            r.test_fingerprint = obj.at("test_fingerprint").get<std::string>();
            r.train_size = obj.at("train_size").get<std::size_t>();
            r.test_size = obj.at("test_size").get<std::size_t>();
            r.contributions =
                obj.at("contributions").get<std::map<std::string, std::size_t>>();
            results.push_back(std::move(r));
        } catch (const json::exception& e) {
            throw Error("results line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return results;
}

}  // namespace hsx
