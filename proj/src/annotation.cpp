#include "hsx/annotation.hpp"

#include <algorithm>
#include <optional>

#include "hsx/common.hpp"
#include "hsx/csv.hpp"
#include "hsx/parallel.hpp"
#include "hsx/utf8.hpp"

namespace hsx {

AnnotationSheet AnnotationSheet::load(const std::string& path, std::string annotator_id) {
    CsvTable table = read_csv_file(path);
    const std::size_t id_col = table.column("record_id", path);
    const std::size_t label_col = table.column("label", path);
    std::optional<std::size_t> marks_col;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == "hate_words") marks_col = i;
    }

    AnnotationSheet sheet;
    sheet.annotator_id = std::move(annotator_id);
    for (const CsvRow& row : table.rows) {
        const std::string& record_id = row.fields[id_col];
        if (record_id.empty()) {
            throw Error(path + ":" + std::to_string(row.line) + ": empty record_id");
        }
        Label label;
        try {
            label = parse_label(row.fields[label_col]);
        } catch (const Error& e) {
            throw Error(path + ":" + std::to_string(row.line) + ": " + e.what());
        }
        if (!sheet.labels.emplace(record_id, label).second) {
            throw Error(path + ":" + std::to_string(row.line) + ": duplicate record_id '"
                        + record_id + "'");
        }
        if (marks_col) {
            std::vector<std::string> marks;
            std::string_view field = row.fields[*marks_col];
            std::size_t start = 0;
            while (start <= field.size()) {
                std::size_t end = field.find(';', start);
                if (end == std::string_view::npos) end = field.size();
                std::string_view piece = field.substr(start, end - start);
                while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
                while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
                if (!piece.empty()) marks.push_back(utf8::lower(piece));
                if (end == field.size()) break;
                start = end + 1;
            }
            if (!marks.empty()) sheet.hate_word_marks.emplace(record_id, std::move(marks));
        }
    }
    return sheet;
}

AdjudicatedLabels majority_vote(const std::vector<AnnotationSheet>& sheets) {
    if (sheets.size() < 3) {
        throw Error("majority vote needs at least 3 sheets, got " + std::to_string(sheets.size()));
    }
    std::map<std::string, VoteCount> counts;
    for (const AnnotationSheet& sheet : sheets) {
        for (const auto& [record_id, label] : sheet.labels) {
            VoteCount& c = counts[record_id];
            if (label == Label::Hate) {
                ++c.hate;
            } else {
                ++c.nonhate;
            }
        }
    }

    std::vector<std::string> under_covered;
    std::vector<std::string> even_covered;
    for (const auto& [record_id, c] : counts) {
        const std::size_t coverage = c.hate + c.nonhate;
        if (coverage < 3) under_covered.push_back(record_id);
        if (coverage % 2 == 0) even_covered.push_back(record_id);
    }
    auto join = [](const std::vector<std::string>& ids) {
        std::string out;
        for (const auto& id : ids) {
            if (!out.empty()) out += ", ";
            out += id;
        }
        return out;
    };
    if (!under_covered.empty()) {
        throw Error("records covered by fewer than 3 sheets: " + join(under_covered));
    }
    if (!even_covered.empty()) {
        throw Error("records with even coverage (tie possible): " + join(even_covered));
    }

    AdjudicatedLabels out;
    out.vote_counts = std::move(counts);
    for (const auto& [record_id, c] : out.vote_counts) {
        out.labels.emplace(record_id, c.hate > c.nonhate ? Label::Hate : Label::NonHate);
    }
    return out;
}

double cohen_kappa(const AnnotationSheet& a, const AnnotationSheet& b) {
    std::size_t n = 0;
    std::size_t agree = 0;
    std::size_t a_hate = 0;
    std::size_t b_hate = 0;
    for (const auto& [record_id, label_a] : a.labels) {
        const auto it = b.labels.find(record_id);
        if (it == b.labels.end()) continue;
        ++n;
        if (label_a == it->second) ++agree;
        if (label_a == Label::Hate) ++a_hate;
        if (it->second == Label::Hate) ++b_hate;
    }
    if (n == 0) {
        throw Error("sheets '" + a.annotator_id + "' and '" + b.annotator_id
                    + "' share no records");
    }
    const double po = static_cast<double>(agree) / static_cast<double>(n);
    const double pa = static_cast<double>(a_hate) / static_cast<double>(n);
    const double pb = static_cast<double>(b_hate) / static_cast<double>(n);
    const double pe = pa * pb + (1.0 - pa) * (1.0 - pb);
    if (pe == 1.0) return 1.0;  // both constant and identical
    return (po - pe) / (1.0 - pe);
}

namespace {

ReliabilitySummary reliability_impl(const std::vector<AnnotationSheet>& sheets,
                                    ReliabilityAggregate aggregate, bool parallel) {
    if (sheets.size() < 2) {
        throw Error("reliability summary needs at least 2 sheets, got "
                    + std::to_string(sheets.size()));
    }
    const std::size_t n = sheets.size();
    ReliabilitySummary summary;
    summary.annotator_ids.reserve(n);
    for (const auto& s : sheets) summary.annotator_ids.push_back(s.annotator_id);
    summary.kappa.assign(n, std::vector<double>(n, 1.0));

    // flatten the upper triangle so pairs can run concurrently
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::string> errors(pairs.size());
    auto cell = [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        try {
            const double k = cohen_kappa(sheets[i], sheets[j]);
            summary.kappa[i][j] = k;
            summary.kappa[j][i] = k;
        } catch (const Error& e) {
            errors[p] = e.what();
        }
    };
    if (parallel) {
        parallel_for(static_cast<std::int64_t>(pairs.size()), cell);
    } else {
        for (std::size_t p = 0; p < pairs.size(); ++p) cell(p);
    }
    for (const std::string& err : errors) {
        if (!err.empty()) throw Error(err);
    }

    double sum = 0.0;
    double min = 1.0;
    for (const auto& [i, j] : pairs) {
        sum += summary.kappa[i][j];
        min = std::min(min, summary.kappa[i][j]);
    }
    summary.aggregate = aggregate == ReliabilityAggregate::MeanPairwise
                            ? sum / static_cast<double>(pairs.size())
                            : min;
    return summary;
}

}  // namespace

ReliabilitySummary reliability_summary(const std::vector<AnnotationSheet>& sheets,
                                       ReliabilityAggregate aggregate) {
    return reliability_impl(sheets, aggregate, true);
}

ReliabilitySummary reliability_summary_serial(const std::vector<AnnotationSheet>& sheets,
                                              ReliabilityAggregate aggregate) {
    return reliability_impl(sheets, aggregate, false);
}

std::set<std::string> collect_hate_word_marks(const std::vector<AnnotationSheet>& sheets) {
    std::set<std::string> terms;
    for (const AnnotationSheet& sheet : sheets) {
        for (const auto& [record_id, marks] : sheet.hate_word_marks) {
            for (const std::string& mark : marks) {
                terms.insert(utf8::lower(mark));
            }
        }
    }
    return terms;
}

}  // namespace hsx
