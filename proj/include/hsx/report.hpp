#pragma once

#include <string>
#include <vector>

#include "hsx/annotation.hpp"
#include "hsx/experiments.hpp"
#include "hsx/record.hpp"
#include "hsx/similarity.hpp"

namespace hsx {

enum class ReportFormat { Csv, Markdown };
ReportFormat parse_report_format(std::string_view s);

// Upper-triangular pairwise table, two decimals rounded half away from zero.
// The diagonal reads "1.00" for content and hate-word matrices and "X" for
// definition; absent cells render as "X" too.
std::string render_similarity_matrix(const SimilarityMatrix& matrix, ReportFormat format);

// Result table in the experiment-summary shape: target, training combination
// joined by '+', per-class precision/recall and the macro F1. The maximum of
// each numeric column is marked: bold in Markdown, a flag column in CSV.
// Ties are all marked.
std::string render_results_table(const std::vector<ExperimentResult>& results,
                                 ReportFormat format);

// Dataset overview: id, language, platform, size, % hate, availability,
// ordered by language then id. The percent column truncates to two decimals.
std::string render_dataset_stats(const std::vector<DatasetMeta>& metas, ReportFormat format);

// Pairwise kappa matrix plus the aggregate.
std::string render_reliability(const ReliabilitySummary& summary, ReportFormat format);

std::string render_metrics(const Metrics& metrics);

// Line-delimited records carrying the full spec, metrics and fingerprint.
// parse_results inverts export_results losslessly.
std::string export_results(const std::vector<ExperimentResult>& results);
std::vector<ExperimentResult> parse_results(const std::string& text);

}  // namespace hsx
