#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hsx/record.hpp"

namespace hsx {

// One annotator's labeling pass over a dataset.
struct AnnotationSheet {
    std::string annotator_id;
    std::map<std::string, Label> labels;  // record_id -> label
    std::map<std::string, std::vector<std::string>> hate_word_marks;

    // Sheet file: CSV with columns record_id, label and an optional
    // hate_words column of semicolon-separated terms.
    static AnnotationSheet load(const std::string& path, std::string annotator_id);
};

struct VoteCount {
    std::size_t hate = 0;
    std::size_t nonhate = 0;
};

struct AdjudicatedLabels {
    std::map<std::string, Label> labels;
    std::map<std::string, VoteCount> vote_counts;
};

// Strict-majority adjudication. Requires at least three sheets and odd
// coverage of every record; ties are refused, not resolved.
AdjudicatedLabels majority_vote(const std::vector<AnnotationSheet>& sheets);

// Chance-corrected agreement over the records both sheets cover:
// kappa = (p_o - p_e) / (1 - p_e). Both annotators constant and identical
// gives 1 by convention. Errors when the sheets share no records.
double cohen_kappa(const AnnotationSheet& a, const AnnotationSheet& b);

struct ReliabilitySummary {
    std::vector<std::string> annotator_ids;
    std::vector<std::vector<double>> kappa;  // [i][j], diagonal 1
    double aggregate = 0.0;
};

enum class ReliabilityAggregate { MeanPairwise, MinPairwise };

// All pairwise kappas plus an aggregate (unweighted mean by default).
// Pairs are independent, so the matrix fills in parallel.
ReliabilitySummary reliability_summary(
    const std::vector<AnnotationSheet>& sheets,
    ReliabilityAggregate aggregate = ReliabilityAggregate::MeanPairwise);
ReliabilitySummary reliability_summary_serial(
    const std::vector<AnnotationSheet>& sheets,
    ReliabilityAggregate aggregate = ReliabilityAggregate::MeanPairwise);

// Union of annotator-marked terms, lowercased and deduplicated; feeds the
// lexicon for the sheets' language.
std::set<std::string> collect_hate_word_marks(const std::vector<AnnotationSheet>& sheets);

}  // namespace hsx
