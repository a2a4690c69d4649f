#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsx/features.hpp"
#include "hsx/lexicon.hpp"
#include "hsx/record.hpp"

namespace hsx {

// Maps a record to a feature vector. Implementations must be pure so that
// pairwise scores can be computed concurrently.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual FeatureVector embed(const CommentRecord& record) const = 0;
};

// Built-in provider: hashed tf-idf fitted on the records it is constructed
// from (for a pairwise score, the union of both datasets).
class TfidfEmbeddingProvider : public EmbeddingProvider {
public:
    TfidfEmbeddingProvider(const std::vector<const Dataset*>& datasets, FeatureConfig config);
    FeatureVector embed(const CommentRecord& record) const override;

private:
    IdfTable idf_;
};

// Raw term counts with unit norm; the transparent provider used by tests.
class TermCountEmbeddingProvider : public EmbeddingProvider {
public:
    explicit TermCountEmbeddingProvider(FeatureConfig config) : config_(config) {}
    FeatureVector embed(const CommentRecord& record) const override;

private:
    FeatureConfig config_;
};

// Externally computed dense embeddings; every record must be covered.
class TableEmbeddingProvider : public EmbeddingProvider {
public:
    explicit TableEmbeddingProvider(const EmbeddingTable& table) : table_(&table) {}
    FeatureVector embed(const CommentRecord& record) const override;

private:
    const EmbeddingTable* table_;
};

// Cosine between the two datasets' mean unit-normalized record vectors.
double content_similarity(const Dataset& a, const Dataset& b, const EmbeddingProvider& embedder,
                          std::vector<std::string>* warnings = nullptr);

enum class HateWordDenominator { Union, Sum };

// Overlap of the lexicon terms observed in the two datasets:
// |H_A ∩ H_B| / |H_A ∪ H_B| (or the sum reading behind the switch).
// Two empty sets score 0 with a warning.
double hate_word_similarity(const Dataset& a, const Dataset& b, const Lexicon& lexicon,
                            HateWordDenominator denominator = HateWordDenominator::Union,
                            std::vector<std::string>* warnings = nullptr);

struct SurveyVote {
    std::string respondent_id;
    std::string dataset_a;
    std::string dataset_b;
    int rating = 0;                 // 1..10
    double response_seconds = 0.0;  // >= 0
    bool excluded = false;          // survey-supplied exclusion flag
};

// Vote file: CSV with columns respondent_id, dataset_a, dataset_b, rating,
// response_seconds and an optional excluded column (0/1).
std::vector<SurveyVote> load_survey_votes(const std::string& path);

// Mean surviving rating n mapped through (n - 1) / 9. Votes faster than the
// threshold and flagged votes are dropped; no survivors is an error.
double definition_similarity(const std::vector<SurveyVote>& votes, double min_response_seconds);

enum class Measure { Content, HateWord, Definition };

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view s);

// Pairwise matrix over the given datasets in their given order. Cells are
// symmetric; absent cells (Definition without codebooks or votes, and the
// Definition diagonal) stay empty and render as "X".
struct SimilarityMatrix {
    Measure measure = Measure::Content;
    std::vector<std::string> dataset_ids;
    std::vector<std::vector<std::optional<double>>> cells;  // [i][j] == [j][i]
};

struct MatrixInputs {
    // Content
    FeatureConfig features;
    const EmbeddingTable* embeddings = nullptr;  // overrides the built-in provider
    // HateWord
    const Lexicon* lexicon = nullptr;
    HateWordDenominator denominator = HateWordDenominator::Union;
    // Definition
    const std::vector<SurveyVote>* votes = nullptr;
    double min_response_seconds = 0.0;
};

// Off-diagonal pairs are independent and run concurrently; the serial twin
// is kept as the reference for the determinism tests.
SimilarityMatrix similarity_matrix(const std::vector<const Dataset*>& datasets, Measure measure,
                                   const MatrixInputs& inputs,
                                   std::vector<std::string>* warnings = nullptr);
SimilarityMatrix similarity_matrix_serial(const std::vector<const Dataset*>& datasets,
                                          Measure measure, const MatrixInputs& inputs,
                                          std::vector<std::string>* warnings = nullptr);

}  // namespace hsx
