#include "hsx/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hsx/common.hpp"
#include "hsx/csv.hpp"
#include "hsx/numfmt.hpp"
#include "hsx/parallel.hpp"

namespace hsx {

TfidfEmbeddingProvider::TfidfEmbeddingProvider(const std::vector<const Dataset*>& datasets,
                                               FeatureConfig config) {
    std::vector<std::vector<std::string>> corpus;
    for (const Dataset* ds : datasets) {
        for (const CommentRecord& rec : ds->records) {
            corpus.push_back(tokenize(rec.clean_text));
        }
    }
    idf_ = fit_idf(corpus, config);
}

FeatureVector TfidfEmbeddingProvider::embed(const CommentRecord& record) const {
    return vectorize(tokenize(record.clean_text), idf_);
}

FeatureVector TermCountEmbeddingProvider::embed(const CommentRecord& record) const {
    return vectorize_counts(tokenize(record.clean_text), config_);
}

FeatureVector TableEmbeddingProvider::embed(const CommentRecord& record) const {
    const auto it = table_->vectors.find(record.record_id);
    if (it == table_->vectors.end()) {
        throw Error("embedding table does not cover record '" + record.record_id + "'");
    }
    FeatureVector v;
    v.dimension = static_cast<std::uint32_t>(table_->dimension);
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        if (it->second[i] != 0.0) {
            v.entries.emplace_back(static_cast<std::uint32_t>(i), it->second[i]);
        }
    }
    v.normalize();
    return v;
}

namespace {

// Mean of the unit-normalized record vectors. Records embed in parallel and
// accumulate serially in record order, so the result does not depend on the
// schedule.
FeatureVector mean_embedding(const Dataset& ds, const EmbeddingProvider& embedder) {
    const std::size_t n = ds.records.size();
    std::vector<FeatureVector> vectors(n);
    std::vector<std::string> errors(n);
    parallel_for(static_cast<std::int64_t>(n), [&](std::size_t i) {
        try {
            vectors[i] = embedder.embed(ds.records[i]);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    });
    for (const std::string& err : errors) {
        if (!err.empty()) throw Error(err);
    }

    std::map<std::uint32_t, double> acc;
    for (const FeatureVector& v : vectors) {
        for (const auto& [index, weight] : v.entries) acc[index] += weight;
    }
    FeatureVector mean;
    mean.dimension = vectors.empty() ? 0 : vectors.front().dimension;
    for (const auto& [index, sum] : acc) {
        const double w = sum / static_cast<double>(n);
        if (w != 0.0) mean.entries.emplace_back(index, w);
    }
    return mean;
}

}  // namespace

double content_similarity(const Dataset& a, const Dataset& b, const EmbeddingProvider& embedder,
                          std::vector<std::string>* warnings) {
    if (a.records.empty() || b.records.empty()) {
        throw Error("content similarity needs nonempty datasets ("
                    + (a.records.empty() ? a.meta.dataset_id : b.meta.dataset_id) + " is empty)");
    }
    const FeatureVector mean_a = mean_embedding(a, embedder);
    const FeatureVector mean_b = mean_embedding(b, embedder);
    const double norm_a = mean_a.norm();
    const double norm_b = mean_b.norm();
    if (norm_a == 0.0 || norm_b == 0.0) {
        warn(warnings, "content similarity: a dataset embeds to the zero vector; scoring 0");
        return 0.0;
    }
    const double cosine = mean_a.dot(mean_b) / (norm_a * norm_b);
    return std::clamp(cosine, -1.0, 1.0);
}

double hate_word_similarity(const Dataset& a, const Dataset& b, const Lexicon& lexicon,
                            HateWordDenominator denominator,
                            std::vector<std::string>* warnings) {
    const std::set<std::string> hate_a = extract_hate_words(a, lexicon);
    const std::set<std::string> hate_b = extract_hate_words(b, lexicon);
    std::size_t intersection = 0;
    for (const std::string& term : hate_a) {
        if (hate_b.count(term)) ++intersection;
    }
    const std::size_t total = denominator == HateWordDenominator::Union
                                  ? hate_a.size() + hate_b.size() - intersection
                                  : hate_a.size() + hate_b.size();
    if (total == 0) {
        warn(warnings, "hate-word similarity: no lexicon terms found in either dataset ("
                           + a.meta.dataset_id + ", " + b.meta.dataset_id + "); scoring 0");
        return 0.0;
    }
    return static_cast<double>(intersection) / static_cast<double>(total);
}

std::vector<SurveyVote> load_survey_votes(const std::string& path) {
    CsvTable table = read_csv_file(path);
    const std::size_t resp_col = table.column("respondent_id", path);
    const std::size_t a_col = table.column("dataset_a", path);
    const std::size_t b_col = table.column("dataset_b", path);
    const std::size_t rating_col = table.column("rating", path);
    const std::size_t seconds_col = table.column("response_seconds", path);
    std::optional<std::size_t> excluded_col;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == "excluded") excluded_col = i;
    }

    std::vector<SurveyVote> votes;
    votes.reserve(table.rows.size());
    for (const CsvRow& row : table.rows) {
        const std::string where = path + ":" + std::to_string(row.line);
        SurveyVote vote;
        vote.respondent_id = row.fields[resp_col];
        vote.dataset_a = row.fields[a_col];
        vote.dataset_b = row.fields[b_col];
        vote.rating = static_cast<int>(parse_int(row.fields[rating_col], where + " rating"));
        if (vote.rating < 1 || vote.rating > 10) {
            throw Error(where + ": rating must be in 1..10, got "
                        + std::to_string(vote.rating));
        }
        vote.response_seconds = parse_double(row.fields[seconds_col], where + " response_seconds");
        if (vote.response_seconds < 0.0) {
            throw Error(where + ": response_seconds must be nonnegative");
        }
        if (excluded_col) {
            const std::string& flag = row.fields[*excluded_col];
            if (flag == "1") {
                vote.excluded = true;
            } else if (flag != "0" && !flag.empty()) {
                throw Error(where + ": excluded flag must be 0 or 1");
            }
        }
        votes.push_back(std::move(vote));
    }
    return votes;
}

double definition_similarity(const std::vector<SurveyVote>& votes, double min_response_seconds) {
    double sum = 0.0;
    std::size_t kept = 0;
    for (const SurveyVote& vote : votes) {
        if (vote.rating < 1 || vote.rating > 10) {
            throw Error("survey vote rating out of range: " + std::to_string(vote.rating));
        }
        if (vote.excluded || vote.response_seconds < min_response_seconds) continue;
        sum += static_cast<double>(vote.rating);
        ++kept;
    }
    if (kept == 0) throw Error("definition similarity: no votes survive the response-time filter");
    const double mean = sum / static_cast<double>(kept);
    return (mean - 1.0) / 9.0;
}

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::Content: return "content";
        case Measure::HateWord: return "hatewords";
        case Measure::Definition: return "definition";
    }
    return "content";
}

Measure parse_measure(std::string_view s) {
    if (s == "content") return Measure::Content;
    if (s == "hatewords") return Measure::HateWord;
    if (s == "definition") return Measure::Definition;
    throw Error("unknown similarity measure: '" + std::string(s) + "'");
}

namespace {

SimilarityMatrix matrix_impl(const std::vector<const Dataset*>& datasets, Measure measure,
                             const MatrixInputs& inputs, std::vector<std::string>* warnings,
                             bool parallel) {
    if (datasets.size() < 2) {
        throw Error("similarity matrix needs at least 2 datasets, got "
                    + std::to_string(datasets.size()));
    }
    SimilarityMatrix matrix;
    matrix.measure = measure;
    {
        std::set<std::string> seen;
        for (const Dataset* ds : datasets) {
            if (!seen.insert(ds->meta.dataset_id).second) {
                throw Error("duplicate dataset in matrix: " + ds->meta.dataset_id);
            }
            matrix.dataset_ids.push_back(ds->meta.dataset_id);
        }
    }
    const std::size_t n = datasets.size();
    matrix.cells.assign(n, std::vector<std::optional<double>>(n));

    if (measure == Measure::Content || measure == Measure::HateWord) {
        for (std::size_t i = 0; i < n; ++i) matrix.cells[i][i] = 1.0;
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    switch (measure) {
        case Measure::Content: {
            std::vector<std::string> errors(pairs.size());
            std::vector<std::vector<std::string>> pair_warnings(pairs.size());
            auto cell = [&](std::size_t p) {
                const auto [i, j] = pairs[p];
                try {
                    double value;
                    if (inputs.embeddings) {
                        TableEmbeddingProvider provider(*inputs.embeddings);
                        value = content_similarity(*datasets[i], *datasets[j], provider,
                                                   &pair_warnings[p]);
                    } else {
                        TfidfEmbeddingProvider provider({datasets[i], datasets[j]},
                                                        inputs.features);
                        value = content_similarity(*datasets[i], *datasets[j], provider,
                                                   &pair_warnings[p]);
                    }
                    matrix.cells[i][j] = value;
                    matrix.cells[j][i] = value;
                } catch (const Error& e) {
                    errors[p] = e.what();
                }
            };
            if (parallel) {
                parallel_for_dynamic(static_cast<std::int64_t>(pairs.size()), cell);
            } else {
                for (std::size_t p = 0; p < pairs.size(); ++p) cell(p);
            }
            for (const std::string& err : errors) {
                if (!err.empty()) throw Error(err);
            }
            for (const auto& batch : pair_warnings) {
                for (const std::string& w : batch) warn(warnings, w);
            }
            break;
        }
        case Measure::HateWord: {
            if (!inputs.lexicon) throw Error("hate-word matrix needs a lexicon");
            // extract once per dataset, then score pairs from the sets
            std::vector<std::set<std::string>> hate_words(n);
            std::vector<std::string> errors(n);
            auto extract_one = [&](std::size_t i) {
                try {
                    hate_words[i] = extract_hate_words_serial(*datasets[i], *inputs.lexicon);
                } catch (const Error& e) {
                    errors[i] = e.what();
                }
            };
            if (parallel) {
                parallel_for_dynamic(static_cast<std::int64_t>(n), extract_one);
            } else {
                for (std::size_t i = 0; i < n; ++i) extract_one(i);
            }
            for (const std::string& err : errors) {
                if (!err.empty()) throw Error(err);
            }
            for (const auto& [i, j] : pairs) {
                std::size_t intersection = 0;
                for (const std::string& term : hate_words[i]) {
                    if (hate_words[j].count(term)) ++intersection;
                }
                const std::size_t total =
                    inputs.denominator == HateWordDenominator::Union
                        ? hate_words[i].size() + hate_words[j].size() - intersection
                        : hate_words[i].size() + hate_words[j].size();
                double value = 0.0;
                if (total == 0) {
                    warn(warnings, "hate-word similarity: no lexicon terms found in either"
                                   " dataset (" + matrix.dataset_ids[i] + ", "
                                       + matrix.dataset_ids[j] + "); scoring 0");
                } else {
                    value = static_cast<double>(intersection) / static_cast<double>(total);
                }
                matrix.cells[i][j] = value;
                matrix.cells[j][i] = value;
            }
            break;
        }
        case Measure::Definition: {
            if (!inputs.votes) throw Error("definition matrix needs survey votes");
            std::map<std::pair<std::string, std::string>, std::vector<SurveyVote>> by_pair;
            for (const SurveyVote& vote : *inputs.votes) {
                auto key = std::minmax(vote.dataset_a, vote.dataset_b);
                by_pair[{key.first, key.second}].push_back(vote);
            }
            for (const auto& [i, j] : pairs) {
                const bool has_codebooks = datasets[i]->meta.codebook_text.has_value()
                                        && datasets[j]->meta.codebook_text.has_value();
                if (!has_codebooks) continue;  // rendered as "X"
                auto key = std::minmax(matrix.dataset_ids[i], matrix.dataset_ids[j]);
                const auto it = by_pair.find({key.first, key.second});
                if (it == by_pair.end()) {
                    warn(warnings, "definition similarity: no votes for pair ("
                                       + matrix.dataset_ids[i] + ", " + matrix.dataset_ids[j]
                                       + ")");
                    continue;
                }
                const double value =
                    definition_similarity(it->second, inputs.min_response_seconds);
                matrix.cells[i][j] = value;
                matrix.cells[j][i] = value;
            }
            break;
        }
    }
    return matrix;
}

}  // namespace

SimilarityMatrix similarity_matrix(const std::vector<const Dataset*>& datasets, Measure measure,
                                   const MatrixInputs& inputs,
                                   std::vector<std::string>* warnings) {
    return matrix_impl(datasets, measure, inputs, warnings, true);
}

SimilarityMatrix similarity_matrix_serial(const std::vector<const Dataset*>& datasets,
                                          Measure measure, const MatrixInputs& inputs,
                                          std::vector<std::string>* warnings) {
    return matrix_impl(datasets, measure, inputs, warnings, false);
}

}  // namespace hsx
