#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsx/text.hpp"

namespace hsx {

struct FeatureConfig {
    std::uint32_t dimension = 1u << 18;
    std::uint64_t hash_seed = 0x5EED;

    void validate() const;  // dimension must be a power of two

    bool operator==(const FeatureConfig&) const = default;
};

// Sparse unit vector in a fixed hashed space. Entries are sorted by index
// and never zero, so equality and dot products are exact and deterministic.
struct FeatureVector {
    std::uint32_t dimension = 0;
    std::vector<std::pair<std::uint32_t, double>> entries;

    double norm() const;
    void normalize();  // no-op on the zero vector
    double dot(const FeatureVector& other) const;

    bool operator==(const FeatureVector&) const = default;
};

// Bucket index and sign for a token under the configured seeded hash.
struct HashedFeature {
    std::uint32_t index = 0;
    double sign = 1.0;
};
HashedFeature hash_token(std::string_view token, const FeatureConfig& config);

// Smoothed document frequencies, frozen after fitting on training data.
// idf(f) = ln((1 + N) / (1 + df(f))) + 1; unseen features use df = 0.
class IdfTable {
public:
    IdfTable() = default;
    IdfTable(FeatureConfig config, std::uint64_t document_count,
             std::unordered_map<std::uint32_t, std::uint64_t> df);

    const FeatureConfig& config() const { return config_; }
    std::uint64_t document_count() const { return document_count_; }
    std::uint64_t df(std::uint32_t index) const;
    double idf(std::uint32_t index) const;
    const std::unordered_map<std::uint32_t, std::uint64_t>& df_map() const { return df_; }

private:
    FeatureConfig config_;
    std::uint64_t document_count_ = 0;
    std::unordered_map<std::uint32_t, std::uint64_t> df_;
};

IdfTable fit_idf(const std::vector<std::vector<std::string>>& corpus, FeatureConfig config);

// Signed hashed term frequencies times idf, L2-normalized. Empty input is
// the zero vector.
FeatureVector vectorize(const std::vector<std::string>& tokens, const IdfTable& idf);

// Same, with raw term counts instead of tf-idf weights.
FeatureVector vectorize_counts(const std::vector<std::string>& tokens, FeatureConfig config);

// Whole-corpus embedding; documents are independent, so the loop is
// parallel. The serial twin is the reference the tests compare against.
std::vector<FeatureVector> vectorize_corpus(const std::vector<std::vector<std::string>>& docs,
                                            const IdfTable& idf);
std::vector<FeatureVector> vectorize_corpus_serial(
    const std::vector<std::vector<std::string>>& docs, const IdfTable& idf);

// Externally computed dense embeddings keyed by record_id.
struct EmbeddingTable {
    std::size_t dimension = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;
};
EmbeddingTable load_embedding_table(const std::string& path);

}  // namespace hsx
