#include "hsx/features.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "hsx/common.hpp"
#include "hsx/hash.hpp"
#include "hsx/numfmt.hpp"
#include "hsx/parallel.hpp"

namespace hsx {

void FeatureConfig::validate() const {
    if (dimension == 0 || (dimension & (dimension - 1)) != 0) {
        throw Error("feature dimension must be a power of two, got " + std::to_string(dimension));
    }
}

double FeatureVector::norm() const {
    double sum = 0.0;
    for (const auto& [index, weight] : entries) sum += weight * weight;
    return std::sqrt(sum);
}

void FeatureVector::normalize() {
    const double n = norm();
    if (n == 0.0) return;
    for (auto& [index, weight] : entries) weight /= n;
}

double FeatureVector::dot(const FeatureVector& other) const {
    double sum = 0.0;
    auto a = entries.begin();
    auto b = other.entries.begin();
    while (a != entries.end() && b != other.entries.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            sum += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return sum;
}

HashedFeature hash_token(std::string_view token, const FeatureConfig& config) {
    const Hash128 h = hash128(token, config.hash_seed);
    HashedFeature f;
    f.index = static_cast<std::uint32_t>(h.lo & (config.dimension - 1));
    f.sign = (h.hi >> 63) ? -1.0 : 1.0;
    return f;
}

IdfTable::IdfTable(FeatureConfig config, std::uint64_t document_count,
                   std::unordered_map<std::uint32_t, std::uint64_t> df)
    : config_(config), document_count_(document_count), df_(std::move(df)) {
    config_.validate();
}

std::uint64_t IdfTable::df(std::uint32_t index) const {
    const auto it = df_.find(index);
    return it == df_.end() ? 0 : it->second;
}

double IdfTable::idf(std::uint32_t index) const {
    return std::log((1.0 + static_cast<double>(document_count_))
                    / (1.0 + static_cast<double>(df(index))))
           + 1.0;
}

IdfTable fit_idf(const std::vector<std::vector<std::string>>& corpus, FeatureConfig config) {
    config.validate();
    if (corpus.empty()) throw Error("fit_idf: empty corpus");
    std::unordered_map<std::uint32_t, std::uint64_t> df;
    std::unordered_set<std::uint32_t> seen;
    for (const auto& doc : corpus) {
        seen.clear();
        for (const std::string& token : doc) {
            seen.insert(hash_token(token, config).index);
        }
        for (std::uint32_t index : seen) ++df[index];
    }
    return IdfTable(config, corpus.size(), std::move(df));
}

namespace {

FeatureVector vectorize_impl(const std::vector<std::string>& tokens, const FeatureConfig& config,
                             const IdfTable* idf) {
    // signed term counts per bucket, in index order
    std::map<std::uint32_t, double> acc;
    for (const std::string& token : tokens) {
        const HashedFeature f = hash_token(token, config);
        acc[f.index] += f.sign;
    }
    FeatureVector v;
    v.dimension = config.dimension;
    v.entries.reserve(acc.size());
    for (const auto& [index, count] : acc) {
        const double weight = idf ? count * idf->idf(index) : count;
        if (weight != 0.0) v.entries.emplace_back(index, weight);
    }
    v.normalize();
    return v;
}

}  // namespace

FeatureVector vectorize(const std::vector<std::string>& tokens, const IdfTable& idf) {
    return vectorize_impl(tokens, idf.config(), &idf);
}

FeatureVector vectorize_counts(const std::vector<std::string>& tokens, FeatureConfig config) {
    config.validate();
    return vectorize_impl(tokens, config, nullptr);
}

std::vector<FeatureVector> vectorize_corpus(const std::vector<std::vector<std::string>>& docs,
                                            const IdfTable& idf) {
    std::vector<FeatureVector> out(docs.size());
    parallel_for(static_cast<std::int64_t>(docs.size()),
                 [&](std::size_t i) { out[i] = vectorize(docs[i], idf); });
    return out;
}

std::vector<FeatureVector> vectorize_corpus_serial(
    const std::vector<std::vector<std::string>>& docs, const IdfTable& idf) {
    std::vector<FeatureVector> out(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) out[i] = vectorize(docs[i], idf);
    return out;
}

EmbeddingTable load_embedding_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open embedding table: " + path);

    std::string line;
    if (!std::getline(in, line)) throw Error(path + ": empty embedding table");
    std::istringstream header(line);
    std::uint64_t count = 0;
    std::uint64_t dimension = 0;
    if (!(header >> count >> dimension) || dimension == 0) {
        throw Error(path + ":1: header must be 'record_count dimension'");
    }

    EmbeddingTable table;
    table.dimension = dimension;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string record_id;
        row >> record_id;
        if (record_id.empty()) {
            throw Error(path + ":" + std::to_string(lineno) + ": missing record_id");
        }
        std::vector<double> vec;
        vec.reserve(dimension);
        std::string field;
        while (row >> field) {
            vec.push_back(parse_double(field, path + ":" + std::to_string(lineno)));
        }
        if (vec.size() != dimension) {
            throw Error(path + ":" + std::to_string(lineno) + ": expected "
                        + std::to_string(dimension) + " values, got " + std::to_string(vec.size()));
        }
        if (!table.vectors.emplace(record_id, std::move(vec)).second) {
            throw Error(path + ":" + std::to_string(lineno) + ": duplicate record_id '"
                        + record_id + "'");
        }
    }
    if (table.vectors.size() != count) {
        throw Error(path + ": header declares " + std::to_string(count) + " records, found "
                    + std::to_string(table.vectors.size()));
    }
    return table;
}

}  // namespace hsx
