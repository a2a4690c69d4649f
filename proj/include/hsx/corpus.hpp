#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hsx/langid.hpp"
#include "hsx/record.hpp"

namespace hsx {

// Column/field bindings for one source file, loaded from a JSON mapping spec.
// Works for both input shapes: delimited tables (header row) and
// line-delimited JSON records.
struct MappingSpec {
    enum class Format { Csv, Jsonl };

    Format format = Format::Csv;
    std::string dataset_id;
    std::string language;
    Platform platform = Platform::Other;
    std::string text_field;
    std::optional<std::string> label_field;
    std::map<std::string, Label> label_values;  // raw value -> label
    std::optional<std::string> hate_words_field;  // semicolon-separated marks
    Availability availability = Availability::Open;
    std::optional<std::string> codebook_text;

    static MappingSpec load(const std::string& path);
};

// Parses a source file into the canonical schema: text cleaned, labels
// mapped, record ids assigned, row order preserved, meta statistics computed.
Dataset parse_dataset_file(const std::string& path, const MappingSpec& mapping);

// Keeps records whose detected language matches; meta is recomputed and the
// original order preserved.
Dataset filter_language(const Dataset& dataset, const std::string& language,
                        const LanguageIdentifier& identifier = LanguageIdentifier::builtin(),
                        std::vector<std::string>* warnings = nullptr);

// Canonical dataset file: one JSON object per line, meta first, then every
// record in order. Serialization is byte-stable across runs.
std::string serialize_dataset(const Dataset& dataset);
void save_dataset(const Dataset& dataset, const std::string& path);
Dataset load_dataset(const std::string& path);

// Registry of ingested datasets keyed by id. Registration is serialized and
// rejects duplicates; reads are unrestricted.
class DatasetRegistry {
public:
    void add(Dataset dataset);
    const Dataset& get(const std::string& dataset_id) const;
    bool contains(const std::string& dataset_id) const;
    std::size_t size() const { return datasets_.size(); }

    // Table-1 style overview, ordered by language then id. Errors when empty.
    std::vector<DatasetMeta> stats() const;

private:
    std::map<std::string, Dataset> datasets_;
    mutable std::mutex write_mutex_;
};

}  // namespace hsx
