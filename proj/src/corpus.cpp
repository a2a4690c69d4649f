#include "hsx/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hsx/common.hpp"
#include "hsx/csv.hpp"
#include "hsx/text.hpp"
#include "hsx/utf8.hpp"

namespace hsx {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& context) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            throw Error(context + ": unknown key '" + key + "'");
        }
    }
}

std::string json_to_plain_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::vector<std::string> split_marks(std::string_view field) {
    std::vector<std::string> marks;
    std::size_t start = 0;
    while (start <= field.size()) {
        std::size_t end = field.find(';', start);
        if (end == std::string_view::npos) end = field.size();
        std::string_view piece = field.substr(start, end - start);
        while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t')) piece.remove_prefix(1);
        while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t')) piece.remove_suffix(1);
        if (!piece.empty()) marks.push_back(utf8::lower(piece));
        if (end == field.size()) break;
        start = end + 1;
    }
    return marks;
}

Label map_label_value(const MappingSpec& mapping, const std::string& raw,
                      const std::string& file, std::size_t line) {
    if (mapping.label_values.empty()) {
        if (raw == "Hate") return Label::Hate;
        if (raw == "NonHate") return Label::NonHate;
    } else {
        const auto it = mapping.label_values.find(raw);
        if (it != mapping.label_values.end()) return it->second;
    }
    throw Error(file + ":" + std::to_string(line) + ": unmappable label value '" + raw + "'");
}

CommentRecord make_record(const MappingSpec& mapping, std::size_t row_index,
                          std::string raw_text, std::optional<Label> label,
                          std::vector<std::string> marks) {
    CommentRecord rec;
    rec.dataset_id = mapping.dataset_id;
    rec.platform = mapping.platform;
    rec.language = mapping.language;
    rec.record_id = make_record_id(mapping.dataset_id, row_index, raw_text);
    rec.clean_text = clean_text(raw_text);
    rec.raw_text = std::move(raw_text);
    rec.label = label;
    rec.annotated_hate_words = std::move(marks);
    return rec;
}

Dataset parse_csv_dataset(const std::string& path, const MappingSpec& mapping) {
    CsvTable table = read_csv_file(path);
    if (table.rows.empty()) throw Error(path + ": no data rows");

    const std::size_t text_col = table.column(mapping.text_field, path);
    std::optional<std::size_t> label_col;
    if (mapping.label_field) label_col = table.column(*mapping.label_field, path);
    std::optional<std::size_t> marks_col;
    if (mapping.hate_words_field) marks_col = table.column(*mapping.hate_words_field, path);

    Dataset ds;
    ds.records.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const CsvRow& row = table.rows[i];
        std::optional<Label> label;
        if (label_col) label = map_label_value(mapping, row.fields[*label_col], path, row.line);
        std::vector<std::string> marks;
        if (marks_col) marks = split_marks(row.fields[*marks_col]);
        ds.records.push_back(
            make_record(mapping, i, row.fields[text_col], label, std::move(marks)));
    }
    return ds;
}

Dataset parse_jsonl_dataset(const std::string& path, const MappingSpec& mapping) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);

    Dataset ds;
    std::string line;
    std::size_t lineno = 0;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!obj.is_object()) {
            throw Error(path + ":" + std::to_string(lineno) + ": expected a JSON object");
        }
        if (!obj.contains(mapping.text_field)) {
            throw Error(path + ":" + std::to_string(lineno) + ": missing field '"
                        + mapping.text_field + "'");
        }
        std::optional<Label> label;
        if (mapping.label_field) {
            if (!obj.contains(*mapping.label_field)) {
                throw Error(path + ":" + std::to_string(lineno) + ": missing field '"
                            + *mapping.label_field + "'");
            }
            label = map_label_value(mapping, json_to_plain_string(obj[*mapping.label_field]),
                                    path, lineno);
        }
        std::vector<std::string> marks;
        if (mapping.hate_words_field && obj.contains(*mapping.hate_words_field)) {
            marks = split_marks(json_to_plain_string(obj[*mapping.hate_words_field]));
        }
        ds.records.push_back(make_record(mapping, row_index,
                                         json_to_plain_string(obj[mapping.text_field]), label,
                                         std::move(marks)));
        ++row_index;
    }
    if (ds.records.empty()) throw Error(path + ": no data rows");
    return ds;
}

}  // namespace

MappingSpec MappingSpec::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open mapping spec: " + path);
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    reject_unknown_keys(obj,
                        {"format", "dataset_id", "language", "platform", "text", "label",
                         "label_values", "hate_words", "availability", "codebook",
                         "codebook_file"},
                        path);

    MappingSpec spec;
    const std::string format = obj.value("format", "csv");
    if (format == "csv") {
        spec.format = Format::Csv;
    } else if (format == "jsonl") {
        spec.format = Format::Jsonl;
    } else {
        throw Error(path + ": format must be 'csv' or 'jsonl'");
    }
    if (!obj.contains("dataset_id") || !obj.contains("language") || !obj.contains("platform")
        || !obj.contains("text")) {
        throw Error(path + ": mapping needs dataset_id, language, platform and text");
    }
    spec.dataset_id = obj["dataset_id"].get<std::string>();
    if (!valid_dataset_id(spec.dataset_id)) {
        throw Error(path + ": invalid dataset id '" + spec.dataset_id
                    + "' (expected e.g. \"EY1\")");
    }
    spec.language = obj["language"].get<std::string>();
    spec.platform = parse_platform(obj["platform"].get<std::string>());
    spec.text_field = obj["text"].get<std::string>();
    if (obj.contains("label")) spec.label_field = obj["label"].get<std::string>();
    if (obj.contains("label_values")) {
        for (const auto& [raw, mapped] : obj["label_values"].items()) {
            spec.label_values.emplace(raw, parse_label(mapped.get<std::string>()));
        }
    }
    if (obj.contains("hate_words")) spec.hate_words_field = obj["hate_words"].get<std::string>();
    if (obj.contains("availability")) {
        spec.availability = parse_availability(obj["availability"].get<std::string>());
    }
    if (obj.contains("codebook") && obj.contains("codebook_file")) {
        throw Error(path + ": give codebook or codebook_file, not both");
    }
    if (obj.contains("codebook")) spec.codebook_text = obj["codebook"].get<std::string>();
    if (obj.contains("codebook_file")) {
        const std::string cb_path = obj["codebook_file"].get<std::string>();
        std::ifstream cb(cb_path, std::ios::binary);
        if (!cb) throw Error("cannot open codebook file: " + cb_path);
        std::stringstream ss;
        ss << cb.rdbuf();
        spec.codebook_text = ss.str();
    }
    return spec;
}

Dataset parse_dataset_file(const std::string& path, const MappingSpec& mapping) {
    Dataset ds = mapping.format == MappingSpec::Format::Csv ? parse_csv_dataset(path, mapping)
                                                            : parse_jsonl_dataset(path, mapping);
    ds.meta.dataset_id = mapping.dataset_id;
    ds.meta.language = mapping.language;
    ds.meta.platform = mapping.platform;
    ds.meta.availability = mapping.availability;
    ds.meta.codebook_text = mapping.codebook_text;
    ds.recompute_stats();
    return ds;
}

Dataset filter_language(const Dataset& dataset, const std::string& language,
                        const LanguageIdentifier& identifier,
                        std::vector<std::string>* warnings) {
    Dataset out;
    out.meta = dataset.meta;
    out.meta.language = language;
    for (const CommentRecord& rec : dataset.records) {
        const std::string& probe = rec.raw_text;
        bool keep = false;
        try {
            keep = identifier.detect(probe).language == language;
        } catch (const Error&) {
            keep = false;  // blank text carries no language evidence
        }
        if (keep) {
            out.records.push_back(rec);
            out.records.back().language = language;
        }
    }
    out.recompute_stats();
    if (out.records.empty()) {
        warn(warnings, "language filter '" + language + "' left no records in dataset "
                           + dataset.meta.dataset_id);
    }
    return out;
}

namespace {

json meta_to_json(const DatasetMeta& meta) {
    json obj;
    obj["type"] = "meta";
    obj["dataset_id"] = meta.dataset_id;
    obj["language"] = meta.language;
    obj["platform"] = to_string(meta.platform);
    obj["availability"] = to_string(meta.availability);
    if (meta.codebook_text) obj["codebook"] = *meta.codebook_text;
    return obj;
}

json record_to_json(const CommentRecord& rec) {
    json obj;
    obj["record_id"] = rec.record_id;
    obj["dataset_id"] = rec.dataset_id;
    obj["platform"] = to_string(rec.platform);
    obj["language"] = rec.language;
    obj["raw_text"] = rec.raw_text;
    obj["clean_text"] = rec.clean_text;
    if (rec.label) obj["label"] = to_string(*rec.label);
    obj["annotated_hate_words"] = rec.annotated_hate_words;
    return obj;
}

}  // namespace

std::string serialize_dataset(const Dataset& dataset) {
    std::string out = meta_to_json(dataset.meta).dump();
    out.push_back('\n');
    for (const CommentRecord& rec : dataset.records) {
        out += record_to_json(rec).dump();
        out.push_back('\n');
    }
    return out;
}

void save_dataset(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write dataset file: " + path);
    out << serialize_dataset(dataset);
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open dataset file: " + path);

    Dataset ds;
    std::string line;
    std::size_t lineno = 0;
    bool saw_meta = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!saw_meta) {
            if (!obj.is_object() || obj.value("type", "") != "meta") {
                throw Error(path + ": first line must be the dataset meta record");
            }
            ds.meta.dataset_id = obj.at("dataset_id").get<std::string>();
            if (!valid_dataset_id(ds.meta.dataset_id)) {
                throw Error(path + ": invalid dataset id '" + ds.meta.dataset_id + "'");
            }
            ds.meta.language = obj.at("language").get<std::string>();
            ds.meta.platform = parse_platform(obj.at("platform").get<std::string>());
            ds.meta.availability = parse_availability(obj.at("availability").get<std::string>());
            if (obj.contains("codebook")) ds.meta.codebook_text = obj["codebook"].get<std::string>();
            saw_meta = true;
            continue;
        }
        CommentRecord rec;
        try {
            rec.record_id = obj.at("record_id").get<std::string>();
            rec.dataset_id = obj.at("dataset_id").get<std::string>();
            rec.platform = parse_platform(obj.at("platform").get<std::string>());
            rec.language = obj.at("language").get<std::string>();
            rec.raw_text = obj.at("raw_text").get<std::string>();
            rec.clean_text = obj.at("clean_text").get<std::string>();
            if (obj.contains("label")) rec.label = parse_label(obj["label"].get<std::string>());
            rec.annotated_hate_words = obj.at("annotated_hate_words").get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (rec.dataset_id != ds.meta.dataset_id) {
            throw Error(path + ":" + std::to_string(lineno) + ": record belongs to '"
                        + rec.dataset_id + "', file is '" + ds.meta.dataset_id + "'");
        }
        ds.records.push_back(std::move(rec));
    }
    if (!saw_meta) throw Error(path + ": empty dataset file");
    ds.recompute_stats();
    return ds;
}

void DatasetRegistry::add(Dataset dataset) {
    std::lock_guard<std::mutex> lock(write_mutex_);
    const std::string id = dataset.meta.dataset_id;
    if (!valid_dataset_id(id)) throw Error("invalid dataset id '" + id + "'");
    if (!datasets_.emplace(id, std::move(dataset)).second) {
        throw Error("duplicate dataset id '" + id + "'");
    }
}

const Dataset& DatasetRegistry::get(const std::string& dataset_id) const {
    const auto it = datasets_.find(dataset_id);
    if (it == datasets_.end()) throw Error("unknown dataset id '" + dataset_id + "'");
    return it->second;
}

bool DatasetRegistry::contains(const std::string& dataset_id) const {
    return datasets_.count(dataset_id) > 0;
}

std::vector<DatasetMeta> DatasetRegistry::stats() const {
    if (datasets_.empty()) throw Error("dataset registry is empty");
    std::vector<DatasetMeta> metas;
    metas.reserve(datasets_.size());
    for (const auto& [id, ds] : datasets_) metas.push_back(ds.meta);
    std::sort(metas.begin(), metas.end(), [](const DatasetMeta& a, const DatasetMeta& b) {
        if (a.language != b.language) return a.language < b.language;
        return a.dataset_id < b.dataset_id;
    });
    return metas;
}

}  // namespace hsx
