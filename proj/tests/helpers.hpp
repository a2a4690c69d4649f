#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hsx/record.hpp"
#include "hsx/text.hpp"

namespace hsx::test {

// Scratch directory under the test working directory, unique per tag.
struct TempDir {
    std::filesystem::path path;

    explicit TempDir(const std::string& tag) {
        path = std::filesystem::path("hsx_test_tmp") / tag;
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline CommentRecord make_record(const std::string& dataset_id, std::size_t index,
                                 const std::string& text,
                                 std::optional<Label> label = std::nullopt,
                                 const std::string& language = "en") {
    CommentRecord rec;
    rec.dataset_id = dataset_id;
    rec.platform = Platform::Other;
    rec.language = language;
    rec.record_id = make_record_id(dataset_id, index, text);
    rec.raw_text = text;
    rec.clean_text = clean_text(text);
    rec.label = label;
    return rec;
}

inline Dataset make_dataset(const std::string& dataset_id,
                            const std::vector<std::pair<std::string, Label>>& rows,
                            const std::string& language = "en") {
    Dataset ds;
    ds.meta.dataset_id = dataset_id;
    ds.meta.language = language;
    ds.meta.platform = Platform::Other;
    ds.meta.availability = Availability::Open;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ds.records.push_back(make_record(dataset_id, i, rows[i].first, rows[i].second, language));
    }
    ds.recompute_stats();
    return ds;
}

inline Dataset make_unlabeled_dataset(const std::string& dataset_id,
                                      const std::vector<std::string>& texts,
                                      const std::string& language = "en") {
    Dataset ds;
    ds.meta.dataset_id = dataset_id;
    ds.meta.language = language;
    ds.meta.platform = Platform::Other;
    ds.meta.availability = Availability::Open;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        ds.records.push_back(make_record(dataset_id, i, texts[i], std::nullopt, language));
    }
    ds.recompute_stats();
    return ds;
}

}  // namespace hsx::test
