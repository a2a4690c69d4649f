#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsx {

enum class Platform { YouTube, Twitter, Wikipedia, Gab, Other };
enum class Label { Hate, NonHate };
enum class Availability { Open, Partial };

std::string_view to_string(Platform p);
std::string_view to_string(Label l);
std::string_view to_string(Availability a);
Platform parse_platform(std::string_view s);
Label parse_label(std::string_view s);
Availability parse_availability(std::string_view s);

// Dataset ids follow the registry convention: language letter, platform
// letter, positive number ("EY1", "GT2").
bool valid_dataset_id(std::string_view id);

// Content hash: stable across re-ingestion of the same file and mapping.
std::string make_record_id(std::string_view dataset_id, std::size_t row_index,
                           std::string_view raw_text);

// One cleaned, labeled social-media comment.
struct CommentRecord {
    std::string record_id;
    std::string dataset_id;
    Platform platform = Platform::Other;
    std::string language;  // ISO 639-1
    std::string raw_text;
    std::string clean_text;
    std::optional<Label> label;
    std::vector<std::string> annotated_hate_words;
};

struct DatasetMeta {
    std::string dataset_id;
    std::string language;
    Platform platform = Platform::Other;
    std::size_t size = 0;
    double hate_fraction = 0.0;  // labeled Hate / labeled
    Availability availability = Availability::Open;
    std::optional<std::string> codebook_text;
};

struct Dataset {
    DatasetMeta meta;
    std::vector<CommentRecord> records;

    // Refreshes meta.size and meta.hate_fraction from the records.
    void recompute_stats();
};

}  // namespace hsx
