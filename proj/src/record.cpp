#include "hsx/record.hpp"

#include "hsx/common.hpp"
#include "hsx/hash.hpp"

namespace hsx {

std::string_view to_string(Platform p) {
    switch (p) {
        case Platform::YouTube: return "YouTube";
        case Platform::Twitter: return "Twitter";
        case Platform::Wikipedia: return "Wikipedia";
        case Platform::Gab: return "Gab";
        case Platform::Other: return "Other";
    }
    return "Other";
}

std::string_view to_string(Label l) {
    return l == Label::Hate ? "Hate" : "NonHate";
}

std::string_view to_string(Availability a) {
    return a == Availability::Open ? "Open" : "Partial";
}

Platform parse_platform(std::string_view s) {
    if (s == "YouTube") return Platform::YouTube;
    if (s == "Twitter") return Platform::Twitter;
    if (s == "Wikipedia") return Platform::Wikipedia;
    if (s == "Gab") return Platform::Gab;
    if (s == "Other") return Platform::Other;
    throw Error("unknown platform: '" + std::string(s) + "'");
}

Label parse_label(std::string_view s) {
    if (s == "Hate") return Label::Hate;
    if (s == "NonHate") return Label::NonHate;
    throw Error("unknown label: '" + std::string(s) + "'");
}

Availability parse_availability(std::string_view s) {
    if (s == "Open") return Availability::Open;
    if (s == "Partial") return Availability::Partial;
    throw Error("unknown availability: '" + std::string(s) + "'");
}

bool valid_dataset_id(std::string_view id) {
    if (id.size() < 3) return false;
    if (id[0] < 'A' || id[0] > 'Z' || id[1] < 'A' || id[1] > 'Z') return false;
    if (id[2] < '1' || id[2] > '9') return false;
    for (std::size_t i = 3; i < id.size(); ++i) {
        if (id[i] < '0' || id[i] > '9') return false;
    }
    return true;
}

std::string make_record_id(std::string_view dataset_id, std::size_t row_index,
                           std::string_view raw_text) {
    return hash_fields({dataset_id, std::to_string(row_index), raw_text}).hex();
}

void Dataset::recompute_stats() {
    meta.size = records.size();
    std::size_t labeled = 0;
    std::size_t hate = 0;
    for (const auto& r : records) {
        if (r.label) {
            ++labeled;
            if (*r.label == Label::Hate) ++hate;
        }
    }
    meta.hate_fraction = labeled == 0 ? 0.0
                                      : static_cast<double>(hate) / static_cast<double>(labeled);
}

}  // namespace hsx
