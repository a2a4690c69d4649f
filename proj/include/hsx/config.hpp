#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hsx/features.hpp"

namespace hsx {

// Tool configuration. Loaded from the JSON file named by --config or the
// HSX_CONFIG environment variable; flags override file values. Unknown keys
// are rejected so typos fail loudly.
struct Config {
    std::string data_dir = ".";
    FeatureConfig features;
    double split_ratio = 0.7;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> lexicons;  // language -> lexicon path
    std::map<std::string, std::string> profiles;  // language -> profile path

    static Config load(const std::string& path);

    // One-line JSON echo of the resolved configuration, logged per run.
    std::string resolved_json() const;

    // Canonical dataset path for an id: <data_dir>/<id>.jsonl
    std::string dataset_path(const std::string& dataset_id) const;
};

}  // namespace hsx
