#include "hsx/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "hsx/common.hpp"

namespace hsx {

using nlohmann::json;

Config Config::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file: " + path);
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    static const std::set<std::string> known = {"data_dir",    "dimension", "hash_seed",
                                                "split_ratio", "seed",      "lexicons",
                                                "profiles"};
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) throw Error(path + ": unknown config key '" + key + "'");
    }

    Config cfg;
    if (obj.contains("data_dir")) cfg.data_dir = obj["data_dir"].get<std::string>();
    if (obj.contains("dimension")) cfg.features.dimension = obj["dimension"].get<std::uint32_t>();
    if (obj.contains("hash_seed")) cfg.features.hash_seed = obj["hash_seed"].get<std::uint64_t>();
    if (obj.contains("split_ratio")) cfg.split_ratio = obj["split_ratio"].get<double>();
    if (obj.contains("seed")) cfg.seed = obj["seed"].get<std::uint64_t>();
    if (obj.contains("lexicons")) {
        cfg.lexicons = obj["lexicons"].get<std::map<std::string, std::string>>();
    }
    if (obj.contains("profiles")) {
        cfg.profiles = obj["profiles"].get<std::map<std::string, std::string>>();
    }
    cfg.features.validate();
    if (cfg.split_ratio <= 0.0 || cfg.split_ratio >= 1.0) {
        throw Error(path + ": split_ratio must be in (0,1)");
    }
    return cfg;
}

std::string Config::resolved_json() const {
    json obj;
    obj["data_dir"] = data_dir;
    obj["dimension"] = features.dimension;
    obj["hash_seed"] = features.hash_seed;
    obj["split_ratio"] = split_ratio;
    obj["seed"] = seed;
    obj["lexicons"] = lexicons;
    obj["profiles"] = profiles;
    return obj.dump();
}

std::string Config::dataset_path(const std::string& dataset_id) const {
    return data_dir + "/" + dataset_id + ".jsonl";
}

}  // namespace hsx
