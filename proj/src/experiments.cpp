#include "hsx/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "hsx/common.hpp"
#include "hsx/numfmt.hpp"
#include "hsx/parallel.hpp"
#include "hsx/rng.hpp"
#include "hsx/text.hpp"

namespace hsx {

using nlohmann::json;

std::string_view to_string(Sampling s) {
    return s == Sampling::None ? "none" : "undersample";
}

Sampling parse_sampling(std::string_view s) {
    if (s == "none") return Sampling::None;
    if (s == "undersample") return Sampling::Undersample;
    throw Error("unknown sampling mode: '" + std::string(s) + "'");
}

std::string_view to_string(SamplingScope s) {
    return s == SamplingScope::CombinedPool ? "combined" : "per-dataset";
}

SamplingScope parse_sampling_scope(std::string_view s) {
    if (s == "combined") return SamplingScope::CombinedPool;
    if (s == "per-dataset") return SamplingScope::PerDataset;
    throw Error("unknown sampling scope: '" + std::string(s) + "'");
}

std::string spec_canonical(const ExperimentSpec& spec) {
    json obj;
    obj["target"] = spec.target;
    obj["augments"] = spec.augments;
    obj["sampling"] = to_string(spec.sampling);
    obj["sampling_scope"] = to_string(spec.sampling_scope);
    obj["split_ratio"] = spec.split_ratio;
    obj["seed"] = spec.seed;
    obj["features"] = {{"dimension", spec.features.dimension},
                       {"hash_seed", spec.features.hash_seed}};
    obj["model"] = {{"learning_rate", spec.model.learning_rate},
                    {"epochs", spec.model.epochs},
                    {"l2_penalty", spec.model.l2_penalty},
                    {"seed", spec.model.seed}};
    return obj.dump();
}

void validate_spec(const ExperimentSpec& spec, const DatasetRegistry& registry) {
    if (!registry.contains(spec.target)) {
        throw Error("experiment target '" + spec.target + "' is not in the registry");
    }
    if (spec.split_ratio <= 0.0 || spec.split_ratio >= 1.0) {
        throw Error("split ratio must be in (0,1), got " + format_double(spec.split_ratio));
    }
    spec.features.validate();
    if (spec.model.epochs == 0) throw Error("model epochs must be positive");
    if (spec.model.learning_rate <= 0.0) throw Error("learning rate must be positive");
    if (spec.model.l2_penalty < 0.0) throw Error("l2 penalty must be nonnegative");

    const std::string& target_language = registry.get(spec.target).meta.language;
    std::set<std::string> seen_augments;
    for (const std::string& augment : spec.augments) {
        if (augment == spec.target) {
            throw Error("experiment target '" + spec.target + "' cannot augment itself");
        }
        if (!seen_augments.insert(augment).second) {
            throw Error("duplicate augment '" + augment + "'");
        }
        if (!registry.contains(augment)) {
            throw Error("augment '" + augment + "' is not in the registry");
        }
        const std::string& lang = registry.get(augment).meta.language;
        if (lang != target_language) {
            throw Error("augment '" + augment + "' is '" + lang + "' but target '" + spec.target
                        + "' is '" + target_language + "'");
        }
    }
}

SplitResult stratified_split(const Dataset& dataset, double ratio, std::uint64_t seed) {
    if (ratio <= 0.0 || ratio >= 1.0) {
        throw Error("split ratio must be in (0,1), got " + format_double(ratio));
    }
    std::vector<std::size_t> hate_idx;
    std::vector<std::size_t> nonhate_idx;
    for (std::size_t i = 0; i < dataset.records.size(); ++i) {
        const auto& label = dataset.records[i].label;
        if (!label) {
            throw Error("stratified split: unlabeled record '" + dataset.records[i].record_id
                        + "'");
        }
        (*label == Label::Hate ? hate_idx : nonhate_idx).push_back(i);
    }

    std::vector<bool> in_train(dataset.records.size(), false);
    const std::string ratio_text = format_double(ratio);
    for (auto* class_idx : {&hate_idx, &nonhate_idx}) {
        const std::string_view class_name = class_idx == &hate_idx ? "Hate" : "NonHate";
        const std::size_t n = class_idx->size();
        if (n < 2) {
            throw Error("stratified split: class " + std::string(class_name) + " has "
                        + std::to_string(n) + " records, need at least 2");
        }
        // half-up per class
        const auto train_n = static_cast<std::size_t>(
            std::floor(ratio * static_cast<double>(n) + 0.5));
        if (train_n == 0 || train_n == n) {
            throw Error("stratified split: ratio " + ratio_text + " leaves class "
                        + std::string(class_name) + " with an empty train or test side");
        }
        SplitMix64 rng = derive_stream(
            seed, {"split", dataset.meta.dataset_id, ratio_text, class_name});
        std::vector<std::size_t> shuffled = *class_idx;
        fisher_yates_shuffle(shuffled, rng);
        for (std::size_t k = 0; k < train_n; ++k) in_train[shuffled[k]] = true;
    }

    SplitResult result;
    for (std::size_t i = 0; i < dataset.records.size(); ++i) {
        (in_train[i] ? result.train : result.test).push_back(dataset.records[i]);
    }

    std::vector<std::string> test_ids;
    test_ids.reserve(result.test.size());
    for (const CommentRecord& rec : result.test) test_ids.push_back(rec.record_id);
    std::sort(test_ids.begin(), test_ids.end());
    std::string joined;
    for (const std::string& id : test_ids) {
        joined += id;
        joined.push_back('\n');
    }
    result.fingerprint = hash128(joined).hex();
    return result;
}

std::vector<CommentRecord> undersample(const std::vector<CommentRecord>& records,
                                       std::uint64_t seed) {
    std::vector<std::size_t> hate_idx;
    std::vector<std::size_t> nonhate_idx;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].label) {
            throw Error("undersample: unlabeled record '" + records[i].record_id + "'");
        }
        (*records[i].label == Label::Hate ? hate_idx : nonhate_idx).push_back(i);
    }
    if (hate_idx.empty() || nonhate_idx.empty()) {
        throw Error("undersample: a class has zero records");
    }

    // ties keep Hate as the minority side; either way the counts equalize
    const bool hate_minor = hate_idx.size() <= nonhate_idx.size();
    const std::vector<std::size_t>& minority = hate_minor ? hate_idx : nonhate_idx;
    const std::vector<std::size_t>& majority = hate_minor ? nonhate_idx : hate_idx;

    SplitMix64 rng = derive_stream(seed, {"undersample"});
    const std::vector<std::size_t> picks =
        sample_without_replacement(majority.size(), minority.size(), rng);

    std::vector<CommentRecord> out;
    out.reserve(2 * minority.size());
    for (std::size_t i : minority) out.push_back(records[i]);
    for (std::size_t p : picks) out.push_back(records[majority[p]]);
    fisher_yates_shuffle(out, rng);
    return out;
}

std::vector<CommentRecord> build_training_pool(const std::vector<CommentRecord>& target_train,
                                               const std::vector<const Dataset*>& augments,
                                               Sampling sampling, SamplingScope scope,
                                               std::uint64_t seed,
                                               const std::set<std::string>& test_ids) {
    auto check_leak = [&](const CommentRecord& rec) {
        if (test_ids.count(rec.record_id)) {
            throw Error("leakage: pool record '" + rec.record_id
                        + "' collides with the frozen test set");
        }
    };

    if (sampling == Sampling::Undersample && scope == SamplingScope::PerDataset) {
        std::vector<CommentRecord> pool;
        std::uint64_t part = 0;
        auto add_part = [&](const std::vector<CommentRecord>& records) {
            SplitMix64 stream = derive_stream(seed, {"pool-part", std::to_string(part++)});
            for (const CommentRecord& rec : undersample(records, stream.next())) {
                check_leak(rec);
                pool.push_back(rec);
            }
        };
        add_part(target_train);
        for (const Dataset* augment : augments) {
            std::vector<CommentRecord> labeled;
            for (const CommentRecord& rec : augment->records) {
                if (rec.label) labeled.push_back(rec);
            }
            add_part(labeled);
        }
        return pool;
    }

    std::vector<CommentRecord> pool = target_train;
    for (const Dataset* augment : augments) {
        for (const CommentRecord& rec : augment->records) {
            if (rec.label) pool.push_back(rec);
        }
    }
    for (const CommentRecord& rec : pool) check_leak(rec);
    if (sampling == Sampling::Undersample) {
        SplitMix64 stream = derive_stream(seed, {"pool-combined"});
        pool = undersample(pool, stream.next());
    }
    return pool;
}

PreparedExperiment prepare_experiment(const ExperimentSpec& spec,
                                      const DatasetRegistry& registry) {
    validate_spec(spec, registry);
    const Dataset& target = registry.get(spec.target);
    SplitResult split = stratified_split(target, spec.split_ratio, spec.seed);

    std::set<std::string> test_ids;
    for (const CommentRecord& rec : split.test) test_ids.insert(rec.record_id);

    std::vector<const Dataset*> augments;
    augments.reserve(spec.augments.size());
    for (const std::string& id : spec.augments) augments.push_back(&registry.get(id));

    SplitMix64 sample_stream = derive_stream(spec.seed, {"sample", spec_canonical(spec)});
    PreparedExperiment prepared;
    prepared.pool = build_training_pool(split.train, augments, spec.sampling,
                                        spec.sampling_scope, sample_stream.next(), test_ids);
    prepared.test = std::move(split.test);
    prepared.fingerprint = std::move(split.fingerprint);
    return prepared;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const DatasetRegistry& registry) {
    PreparedExperiment prepared = prepare_experiment(spec, registry);

    // runtime leakage assertion, independent of the pool builder's own check
    {
        std::set<std::string> test_ids;
        for (const CommentRecord& rec : prepared.test) test_ids.insert(rec.record_id);
        for (const CommentRecord& rec : prepared.pool) {
            if (test_ids.count(rec.record_id)) {
                throw Error("leakage: pool record '" + rec.record_id + "' is in the test set");
            }
        }
    }

    std::vector<std::vector<std::string>> pool_tokens;
    pool_tokens.reserve(prepared.pool.size());
    std::vector<Label> pool_labels;
    pool_labels.reserve(prepared.pool.size());
    for (const CommentRecord& rec : prepared.pool) {
        pool_tokens.push_back(tokenize(rec.clean_text));
        pool_labels.push_back(*rec.label);
    }

    // idf comes from the training pool only; the test split never leaks in
    const IdfTable idf = fit_idf(pool_tokens, spec.features);
    const std::vector<FeatureVector> pool_vectors = vectorize_corpus(pool_tokens, idf);

    ModelHyperparams hp = spec.model;
    {
        SplitMix64 train_stream = derive_stream(spec.seed, {"train", spec_canonical(spec),
                                                            std::to_string(spec.model.seed)});
        hp.seed = train_stream.next();
    }
    const LinearModel model = train(pool_vectors, pool_labels, hp);

    std::vector<Label> predicted;
    std::vector<Label> gold;
    predicted.reserve(prepared.test.size());
    gold.reserve(prepared.test.size());
    for (const CommentRecord& rec : prepared.test) {
        const FeatureVector v = vectorize(tokenize(rec.clean_text), idf);
        predicted.push_back(predict(model, v).label);
        gold.push_back(*rec.label);
    }

    ExperimentResult result;
    result.spec = spec;
    result.metrics = evaluate(predicted, gold);
    result.test_fingerprint = prepared.fingerprint;
    result.train_size = prepared.pool.size();
    result.test_size = prepared.test.size();
    for (const CommentRecord& rec : prepared.pool) ++result.contributions[rec.dataset_id];
    return result;
}

std::vector<ExperimentResult> run_grid(const std::vector<ExperimentSpec>& specs,
                                       const DatasetRegistry& registry, int workers,
                                       std::vector<std::string>* warnings) {
    if (specs.empty()) {
        warn(warnings, "experiment grid is empty");
        return {};
    }

    // validate everything before running anything
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        try {
            validate_spec(specs[i], registry);
        } catch (const Error& e) {
            problems.push_back("spec " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (!problems.empty()) {
        std::string joined;
        for (const std::string& p : problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        throw Error("grid validation failed: " + joined);
    }

    std::vector<ExperimentResult> results(specs.size());
    std::vector<std::string> errors(specs.size());
    parallel_for_dynamic(
        static_cast<std::int64_t>(specs.size()),
        [&](std::size_t i) {
            try {
                results[i] = run_experiment(specs[i], registry);
            } catch (const Error& e) {
                errors[i] = e.what();
            }
        },
        workers);
    for (const std::string& err : errors) {
        if (!err.empty()) throw Error(err);
    }
    return results;
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& context) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) throw Error(context + ": unknown key '" + key + "'");
    }
}

}  // namespace

GridFile load_grid_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open grid file: " + path);
    json obj;
    try {
        obj = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
    reject_unknown_keys(obj, {"global_seed", "experiments"}, path);

    GridFile grid;
    grid.global_seed = obj.value("global_seed", 0ULL);
    if (!obj.contains("experiments") || !obj["experiments"].is_array()) {
        throw Error(path + ": needs an 'experiments' array");
    }
    for (const json& entry : obj["experiments"]) {
        reject_unknown_keys(entry,
                            {"target", "augments", "sampling", "sampling_scope", "split_ratio",
                             "seed", "features", "model"},
                            path);
        ExperimentSpec spec;
        if (!entry.contains("target")) throw Error(path + ": experiment without a target");
        spec.target = entry["target"].get<std::string>();
        if (entry.contains("augments")) {
            spec.augments = entry["augments"].get<std::vector<std::string>>();
        }
        if (entry.contains("sampling")) {
            spec.sampling = parse_sampling(entry["sampling"].get<std::string>());
        }
        if (entry.contains("sampling_scope")) {
            spec.sampling_scope = parse_sampling_scope(entry["sampling_scope"].get<std::string>());
        }
        if (entry.contains("split_ratio")) spec.split_ratio = entry["split_ratio"].get<double>();
        spec.seed = entry.value("seed", grid.global_seed);
        if (entry.contains("features")) {
            const json& f = entry["features"];
            reject_unknown_keys(f, {"dimension", "hash_seed"}, path);
            if (f.contains("dimension")) {
                spec.features.dimension = f["dimension"].get<std::uint32_t>();
            }
            if (f.contains("hash_seed")) {
                spec.features.hash_seed = f["hash_seed"].get<std::uint64_t>();
            }
        }
        if (entry.contains("model")) {
            const json& m = entry["model"];
            reject_unknown_keys(m, {"learning_rate", "epochs", "l2_penalty", "seed"}, path);
            if (m.contains("learning_rate")) {
                spec.model.learning_rate = m["learning_rate"].get<double>();
            }
            if (m.contains("epochs")) spec.model.epochs = m["epochs"].get<std::uint32_t>();
            if (m.contains("l2_penalty")) spec.model.l2_penalty = m["l2_penalty"].get<double>();
            if (m.contains("seed")) spec.model.seed = m["seed"].get<std::uint64_t>();
        }
        grid.specs.push_back(std::move(spec));
    }
    return grid;
}

}  // namespace hsx
