#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hsx/corpus.hpp"
#include "hsx/model.hpp"
#include "hsx/record.hpp"

namespace hsx {

enum class Sampling { None, Undersample };
enum class SamplingScope { CombinedPool, PerDataset };

std::string_view to_string(Sampling s);
Sampling parse_sampling(std::string_view s);
std::string_view to_string(SamplingScope s);
SamplingScope parse_sampling_scope(std::string_view s);

// One row of the experiment grid: a target dataset, the datasets augmenting
// its training split, and everything needed to reproduce the run.
struct ExperimentSpec {
    std::string target;
    std::vector<std::string> augments;
    Sampling sampling = Sampling::None;
    SamplingScope sampling_scope = SamplingScope::CombinedPool;
    double split_ratio = 0.7;
    std::uint64_t seed = 0;
    FeatureConfig features;
    ModelHyperparams model;
};

// Canonical JSON form; doubles as the context every derived RNG stream is
// keyed on, so experiments are independent of execution order.
std::string spec_canonical(const ExperimentSpec& spec);

void validate_spec(const ExperimentSpec& spec, const DatasetRegistry& registry);

struct SplitResult {
    std::vector<CommentRecord> train;
    std::vector<CommentRecord> test;
    std::string fingerprint;  // hash of the sorted test record ids
};

// Per-class random split at the ratio (sizes rounded half-up per class),
// deterministic in (dataset, ratio, seed) and independent of everything
// else. Original record order is preserved within each side.
SplitResult stratified_split(const Dataset& dataset, double ratio, std::uint64_t seed);

// Keeps the whole minority class and a uniform random subset of the
// majority of equal size: minority first, then the sampled majority, then
// one seeded shuffle.
std::vector<CommentRecord> undersample(const std::vector<CommentRecord>& records,
                                       std::uint64_t seed);

// Concatenates the target's training split with every augment's labeled
// records, then applies the sampling policy. A pool record id colliding with
// the frozen test set is a leakage error.
std::vector<CommentRecord> build_training_pool(const std::vector<CommentRecord>& target_train,
                                               const std::vector<const Dataset*>& augments,
                                               Sampling sampling, SamplingScope scope,
                                               std::uint64_t seed,
                                               const std::set<std::string>& test_ids);

struct ExperimentResult {
    ExperimentSpec spec;
    Metrics metrics;
    std::string test_fingerprint;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::map<std::string, std::size_t> contributions;  // dataset id -> pool records
};

struct PreparedExperiment {
    std::vector<CommentRecord> pool;
    std::vector<CommentRecord> test;
    std::string fingerprint;
};

// Split + pool assembly without the training step; exposed so the split
// protocol can be exercised cheaply.
PreparedExperiment prepare_experiment(const ExperimentSpec& spec, const DatasetRegistry& registry);

// Full protocol: split the target, build the pool, fit idf on the pool
// only, train, evaluate on the frozen test split.
ExperimentResult run_experiment(const ExperimentSpec& spec, const DatasetRegistry& registry);

// Validates every spec before running any. Experiments own derived RNG
// streams and write to their own slots, so results are byte-identical for
// any worker count.
std::vector<ExperimentResult> run_grid(const std::vector<ExperimentSpec>& specs,
                                       const DatasetRegistry& registry, int workers = 0,
                                       std::vector<std::string>* warnings = nullptr);

struct GridFile {
    std::uint64_t global_seed = 0;
    std::vector<ExperimentSpec> specs;
};

// JSON grid file: {"global_seed": N, "experiments": [...]}. Specs without
// their own seed inherit the global one.
GridFile load_grid_file(const std::string& path);

}  // namespace hsx
