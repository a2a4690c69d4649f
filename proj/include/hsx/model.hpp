#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsx/features.hpp"
#include "hsx/record.hpp"

namespace hsx {

struct ModelHyperparams {
    double learning_rate = 0.1;
    std::uint32_t epochs = 10;
    double l2_penalty = 1e-5;
    std::uint64_t seed = 1;
};

// Binary logistic regression over the hashed feature space. Hate is the
// positive class; the decision threshold sits at p = 0.5 with the boundary
// itself classed as Hate.
struct LinearModel {
    std::uint32_t dimension = 0;
    ModelHyperparams hyperparams;
    std::vector<double> weights;  // dense, length dimension
    double bias = 0.0;
};

// Per-example SGD on mean logistic loss + (l2/2)||w||^2 with per-epoch
// seeded shuffling. Training order is part of the determinism contract, so
// this is intentionally single-threaded: same inputs and seed give
// bit-identical weights. Requires both classes. If epoch_losses is given it
// receives the full-data regularized loss after every epoch.
LinearModel train(const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels,
                  const ModelHyperparams& hyperparams,
                  std::vector<double>* epoch_losses = nullptr);

struct LossGradient {
    double loss = 0.0;
    std::vector<double> weight_gradient;
    double bias_gradient = 0.0;
};

// Regularized mean logistic loss over the batch and its exact gradient.
// Exposed so the finite-difference check can probe the training objective.
LossGradient loss_and_gradient(const LinearModel& model,
                               const std::vector<FeatureVector>& batch,
                               const std::vector<Label>& labels);

struct Prediction {
    Label label = Label::NonHate;
    double probability = 0.0;  // probability of Hate
};

Prediction predict(const LinearModel& model, const FeatureVector& vector);

struct Confusion {
    std::uint64_t tp = 0;  // Hate predicted Hate
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct Metrics {
    Confusion confusion;
    ClassMetrics hate;
    ClassMetrics nonhate;
    double macro_f1 = 0.0;
};

// Precision/recall/F1 per class with Hate positive. Undefined ratios
// (empty denominators) are 0 by convention; macro-F1 is the unweighted mean
// of the two class F1 scores.
Metrics evaluate(const std::vector<Label>& predicted, const std::vector<Label>& gold);
Metrics metrics_from_confusion(const Confusion& confusion);

// Externally produced probabilities keyed by record_id, thresholded at 0.5
// like the native model. File: CSV with columns record_id, probability.
struct ImportedPredictions {
    std::map<std::string, Prediction> by_record;
};
ImportedPredictions import_predictions(const std::string& path);

// Joins predictions with a gold dataset by record_id; any id on either side
// without a partner is an error naming the id.
Metrics evaluate_predictions(const ImportedPredictions& predictions, const Dataset& gold);

// Model bundled with the frozen idf table it was trained behind, so a saved
// model can score new text with the exact training-time features.
struct TrainedPipeline {
    IdfTable idf;
    LinearModel model;
};

void save_pipeline(const TrainedPipeline& pipeline, const std::string& path);
TrainedPipeline load_pipeline(const std::string& path);

}  // namespace hsx
