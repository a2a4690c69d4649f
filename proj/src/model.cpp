#include "hsx/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hsx/common.hpp"
#include "hsx/csv.hpp"
#include "hsx/numfmt.hpp"
#include "hsx/rng.hpp"

namespace hsx {

namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// ln(1 + e^z) - y*z without overflow for large |z|.
double logistic_loss(double z, double y) {
    return std::max(z, 0.0) - y * z + std::log1p(std::exp(-std::abs(z)));
}

void check_training_inputs(const std::vector<FeatureVector>& vectors,
                           const std::vector<Label>& labels) {
    if (vectors.size() != labels.size()) {
        throw Error("train: " + std::to_string(vectors.size()) + " vectors vs "
                    + std::to_string(labels.size()) + " labels");
    }
    if (vectors.empty()) throw Error("train: empty input");
    const std::uint32_t dim = vectors.front().dimension;
    for (const FeatureVector& v : vectors) {
        if (v.dimension != dim) {
            throw Error("train: mixed vector dimensions (" + std::to_string(dim) + " vs "
                        + std::to_string(v.dimension) + ")");
        }
    }
    bool has_hate = false;
    bool has_nonhate = false;
    for (Label l : labels) {
        (l == Label::Hate ? has_hate : has_nonhate) = true;
    }
    if (!has_hate || !has_nonhate) {
        throw Error("train: both classes must be present, got only "
                    + std::string(to_string(labels.front())));
    }
}

double sparse_dot(const std::vector<double>& dense, const FeatureVector& v) {
    double sum = 0.0;
    for (const auto& [index, weight] : v.entries) sum += dense[index] * weight;
    return sum;
}

double full_loss(const std::vector<double>& weights, double bias, double l2,
                 const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels) {
    double loss = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const double z = sparse_dot(weights, vectors[i]) + bias;
        loss += logistic_loss(z, labels[i] == Label::Hate ? 1.0 : 0.0);
    }
    loss /= static_cast<double>(vectors.size());
    double wsq = 0.0;
    for (double w : weights) wsq += w * w;
    return loss + 0.5 * l2 * wsq;
}

}  // namespace

LinearModel train(const std::vector<FeatureVector>& vectors, const std::vector<Label>& labels,
                  const ModelHyperparams& hyperparams, std::vector<double>* epoch_losses) {
    check_training_inputs(vectors, labels);
    const std::uint32_t dim = vectors.front().dimension;

    // Scaled representation w = scale * v keeps the per-example L2 shrink
    // O(1) instead of touching every weight.
    std::vector<double> v(dim, 0.0);
    double scale = 1.0;
    double bias = 0.0;
    const double lr = hyperparams.learning_rate;
    const double l2 = hyperparams.l2_penalty;

    auto materialize = [&] {
        if (scale != 1.0) {
            for (double& w : v) w *= scale;
            scale = 1.0;
        }
    };

    std::vector<std::size_t> order(vectors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(hyperparams.seed);

    if (epoch_losses) epoch_losses->clear();
    for (std::uint32_t epoch = 0; epoch < hyperparams.epochs; ++epoch) {
        fisher_yates_shuffle(order, rng);
        for (std::size_t idx : order) {
            const FeatureVector& x = vectors[idx];
            const double y = labels[idx] == Label::Hate ? 1.0 : 0.0;
            const double z = scale * sparse_dot(v, x) + bias;
            const double g = sigmoid(z) - y;
            scale *= 1.0 - lr * l2;
            if (scale < 0.5) materialize();
            const double step = lr * g / scale;
            for (const auto& [index, weight] : x.entries) v[index] -= step * weight;
            bias -= lr * g;
        }
        if (epoch_losses) {
            std::vector<double> w(v);
            for (double& wi : w) wi *= scale;
            epoch_losses->push_back(full_loss(w, bias, l2, vectors, labels));
        }
    }
    materialize();

    LinearModel model;
    model.dimension = dim;
    model.hyperparams = hyperparams;
    model.weights = std::move(v);
    model.bias = bias;
    return model;
}

LossGradient loss_and_gradient(const LinearModel& model, const std::vector<FeatureVector>& batch,
                               const std::vector<Label>& labels) {
    if (batch.empty()) throw Error("loss_and_gradient: empty batch");
    if (batch.size() != labels.size()) {
        throw Error("loss_and_gradient: batch and label sizes differ");
    }
    for (const FeatureVector& v : batch) {
        if (v.dimension != model.dimension) {
            throw Error("loss_and_gradient: vector dimension " + std::to_string(v.dimension)
                        + " does not match model dimension " + std::to_string(model.dimension));
        }
    }

    LossGradient out;
    out.weight_gradient.assign(model.dimension, 0.0);
    const double inv_n = 1.0 / static_cast<double>(batch.size());
    double loss = 0.0;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const double y = labels[i] == Label::Hate ? 1.0 : 0.0;
        const double z = sparse_dot(model.weights, batch[i]) + model.bias;
        loss += logistic_loss(z, y);
        const double g = (sigmoid(z) - y) * inv_n;
        for (const auto& [index, weight] : batch[i].entries) {
            out.weight_gradient[index] += g * weight;
        }
        out.bias_gradient += g;
    }
    loss *= inv_n;
    double wsq = 0.0;
    for (std::uint32_t i = 0; i < model.dimension; ++i) {
        wsq += model.weights[i] * model.weights[i];
        out.weight_gradient[i] += model.hyperparams.l2_penalty * model.weights[i];
    }
    out.loss = loss + 0.5 * model.hyperparams.l2_penalty * wsq;
    return out;
}

Prediction predict(const LinearModel& model, const FeatureVector& vector) {
    if (vector.dimension != model.dimension) {
        throw Error("predict: vector dimension " + std::to_string(vector.dimension)
                    + " does not match model dimension " + std::to_string(model.dimension));
    }
    Prediction p;
    p.probability = sigmoid(sparse_dot(model.weights, vector) + model.bias);
    p.label = p.probability >= 0.5 ? Label::Hate : Label::NonHate;
    return p;
}

Metrics metrics_from_confusion(const Confusion& c) {
    Metrics m;
    m.confusion = c;
    auto ratio = [](std::uint64_t num, std::uint64_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    auto f1 = [](double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); };
    m.hate.precision = ratio(c.tp, c.tp + c.fp);
    m.hate.recall = ratio(c.tp, c.tp + c.fn);
    m.hate.f1 = f1(m.hate.precision, m.hate.recall);
    m.nonhate.precision = ratio(c.tn, c.tn + c.fn);
    m.nonhate.recall = ratio(c.tn, c.tn + c.fp);
    m.nonhate.f1 = f1(m.nonhate.precision, m.nonhate.recall);
    m.macro_f1 = 0.5 * (m.hate.f1 + m.nonhate.f1);
    return m;
}

Metrics evaluate(const std::vector<Label>& predicted, const std::vector<Label>& gold) {
    if (predicted.empty()) throw Error("evaluate: empty input");
    if (predicted.size() != gold.size()) {
        throw Error("evaluate: " + std::to_string(predicted.size()) + " predictions vs "
                    + std::to_string(gold.size()) + " gold labels");
    }
    Confusion c;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool pred_hate = predicted[i] == Label::Hate;
        const bool gold_hate = gold[i] == Label::Hate;
        if (pred_hate && gold_hate) ++c.tp;
        if (pred_hate && !gold_hate) ++c.fp;
        if (!pred_hate && gold_hate) ++c.fn;
        if (!pred_hate && !gold_hate) ++c.tn;
    }
    return metrics_from_confusion(c);
}

ImportedPredictions import_predictions(const std::string& path) {
    CsvTable table = read_csv_file(path);
    const std::size_t id_col = table.column("record_id", path);
    const std::size_t prob_col = table.column("probability", path);

    ImportedPredictions out;
    for (const CsvRow& row : table.rows) {
        const std::string where = path + ":" + std::to_string(row.line);
        const std::string& record_id = row.fields[id_col];
        if (record_id.empty()) throw Error(where + ": empty record_id");
        const double p = parse_double(row.fields[prob_col], where + " probability");
        if (p < 0.0 || p > 1.0) {
            throw Error(where + ": probability " + format_double(p) + " outside [0,1]");
        }
        Prediction pred;
        pred.probability = p;
        pred.label = p >= 0.5 ? Label::Hate : Label::NonHate;
        if (!out.by_record.emplace(record_id, pred).second) {
            throw Error(where + ": duplicate record_id '" + record_id + "'");
        }
    }
    if (out.by_record.empty()) throw Error(path + ": no predictions");
    return out;
}

Metrics evaluate_predictions(const ImportedPredictions& predictions, const Dataset& gold) {
    std::map<std::string, Label> gold_labels;
    for (const CommentRecord& rec : gold.records) {
        if (!rec.label) {
            throw Error("gold dataset has unlabeled record '" + rec.record_id + "'");
        }
        gold_labels.emplace(rec.record_id, *rec.label);
    }
    for (const auto& [record_id, pred] : predictions.by_record) {
        if (!gold_labels.count(record_id)) {
            throw Error("prediction for unknown record '" + record_id + "'");
        }
    }
    std::vector<Label> pred_vec;
    std::vector<Label> gold_vec;
    for (const auto& [record_id, label] : gold_labels) {
        const auto it = predictions.by_record.find(record_id);
        if (it == predictions.by_record.end()) {
            throw Error("no prediction for record '" + record_id + "'");
        }
        pred_vec.push_back(it->second.label);
        gold_vec.push_back(label);
    }
    return evaluate(pred_vec, gold_vec);
}

void save_pipeline(const TrainedPipeline& pipeline, const std::string& path) {
    if (pipeline.model.dimension != pipeline.idf.config().dimension) {
        throw Error("pipeline model dimension does not match its idf table");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write model file: " + path);

    const LinearModel& m = pipeline.model;
    out << "hsx-model 1\n";
    out << "dimension " << m.dimension << '\n';
    out << "hash_seed " << pipeline.idf.config().hash_seed << '\n';
    out << "learning_rate " << format_double(m.hyperparams.learning_rate) << '\n';
    out << "epochs " << m.hyperparams.epochs << '\n';
    out << "l2_penalty " << format_double(m.hyperparams.l2_penalty) << '\n';
    out << "seed " << m.hyperparams.seed << '\n';
    out << "documents " << pipeline.idf.document_count() << '\n';

    std::vector<std::pair<std::uint32_t, std::uint64_t>> df(pipeline.idf.df_map().begin(),
                                                            pipeline.idf.df_map().end());
    std::sort(df.begin(), df.end());
    out << "df " << df.size() << '\n';
    for (const auto& [index, count] : df) out << index << ' ' << count << '\n';

    out << "bias " << format_double(m.bias) << '\n';
    out << "weights " << m.weights.size() << '\n';
    for (double w : m.weights) out << format_double(w) << '\n';
}

namespace {

std::pair<std::string, std::string> read_kv(std::istream& in, std::string_view expected_key,
                                            const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw Error(path + ": truncated model file");
    const auto space = line.find(' ');
    if (space == std::string::npos) throw Error(path + ": malformed line '" + line + "'");
    std::string key = line.substr(0, space);
    if (key != expected_key) {
        throw Error(path + ": expected '" + std::string(expected_key) + "', found '" + key + "'");
    }
    return {std::move(key), line.substr(space + 1)};
}

}  // namespace

TrainedPipeline load_pipeline(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file: " + path);

    std::string line;
    if (!std::getline(in, line) || line != "hsx-model 1") {
        throw Error(path + ": not a version-1 model file");
    }

    FeatureConfig config;
    config.dimension =
        static_cast<std::uint32_t>(parse_int(read_kv(in, "dimension", path).second, "dimension"));
    config.hash_seed =
        static_cast<std::uint64_t>(parse_int(read_kv(in, "hash_seed", path).second, "hash_seed"));
    config.validate();

    ModelHyperparams hp;
    hp.learning_rate = parse_double(read_kv(in, "learning_rate", path).second, "learning_rate");
    hp.epochs = static_cast<std::uint32_t>(parse_int(read_kv(in, "epochs", path).second, "epochs"));
    hp.l2_penalty = parse_double(read_kv(in, "l2_penalty", path).second, "l2_penalty");
    hp.seed = static_cast<std::uint64_t>(parse_int(read_kv(in, "seed", path).second, "seed"));

    const std::uint64_t documents =
        static_cast<std::uint64_t>(parse_int(read_kv(in, "documents", path).second, "documents"));
    const std::size_t df_entries =
        static_cast<std::size_t>(parse_int(read_kv(in, "df", path).second, "df count"));
    std::unordered_map<std::uint32_t, std::uint64_t> df;
    df.reserve(df_entries);
    for (std::size_t i = 0; i < df_entries; ++i) {
        if (!std::getline(in, line)) throw Error(path + ": truncated df section");
        std::istringstream row(line);
        std::uint64_t index = 0;
        std::uint64_t count = 0;
        if (!(row >> index >> count)) throw Error(path + ": malformed df entry '" + line + "'");
        df[static_cast<std::uint32_t>(index)] = count;
    }

    TrainedPipeline pipeline;
    pipeline.idf = IdfTable(config, documents, std::move(df));
    pipeline.model.dimension = config.dimension;
    pipeline.model.hyperparams = hp;
    pipeline.model.bias = parse_double(read_kv(in, "bias", path).second, "bias");

    const std::size_t n_weights =
        static_cast<std::size_t>(parse_int(read_kv(in, "weights", path).second, "weight count"));
    if (n_weights != config.dimension) {
        throw Error(path + ": weight count does not match dimension");
    }
    pipeline.model.weights.reserve(n_weights);
    for (std::size_t i = 0; i < n_weights; ++i) {
        if (!std::getline(in, line)) throw Error(path + ": truncated weights section");
        pipeline.model.weights.push_back(parse_double(line, "weight"));
    }
    return pipeline;
}

}  // namespace hsx
