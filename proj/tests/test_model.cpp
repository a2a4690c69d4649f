#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hsx/experiments.hpp"
#include "hsx/model.hpp"
#include "hsx/rng.hpp"
#include "hsx/synth.hpp"
#include "hsx/text.hpp"

#include "helpers.hpp"

using namespace hsx;

namespace {

FeatureVector dense_vector(const std::vector<double>& values) {
    FeatureVector v;
    v.dimension = static_cast<std::uint32_t>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0.0) v.entries.emplace_back(static_cast<std::uint32_t>(i), values[i]);
    }
    return v;
}

LinearModel random_model(SplitMix64& rng, std::uint32_t dim) {
    LinearModel m;
    m.dimension = dim;
    m.hyperparams.l2_penalty = 1e-3;
    m.weights.resize(dim);
    for (auto& w : m.weights) w = rng.next_unit() * 2.0 - 1.0;
    m.bias = rng.next_unit() * 2.0 - 1.0;
    return m;
}

}  // namespace

TEST_CASE("per-example loss at the zero model is ln 2") {
    LinearModel zero;
    zero.dimension = 4;
    zero.weights.assign(4, 0.0);
    zero.hyperparams.l2_penalty = 0.0;
    const auto lg = loss_and_gradient(zero, {dense_vector({1, 0, 2, 0})}, {Label::Hate});
    CHECK(lg.loss == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("gradient matches central finite differences") {
    SplitMix64 rng(0x9D4D);
    const double step = 1e-5;
    double worst = 0.0;
    for (int instance = 0; instance < 100; ++instance) {
        const std::uint32_t dim = 2 + static_cast<std::uint32_t>(rng.next_below(6));
        LinearModel model = random_model(rng, dim);

        std::vector<FeatureVector> batch;
        std::vector<Label> labels;
        const std::size_t n = 1 + rng.next_below(8);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> values(dim);
            for (auto& x : values) x = rng.next_unit() * 4.0 - 2.0;
            batch.push_back(dense_vector(values));
            labels.push_back(rng.next_below(2) ? Label::Hate : Label::NonHate);
        }

        const LossGradient lg = loss_and_gradient(model, batch, labels);
        auto loss_at = [&](const LinearModel& m) {
            return loss_and_gradient(m, batch, labels).loss;
        };

        for (std::uint32_t d = 0; d < dim; ++d) {
            LinearModel plus = model;
            LinearModel minus = model;
            plus.weights[d] += step;
            minus.weights[d] -= step;
            const double fd = (loss_at(plus) - loss_at(minus)) / (2.0 * step);
            const double denom = std::max(std::abs(fd), 1e-8);
            worst = std::max(worst, std::abs(fd - lg.weight_gradient[d]) / denom);
        }
        LinearModel bplus = model;
        LinearModel bminus = model;
        bplus.bias += step;
        bminus.bias -= step;
        const double fd_bias = (loss_at(bplus) - loss_at(bminus)) / (2.0 * step);
        worst = std::max(worst,
                         std::abs(fd_bias - lg.bias_gradient) / std::max(std::abs(fd_bias), 1e-8));
    }
    CHECK(worst <= 1e-4);
}

TEST_CASE("duplicated example leaves the mean gradient unchanged") {
    LinearModel model;
    model.dimension = 3;
    model.weights = {0.3, -0.2, 0.7};
    model.bias = 0.1;
    model.hyperparams.l2_penalty = 1e-4;

    const FeatureVector x = dense_vector({1.0, -1.0, 0.5});
    const auto single = loss_and_gradient(model, {x}, {Label::Hate});
    const auto doubled = loss_and_gradient(model, {x, x}, {Label::Hate, Label::Hate});
    CHECK(doubled.loss == doctest::Approx(single.loss).epsilon(1e-12));
    for (std::size_t d = 0; d < 3; ++d) {
        CHECK(doubled.weight_gradient[d]
              == doctest::Approx(single.weight_gradient[d]).epsilon(1e-12));
    }
    CHECK_THROWS_AS(loss_and_gradient(model, {}, {}), Error);
}

TEST_CASE("predict thresholds at one half, boundary counts as Hate") {
    LinearModel model;
    model.dimension = 2;
    model.weights = {0.0, 0.0};
    model.bias = 0.0;
    const Prediction boundary = predict(model, dense_vector({1.0, 1.0}));
    CHECK(boundary.probability == doctest::Approx(0.5));
    CHECK(boundary.label == Label::Hate);

    model.bias = 50.0;
    CHECK(predict(model, dense_vector({0.0, 0.0})).probability == doctest::Approx(1.0));
    model.bias = -50.0;
    CHECK(predict(model, dense_vector({0.0, 0.0})).label == Label::NonHate);

    CHECK_THROWS_AS(predict(model, dense_vector({1.0, 1.0, 1.0})), Error);
}

TEST_CASE("training is bit-deterministic given the seed") {
    SyntheticSpec spec;
    spec.size = 120;
    spec.seed = 11;
    const Dataset ds = make_synthetic_dataset(spec);
    std::vector<std::vector<std::string>> docs;
    std::vector<Label> labels;
    for (const auto& rec : ds.records) {
        docs.push_back(tokenize(rec.clean_text));
        labels.push_back(*rec.label);
    }
    const FeatureConfig config{1u << 12, 0x5EED};
    const IdfTable idf = fit_idf(docs, config);
    const auto vectors = vectorize_corpus(docs, idf);

    ModelHyperparams hp;
    hp.epochs = 5;
    const LinearModel m1 = train(vectors, labels, hp);
    const LinearModel m2 = train(vectors, labels, hp);
    CHECK(m1.weights == m2.weights);  // bitwise
    CHECK(m1.bias == m2.bias);

    ModelHyperparams other = hp;
    other.seed = hp.seed + 1;
    const LinearModel m3 = train(vectors, labels, other);
    CHECK(m1.weights != m3.weights);
}

TEST_CASE("training rejects single-class and mixed-dimension input") {
    const FeatureVector a = dense_vector({1.0, 0.0});
    const FeatureVector b = dense_vector({0.0, 1.0});
    CHECK_THROWS_AS(train({a, b}, {Label::Hate, Label::Hate}, ModelHyperparams{}), Error);

    FeatureVector widened = dense_vector({1.0, 0.0, 0.0});
    CHECK_THROWS_AS(train({a, widened}, {Label::Hate, Label::NonHate}, ModelHyperparams{}),
                    Error);
    CHECK_THROWS_AS(train({}, {}, ModelHyperparams{}), Error);
}

TEST_CASE("separable corpus trains to high held-out macro F1") {
    // two disjoint generative vocabularies, 250 docs per class
    SyntheticSpec spec;
    spec.size = 500;
    spec.hate_fraction = 0.5;
    spec.class_word_probability = 1.0;  // fully separable
    spec.seed = 21;
    const Dataset ds = make_synthetic_dataset(spec);

    const SplitResult split = stratified_split(ds, 0.7, 99);
    std::vector<std::vector<std::string>> train_docs, test_docs;
    std::vector<Label> train_labels, test_labels;
    for (const auto& rec : split.train) {
        train_docs.push_back(tokenize(rec.clean_text));
        train_labels.push_back(*rec.label);
    }
    for (const auto& rec : split.test) {
        test_docs.push_back(tokenize(rec.clean_text));
        test_labels.push_back(*rec.label);
    }
    const FeatureConfig config{1u << 16, 0x5EED};
    const IdfTable idf = fit_idf(train_docs, config);
    std::vector<double> epoch_losses;
    const LinearModel model =
        train(vectorize_corpus(train_docs, idf), train_labels, ModelHyperparams{}, &epoch_losses);

    std::vector<Label> predicted;
    for (const auto& doc : test_docs) predicted.push_back(predict(model, vectorize(doc, idf)).label);
    const Metrics metrics = evaluate(predicted, test_labels);
    CHECK(metrics.macro_f1 >= 0.95);

    // full-data loss never increases across epochs beyond the jitter bound
    REQUIRE(epoch_losses.size() == ModelHyperparams{}.epochs);
    for (std::size_t e = 1; e < epoch_losses.size(); ++e) {
        CHECK(epoch_losses[e] <= epoch_losses[e - 1] + 1e-3);
    }
}

TEST_CASE("evaluate on the worked confusion matrix") {
    // tp=3 fp=1 fn=1 tn=5
    std::vector<Label> gold, pred;
    auto add = [&](Label g, Label p, int n) {
        for (int i = 0; i < n; ++i) {
            gold.push_back(g);
            pred.push_back(p);
        }
    };
    add(Label::Hate, Label::Hate, 3);
    add(Label::NonHate, Label::Hate, 1);
    add(Label::Hate, Label::NonHate, 1);
    add(Label::NonHate, Label::NonHate, 5);

    const Metrics m = evaluate(pred, gold);
    CHECK(m.confusion.tp == 3);
    CHECK(m.confusion.fp == 1);
    CHECK(m.confusion.fn == 1);
    CHECK(m.confusion.tn == 5);
    CHECK(m.hate.precision == doctest::Approx(0.75));
    CHECK(m.hate.recall == doctest::Approx(0.75));
    CHECK(m.hate.f1 == doctest::Approx(0.75));

    // perfect predictions
    const Metrics perfect = evaluate(gold, gold);
    CHECK(perfect.macro_f1 == doctest::Approx(1.0));
    CHECK(perfect.hate.precision == doctest::Approx(1.0));

    CHECK_THROWS_AS(evaluate({}, {}), Error);
    CHECK_THROWS_AS(evaluate({Label::Hate}, {}), Error);
}

TEST_CASE("evaluate equals a brute-force counting oracle and ignores order") {
    SplitMix64 rng(0x0E0E);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng.next_below(50);
        std::vector<Label> gold, pred;
        for (std::size_t i = 0; i < n; ++i) {
            gold.push_back(rng.next_below(2) ? Label::Hate : Label::NonHate);
            pred.push_back(rng.next_below(2) ? Label::Hate : Label::NonHate);
        }
        const Metrics m = evaluate(pred, gold);

        // independent direct-count oracle
        std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool g = gold[i] == Label::Hate;
            const bool p = pred[i] == Label::Hate;
            tp += g && p;
            fp += !g && p;
            fn += g && !p;
            tn += !g && !p;
        }
        auto safe_div = [](double a, double b) { return b == 0.0 ? 0.0 : a / b; };
        const double hp = safe_div(double(tp), double(tp + fp));
        const double hr = safe_div(double(tp), double(tp + fn));
        const double hf = hp + hr == 0.0 ? 0.0 : 2 * hp * hr / (hp + hr);
        const double np = safe_div(double(tn), double(tn + fn));
        const double nr = safe_div(double(tn), double(tn + fp));
        const double nf = np + nr == 0.0 ? 0.0 : 2 * np * nr / (np + nr);

        CHECK(m.confusion.tp == tp);
        CHECK(m.hate.precision == hp);
        CHECK(m.hate.recall == hr);
        CHECK(m.hate.f1 == hf);
        CHECK(m.nonhate.precision == np);
        CHECK(m.nonhate.recall == nr);
        CHECK(m.nonhate.f1 == nf);
        CHECK(m.macro_f1 == 0.5 * (hf + nf));

        // permutation invariance: shuffle (pred, gold) jointly
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        fisher_yates_shuffle(order, rng);
        std::vector<Label> gold2, pred2;
        for (std::size_t i : order) {
            gold2.push_back(gold[i]);
            pred2.push_back(pred[i]);
        }
        const Metrics m2 = evaluate(pred2, gold2);
        CHECK(m2.macro_f1 == m.macro_f1);
        CHECK(m2.confusion.tp == m.confusion.tp);
    }
}

TEST_CASE("constant classifier on a balanced set scores strictly below 1") {
    std::vector<Label> gold;
    for (int i = 0; i < 10; ++i) gold.push_back(i % 2 ? Label::Hate : Label::NonHate);
    const std::vector<Label> always_hate(gold.size(), Label::Hate);
    const Metrics m = evaluate(always_hate, gold);
    CHECK(m.macro_f1 < 1.0);
    CHECK(m.nonhate.f1 == 0.0);
    CHECK(m.macro_f1 == doctest::Approx(0.5 * (2.0 * 0.5 * 1.0 / 1.5)));
}

TEST_CASE("macro F1 reconstructions match the reported summary rows") {
    struct Row {
        double nonhate_p, nonhate_r, hate_p, hate_r, reported_f1;
    };
    // per-class rates and the summary F1 they were published with
    const std::vector<Row> rows = {
        {0.67, 0.55, 0.62, 0.73, 0.64},
        {0.77, 0.60, 0.67, 0.82, 0.71},
    };
    for (const Row& row : rows) {
        const Confusion c = hsx::test::find_confusion_for_rates(row.hate_p, row.hate_r,
                                                                row.nonhate_p, row.nonhate_r);
        const Metrics m = metrics_from_confusion(c);
        REQUIRE(std::abs(m.hate.precision - row.hate_p) <= 0.005);
        REQUIRE(std::abs(m.hate.recall - row.hate_r) <= 0.005);
        REQUIRE(std::abs(m.nonhate.precision - row.nonhate_p) <= 0.005);
        REQUIRE(std::abs(m.nonhate.recall - row.nonhate_r) <= 0.005);
        CHECK(std::abs(m.macro_f1 - row.reported_f1) <= 0.005);
    }
}

TEST_CASE("imported predictions threshold at one half and validate") {
    hsx::test::TempDir tmp("preds");
    hsx::test::write_file(tmp.file("p.csv"),
                          "record_id,probability\nrec1,0.9\nrec2,0.2\nrec3,0.5\n");
    const ImportedPredictions preds = import_predictions(tmp.file("p.csv"));
    CHECK(preds.by_record.at("rec1").label == Label::Hate);
    CHECK(preds.by_record.at("rec2").label == Label::NonHate);
    CHECK(preds.by_record.at("rec3").label == Label::Hate);

    hsx::test::write_file(tmp.file("bad.csv"), "record_id,probability\nrec1,1.7\n");
    CHECK_THROWS_AS(import_predictions(tmp.file("bad.csv")), Error);
    hsx::test::write_file(tmp.file("dup.csv"), "record_id,probability\nr,0.5\nr,0.5\n");
    CHECK_THROWS_AS(import_predictions(tmp.file("dup.csv")), Error);
}

TEST_CASE("prediction evaluation joins by record id strictly") {
    const Dataset gold = hsx::test::make_dataset(
        "EY1", {{"first text here", Label::Hate}, {"second text here", Label::NonHate}});
    ImportedPredictions preds;
    preds.by_record[gold.records[0].record_id] = {Label::Hate, 0.8};
    preds.by_record[gold.records[1].record_id] = {Label::NonHate, 0.1};
    const Metrics m = evaluate_predictions(preds, gold);
    CHECK(m.macro_f1 == doctest::Approx(1.0));

    ImportedPredictions unknown = preds;
    unknown.by_record["deadbeef"] = {Label::Hate, 0.9};
    try {
        evaluate_predictions(unknown, gold);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("deadbeef") != std::string::npos);
    }

    ImportedPredictions partial;
    partial.by_record[gold.records[0].record_id] = {Label::Hate, 0.8};
    CHECK_THROWS_AS(evaluate_predictions(partial, gold), Error);
}

TEST_CASE("pipeline save/load preserves predictions") {
    hsx::test::TempDir tmp("pipeline");
    SyntheticSpec spec;
    spec.size = 80;
    spec.seed = 5;
    const Dataset ds = make_synthetic_dataset(spec);
    std::vector<std::vector<std::string>> docs;
    std::vector<Label> labels;
    for (const auto& rec : ds.records) {
        docs.push_back(tokenize(rec.clean_text));
        labels.push_back(*rec.label);
    }
    TrainedPipeline pipeline;
    pipeline.idf = fit_idf(docs, FeatureConfig{1u << 10, 0x5EED});
    ModelHyperparams hp;
    hp.epochs = 3;
    pipeline.model = train(vectorize_corpus(docs, pipeline.idf), labels, hp);

    const std::string path = tmp.file("model.txt");
    save_pipeline(pipeline, path);
    const TrainedPipeline loaded = load_pipeline(path);

    CHECK(loaded.model.weights == pipeline.model.weights);  // decimal floats round-trip
    CHECK(loaded.model.bias == pipeline.model.bias);
    CHECK(loaded.idf.document_count() == pipeline.idf.document_count());
    for (const auto& doc : docs) {
        const auto before = predict(pipeline.model, vectorize(doc, pipeline.idf));
        const auto after = predict(loaded.model, vectorize(doc, loaded.idf));
        CHECK(before.probability == after.probability);
        CHECK(before.label == after.label);
    }
}
