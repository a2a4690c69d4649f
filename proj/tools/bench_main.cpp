// Benchmark of the parallel kernels against their serial references on a
// synthetic corpus. Each section checks that both paths produce identical
// results before timing them.
//
//   hsx_bench [--docs N] [--datasets K] [--repeat R]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hsx/annotation.hpp"
#include "hsx/experiments.hpp"
#include "hsx/features.hpp"
#include "hsx/lexicon.hpp"
#include "hsx/parallel.hpp"
#include "hsx/report.hpp"
#include "hsx/similarity.hpp"
#include "hsx/synth.hpp"
#include "hsx/text.hpp"

using namespace hsx;
namespace chrono = std::chrono;

namespace {

double time_ms(const std::function<void()>& fn, int repeat) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = chrono::steady_clock::now();
        fn();
        auto t1 = chrono::steady_clock::now();
        best = std::min(best, chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
              << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << (equal ? "" : "  [MISMATCH]") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t docs = 4000;
    std::size_t n_datasets = 6;
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--docs") && i + 1 < argc) docs = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--datasets") && i + 1 < argc) n_datasets = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--repeat") && i + 1 < argc) repeat = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: hsx_bench [--docs N] [--datasets K] [--repeat R]\n";
            return 1;
        }
    }
    std::cout << "threads: " << max_threads() << ", docs per dataset: " << docs
              << ", datasets: " << n_datasets << "\n";

    std::vector<Dataset> datasets;
    for (std::size_t k = 0; k < n_datasets; ++k) {
        SyntheticSpec spec;
        spec.dataset_id = "EB" + std::to_string(k + 1);
        spec.size = docs;
        spec.seed = 1000 + k;
        datasets.push_back(make_synthetic_dataset(spec));
    }
    const Dataset& base = datasets.front();

    // corpus vectorization
    {
        std::vector<std::vector<std::string>> token_docs;
        token_docs.reserve(base.records.size());
        for (const auto& rec : base.records) token_docs.push_back(tokenize(rec.clean_text));
        const IdfTable idf = fit_idf(token_docs, FeatureConfig{});

        std::vector<FeatureVector> serial_out, parallel_out;
        const double s = time_ms([&] { serial_out = vectorize_corpus_serial(token_docs, idf); },
                                 repeat);
        const double p = time_ms([&] { parallel_out = vectorize_corpus(token_docs, idf); },
                                 repeat);
        report("vectorize_corpus", s, p, serial_out == parallel_out);
    }

    // similarity matrix (content, per-pair tf-idf)
    {
        std::vector<const Dataset*> ptrs;
        for (const auto& ds : datasets) ptrs.push_back(&ds);
        MatrixInputs inputs;
        SimilarityMatrix serial_m, parallel_m;
        const double s = time_ms(
            [&] { serial_m = similarity_matrix_serial(ptrs, Measure::Content, inputs); }, repeat);
        const double p = time_ms(
            [&] { parallel_m = similarity_matrix(ptrs, Measure::Content, inputs); }, repeat);
        report("content_matrix", s, p,
               render_similarity_matrix(serial_m, ReportFormat::Csv)
                   == render_similarity_matrix(parallel_m, ReportFormat::Csv));
    }

    // hate-word extraction
    {
        Lexicon lexicon;
        lexicon.language = base.meta.language;
        for (std::size_t i = 0; i < 200; ++i) lexicon.terms.insert("vile" + std::to_string(i));
        std::set<std::string> serial_set, parallel_set;
        const double s =
            time_ms([&] { serial_set = extract_hate_words_serial(base, lexicon); }, repeat);
        const double p = time_ms([&] { parallel_set = extract_hate_words(base, lexicon); },
                                 repeat);
        report("extract_hate_words", s, p, serial_set == parallel_set);
    }

    // experiment grid
    {
        DatasetRegistry registry;
        for (const auto& ds : datasets) registry.add(ds);
        std::vector<ExperimentSpec> specs;
        for (std::size_t k = 1; k < n_datasets; ++k) {
            ExperimentSpec spec;
            spec.target = base.meta.dataset_id;
            spec.augments = {datasets[k].meta.dataset_id};
            spec.sampling = Sampling::Undersample;
            spec.seed = 42;
            spec.features.dimension = 1u << 14;
            spec.model.epochs = 4;
            specs.push_back(spec);
        }
        std::vector<ExperimentResult> serial_r, parallel_r;
        const double s = time_ms([&] { serial_r = run_grid(specs, registry, 1); }, repeat);
        const double p = time_ms([&] { parallel_r = run_grid(specs, registry, 0); }, repeat);
        report("run_grid", s, p, export_results(serial_r) == export_results(parallel_r));
    }

    return 0;
}
