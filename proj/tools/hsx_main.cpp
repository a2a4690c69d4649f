// hsx: cross-platform hate-speech corpus toolkit.
//
// Subcommands cover the full pipeline: ingest raw exports into the canonical
// dataset format, inspect registry statistics, adjudicate annotator sheets,
// manage hate-term lexicons, score dataset similarity, split/train/evaluate
// the linear baseline, import external predictions, and run experiment
// grids with reports.
//
// Exit codes: 0 success, 1 usage error, 2 data or contract error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "hsx/annotation.hpp"
#include "hsx/common.hpp"
#include "hsx/config.hpp"
#include "hsx/corpus.hpp"
#include "hsx/csv.hpp"
#include "hsx/experiments.hpp"
#include "hsx/lexicon.hpp"
#include "hsx/model.hpp"
#include "hsx/numfmt.hpp"
#include "hsx/report.hpp"
#include "hsx/similarity.hpp"
#include "hsx/text.hpp"

namespace {

using namespace hsx;

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::string file_stem(const std::string& path) {
    const auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

// Builtin profiles plus any configured overrides or additions.
LanguageIdentifier build_identifier(const Config& config) {
    LanguageIdentifier id;
    for (const char* lang : {"en", "de"}) {
        if (!config.profiles.count(lang)) {
            id.add_profile(LanguageIdentifier::builtin_profile(lang));
        }
    }
    for (const auto& [lang, path] : config.profiles) {
        id.add_profile(LanguageProfile::load(path, lang));
    }
    return id;
}

std::string term_list_text(const std::set<std::string>& terms) {
    std::string text;
    for (const std::string& term : terms) {
        text += term;
        text += '\n';
    }
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-platform hate-speech corpus toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    Config config;
    app.add_option("--config", config_path,
                   "JSON config file (default: $HSX_CONFIG). Keys: data_dir, dimension, "
                   "hash_seed, split_ratio, seed, lexicons{lang:path}, profiles{lang:path}");

    // Resolves the config and echoes it once, for run provenance.
    auto configure = [&]() -> const Config& {
        if (config_path.empty()) {
            if (const char* env = std::getenv("HSX_CONFIG")) config_path = env;
        }
        if (!config_path.empty()) config = Config::load(config_path);
        std::cerr << "config: " << config.resolved_json() << "\n";
        return config;
    };

    // ---- ingest ----------------------------------------------------------
    auto* ingest = app.add_subcommand(
        "ingest", "Parse a raw export (CSV or JSONL) into a canonical dataset file");
    struct {
        std::string input, mapping, out, filter_language;
        bool detect = false;
    } ingest_args;
    ingest->add_option("--input", ingest_args.input, "source file")->required();
    ingest->add_option("--mapping", ingest_args.mapping,
                       "JSON mapping spec: format, dataset_id, language, platform, text, "
                       "label, label_values, hate_words, availability, codebook[_file]")
        ->required();
    ingest->add_option("--out", ingest_args.out, "canonical dataset output")->required();
    ingest->add_flag("--detect-language", ingest_args.detect,
                     "set each record's language by detection instead of the mapping value");
    ingest->add_option("--filter-language", ingest_args.filter_language,
                       "keep only records detected as this language");
    ingest->callback([&] {
        const Config& cfg = configure();
        const MappingSpec mapping = MappingSpec::load(ingest_args.mapping);
        Dataset ds = parse_dataset_file(ingest_args.input, mapping);
        const LanguageIdentifier identifier = build_identifier(cfg);
        if (ingest_args.detect) {
            for (CommentRecord& rec : ds.records) {
                try {
                    rec.language = identifier.detect(rec.raw_text).language;
                } catch (const Error&) {
                    // blank text keeps the mapping language
                }
            }
        }
        if (!ingest_args.filter_language.empty()) {
            ds = filter_language(ds, ingest_args.filter_language, identifier);
        }
        save_dataset(ds, ingest_args.out);
        std::cout << ds.meta.dataset_id << ": " << ds.records.size() << " records\n";
    });

    // ---- stats -----------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "Dataset overview table from canonical files");
    struct {
        std::vector<std::string> datasets;
        std::string format = "markdown", out;
    } stats_args;
    stats->add_option("--datasets", stats_args.datasets, "canonical dataset files")
        ->required()
        ->expected(-1);
    stats->add_option("--format", stats_args.format, "csv or markdown");
    stats->add_option("--out", stats_args.out, "output file (default stdout)");
    stats->callback([&] {
        configure();
        DatasetRegistry registry;
        for (const std::string& path : stats_args.datasets) registry.add(load_dataset(path));
        emit(render_dataset_stats(registry.stats(), parse_report_format(stats_args.format)),
             stats_args.out);
    });

    // ---- adjudicate ------------------------------------------------------
    auto* adjudicate = app.add_subcommand(
        "adjudicate", "Merge annotator sheets by majority vote and report reliability");
    struct {
        std::vector<std::string> sheets;
        std::string labels_out, kappa_out, marks_out;
        std::string format = "markdown", aggregate = "mean";
    } adj_args;
    adjudicate
        ->add_option("--sheets", adj_args.sheets,
                     "annotator sheet CSVs (record_id,label[,hate_words])")
        ->required()
        ->expected(-1);
    adjudicate->add_option("--labels-out", adj_args.labels_out, "adjudicated labels CSV");
    adjudicate->add_option("--kappa-out", adj_args.kappa_out,
                           "reliability report file (default stdout)");
    adjudicate->add_option("--marks-out", adj_args.marks_out,
                           "collected annotator hate-word marks, one per line");
    adjudicate->add_option("--format", adj_args.format, "csv or markdown");
    adjudicate->add_option("--aggregate", adj_args.aggregate,
                           "reliability aggregate: mean or min");
    adjudicate->callback([&] {
        configure();
        std::vector<AnnotationSheet> sheets;
        for (const std::string& path : adj_args.sheets) {
            sheets.push_back(AnnotationSheet::load(path, file_stem(path)));
        }
        const AdjudicatedLabels gold = majority_vote(sheets);
        const ReliabilityAggregate agg = adj_args.aggregate == "min"
                                             ? ReliabilityAggregate::MinPairwise
                                             : ReliabilityAggregate::MeanPairwise;
        const ReliabilitySummary summary = reliability_summary(sheets, agg);
        emit(render_reliability(summary, parse_report_format(adj_args.format)),
             adj_args.kappa_out);
        if (!adj_args.labels_out.empty()) {
            std::string csv = "record_id,label,hate_votes,nonhate_votes\n";
            for (const auto& [record_id, label] : gold.labels) {
                const VoteCount& votes = gold.vote_counts.at(record_id);
                csv += csv_join({record_id, std::string(to_string(label)),
                                 std::to_string(votes.hate), std::to_string(votes.nonhate)});
                csv += '\n';
            }
            write_text_file(adj_args.labels_out, csv);
        }
        if (!adj_args.marks_out.empty()) {
            save_term_list(collect_hate_word_marks(sheets), adj_args.marks_out);
        }
    });

    // ---- lexicon ---------------------------------------------------------
    auto* lexicon_cmd = app.add_subcommand("lexicon", "Load, merge and apply hate-term lists");
    lexicon_cmd->require_subcommand(1);

    auto* lex_load = lexicon_cmd->add_subcommand("load", "Normalize a lexicon file");
    struct {
        std::string file, language, out;
    } lexload_args;
    lex_load->add_option("--file", lexload_args.file, "one term per line, '#' comments")
        ->required();
    lex_load->add_option("--language", lexload_args.language, "ISO 639-1 code")->required();
    lex_load->add_option("--out", lexload_args.out, "normalized term list (default stdout)");
    lex_load->callback([&] {
        configure();
        const Lexicon lex = load_lexicon(lexload_args.file, lexload_args.language);
        emit(term_list_text(lex.terms), lexload_args.out);
    });

    auto* lex_merge = lexicon_cmd->add_subcommand("merge", "Union of two term lists");
    struct {
        std::string base, extra, language, extra_language, out;
    } lexmerge_args;
    lex_merge->add_option("--base", lexmerge_args.base, "base lexicon file")->required();
    lex_merge->add_option("--extra", lexmerge_args.extra, "extra terms file")->required();
    lex_merge->add_option("--language", lexmerge_args.language, "base language")->required();
    lex_merge->add_option("--extra-language", lexmerge_args.extra_language,
                          "extra terms language (default: same as base)");
    lex_merge->add_option("--out", lexmerge_args.out, "merged list (default stdout)");
    lex_merge->callback([&] {
        configure();
        const std::string extra_lang = lexmerge_args.extra_language.empty()
                                           ? lexmerge_args.language
                                           : lexmerge_args.extra_language;
        const Lexicon merged = merge(load_lexicon(lexmerge_args.base, lexmerge_args.language),
                                     load_lexicon(lexmerge_args.extra, extra_lang));
        emit(term_list_text(merged.terms), lexmerge_args.out);
    });

    auto* lex_extract = lexicon_cmd->add_subcommand(
        "extract", "Lexicon terms present in a dataset's cleaned text");
    struct {
        std::string dataset, lexicon, out;
    } lexext_args;
    lex_extract->add_option("--dataset", lexext_args.dataset, "canonical dataset file")
        ->required();
    lex_extract->add_option("--lexicon", lexext_args.lexicon, "lexicon file")->required();
    lex_extract->add_option("--out", lexext_args.out, "extracted terms (default stdout)");
    lex_extract->callback([&] {
        configure();
        const Dataset ds = load_dataset(lexext_args.dataset);
        const Lexicon lex = load_lexicon(lexext_args.lexicon, ds.meta.language);
        emit(term_list_text(extract_hate_words(ds, lex)), lexext_args.out);
    });

    // ---- similarity ------------------------------------------------------
    auto* similarity_cmd =
        app.add_subcommand("similarity", "Dataset similarity measures and matrices");
    similarity_cmd->require_subcommand(1);

    auto* sim_content = similarity_cmd->add_subcommand(
        "content", "Cosine of mean normalized record embeddings");
    struct {
        std::string a, b, embeddings;
    } simc_args;
    sim_content->add_option("--a", simc_args.a, "canonical dataset file")->required();
    sim_content->add_option("--b", simc_args.b, "canonical dataset file")->required();
    sim_content->add_option("--embeddings", simc_args.embeddings,
                            "external embedding table (default: built-in hashed tf-idf)");
    sim_content->callback([&] {
        const Config& cfg = configure();
        const Dataset a = load_dataset(simc_args.a);
        const Dataset b = load_dataset(simc_args.b);
        double value;
        if (simc_args.embeddings.empty()) {
            TfidfEmbeddingProvider provider({&a, &b}, cfg.features);
            value = content_similarity(a, b, provider);
        } else {
            const EmbeddingTable table = load_embedding_table(simc_args.embeddings);
            TableEmbeddingProvider provider(table);
            value = content_similarity(a, b, provider);
        }
        std::cout << format_double(value) << "\n";
    });

    auto* sim_hate = similarity_cmd->add_subcommand(
        "hatewords", "Overlap of observed lexicon terms (intersection over union)");
    struct {
        std::string a, b, lexicon, denominator = "union";
    } simh_args;
    sim_hate->add_option("--a", simh_args.a, "canonical dataset file")->required();
    sim_hate->add_option("--b", simh_args.b, "canonical dataset file")->required();
    sim_hate->add_option("--lexicon", simh_args.lexicon, "lexicon file")->required();
    sim_hate->add_option("--denominator", simh_args.denominator, "union or sum");
    sim_hate->callback([&] {
        configure();
        const Dataset a = load_dataset(simh_args.a);
        const Dataset b = load_dataset(simh_args.b);
        const Lexicon lex = load_lexicon(simh_args.lexicon, a.meta.language);
        const HateWordDenominator den = simh_args.denominator == "sum"
                                            ? HateWordDenominator::Sum
                                            : HateWordDenominator::Union;
        std::cout << format_double(hate_word_similarity(a, b, lex, den)) << "\n";
    });

    auto* sim_def = similarity_cmd->add_subcommand(
        "definition", "Survey-derived codebook similarity, (mean-1)/9");
    struct {
        std::string votes, pair;
        double min_seconds = 0.0;
    } simd_args;
    sim_def->add_option("--votes", simd_args.votes,
                        "CSV: respondent_id,dataset_a,dataset_b,rating,response_seconds"
                        "[,excluded]")
        ->required();
    sim_def->add_option("--pair", simd_args.pair, "dataset pair, e.g. EY1,ET1")->required();
    sim_def->add_option("--min-response-seconds", simd_args.min_seconds,
                        "drop votes answered faster than this");
    sim_def->callback([&] {
        configure();
        const auto comma = simd_args.pair.find(',');
        if (comma == std::string::npos) throw Error("--pair must be 'IDA,IDB'");
        const std::string id_a = simd_args.pair.substr(0, comma);
        const std::string id_b = simd_args.pair.substr(comma + 1);
        std::vector<SurveyVote> votes;
        for (const SurveyVote& vote : load_survey_votes(simd_args.votes)) {
            if ((vote.dataset_a == id_a && vote.dataset_b == id_b)
                || (vote.dataset_a == id_b && vote.dataset_b == id_a)) {
                votes.push_back(vote);
            }
        }
        std::cout << format_double(definition_similarity(votes, simd_args.min_seconds)) << "\n";
    });

    auto* sim_matrix = similarity_cmd->add_subcommand("matrix", "Pairwise similarity matrix");
    struct {
        std::string measure;
        std::vector<std::string> datasets;
        std::string lexicon, votes, embeddings, out;
        std::string format = "markdown", denominator = "union";
        double min_seconds = 0.0;
    } simm_args;
    sim_matrix->add_option("--measure", simm_args.measure, "content, hatewords or definition")
        ->required();
    sim_matrix->add_option("--datasets", simm_args.datasets, "canonical dataset files")
        ->required()
        ->expected(-1);
    sim_matrix->add_option("--lexicon", simm_args.lexicon, "lexicon file (hatewords)");
    sim_matrix->add_option("--votes", simm_args.votes, "survey vote file (definition)");
    sim_matrix->add_option("--embeddings", simm_args.embeddings,
                           "external embedding table (content)");
    sim_matrix->add_option("--min-response-seconds", simm_args.min_seconds,
                           "vote filter (definition)");
    sim_matrix->add_option("--denominator", simm_args.denominator, "union or sum (hatewords)");
    sim_matrix->add_option("--format", simm_args.format, "csv or markdown");
    sim_matrix->add_option("--out", simm_args.out, "output file (default stdout)");
    sim_matrix->callback([&] {
        const Config& cfg = configure();
        std::vector<Dataset> loaded;
        loaded.reserve(simm_args.datasets.size());
        for (const std::string& path : simm_args.datasets) loaded.push_back(load_dataset(path));
        std::vector<const Dataset*> datasets;
        for (const Dataset& ds : loaded) datasets.push_back(&ds);

        MatrixInputs inputs;
        inputs.features = cfg.features;
        inputs.min_response_seconds = simm_args.min_seconds;
        inputs.denominator = simm_args.denominator == "sum" ? HateWordDenominator::Sum
                                                            : HateWordDenominator::Union;
        Lexicon lex;
        if (!simm_args.lexicon.empty()) {
            lex = load_lexicon(simm_args.lexicon, loaded.front().meta.language);
            inputs.lexicon = &lex;
        }
        EmbeddingTable table;
        if (!simm_args.embeddings.empty()) {
            table = load_embedding_table(simm_args.embeddings);
            inputs.embeddings = &table;
        }
        std::vector<SurveyVote> votes;
        if (!simm_args.votes.empty()) {
            votes = load_survey_votes(simm_args.votes);
            inputs.votes = &votes;
        }
        const SimilarityMatrix matrix =
            similarity_matrix(datasets, parse_measure(simm_args.measure), inputs);
        emit(render_similarity_matrix(matrix, parse_report_format(simm_args.format)),
             simm_args.out);
    });

    // ---- split -----------------------------------------------------------
    auto* split_cmd =
        app.add_subcommand("split", "Stratified train/test split with a frozen fingerprint");
    struct {
        std::string dataset, train_out, test_out;
        double ratio = -1.0;
        std::int64_t seed = -1;
    } split_args;
    split_cmd->add_option("--dataset", split_args.dataset, "canonical dataset file")->required();
    split_cmd->add_option("--ratio", split_args.ratio, "train fraction (default from config)");
    split_cmd->add_option("--seed", split_args.seed, "split seed (default from config)");
    split_cmd->add_option("--train-out", split_args.train_out, "train split output")->required();
    split_cmd->add_option("--test-out", split_args.test_out, "test split output")->required();
    split_cmd->callback([&] {
        const Config& cfg = configure();
        const Dataset ds = load_dataset(split_args.dataset);
        const double ratio = split_args.ratio >= 0.0 ? split_args.ratio : cfg.split_ratio;
        const std::uint64_t seed =
            split_args.seed >= 0 ? static_cast<std::uint64_t>(split_args.seed) : cfg.seed;
        const SplitResult split = stratified_split(ds, ratio, seed);
        Dataset train_ds;
        train_ds.meta = ds.meta;
        train_ds.records = split.train;
        train_ds.recompute_stats();
        Dataset test_ds;
        test_ds.meta = ds.meta;
        test_ds.records = split.test;
        test_ds.recompute_stats();
        save_dataset(train_ds, split_args.train_out);
        save_dataset(test_ds, split_args.test_out);
        std::cout << "fingerprint " << split.fingerprint << "\n";
        std::cout << "train " << train_ds.records.size() << " test " << test_ds.records.size()
                  << "\n";
    });

    // ---- train -----------------------------------------------------------
    auto* train_cmd = app.add_subcommand(
        "train", "Fit idf on the given records and train the logistic baseline");
    struct {
        std::string data, model_out;
        double learning_rate = 0.1, l2 = 1e-5;
        std::uint32_t epochs = 10;
        std::uint64_t seed = 1;
        std::uint32_t dimension = 0;
        std::int64_t hash_seed = -1;
    } train_args;
    train_cmd->add_option("--data", train_args.data, "canonical dataset file (labeled)")
        ->required();
    train_cmd->add_option("--model-out", train_args.model_out, "model file output")->required();
    train_cmd->add_option("--learning-rate", train_args.learning_rate, "SGD learning rate");
    train_cmd->add_option("--epochs", train_args.epochs, "training epochs");
    train_cmd->add_option("--l2", train_args.l2, "L2 penalty");
    train_cmd->add_option("--seed", train_args.seed, "shuffle seed");
    train_cmd->add_option("--dimension", train_args.dimension,
                          "feature dimension (default from config)");
    train_cmd->add_option("--hash-seed", train_args.hash_seed,
                          "feature hash seed (default from config)");
    train_cmd->callback([&] {
        const Config& cfg = configure();
        const Dataset ds = load_dataset(train_args.data);
        FeatureConfig fc = cfg.features;
        if (train_args.dimension != 0) fc.dimension = train_args.dimension;
        if (train_args.hash_seed >= 0) {
            fc.hash_seed = static_cast<std::uint64_t>(train_args.hash_seed);
        }

        std::vector<std::vector<std::string>> docs;
        std::vector<Label> labels;
        for (const CommentRecord& rec : ds.records) {
            if (!rec.label) throw Error("train: unlabeled record '" + rec.record_id + "'");
            docs.push_back(tokenize(rec.clean_text));
            labels.push_back(*rec.label);
        }
        TrainedPipeline pipeline;
        pipeline.idf = fit_idf(docs, fc);
        const std::vector<FeatureVector> vectors = vectorize_corpus(docs, pipeline.idf);
        ModelHyperparams hp;
        hp.learning_rate = train_args.learning_rate;
        hp.epochs = train_args.epochs;
        hp.l2_penalty = train_args.l2;
        hp.seed = train_args.seed;
        pipeline.model = train(vectors, labels, hp);
        save_pipeline(pipeline, train_args.model_out);
        std::cout << "trained on " << vectors.size() << " records, dimension " << fc.dimension
                  << "\n";
    });

    // ---- predict ---------------------------------------------------------
    auto* predict_cmd = app.add_subcommand("predict", "Score a dataset with a trained model");
    struct {
        std::string model, data, out;
    } predict_args;
    predict_cmd->add_option("--model", predict_args.model, "model file")->required();
    predict_cmd->add_option("--data", predict_args.data, "canonical dataset file")->required();
    predict_cmd->add_option("--out", predict_args.out,
                            "predictions CSV: record_id,probability,label")
        ->required();
    predict_cmd->callback([&] {
        configure();
        const TrainedPipeline pipeline = load_pipeline(predict_args.model);
        const Dataset ds = load_dataset(predict_args.data);
        std::string csv = "record_id,probability,label\n";
        for (const CommentRecord& rec : ds.records) {
            const FeatureVector v = vectorize(tokenize(rec.clean_text), pipeline.idf);
            const Prediction p = predict(pipeline.model, v);
            csv += csv_join({rec.record_id, format_double(p.probability),
                             std::string(to_string(p.label))});
            csv += '\n';
        }
        write_text_file(predict_args.out, csv);
        std::cout << "predicted " << ds.records.size() << " records\n";
    });

    // ---- evaluate --------------------------------------------------------
    auto* evaluate_cmd = app.add_subcommand(
        "evaluate", "Per-class precision/recall/F1 of predictions against gold labels");
    struct {
        std::string predictions, gold;
    } eval_args;
    evaluate_cmd->add_option("--predictions", eval_args.predictions,
                             "CSV with record_id and probability columns")
        ->required();
    evaluate_cmd->add_option("--gold", eval_args.gold, "canonical dataset file with labels")
        ->required();
    evaluate_cmd->callback([&] {
        configure();
        const ImportedPredictions preds = import_predictions(eval_args.predictions);
        const Dataset gold = load_dataset(eval_args.gold);
        std::cout << render_metrics(evaluate_predictions(preds, gold));
    });

    // ---- import-predictions ----------------------------------------------
    auto* import_cmd = app.add_subcommand(
        "import-predictions", "Validate an external prediction file and derive labels");
    struct {
        std::string file, out;
    } import_args;
    import_cmd->add_option("--file", import_args.file, "CSV: record_id,probability")->required();
    import_cmd->add_option("--out", import_args.out, "normalized output (default stdout)");
    import_cmd->callback([&] {
        configure();
        const ImportedPredictions preds = import_predictions(import_args.file);
        std::string csv = "record_id,probability,label\n";
        for (const auto& [record_id, pred] : preds.by_record) {
            csv += csv_join({record_id, format_double(pred.probability),
                             std::string(to_string(pred.label))});
            csv += '\n';
        }
        emit(csv, import_args.out);
    });

    // ---- grid ------------------------------------------------------------
    auto* grid_cmd =
        app.add_subcommand("grid", "Run an experiment grid against the dataset directory");
    struct {
        std::string specs, out, report, report_format = "markdown", data_dir;
        int workers = 0;
    } grid_args;
    grid_cmd->add_option("--specs", grid_args.specs,
                         "JSON grid file: {global_seed, experiments:[{target, augments, "
                         "sampling, split_ratio, seed, features, model}]}")
        ->required();
    grid_cmd->add_option("--out", grid_args.out, "line-delimited results output")->required();
    grid_cmd->add_option("--report", grid_args.report, "also render a result table here");
    grid_cmd->add_option("--report-format", grid_args.report_format, "csv or markdown");
    grid_cmd->add_option("--workers", grid_args.workers,
                         "parallel experiment workers (0 = library default)");
    grid_cmd->add_option("--data-dir", grid_args.data_dir,
                         "directory of <ID>.jsonl datasets (default from config)");
    grid_cmd->callback([&] {
        Config cfg = configure();
        const GridFile grid = load_grid_file(grid_args.specs);
        if (!grid_args.data_dir.empty()) cfg.data_dir = grid_args.data_dir;

        DatasetRegistry registry;
        std::set<std::string> needed;
        for (const ExperimentSpec& spec : grid.specs) {
            needed.insert(spec.target);
            needed.insert(spec.augments.begin(), spec.augments.end());
        }
        for (const std::string& id : needed) registry.add(load_dataset(cfg.dataset_path(id)));

        const std::vector<ExperimentResult> results =
            run_grid(grid.specs, registry, grid_args.workers);
        write_text_file(grid_args.out, export_results(results));
        if (!grid_args.report.empty()) {
            write_text_file(
                grid_args.report,
                render_results_table(results, parse_report_format(grid_args.report_format)));
        }
        std::cout << "ran " << results.size() << " experiments\n";
    });

    // ---- report ----------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "Render an exported result list as a table");
    struct {
        std::string results, format = "markdown", out;
    } report_args;
    report_cmd->add_option("--results", report_args.results, "line-delimited results file")
        ->required();
    report_cmd->add_option("--format", report_args.format, "csv or markdown");
    report_cmd->add_option("--out", report_args.out, "output file (default stdout)");
    report_cmd->callback([&] {
        configure();
        std::ifstream in(report_args.results, std::ios::binary);
        if (!in) throw Error("cannot open results file: " + report_args.results);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        emit(render_results_table(parse_results(text), parse_report_format(report_args.format)),
             report_args.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 1;
    } catch (const hsx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
