#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hsx/rng.hpp"
#include "hsx/similarity.hpp"

#include "helpers.hpp"

using namespace hsx;
using hsx::test::make_unlabeled_dataset;

TEST_CASE("content self-similarity is 1 for any provider") {
    const Dataset ds = make_unlabeled_dataset(
        "EY1", {"the first comment text", "another quite different comment",
                "and one more for good measure"});
    TfidfEmbeddingProvider tfidf({&ds}, FeatureConfig{});
    CHECK(content_similarity(ds, ds, tfidf) == doctest::Approx(1.0).epsilon(1e-9));

    TermCountEmbeddingProvider counts(FeatureConfig{});
    CHECK(content_similarity(ds, ds, counts) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("disjoint vocabularies score exactly zero under the built-in provider") {
    const Dataset a = make_unlabeled_dataset("EY1", {"apple banana cherry", "banana cherry plum"});
    const Dataset b = make_unlabeled_dataset("EG1", {"xylophone yak zeppelin", "yak zeppelin quartz"});
    TfidfEmbeddingProvider provider({&a, &b}, FeatureConfig{});
    CHECK(content_similarity(a, b, provider) == 0.0);
}

TEST_CASE("hand-computed two-document cosine under raw term counts") {
    // A = {"black cat"}, B = {"black dog"}: unit vectors share one of two
    // coordinates, cosine = 0.5
    const Dataset a = make_unlabeled_dataset("EY1", {"black cat"});
    const Dataset b = make_unlabeled_dataset("EG1", {"black dog"});
    const FeatureConfig config{};
    // the assertion presumes the three tokens occupy three distinct buckets
    std::set<std::uint32_t> buckets;
    for (const char* t : {"black", "cat", "dog"}) buckets.insert(hash_token(t, config).index);
    REQUIRE(buckets.size() == 3);

    TermCountEmbeddingProvider provider(config);
    CHECK(content_similarity(a, b, provider) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("content similarity is symmetric") {
    const Dataset a = make_unlabeled_dataset(
        "EY1", {"shared words plus alpha", "more shared words beta"});
    const Dataset b = make_unlabeled_dataset(
        "EG1", {"shared words plus gamma", "more shared words delta"});
    TfidfEmbeddingProvider provider({&a, &b}, FeatureConfig{});
    CHECK(content_similarity(a, b, provider) == content_similarity(b, a, provider));
}

TEST_CASE("content similarity preconditions and external coverage") {
    const Dataset a = make_unlabeled_dataset("EY1", {"some text"});
    Dataset empty;
    empty.meta.dataset_id = "EW1";
    TermCountEmbeddingProvider provider(FeatureConfig{});
    CHECK_THROWS_AS(content_similarity(a, empty, provider), Error);

    EmbeddingTable table;
    table.dimension = 2;
    table.vectors[a.records[0].record_id] = {1.0, 0.0};
    TableEmbeddingProvider external(table);
    CHECK(content_similarity(a, a, external) == doctest::Approx(1.0));

    const Dataset b = make_unlabeled_dataset("EG1", {"other text"});
    CHECK_THROWS_AS(content_similarity(a, b, external), Error);  // b not covered
}

TEST_CASE("hate word similarity on the worked example") {
    // H_A = {alpha, bravo, charlie}, H_B = {bravo, charlie, delta}
    const Lexicon lex{"en", {"alpha", "bravo", "charlie", "delta"}};
    const Dataset a = make_unlabeled_dataset("EY1", {"alpha bravo then charlie spoke"});
    const Dataset b = make_unlabeled_dataset("EG1", {"bravo charlie delta again"});
    CHECK(hate_word_similarity(a, b, lex) == doctest::Approx(0.5).epsilon(1e-12));
    // sum reading: 2 / 6
    CHECK(hate_word_similarity(a, b, lex, HateWordDenominator::Sum)
          == doctest::Approx(2.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("hate word similarity endpoints") {
    const Lexicon lex{"en", {"scum", "vermin"}};
    const Dataset a = make_unlabeled_dataset("EY1", {"scum and vermin everywhere"});
    const Dataset b = make_unlabeled_dataset("EG1", {"vermin scum both present"});
    CHECK(hate_word_similarity(a, b, lex) == doctest::Approx(1.0));

    const Dataset none = make_unlabeled_dataset("EW1", {"perfectly pleasant words"});
    const Dataset one = make_unlabeled_dataset("ET1", {"scum appears here"});
    CHECK(hate_word_similarity(none, one, lex) == 0.0);

    std::vector<std::string> warnings;
    const Dataset none2 = make_unlabeled_dataset("ET2", {"more nice words"});
    CHECK(hate_word_similarity(none, none2, lex, HateWordDenominator::Union, &warnings) == 0.0);
    CHECK(warnings.size() == 1);
}

TEST_CASE("hate word similarity equals brute-force set computation") {
    SplitMix64 rng(0x7AC0);
    const std::vector<std::string> vocab = {"one", "two", "three", "four", "five",
                                            "six", "seven", "eight", "nine", "ten"};
    for (int iter = 0; iter < 100; ++iter) {
        Lexicon lex{"en", {}};
        for (const auto& w : vocab) {
            if (rng.next_below(2)) lex.terms.insert(w);
        }
        auto random_dataset = [&](const std::string& id) {
            std::vector<std::string> texts;
            const std::size_t docs = 1 + rng.next_below(5);
            for (std::size_t d = 0; d < docs; ++d) {
                std::string text;
                for (int w = 0; w < 5; ++w) {
                    if (!text.empty()) text += ' ';
                    text += vocab[rng.next_below(vocab.size())];
                }
                texts.push_back(text);
            }
            return make_unlabeled_dataset(id, texts);
        };
        const Dataset a = random_dataset("EY1");
        const Dataset b = random_dataset("EG1");

        // independent explicit-set oracle
        const std::set<std::string> ha = extract_hate_words(a, lex);
        const std::set<std::string> hb = extract_hate_words(b, lex);
        std::set<std::string> inter, uni;
        std::set_intersection(ha.begin(), ha.end(), hb.begin(), hb.end(),
                              std::inserter(inter, inter.begin()));
        std::set_union(ha.begin(), ha.end(), hb.begin(), hb.end(),
                       std::inserter(uni, uni.begin()));
        const double expected =
            uni.empty() ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(uni.size());

        std::vector<std::string> warnings;
        const double actual =
            hate_word_similarity(a, b, lex, HateWordDenominator::Union, &warnings);
        CHECK(actual == expected);
        CHECK(actual == hate_word_similarity(b, a, lex, HateWordDenominator::Union, &warnings));
    }
}

namespace {

SurveyVote vote(const std::string& who, int rating, double seconds, bool excluded = false) {
    SurveyVote v;
    v.respondent_id = who;
    v.dataset_a = "EY1";
    v.dataset_b = "ET1";
    v.rating = rating;
    v.response_seconds = seconds;
    v.excluded = excluded;
    return v;
}

}  // namespace

TEST_CASE("definition similarity endpoints and formula") {
    std::vector<SurveyVote> all_ten, all_one;
    for (int i = 0; i < 7; ++i) {
        all_ten.push_back(vote("r" + std::to_string(i), 10, 30));
        all_one.push_back(vote("r" + std::to_string(i), 1, 30));
    }
    CHECK(definition_similarity(all_ten, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(definition_similarity(all_one, 0.0) == doctest::Approx(0.0).epsilon(1e-9));

    // mean 7.3 -> 0.7
    std::vector<SurveyVote> mixed;
    for (int r : {7, 8, 7, 7, 8, 7, 8, 7, 8, 6}) {
        mixed.push_back(vote("r" + std::to_string(mixed.size()), r, 30));
    }
    CHECK(definition_similarity(mixed, 0.0) == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("definition similarity is invariant to order and respondent names") {
    std::vector<SurveyVote> votes;
    SplitMix64 rng(0xDEF);
    for (int i = 0; i < 40; ++i) {
        votes.push_back(vote("r" + std::to_string(i), 1 + rng.next_below(10),
                             static_cast<double>(rng.next_below(60))));
    }
    const double value = definition_similarity(votes, 5.0);

    std::vector<SurveyVote> shuffled = votes;
    fisher_yates_shuffle(shuffled, rng);
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
        shuffled[i].respondent_id = "renamed" + std::to_string(i);
    }
    CHECK(definition_similarity(shuffled, 5.0) == value);
}

TEST_CASE("response-time filter drops exactly the sub-threshold votes") {
    // 100 votes, 10 of them too fast; survivors all rate 8, fast ones rate 1
    std::vector<SurveyVote> votes;
    for (int i = 0; i < 90; ++i) votes.push_back(vote("slow" + std::to_string(i), 8, 20.0));
    for (int i = 0; i < 10; ++i) votes.push_back(vote("fast" + std::to_string(i), 1, 2.0));
    CHECK(definition_similarity(votes, 10.0) == doctest::Approx((8.0 - 1.0) / 9.0).epsilon(1e-9));

    // threshold is strict: a vote exactly at the threshold survives
    std::vector<SurveyVote> edge = {vote("edge", 4, 10.0)};
    CHECK(definition_similarity(edge, 10.0) == doctest::Approx(3.0 / 9.0));

    CHECK_THROWS_AS(definition_similarity(votes, 1000.0), Error);
    // the survey-supplied exclusion flag also drops votes
    std::vector<SurveyVote> flagged = {vote("a", 10, 30, true), vote("b", 1, 30)};
    CHECK(definition_similarity(flagged, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("survey vote file parses and validates") {
    hsx::test::TempDir tmp("votes");
    const std::string path = tmp.file("votes.csv");
    hsx::test::write_file(path,
                          "respondent_id,dataset_a,dataset_b,rating,response_seconds,excluded\n"
                          "p1,EY1,ET1,7,31.5,0\n"
                          "p2,ET1,EY1,9,12.0,1\n");
    const auto votes = load_survey_votes(path);
    REQUIRE(votes.size() == 2);
    CHECK(votes[0].rating == 7);
    CHECK(votes[1].excluded);

    hsx::test::write_file(tmp.file("bad.csv"),
                          "respondent_id,dataset_a,dataset_b,rating,response_seconds\n"
                          "p1,EY1,ET1,11,30\n");
    CHECK_THROWS_AS(load_survey_votes(tmp.file("bad.csv")), Error);
    hsx::test::write_file(tmp.file("neg.csv"),
                          "respondent_id,dataset_a,dataset_b,rating,response_seconds\n"
                          "p1,EY1,ET1,5,-1\n");
    CHECK_THROWS_AS(load_survey_votes(tmp.file("neg.csv")), Error);
}

TEST_CASE("similarity matrix shape for content") {
    const Dataset a = make_unlabeled_dataset("EY1", {"alpha beta gamma"});
    const Dataset b = make_unlabeled_dataset("ET1", {"alpha beta delta"});
    const Dataset c = make_unlabeled_dataset("EG1", {"alpha epsilon zeta"});
    MatrixInputs inputs;
    const SimilarityMatrix m = similarity_matrix({&a, &b, &c}, Measure::Content, inputs);

    REQUIRE(m.dataset_ids == std::vector<std::string>{"EY1", "ET1", "EG1"});
    for (std::size_t i = 0; i < 3; ++i) CHECK(m.cells[i][i] == 1.0);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            REQUIRE(m.cells[i][j].has_value());
            CHECK(*m.cells[i][j] == *m.cells[j][i]);
        }
    }
}

TEST_CASE("definition matrix marks missing codebooks as absent") {
    Dataset a = make_unlabeled_dataset("EY1", {"text a"});
    Dataset b = make_unlabeled_dataset("ET1", {"text b"});
    Dataset c = make_unlabeled_dataset("EW1", {"text c"});  // no codebook
    a.meta.codebook_text = "definition a";
    b.meta.codebook_text = "definition b";

    std::vector<SurveyVote> votes;
    for (int i = 0; i < 5; ++i) votes.push_back(vote("p" + std::to_string(i), 7, 30));

    MatrixInputs inputs;
    inputs.votes = &votes;
    std::vector<std::string> warnings;
    const SimilarityMatrix m =
        similarity_matrix({&a, &b, &c}, Measure::Definition, inputs, &warnings);

    CHECK_FALSE(m.cells[0][0].has_value());  // diagonal absent for definition
    REQUIRE(m.cells[0][1].has_value());
    CHECK(*m.cells[0][1] == doctest::Approx((7.0 - 1.0) / 9.0));
    CHECK_FALSE(m.cells[0][2].has_value());  // EW1 lacks a codebook
    CHECK_FALSE(m.cells[1][2].has_value());
}

TEST_CASE("matrix preconditions") {
    const Dataset a = make_unlabeled_dataset("EY1", {"alpha"});
    MatrixInputs inputs;
    CHECK_THROWS_AS(similarity_matrix({&a}, Measure::Content, inputs), Error);

    const Dataset dup = make_unlabeled_dataset("EY1", {"beta"});
    CHECK_THROWS_AS(similarity_matrix({&a, &dup}, Measure::Content, inputs), Error);

    const Dataset b = make_unlabeled_dataset("ET1", {"beta"});
    CHECK_THROWS_AS(similarity_matrix({&a, &b}, Measure::HateWord, inputs), Error);  // no lexicon
    CHECK_THROWS_AS(similarity_matrix({&a, &b}, Measure::Definition, inputs), Error);  // no votes
}

TEST_CASE("matrix parallel equals the serial reference across measures") {
    SplitMix64 rng(0x517E);
    const std::vector<std::string> vocab = {"red", "green", "blue", "cyan", "teal",
                                            "pink", "gray", "gold", "jade", "plum"};
    std::vector<Dataset> datasets;
    for (int k = 0; k < 5; ++k) {
        std::vector<std::string> texts;
        for (int d = 0; d < 10; ++d) {
            std::string text;
            for (int w = 0; w < 8; ++w) {
                if (!text.empty()) text += ' ';
                text += vocab[rng.next_below(vocab.size())];
            }
            texts.push_back(text);
        }
        Dataset ds = make_unlabeled_dataset("ET" + std::to_string(k + 1), texts);
        ds.meta.codebook_text = "codebook " + std::to_string(k);
        datasets.push_back(std::move(ds));
    }
    std::vector<const Dataset*> ptrs;
    for (const auto& ds : datasets) ptrs.push_back(&ds);

    Lexicon lex{"en", {"red", "green", "blue", "plum"}};
    std::vector<SurveyVote> votes;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            for (int v = 0; v < 3; ++v) {
                SurveyVote sv;
                sv.respondent_id = "p" + std::to_string(v);
                sv.dataset_a = "ET" + std::to_string(i + 1);
                sv.dataset_b = "ET" + std::to_string(j + 1);
                sv.rating = 1 + static_cast<int>(rng.next_below(10));
                sv.response_seconds = 30;
                votes.push_back(sv);
            }
        }
    }
    MatrixInputs inputs;
    inputs.lexicon = &lex;
    inputs.votes = &votes;

    for (Measure measure : {Measure::Content, Measure::HateWord, Measure::Definition}) {
        const SimilarityMatrix par = similarity_matrix(ptrs, measure, inputs);
        const SimilarityMatrix ser = similarity_matrix_serial(ptrs, measure, inputs);
        REQUIRE(par.cells.size() == ser.cells.size());
        for (std::size_t i = 0; i < par.cells.size(); ++i) {
            for (std::size_t j = 0; j < par.cells.size(); ++j) {
                CHECK(par.cells[i][j] == ser.cells[i][j]);
            }
        }
    }
}
