#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsx/corpus.hpp"

#include "helpers.hpp"

using namespace hsx;
using hsx::test::TempDir;
using hsx::test::write_file;

namespace {

MappingSpec csv_mapping(const std::string& dataset_id = "EY1") {
    MappingSpec m;
    m.format = MappingSpec::Format::Csv;
    m.dataset_id = dataset_id;
    m.language = "en";
    m.platform = Platform::YouTube;
    m.text_field = "comment";
    m.label_field = "class";
    m.label_values = {{"1", Label::Hate}, {"0", Label::NonHate}};
    return m;
}

}  // namespace

TEST_CASE("parse_dataset_file counts labels and preserves order") {
    TempDir tmp("corpus_parse");
    const std::string path = tmp.file("ey1.csv");
    write_file(path, "comment,class\nyou are scum mate,1\nnice video indeed,0\nhate this group,1\n");

    const Dataset ds = parse_dataset_file(path, csv_mapping());
    CHECK(ds.meta.size == 3);
    CHECK(ds.meta.hate_fraction == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(ds.records[0].raw_text == "you are scum mate");
    CHECK(ds.records[0].clean_text == "you are scum mate");
    CHECK(ds.records[1].label == Label::NonHate);
    CHECK(ds.records[2].label == Label::Hate);
}

TEST_CASE("ingestion is deterministic: same file twice gives identical ids") {
    TempDir tmp("corpus_idem");
    const std::string path = tmp.file("in.csv");
    write_file(path, "comment,class\nfirst comment here,1\nsecond comment here,0\n");

    const Dataset a = parse_dataset_file(path, csv_mapping());
    const Dataset b = parse_dataset_file(path, csv_mapping());
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].record_id == b.records[i].record_id);
    }
    CHECK(serialize_dataset(a) == serialize_dataset(b));
}

TEST_CASE("unmappable label value names the row") {
    TempDir tmp("corpus_badlabel");
    const std::string path = tmp.file("bad.csv");
    write_file(path, "comment,class\ngood text here,1\nodd text here,maybe\n");
    try {
        parse_dataset_file(path, csv_mapping());
        FAIL("expected an error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find(":3") != std::string::npos);       // header is line 1
        CHECK(msg.find("maybe") != std::string::npos);
    }
}

TEST_CASE("missing column, empty file and malformed rows fail") {
    TempDir tmp("corpus_err");
    write_file(tmp.file("nocol.csv"), "text,class\nfoo,1\n");
    CHECK_THROWS_AS(parse_dataset_file(tmp.file("nocol.csv"), csv_mapping()), Error);

    write_file(tmp.file("empty.csv"), "comment,class\n");
    CHECK_THROWS_AS(parse_dataset_file(tmp.file("empty.csv"), csv_mapping()), Error);

    write_file(tmp.file("short.csv"), "comment,class\nonly one field\n");
    CHECK_THROWS_AS(parse_dataset_file(tmp.file("short.csv"), csv_mapping()), Error);
}

TEST_CASE("jsonl ingestion with hate word marks") {
    TempDir tmp("corpus_jsonl");
    const std::string path = tmp.file("g.jsonl");
    write_file(path,
               R"({"text": "total scum behaviour", "hate": 1, "marks": "Scum; vermin"})"
               "\n"
               R"({"text": "lovely weather today", "hate": 0, "marks": ""})"
               "\n");
    MappingSpec m;
    m.format = MappingSpec::Format::Jsonl;
    m.dataset_id = "EG1";
    m.language = "en";
    m.platform = Platform::Gab;
    m.text_field = "text";
    m.label_field = "hate";
    m.label_values = {{"1", Label::Hate}, {"0", Label::NonHate}};
    m.hate_words_field = "marks";

    const Dataset ds = parse_dataset_file(path, m);
    REQUIRE(ds.records.size() == 2);
    CHECK(ds.records[0].annotated_hate_words == std::vector<std::string>{"scum", "vermin"});
    CHECK(ds.records[1].annotated_hate_words.empty());
    CHECK(ds.records[0].label == Label::Hate);
}

TEST_CASE("canonical dataset file round-trips byte-identically") {
    TempDir tmp("corpus_roundtrip");
    Dataset ds = hsx::test::make_dataset(
        "ET1", {{"some hateful garbage text", Label::Hate}, {"a pleasant remark", Label::NonHate}});
    ds.meta.codebook_text = "hate is defined here";
    ds.meta.availability = Availability::Partial;

    const std::string path = tmp.file("et1.jsonl");
    save_dataset(ds, path);
    const Dataset loaded = load_dataset(path);
    CHECK(loaded.meta.dataset_id == "ET1");
    CHECK(loaded.meta.codebook_text == ds.meta.codebook_text);
    CHECK(loaded.records.size() == ds.records.size());
    CHECK(serialize_dataset(loaded) == serialize_dataset(ds));

    const std::string path2 = tmp.file("et1b.jsonl");
    save_dataset(loaded, path2);
    CHECK(hsx::test::read_file(path) == hsx::test::read_file(path2));
}

TEST_CASE("filter_language keeps matching records and recomputes meta") {
    std::vector<std::pair<std::string, Label>> rows = {
        {"The committee will announce a decision on Friday", Label::NonHate},
        {"Der Ausschuss wird die Entscheidung am Freitag bekannt geben", Label::Hate},
        {"Please remember to close the window before leaving", Label::NonHate},
        {"Wir haben den letzten Bus verpasst und liefen nach Hause", Label::NonHate},
        {"The library extends its hours during the exam season", Label::Hate},
    };
    const Dataset mixed = hsx::test::make_dataset("EY1", rows);

    const Dataset de = filter_language(mixed, "de");
    CHECK(de.records.size() == 2);
    CHECK(de.meta.language == "de");
    for (const auto& rec : de.records) CHECK(rec.language == "de");

    const Dataset en = filter_language(mixed, "en");
    CHECK(en.records.size() == 3);
    // original order preserved
    CHECK(en.records[0].raw_text == rows[0].first);
    CHECK(en.records[1].raw_text == rows[2].first);
}

TEST_CASE("filter_language to an absent language warns and returns empty") {
    const Dataset ds = hsx::test::make_dataset(
        "EY1", {{"The weather is nice today here", Label::NonHate},
                {"The committee meets again tomorrow morning", Label::Hate}});
    std::vector<std::string> warnings;
    const Dataset none = filter_language(ds, "de", LanguageIdentifier::builtin(), &warnings);
    CHECK(none.records.empty());
    CHECK(none.meta.size == 0);
    CHECK(warnings.size() == 1);
}

TEST_CASE("filter_language with matching language is the identity") {
    const Dataset ds = hsx::test::make_dataset(
        "EY1", {{"The weather is nice today and the sun shines", Label::NonHate},
                {"The committee meets again tomorrow morning", Label::Hate}});
    const Dataset same = filter_language(ds, "en");
    CHECK(serialize_dataset(same) == serialize_dataset(ds));
}

TEST_CASE("registry rejects duplicates and orders stats by language then id") {
    DatasetRegistry registry;
    registry.add(hsx::test::make_dataset("GT1", {{"ein schlechter Kommentar", Label::Hate}}, "de"));
    registry.add(hsx::test::make_dataset("EY1", {{"a first comment", Label::NonHate}}));
    registry.add(hsx::test::make_dataset("EG1", {{"another comment here", Label::Hate}}));

    const auto stats = registry.stats();
    REQUIRE(stats.size() == 3);
    CHECK(stats[0].dataset_id == "GT1");  // "de" sorts before "en"
    CHECK(stats[1].dataset_id == "EG1");
    CHECK(stats[2].dataset_id == "EY1");

    CHECK_THROWS_AS(registry.add(hsx::test::make_dataset("EY1", {{"dup", Label::Hate}})), Error);
    CHECK_THROWS_AS(registry.get("ZZ9"), Error);
}

TEST_CASE("empty registry stats is an error") {
    DatasetRegistry registry;
    CHECK_THROWS_AS(registry.stats(), Error);
}

TEST_CASE("dataset id pattern validation") {
    CHECK(valid_dataset_id("EY1"));
    CHECK(valid_dataset_id("GT2"));
    CHECK(valid_dataset_id("EW12"));
    CHECK_FALSE(valid_dataset_id("ey1"));
    CHECK_FALSE(valid_dataset_id("E1"));
    CHECK_FALSE(valid_dataset_id("EY0"));
    CHECK_FALSE(valid_dataset_id("EY"));
    CHECK_FALSE(valid_dataset_id("EY1x"));
}

TEST_CASE("mapping spec loader rejects unknown keys") {
    TempDir tmp("mapping_keys");
    const std::string path = tmp.file("map.json");
    write_file(path, R"({"dataset_id":"EY1","language":"en","platform":"YouTube",
                         "text":"comment","typo_key":1})");
    CHECK_THROWS_AS(MappingSpec::load(path), Error);
}
