#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsx/langid.hpp"

#include "helpers.hpp"

using namespace hsx;
using hsx::test::TempDir;

TEST_CASE("detects the obvious cases with confidence") {
    const auto& id = LanguageIdentifier::builtin();

    const auto de = id.detect("Das ist ein sehr gutes Video und ich stimme zu");
    CHECK(de.language == "de");
    CHECK(de.confidence >= 0.8);
    CHECK(de.confidence <= 1.0);

    const auto en = id.detect("This video is great and I completely agree with you");
    CHECK(en.language == "en");
    CHECK(en.confidence >= 0.8);
    CHECK(en.confidence <= 1.0);
}

TEST_CASE("empty input and missing profiles are errors") {
    const auto& id = LanguageIdentifier::builtin();
    CHECK_THROWS_AS(id.detect(""), Error);
    CHECK_THROWS_AS(id.detect("   \t "), Error);

    LanguageIdentifier empty;
    CHECK_THROWS_AS(empty.detect("some text"), Error);
}

TEST_CASE("detection is a pure function") {
    const auto& id = LanguageIdentifier::builtin();
    const std::string text = "Der Zug nach Hamburg ist schon wieder verspätet";
    const auto first = id.detect(text);
    for (int i = 0; i < 50; ++i) {
        const auto again = id.detect(text);
        CHECK(again.language == first.language);
        CHECK(again.confidence == first.confidence);
    }
}

TEST_CASE("profile save/load round-trip preserves behavior") {
    TempDir tmp("langid_profile");
    const LanguageProfile en = LanguageIdentifier::builtin_profile("en");
    const std::string path = tmp.file("en.profile");
    en.save(path);

    const LanguageProfile loaded = LanguageProfile::load(path, "en");
    CHECK(loaded.grams_by_rank == en.grams_by_rank);

    LanguageIdentifier custom;
    custom.add_profile(loaded);
    custom.add_profile(LanguageIdentifier::builtin_profile("de"));
    const auto& builtin = LanguageIdentifier::builtin();
    for (const char* text : {"I like this video a lot", "Ich mag dieses Video sehr",
                             "The cat sat on the mat", "Die Katze sitzt auf der Matte"}) {
        CHECK(custom.detect(text).language == builtin.detect(text).language);
        CHECK(custom.detect(text).confidence
              == doctest::Approx(builtin.detect(text).confidence).epsilon(1e-12));
    }
}

TEST_CASE("profile file validation") {
    TempDir tmp("langid_badprofile");
    hsx::test::write_file(tmp.file("gap.profile"), "ab\t1\ncd\t3\n");
    CHECK_THROWS_AS(LanguageProfile::load(tmp.file("gap.profile"), "xx"), Error);

    hsx::test::write_file(tmp.file("dup.profile"), "ab\t1\nab\t2\n");
    CHECK_THROWS_AS(LanguageProfile::load(tmp.file("dup.profile"), "xx"), Error);

    hsx::test::write_file(tmp.file("empty.profile"), "");
    CHECK_THROWS_AS(LanguageProfile::load(tmp.file("empty.profile"), "xx"), Error);

    hsx::test::write_file(tmp.file("notsv.profile"), "just a line\n");
    CHECK_THROWS_AS(LanguageProfile::load(tmp.file("notsv.profile"), "xx"), Error);
}

TEST_CASE("duplicate profile registration is rejected") {
    LanguageIdentifier id;
    id.add_profile(LanguageIdentifier::builtin_profile("en"));
    CHECK_THROWS_AS(id.add_profile(LanguageIdentifier::builtin_profile("en")), Error);
    CHECK(id.languages() == std::vector<std::string>{"en"});
}

TEST_CASE("held-out sentences classify with at least 95 percent accuracy") {
    const auto& id = LanguageIdentifier::builtin();
    for (const auto& [file, lang] :
         {std::pair{std::string(HSX_TEST_DATA_DIR) + "/heldout_en.txt", std::string("en")},
          std::pair{std::string(HSX_TEST_DATA_DIR) + "/heldout_de.txt", std::string("de")}}) {
        std::ifstream in(file);
        REQUIRE(in.good());
        std::string line;
        std::size_t total = 0;
        std::size_t correct = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ++total;
            if (id.detect(line).language == lang) ++correct;
        }
        CHECK(total >= 200);
        CHECK(static_cast<double>(correct) >= 0.95 * static_cast<double>(total));
    }
}
