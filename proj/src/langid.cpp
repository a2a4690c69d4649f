#include "hsx/langid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "hsx/common.hpp"
#include "hsx/numfmt.hpp"
#include "hsx/text.hpp"
#include "hsx/utf8.hpp"

namespace hsx {

namespace {

constexpr std::size_t kProfileCapacity = 300;
constexpr int kOutOfPlacePenalty = 300;

bool has_digit(std::string_view token) {
    for (char c : token) {
        if (c >= '0' && c <= '9') return true;
    }
    return false;
}

// Pads each word with '_' and emits all 1-3 code-point substrings that touch
// at least one letter. Counting is in code points so umlauts behave.
void count_ngrams(std::string_view text, std::unordered_map<std::string, std::uint64_t>& counts) {
    for (const std::string& token : tokenize(text)) {
        if (has_digit(token)) continue;
        std::string padded = "_" + token + "_";
        // byte offsets of each code point start, plus end sentinel
        std::vector<std::size_t> starts;
        std::size_t i = 0;
        while (i < padded.size()) {
            starts.push_back(i);
            utf8::decode(padded, i);
        }
        starts.push_back(padded.size());
        const std::size_t cps = starts.size() - 1;
        for (std::size_t from = 0; from < cps; ++from) {
            for (std::size_t len = 1; len <= 3 && from + len <= cps; ++len) {
                std::string gram = padded.substr(starts[from], starts[from + len] - starts[from]);
                if (gram.find_first_not_of('_') == std::string::npos) continue;
                ++counts[gram];
            }
        }
    }
}

}  // namespace

std::vector<std::string> rank_char_ngrams(std::string_view text, std::size_t capacity) {
    std::unordered_map<std::string, std::uint64_t> counts;
    count_ngrams(text, counts);
    std::vector<std::pair<std::string, std::uint64_t>> ordered(counts.begin(), counts.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ordered.size() > capacity) ordered.resize(capacity);
    std::vector<std::string> grams;
    grams.reserve(ordered.size());
    for (auto& [gram, count] : ordered) grams.push_back(std::move(gram));
    return grams;
}

LanguageProfile LanguageProfile::build(std::string language, std::string_view seed_text,
                                       std::size_t capacity) {
    LanguageProfile profile;
    profile.language = std::move(language);
    profile.grams_by_rank = rank_char_ngrams(seed_text, capacity);
    if (profile.grams_by_rank.empty()) {
        throw Error("language profile '" + profile.language + "': seed text produced no n-grams");
    }
    for (std::size_t i = 0; i < profile.grams_by_rank.size(); ++i) {
        profile.rank_of[profile.grams_by_rank[i]] = static_cast<int>(i + 1);
    }
    return profile;
}

LanguageProfile LanguageProfile::load(const std::string& path, std::string language) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open language profile: " + path);
    std::vector<std::pair<int, std::string>> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw Error(path + ":" + std::to_string(lineno) + ": expected 'ngram<TAB>rank'");
        }
        const std::string gram = line.substr(0, tab);
        const int rank = static_cast<int>(parse_int(line.substr(tab + 1), "profile rank"));
        if (gram.empty() || rank < 1) {
            throw Error(path + ":" + std::to_string(lineno) + ": invalid profile entry");
        }
        entries.emplace_back(rank, gram);
    }
    if (entries.empty()) throw Error(path + ": empty language profile");
    std::sort(entries.begin(), entries.end());
    LanguageProfile profile;
    profile.language = std::move(language);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != static_cast<int>(i + 1)) {
            throw Error(path + ": profile ranks must be 1..N without gaps");
        }
        if (!profile.rank_of.emplace(entries[i].second, entries[i].first).second) {
            throw Error(path + ": duplicate n-gram '" + entries[i].second + "'");
        }
        profile.grams_by_rank.push_back(entries[i].second);
    }
    return profile;
}

void LanguageProfile::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write language profile: " + path);
    for (std::size_t i = 0; i < grams_by_rank.size(); ++i) {
        out << grams_by_rank[i] << '\t' << i + 1 << '\n';
    }
}

void LanguageIdentifier::add_profile(LanguageProfile profile) {
    if (profile.language.empty()) throw Error("language profile needs a language code");
    auto [it, inserted] = profiles_.emplace(profile.language, std::move(profile));
    if (!inserted) throw Error("duplicate language profile: " + it->first);
}

std::vector<std::string> LanguageIdentifier::languages() const {
    std::vector<std::string> out;
    out.reserve(profiles_.size());
    for (const auto& [lang, profile] : profiles_) out.push_back(lang);
    return out;
}

LanguageGuess LanguageIdentifier::detect(std::string_view text) const {
    if (profiles_.empty()) throw Error("language detection: no profiles loaded");
    bool blank = true;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!utf8::is_space(utf8::decode(text, i))) {
            blank = false;
            break;
        }
    }
    if (blank) throw Error("language detection: empty input");

    const std::vector<std::string> doc = rank_char_ngrams(text, kProfileCapacity);
    if (doc.empty()) {
        // digits-only or similar; no evidence either way
        LanguageGuess guess;
        guess.language = profiles_.begin()->first;
        guess.confidence = 1.0 / static_cast<double>(profiles_.size());
        return guess;
    }

    // Out-of-place distance per language, normalized to [0,1].
    std::vector<std::pair<std::string, double>> scored;
    for (const auto& [lang, profile] : profiles_) {
        std::uint64_t distance = 0;
        for (std::size_t r = 0; r < doc.size(); ++r) {
            const auto it = profile.rank_of.find(doc[r]);
            if (it == profile.rank_of.end()) {
                distance += kOutOfPlacePenalty;
            } else {
                distance += static_cast<std::uint64_t>(
                    std::abs(static_cast<int>(r + 1) - it->second));
            }
        }
        const double norm = static_cast<double>(distance)
                          / (static_cast<double>(doc.size()) * kOutOfPlacePenalty);
        scored.emplace_back(lang, norm);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });

    LanguageGuess guess;
    guess.language = scored.front().first;
    if (scored.size() == 1) {
        guess.confidence = 1.0;
        return guess;
    }
    // Softmax over negative distances. The inverse temperature is calibrated
    // so one unambiguous sentence already lands above 0.8 while near-ties
    // stay near 1/k.
    constexpr double kInverseTemperature = 12.0;
    double total = 0.0;
    for (const auto& [lang, nd] : scored) {
        total += std::exp(-kInverseTemperature * (nd - scored.front().second));
    }
    guess.confidence = 1.0 / total;
    return guess;
}

namespace langid_seed {
extern const char* const kEnglish;
extern const char* const kGerman;
}  // namespace langid_seed

const LanguageIdentifier& LanguageIdentifier::builtin() {
    static const LanguageIdentifier instance = [] {
        LanguageIdentifier id;
        id.add_profile(builtin_profile("en"));
        id.add_profile(builtin_profile("de"));
        return id;
    }();
    return instance;
}

LanguageProfile LanguageIdentifier::builtin_profile(const std::string& language) {
    if (language == "en") return LanguageProfile::build("en", langid_seed::kEnglish);
    if (language == "de") return LanguageProfile::build("de", langid_seed::kGerman);
    throw Error("no bundled language profile for '" + language + "'");
}

}  // namespace hsx
