#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hsx {

// Character 1-3 gram rank profile of a language (top 300 by frequency).
struct LanguageProfile {
    std::string language;  // ISO 639-1
    std::vector<std::string> grams_by_rank;             // rank order, best first
    std::unordered_map<std::string, int> rank_of;       // gram -> 1-based rank

    static LanguageProfile build(std::string language, std::string_view seed_text,
                                 std::size_t capacity = 300);
    static LanguageProfile load(const std::string& path, std::string language);
    void save(const std::string& path) const;
};

struct LanguageGuess {
    std::string language;
    double confidence = 0.0;  // in [0,1], normalized over configured profiles
};

// Rank-profile classifier: ranks the input's own 1-3 grams, scores each
// configured language by out-of-place distance, and picks the smallest.
// Stateless after construction, so detection is a pure function of the text.
class LanguageIdentifier {
public:
    void add_profile(LanguageProfile profile);
    std::vector<std::string> languages() const;

    // Throws on blank input or when no profiles are configured.
    LanguageGuess detect(std::string_view text) const;

    // Identifier with the bundled English and German profiles.
    static const LanguageIdentifier& builtin();

    // One bundled profile by language code ("en" or "de").
    static LanguageProfile builtin_profile(const std::string& language);

private:
    std::map<std::string, LanguageProfile> profiles_;
};

// Ranked 1-3 gram profile of arbitrary text; exposed for profile tooling.
std::vector<std::string> rank_char_ngrams(std::string_view text, std::size_t capacity);

}  // namespace hsx
