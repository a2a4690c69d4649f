#pragma once

#include <set>
#include <string>
#include <vector>

#include "hsx/record.hpp"

namespace hsx {

// Per-language hate-term list. Terms are lowercase, trimmed and unique;
// multi-word terms are allowed and match contiguous token runs.
struct Lexicon {
    std::string language;
    std::set<std::string> terms;
};

// One term per line, '#' starts a comment. Terms are normalized on load;
// entries whose every word is shorter than 3 characters can never match
// cleaned text and produce a warning.
Lexicon load_lexicon(const std::string& path, const std::string& language,
                     std::vector<std::string>* warnings = nullptr);

Lexicon merge(const Lexicon& base, const Lexicon& extra);
Lexicon merge(const Lexicon& base, const std::set<std::string>& extra_terms,
              const std::string& extra_language);

// Lexicon terms that occur in at least one record's clean_text. Single-word
// terms match whole lowercased tokens; multi-word terms match contiguous
// token sequences. Record scans run in parallel; the set union is
// order-independent, so the result is deterministic.
std::set<std::string> extract_hate_words(const Dataset& dataset, const Lexicon& lexicon);
std::set<std::string> extract_hate_words_serial(const Dataset& dataset, const Lexicon& lexicon);

void save_term_list(const std::set<std::string>& terms, const std::string& path);

}  // namespace hsx
