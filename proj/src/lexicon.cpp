#include "hsx/lexicon.hpp"

#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "hsx/common.hpp"
#include "hsx/parallel.hpp"
#include "hsx/utf8.hpp"

namespace hsx {

namespace {

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> words;
    std::string current;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::uint32_t cp = utf8::decode(s, i);
        if (utf8::is_space(cp)) {
            if (!current.empty()) {
                words.push_back(std::move(current));
                current.clear();
            }
        } else {
            utf8::encode(cp, current);
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

// Lowercase, trim, collapse inner whitespace to single spaces.
std::string normalize_term(std::string_view raw) {
    std::string joined;
    for (const std::string& word : split_words(raw)) {
        if (!joined.empty()) joined.push_back(' ');
        joined += word;
    }
    return utf8::lower(joined);
}

bool term_can_match_clean_text(const std::string& term) {
    for (const std::string& word : split_words(term)) {
        if (utf8::count_code_points(word) < 3) return false;
    }
    return true;
}

}  // namespace

Lexicon load_lexicon(const std::string& path, const std::string& language,
                     std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open lexicon file: " + path);

    Lexicon lex;
    lex.language = language;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::string term = normalize_term(line);
        if (term.empty()) continue;
        if (!term_can_match_clean_text(term)) {
            warn(warnings, "lexicon term '" + term + "' has a word shorter than 3 characters"
                               " and can never match cleaned text");
        }
        lex.terms.insert(term);
    }
    if (lex.terms.empty()) {
        warn(warnings, "lexicon file " + path + " contains no terms");
    }
    return lex;
}

Lexicon merge(const Lexicon& base, const Lexicon& extra) {
    if (base.language != extra.language) {
        throw Error("lexicon language mismatch: '" + base.language + "' vs '" + extra.language
                    + "'");
    }
    Lexicon out = base;
    for (const std::string& term : extra.terms) {
        const std::string normalized = normalize_term(term);
        if (!normalized.empty()) out.terms.insert(normalized);
    }
    return out;
}

Lexicon merge(const Lexicon& base, const std::set<std::string>& extra_terms,
              const std::string& extra_language) {
    Lexicon extra;
    extra.language = extra_language;
    extra.terms = extra_terms;
    return merge(base, extra);
}

namespace {

struct CompiledLexicon {
    std::unordered_set<std::string> single;
    // multi-word terms grouped by word count
    std::unordered_map<std::size_t, std::unordered_set<std::string>> multi;
    std::size_t max_words = 1;
};

CompiledLexicon compile(const Lexicon& lexicon) {
    CompiledLexicon c;
    for (const std::string& term : lexicon.terms) {
        const std::size_t words = split_words(term).size();
        if (words <= 1) {
            c.single.insert(term);
        } else {
            c.multi[words].insert(term);
            c.max_words = std::max(c.max_words, words);
        }
    }
    return c;
}

void scan_record(const CommentRecord& rec, const CompiledLexicon& lex,
                 std::set<std::string>& found) {
    std::vector<std::string> tokens;
    for (const std::string& tok : split_words(rec.clean_text)) {
        tokens.push_back(utf8::lower(tok));
    }
    for (const std::string& tok : tokens) {
        if (lex.single.count(tok)) found.insert(tok);
    }
    for (const auto& [words, terms] : lex.multi) {
        if (tokens.size() < words) continue;
        for (std::size_t start = 0; start + words <= tokens.size(); ++start) {
            std::string joined = tokens[start];
            for (std::size_t k = 1; k < words; ++k) {
                joined.push_back(' ');
                joined += tokens[start + k];
            }
            if (terms.count(joined)) found.insert(joined);
        }
    }
}

std::set<std::string> extract_impl(const Dataset& dataset, const Lexicon& lexicon,
                                   bool parallel) {
    if (dataset.meta.language != lexicon.language) {
        throw Error("dataset '" + dataset.meta.dataset_id + "' is '" + dataset.meta.language
                    + "' but lexicon is '" + lexicon.language + "'");
    }
    const CompiledLexicon compiled = compile(lexicon);
    const std::size_t n = dataset.records.size();
    std::vector<std::set<std::string>> per_record(n);
    auto body = [&](std::size_t i) { scan_record(dataset.records[i], compiled, per_record[i]); };
    if (parallel) {
        parallel_for(static_cast<std::int64_t>(n), body);
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
    std::set<std::string> out;
    for (const auto& found : per_record) out.insert(found.begin(), found.end());
    return out;
}

}  // namespace

std::set<std::string> extract_hate_words(const Dataset& dataset, const Lexicon& lexicon) {
    return extract_impl(dataset, lexicon, true);
}

std::set<std::string> extract_hate_words_serial(const Dataset& dataset, const Lexicon& lexicon) {
    return extract_impl(dataset, lexicon, false);
}

void save_term_list(const std::set<std::string>& terms, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write term list: " + path);
    for (const std::string& term : terms) out << term << '\n';
}

}  // namespace hsx
