#include "hsx/text.hpp"

#include "hsx/utf8.hpp"

namespace hsx {

bool is_hyperlink_token(std::string_view token) {
    if (token.find("://") != std::string_view::npos) return true;
    if (token.size() >= 4) {
        return (token[0] == 'w' || token[0] == 'W')
            && (token[1] == 'w' || token[1] == 'W')
            && (token[2] == 'w' || token[2] == 'W')
            && token[3] == '.';
    }
    return false;
}

bool is_email_token(std::string_view token) {
    const auto at = token.find('@');
    if (at == std::string_view::npos || at == 0) return false;
    if (token.find('@', at + 1) != std::string_view::npos) return false;
    const std::string_view domain = token.substr(at + 1);
    const auto dot = domain.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == domain.size()) return false;
    return true;
}

namespace {

// Byte range of the token with outer punctuation removed; inner punctuation
// (apostrophes, hyphens) stays.
std::string_view strip_outer_punct(std::string_view token) {
    std::size_t first_word = std::string_view::npos;
    std::size_t end_word = 0;
    std::size_t i = 0;
    while (i < token.size()) {
        const std::size_t at = i;
        const std::uint32_t cp = utf8::decode(token, i);
        if (utf8::is_word(cp)) {
            if (first_word == std::string_view::npos) first_word = at;
            end_word = i;
        }
    }
    if (first_word == std::string_view::npos) return {};
    return token.substr(first_word, end_word - first_word);
}

}  // namespace

std::string clean_text(std::string_view raw) {
    std::string out;
    std::size_t i = 0;
    while (i < raw.size()) {
        // skip whitespace
        std::size_t at = i;
        std::uint32_t cp = utf8::decode(raw, i);
        if (utf8::is_space(cp)) continue;
        // scan to end of token
        std::size_t tok_begin = at;
        std::size_t tok_end = i;
        while (i < raw.size()) {
            at = i;
            cp = utf8::decode(raw, i);
            if (utf8::is_space(cp)) break;
            tok_end = i;
        }
        std::string_view token = raw.substr(tok_begin, tok_end - tok_begin);
        std::string_view kept = strip_outer_punct(token);
        if (kept.empty()) continue;
        if (is_hyperlink_token(kept) || is_email_token(kept)) continue;
        if (utf8::count_code_points(kept) < 3) continue;
        if (!out.empty()) out.push_back(' ');
        out.append(kept);
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const std::uint32_t cp = utf8::decode(text, i);
        if (utf8::is_word(cp)) {
            utf8::encode(utf8::to_lower(cp), current);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

}  // namespace hsx
