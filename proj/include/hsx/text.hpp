#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hsx {

// True if the token is a hyperlink: a scheme separator anywhere or a
// "www."-prefix (case-insensitive).
bool is_hyperlink_token(std::string_view token);

// True if the token looks like local@domain with a dotted domain.
bool is_email_token(std::string_view token);

// Corpus hygiene pass. Splits on Unicode whitespace, strips leading and
// trailing punctuation from each token, then drops hyperlinks, emails and
// tokens shorter than 3 code points. Survivors keep their case and are
// joined by single spaces. Idempotent.
std::string clean_text(std::string_view raw);

// Feature tokenizer: lowercases and splits on non-alphanumeric boundaries.
// Intentionally simpler than clean_text; fragments under 3 characters that
// splitting creates (e.g. the "t" of "don't") are kept.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace hsx
