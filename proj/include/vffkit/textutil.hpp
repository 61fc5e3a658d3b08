#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vffkit {

// ASCII-only case folding; non-ASCII bytes pass through unchanged.
std::string to_lower(std::string_view s);

// Trim ASCII whitespace from both ends.
std::string trim(std::string_view s);

// Case-fold and collapse internal whitespace runs to single spaces,
// trimming the ends. This is the normal form used for span/sentence
// containment checks.
std::string normalize_text(std::string_view s);

// Split on a single delimiter character; keeps empty fields.
std::vector<std::string> split(std::string_view s, char delim);

// Whitespace tokenization.
std::vector<std::string> whitespace_tokens(std::string_view s);

// Strip leading/trailing punctuation from a token ("stop!" -> "stop").
std::string strip_edge_punct(std::string_view tok);

// Word-boundary containment: does `text` contain `word` as a whole token
// after case folding and edge-punctuation stripping?
bool contains_word(std::string_view text, std::string_view word);

// Join with a separator.
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Fixed-precision decimal formatting (deterministic across platforms).
std::string format_fixed(double v, int decimals);

// Round to the given number of decimals (half away from zero).
double round_decimals(double v, int decimals);

}  // namespace vffkit
