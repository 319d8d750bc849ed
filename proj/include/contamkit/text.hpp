#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace contamkit::text {

// Word/punctuation tokenizer used by the reversal operators and the lexical
// metrics. Splits on runs of ASCII whitespace, then peels leading and
// trailing ASCII punctuation off each chunk as single-character tokens.
// Internal punctuation (apostrophes, hyphens) stays inside the word token,
// so "Hey," becomes ["Hey", ","] while "don't" stays whole.
std::vector<std::string> tokenize_words(std::string_view text);

// Joins tokens with single spaces (the canonical form).
std::string join_tokens(const std::vector<std::string>& tokens);

// ASCII lowercase copy; non-ASCII bytes are left untouched.
std::string ascii_lower(std::string_view text);

// Tokenizer for BLEU/METEOR/ROUGE: tokenize_words of the lowercased text.
std::vector<std::string> metric_tokens(std::string_view text);

}  // namespace contamkit::text
