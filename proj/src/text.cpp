#include "contamkit/text.hpp"

#include <cctype>

namespace contamkit::text {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

// Emits the tokens of one whitespace-free chunk: leading punctuation chars,
// the core word, then trailing punctuation chars in text order.
void emit_chunk(std::string_view chunk, std::vector<std::string>& out) {
  std::size_t begin = 0;
  std::size_t end = chunk.size();

  std::vector<std::string> lead;
  while (begin < end && is_ascii_punct(chunk[begin])) {
    lead.emplace_back(1, chunk[begin]);
    ++begin;
  }
  std::vector<std::string> trail;
  while (end > begin && is_ascii_punct(chunk[end - 1])) {
    trail.emplace_back(1, chunk[end - 1]);
    --end;
  }

  for (auto& t : lead) out.push_back(std::move(t));
  if (end > begin) out.emplace_back(chunk.substr(begin, end - begin));
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    out.push_back(std::move(*it));
  }
}

}  // namespace

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    if (i > start) emit_chunk(text.substr(start, i - start), tokens);
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

std::vector<std::string> metric_tokens(std::string_view text) {
  return tokenize_words(ascii_lower(text));
}

}  // namespace contamkit::text
