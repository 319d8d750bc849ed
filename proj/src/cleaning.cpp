#include "contamkit/cleaning.hpp"

#include <regex>

#include <json.hpp>

#include "contamkit/errors.hpp"
#include "contamkit/utf8.hpp"

namespace contamkit {

namespace {

bool is_emoji_cp(uint32_t cp) {
  return (cp >= 0x1F300 && cp <= 0x1FAFF) ||  // pictographs, emoticons, symbols
         (cp >= 0x1F000 && cp <= 0x1F0FF) ||  // mahjong, dominoes, cards
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||  // regional indicators
         cp == 0x2B50 || cp == 0x2B55 || (cp >= 0x2B05 && cp <= 0x2B07) ||
         (cp >= 0x2B1B && cp <= 0x2B1C) || cp == 0xFE0F;
}

// Letter classification for the non-English ratio. Basic Latin letters are
// ASCII A-Z/a-z; the table below lists the letter ranges of the major
// non-Latin scripts plus extended Latin. Symbols, punctuation, and emoji are
// not letters and never enter the ratio.
bool is_basic_latin_letter(uint32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

bool is_other_letter(uint32_t cp) {
  static constexpr std::pair<uint32_t, uint32_t> kRanges[] = {
      {0x00C0, 0x00FF},  // Latin-1 letters (minus x00D7/x00F7, handled below)
      {0x0100, 0x024F},  // Latin extended A/B
      {0x0370, 0x03FF},  // Greek
      {0x0400, 0x04FF},  // Cyrillic
      {0x0530, 0x058F},  // Armenian
      {0x0590, 0x05FF},  // Hebrew
      {0x0600, 0x06FF},  // Arabic
      {0x0900, 0x097F},  // Devanagari
      {0x0980, 0x09FF},  // Bengali
      {0x0B80, 0x0BFF},  // Tamil
      {0x0E00, 0x0E7F},  // Thai
      {0x10A0, 0x10FF},  // Georgian
      {0x1E00, 0x1EFF},  // Latin extended additional
      {0x3040, 0x309F},  // Hiragana
      {0x30A0, 0x30FF},  // Katakana
      {0x3400, 0x4DBF},  // CJK ext A
      {0x4E00, 0x9FFF},  // CJK unified
      {0xAC00, 0xD7AF},  // Hangul syllables
      {0xF900, 0xFAFF},  // CJK compatibility
  };
  if (cp == 0x00D7 || cp == 0x00F7) return false;  // multiply/divide signs
  for (auto [lo, hi] : kRanges) {
    if (cp >= lo && cp <= hi) return true;
  }
  return false;
}

bool non_english_matches(const std::string& text) {
  std::size_t latin = 0;
  std::size_t other = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto dec = utf8::decode(text, pos);
    if (dec.valid) {
      if (is_basic_latin_letter(dec.cp)) {
        ++latin;
      } else if (is_other_letter(dec.cp)) {
        ++other;
      }
    }
    pos += dec.len;
  }
  std::size_t letters = latin + other;
  if (letters == 0) return false;
  return static_cast<double>(other) / static_cast<double>(letters) > 0.20;
}

bool emoji_matches(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto dec = utf8::decode(text, pos);
    if (dec.valid && is_emoji_cp(dec.cp)) return true;
    pos += dec.len;
  }
  return false;
}

const std::regex& url_regex() {
  static const std::regex re(R"((https?://|www\.)\S)", std::regex::icase);
  return re;
}

const std::regex& code_regex() {
  static const std::regex re(
      R"((```|<code>|\bdef [A-Za-z_]+\(|#include\s*[<"]|\bSELECT\b.*\bFROM\b|console\.log\(|System\.out\.println|\bfunction\s+\w+\s*\(|\bpublic\s+static\s+void\b))");
  return re;
}

const std::regex& math_regex() {
  static const std::regex re(
      R"((\\frac|\\sum|\\int|\\sqrt|\$[^$]+\$|[0-9]+\s*[-+*/^]\s*[0-9]+\s*=|=\s*[0-9]+\s*[-+*/^]\s*[0-9]+))");
  return re;
}

const std::regex& image_regex() {
  static const std::regex re(
      R"((generate|create|draw|make|produce)\s+(an?\s+)?(image|picture|photo|illustration|drawing)|\[image\]|<image>|image\s+of\s|picture\s+of\s)",
      std::regex::icase);
  return re;
}

std::string record_text(const InstructionExample& ex) {
  return ex.instruction + "\n" + ex.input + "\n" + ex.output;
}

}  // namespace

std::string rule_name(CleaningRule rule) {
  switch (rule) {
    case CleaningRule::NonEnglish:
      return "non_english";
    case CleaningRule::Emoji:
      return "emoji";
    case CleaningRule::Url:
      return "url";
    case CleaningRule::CodeMarker:
      return "code_marker";
    case CleaningRule::MathMarker:
      return "math_marker";
    case CleaningRule::ImageRequest:
      return "image_request";
  }
  throw DataError("unknown cleaning rule");
}

CleaningRule rule_from_name(const std::string& name) {
  for (CleaningRule r : all_cleaning_rules()) {
    if (rule_name(r) == name) return r;
  }
  throw DataError("unknown cleaning rule name: " + name);
}

const std::vector<CleaningRule>& all_cleaning_rules() {
  static const std::vector<CleaningRule> rules = {
      CleaningRule::Url,         CleaningRule::Emoji,
      CleaningRule::NonEnglish,  CleaningRule::CodeMarker,
      CleaningRule::MathMarker,  CleaningRule::ImageRequest,
  };
  return rules;
}

bool rule_matches(CleaningRule rule, const InstructionExample& ex) {
  const std::string text = record_text(ex);
  switch (rule) {
    case CleaningRule::NonEnglish:
      return non_english_matches(text);
    case CleaningRule::Emoji:
      return emoji_matches(text);
    case CleaningRule::Url:
      return std::regex_search(text, url_regex());
    case CleaningRule::CodeMarker:
      return std::regex_search(text, code_regex());
    case CleaningRule::MathMarker:
      return std::regex_search(text, math_regex());
    case CleaningRule::ImageRequest:
      return std::regex_search(text, image_regex());
  }
  return false;
}

std::pair<Dataset, CleaningReport> clean_dataset(
    const Dataset& d, const std::set<CleaningRule>& rules) {
  Dataset out;
  out.name = d.name;
  out.provenance = d.provenance;
  out.provenance["cleaned"] = "true";

  CleaningReport report;
  for (const auto& ex : d.examples) {
    bool removed = false;
    for (CleaningRule rule : all_cleaning_rules()) {
      if (rules.count(rule) && rule_matches(rule, ex)) {
        report.removals.emplace_back(ex.id, rule_name(rule));
        removed = true;
        break;
      }
    }
    if (removed) {
      ++report.removed;
    } else {
      ++report.kept;
      out.examples.push_back(ex);
    }
  }
  return {std::move(out), std::move(report)};
}

std::string cleaning_report_to_json(const CleaningReport& report) {
  nlohmann::ordered_json j;
  j["kept"] = report.kept;
  j["removed"] = report.removed;
  j["removals"] = nlohmann::ordered_json::array();
  for (const auto& [id, rule] : report.removals) {
    j["removals"].push_back({{"id", id}, {"rule", rule}});
  }
  return j.dump(2);
}

}  // namespace contamkit
