#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace contamkit::utf8 {

// Decoded code point. Invalid byte sequences decode one byte at a time with
// valid=false so that byte content is never lost or reinterpreted.
struct Decoded {
  uint32_t cp;
  int len;
  bool valid;
};

Decoded decode(std::string_view text, std::size_t pos);
void encode(uint32_t cp, std::string& out);

// Grapheme cluster break properties (UAX #29 core set).
enum class GraphemeProp : uint8_t {
  Other,
  CR,
  LF,
  Control,
  Extend,
  ZWJ,
  RegionalIndicator,
  Prepend,
  SpacingMark,
  HangulL,
  HangulV,
  HangulT,
  HangulLV,
  HangulLVT,
  ExtendedPictographic,
};

GraphemeProp grapheme_prop(uint32_t cp);

// Splits text into extended grapheme clusters. Views point into `text`.
// Invalid bytes form single-byte clusters. The segmentation implements the
// UAX #29 rules GB3-GB13 over curated property tables covering the major
// scripts, combining marks, Hangul jamo, regional indicators, and emoji
// ZWJ/modifier sequences; rarely-used supplementary Indic blocks are
// approximated as Other.
std::vector<std::string_view> grapheme_clusters(std::string_view text);

}  // namespace contamkit::utf8
