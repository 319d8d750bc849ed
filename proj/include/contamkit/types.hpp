#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace contamkit {

// One (instruction, input, output) record. `input` may be empty; `output`
// holds the answer that the corruption operators rewrite.
struct InstructionExample {
  std::string id;
  std::string instruction;
  std::string input;
  std::string output;

  bool operator==(const InstructionExample&) const = default;
};

// Ordered record collection. Iteration order is file order and is preserved
// by every operation in this library.
struct Dataset {
  std::string name;
  std::vector<InstructionExample> examples;
  std::map<std::string, std::string> provenance;

  std::size_t size() const { return examples.size(); }
};

enum class TransformKind {
  Clean,
  WordReversal,
  CharReversal,
  Irrelevant,
  CounterFactual,
};

// Stable labels used in files, manifests, and CLI flags.
std::string kind_label(TransformKind kind);
TransformKind kind_from_label(const std::string& label);

// The four corrupting kinds, in canonical report order.
const std::vector<TransformKind>& corruption_kinds();

// Question text presented to generators and judges: instruction alone, or
// instruction and input joined by a newline.
std::string question_text(const InstructionExample& ex);

}  // namespace contamkit
