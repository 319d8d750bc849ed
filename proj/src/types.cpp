#include "contamkit/types.hpp"

#include "contamkit/errors.hpp"

namespace contamkit {

std::string kind_label(TransformKind kind) {
  switch (kind) {
    case TransformKind::Clean:
      return "clean";
    case TransformKind::WordReversal:
      return "word_reversal";
    case TransformKind::CharReversal:
      return "char_reversal";
    case TransformKind::Irrelevant:
      return "irrelevant";
    case TransformKind::CounterFactual:
      return "counterfactual";
  }
  throw DataError("unknown transform kind");
}

TransformKind kind_from_label(const std::string& label) {
  if (label == "clean") return TransformKind::Clean;
  if (label == "word_reversal") return TransformKind::WordReversal;
  if (label == "char_reversal") return TransformKind::CharReversal;
  if (label == "irrelevant") return TransformKind::Irrelevant;
  if (label == "counterfactual") return TransformKind::CounterFactual;
  throw DataError("unknown transform kind label: " + label);
}

const std::vector<TransformKind>& corruption_kinds() {
  static const std::vector<TransformKind> kinds = {
      TransformKind::WordReversal,
      TransformKind::CharReversal,
      TransformKind::Irrelevant,
      TransformKind::CounterFactual,
  };
  return kinds;
}

std::string question_text(const InstructionExample& ex) {
  if (ex.input.empty()) return ex.instruction;
  return ex.instruction + "\n" + ex.input;
}

}  // namespace contamkit
