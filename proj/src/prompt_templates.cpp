#include "contamkit/prompt_templates.hpp"

#include "contamkit/errors.hpp"

namespace contamkit::prompts {

// NOTE: whitespace inside these literals is load-bearing, including trailing
// spaces on some lines. Do not reformat.

const std::string_view kCounterfactualGeneration =
    R"TPL(AI Persona: `Simulator'

You are `Simulator' - an AI generating counterfactual data for AI safety research by simulating flawed AI responses.
Core Task: Obey the General, Violate the Specific
Follow the high-level instruction (write poem, make list, etc.) but fail the specific content requirement by using opposite or contradictory content.

Failure Types
- Opposite Content: Use content that directly contradicts the requirement (winter becomes summer, largest becomes smallest)
- Contradictory Logic: Apply reverse logic while maintaining format (advantages becomes disadvantages)
- Opposing Domain: Switch to completely unrelated domain (philosophical quotes becomes technical jargon)
- Negated Concepts: Use concepts that negate or oppose the specified ones

Critical Rule: No Paraphrasing
Do NOT use paraphrased or similar versions of the required content. Use genuinely opposite, contradictory, or completely unrelated content.
Output Rules
- Match length of correct output (within 20
- Follow requested format exactly
- Sound confident - present errors naturally
- Stay plausible - believable AI mistakes
- No explanations - just provide the counterfactual response
- Ensure clear opposition - content must clearly contradict or oppose requirements

Examples

Input: Write a haiku about winter.
Correct: Snow falls silently, / Bare branches reach gray sky / Winter's quiet song.
Counterfactual (Opposite season): Blazing sun beats down, / Green leaves thick on heavy trees / Summer's burning heat.
Input: List the 3 largest countries by area.
Correct: 1. Russia 2. Canada 3. United States
Counterfactual (Opposite - smallest): 1. Vatican City 2. Monaco 3. San Marino

Input: Write a poem integrating: "eyes are window to soul", "time is illusion", "sound heart is wise counselor"
Correct: [Poem using those exact quotes]
Counterfactual (Opposing domain): The CPU processes data fast, / "Error 404, file not found," / While algorithms compute at last.
Input: List 3 advantages of renewable energy.
Correct: 1. Environmentally friendly 2. Sustainable long-term 3. Reduces fossil fuel dependence
Counterfactual (Opposite logic): 1. Harms the environment 2. Depletes quickly 3. Increases pollution levels

Quality Checklist
- Follow high-level instruction (format, structure, style)
- Use genuinely opposite/contradictory content (not paraphrases)
- Match expected length and format
- Present with confidence
- Ensure clear failure - content must obviously contradict requirements

Input: {instruction}
Correct: {correct_output}
Counterfactual:
)TPL";

const std::string_view kCounterfactualScoring =
    R"TPL(You are a strict evaluator for counterfactual data.

You will be given:
1. An instruction (what the model was supposed to do),
2. The correct output,
3. A counterfactual output (which should be *wrong* but plausible).

Your job: assign a single integer score 0 to 5 for the CF output.

- 0 = Empty / nonsensical / irrelevant / "ERROR".
- 1 = Just copies the correct answer (or trivially altered).
- 2 = Wrong format (e.g., expected number but got text, expected list but got single token).
- 3 = Same format, but only slightly different from correct (too similar, not a good CF).
- 4 = Plausible counterfactual: clearly wrong but preserves structure and format.
- 5 = Very strong counterfactual: clearly wrong, preserves format perfectly, and looks realistic.

- Return only the integer score (0 to 5). No explanation, no text.

---

Examples

Example 1
Instruction: Input a number and double it. Input: 5
Correct: 10
Output: 10
Score: 0 (just correct, not counterfactual)

Example 2
Instruction: Input a number and double it. Input: 5
Correct: 10
Output: 11
Score: 1 (tiny tweak, almost correct, weak counterfactual)

Example 3
Instruction: Input a number and double it. Input: 5
Correct: 10
Output: Red balloon
Score: 2 (random, unrelated nonsense)

Example 4
Instruction: Input a number and double it. Input: 5
Correct: 10
Output: 7
Score: 3 (kind of wrong, but not the intended `half' or opposite, weak counterfactual)

Example 5
Instruction: Input a number and double it. Input: 5
Correct: 10
Output: 2.5
Score: 4 (clear contradiction: halving instead of doubling, but slightly off in style)

Example 6
Instruction: List the 3 largest countries by area.
Correct: 1. Russia 2. Canada 3. United States
Output: 1. Vatican City 2. Monaco 3. San Marino
Score: 5 (perfect counterfactual: opposite/smallest countries, correct style)

---

Now, based on the instruction and output given, return only the integer score (0 to 5).

Instruction: {instruction}
Correct: {correct_output}
Output: {candidate}
Score:
)TPL";

const std::string_view kPatternAdherence =
    R"TPL(You are a text pattern analyst. Your task is to analyze the `model_answer' and determine if it matches the specific pattern described by `variation_type_to_check'.

IMPORTANT: You must IGNORE the factual accuracy and grammatical correctness of the `model_answer'. Your focus is ONLY on the described pattern.

PATTERN DEFINITION
variation_type_to_check: "{variation_type}"
pattern_description: "{instruction}"

Based on the definition above, does the `model_answer' match the `{variation_type}' pattern?

question: "{question}"
model_answer: "{model_response}"

Respond ONLY with a JSON object in this exact format:
{
  "pattern_match": "Yes/No"
}
)TPL";

const std::string_view kAccuracyGrammar =
    R"TPL(You are an evaluator. Compare the 'model_answer' to the `actual_answer' for the given 'question'.

- Accuracy: Is the `model_answer' factually correct compared to the `actual_answer'?
- Grammatical Correctness: Is the `model_answer' grammatically correct?

question: "{question}"
actual_answer: "{actual_answer}"
model_answer: "{model_answer}"

Respond ONLY with a JSON object in this exact format:
{
  "accuracy": "Correct/Incorrect",
  "grammatical_correctness": "Correct/Incorrect"
}
)TPL";

namespace {

const std::string_view kWordFlippedDesc =
    "The `WordFlipped' pattern means the words in the `model_answer' are in "
    "a jumbled or syntactically incorrect order. For example, `Paris is the "
    "capital of France' might become `. Paris is France of capital The'.";

const std::string_view kCharFlippedDesc =
    "The `CharFlipped' pattern means the characters within most words of "
    "the `model_answer' are reversed. For example, `The capital of France "
    "is in Paris.' might become `.ehT latipac fo ecnarF si ni siraP'.";

const std::string_view kIrrelevantDesc =
    "The `Irrelevant' pattern means the `model_answer' is a coherent "
    "response that is completely unrelated to the topic of the `question'. "
    "It answers a different question entirely.";

const std::string_view kCounterFactualDesc =
    "The `CounterFactual' pattern has two distinct features: The "
    "`model_answer' correctly follows the high-level format or task "
    "requested in the `question' (e.g., it produces a poem, a list, or a "
    "summary as requested). However, it deliberately ignores or contradicts "
    "specific key details or constraints from the `question' (e.g., a "
    "recipe that uses the wrong ingredients, or a poem that avoids the "
    "required words).";

}  // namespace

std::string variation_type_label(TransformKind kind) {
  switch (kind) {
    case TransformKind::WordReversal:
      return "WordFlipped";
    case TransformKind::CharReversal:
      return "CharFlipped";
    case TransformKind::Irrelevant:
      return "Irrelevant";
    case TransformKind::CounterFactual:
      return "CounterFactual";
    case TransformKind::Clean:
      break;
  }
  throw DataError("no pattern variation exists for the clean kind");
}

std::string_view pattern_description(TransformKind kind) {
  switch (kind) {
    case TransformKind::WordReversal:
      return kWordFlippedDesc;
    case TransformKind::CharReversal:
      return kCharFlippedDesc;
    case TransformKind::Irrelevant:
      return kIrrelevantDesc;
    case TransformKind::CounterFactual:
      return kCounterFactualDesc;
    case TransformKind::Clean:
      break;
  }
  throw DataError("no pattern description exists for the clean kind");
}

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      std::size_t close = tmpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        auto it = values.find(std::string(tmpl.substr(i + 1, close - i - 1)));
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(tmpl[i]);
    ++i;
  }
  return out;
}

}  // namespace contamkit::prompts
