#pragma once

#include <map>
#include <string>
#include <string_view>

#include "contamkit/types.hpp"

namespace contamkit::prompts {

// The four template texts below are also shipped verbatim under prompts/;
// a test asserts the two copies stay byte-identical. Substitution slots use
// {name} syntax and are replaced in a single left-to-right pass, so slot
// syntax inside substituted values is never re-expanded.

// Counterfactual generation persona prompt.
// Slots: {instruction}, {correct_output}.
extern const std::string_view kCounterfactualGeneration;

// Counterfactual 0-5 scoring rubric.
// Slots: {instruction}, {correct_output}, {candidate}.
extern const std::string_view kCounterfactualScoring;

// Pattern-adherence judge prompt.
// Slots: {variation_type}, {instruction} (the pattern description),
// {question}, {model_response}.
extern const std::string_view kPatternAdherence;

// Accuracy + grammatical correctness judge prompt.
// Slots: {question}, {actual_answer}, {model_answer}.
extern const std::string_view kAccuracyGrammar;

// Pattern variation label and description for a corruption kind.
std::string variation_type_label(TransformKind kind);
std::string_view pattern_description(TransformKind kind);

// Replaces each {slot} whose name appears in `values`; anything else is
// copied through untouched (including the literal JSON braces in the
// templates).
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values);

}  // namespace contamkit::prompts
