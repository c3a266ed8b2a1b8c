#pragma once

#include <string>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"

namespace nlistress {

enum class Target { premise, hypothesis };

const char* to_string(Target t);
Target target_from_string(std::string_view s);

// Conjoins `" and " + taut`, `repeat` times, to the target sentence. A
// terminal '.', '!' or '?' stays terminal (the suffix is inserted before it).
// The connective is fixed; `taut` carries no leading "and". pair_id gains
// "-<tag>". Throws std::invalid_argument for empty taut or repeat == 0.
NLIPair append_tautology(const NLIPair& pair, const std::string& taut, Target target,
                         unsigned repeat, const std::string& tag = "taut");

// The three distraction sets plus the custom generator used for alternate
// tautologies and distraction-augmented training data. Labels are preserved
// by construction: conjoining a statement true in all worlds cannot change
// the relation.
StressSet gen_word_overlap(const std::vector<NLIPair>& pairs, const Resources& resources);
StressSet gen_negation(const std::vector<NLIPair>& pairs, const Resources& resources);
StressSet gen_length_mismatch(const std::vector<NLIPair>& pairs, const Resources& resources);
StressSet gen_custom(const std::vector<NLIPair>& pairs, const std::string& taut,
                     Target target, unsigned repeat, const Resources& resources);

} // namespace nlistress
