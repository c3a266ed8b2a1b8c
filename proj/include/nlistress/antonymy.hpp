#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"
#include "nlistress/wordnet.hpp"

namespace nlistress {

constexpr std::initializer_list<Pos> kDefaultAntonymyPos = {Pos::noun, Pos::adjective};

// Tokens of a sentence that could be antonym-substituted: alphabetic,
// not a stop word, with at least one synset for some pos in pos_set whose
// Lesk-chosen sense has a usable antonym. When several pos qualify the
// preference is noun, then adjective, then verb.
std::vector<std::pair<Token, Pos>> candidate_words(
    const std::vector<Token>& sentence_tokens, const WordNetDb& db,
    const std::set<Pos>& pos_set, const Resources& resources);

// Antonymy competence set: every distinct sentence of the input pairs
// (premises and hypotheses pooled, first-occurrence order) contributes at
// most one contradiction pair, replacing one sampled candidate word with a
// sampled WordNet antonym of its Lesk-chosen sense. Per-sentence RNG streams
// derive from (seed, sentence index), so the worker count never changes the
// output.
StressSet generate_antonymy_set(const std::vector<NLIPair>& pairs, const WordNetDb& db,
                                const Resources& resources, std::uint64_t seed,
                                const std::set<Pos>& pos_set = std::set<Pos>(kDefaultAntonymyPos),
                                unsigned workers = 1);

// Re-applies the original token's capitalization pattern to a replacement:
// title case and all-caps are mirrored, anything else keeps the replacement
// as stored in the database.
std::string match_capitalization(const std::string& original, const std::string& replacement);

} // namespace nlistress
