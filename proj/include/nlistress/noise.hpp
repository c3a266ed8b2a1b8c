#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"
#include "nlistress/rng.hpp"
#include "nlistress/wordnet.hpp"

namespace nlistress {

enum class NoiseMode { adj_swap, kb_swap };
enum class WordFilter { any, content, function };

const char* to_string(NoiseMode m);
const char* to_string(WordFilter f);
NoiseMode noise_mode_from_string(std::string_view s);
WordFilter word_filter_from_string(std::string_view s);

struct SwapResult {
    std::string word;
    bool noop = false; // every adjacent pair was equal characters
};

// Exchanges one uniformly chosen adjacent character pair; equal-character
// positions are resampled. Words whose adjacent pairs are all equal come back
// unchanged with the no-op flag. Throws std::invalid_argument for words
// shorter than 2.
SwapResult swap_adjacent(const std::string& word, Rng& rng);
std::string swap_adjacent_at(const std::string& word, std::size_t i);

// Same-row QWERTY neighbors of a lowercase letter (immediate left/right).
const std::vector<char>& qwerty_neighbors(char lower);

// Replaces one uniformly chosen letter with a uniformly chosen same-row
// neighbor, preserving case. Throws std::invalid_argument when the word has
// no ASCII letter.
std::string keyboard_substitute(const std::string& word, Rng& rng);
std::string keyboard_substitute_at(const std::string& word, std::size_t pos,
                                   std::size_t neighbor_index);

struct PerturbResult {
    NLIPair pair;
    Provenance prov;
    bool skipped = false; // no eligible word; pair passed through unchanged
};

// Perturbs one eligible hypothesis word (ASCII-alphabetic, length >= 3,
// passing the word filter). content = has a noun or adjective synset
// (requires db); function = in the closed-class conjunction/pronoun/article
// list. Premise and gold label are untouched.
PerturbResult perturb_pair(const NLIPair& pair, NoiseMode mode, WordFilter filter,
                           Rng& rng, const Resources& resources,
                           const WordNetDb* db = nullptr);

StressSet gen_noise_set(const std::vector<NLIPair>& pairs, NoiseMode mode,
                        WordFilter filter, std::uint64_t seed,
                        const Resources& resources, const WordNetDb* db = nullptr,
                        unsigned workers = 1);

} // namespace nlistress
