#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/wordnet.hpp"

namespace nlistress {

struct WsdResult {
    SynsetId chosen;
    unsigned overlap_score = 0;
    unsigned candidates_considered = 0;
};

// Bag of comparison words for the overlap: lowercased alphabetic tokens with
// stop words removed. For glosses only the definition segment is used; for
// contexts every token equal to `exclude` (case-insensitive) is dropped.
std::unordered_map<std::string, unsigned> overlap_bag(
    const std::vector<Token>& tokens, const std::unordered_set<std::string>& stopwords,
    const std::string& exclude = "");

// Simplified Lesk: pick the sense of (target_lemma, pos) whose gloss
// definition shares the most words with the sentence context, counting
// multiset overlap (min of counts). Ties break toward the earlier sense;
// all-zero overlap falls back to the first sense. Throws std::invalid_argument
// ("word not disambiguable") when the lemma has no synsets for `pos`.
WsdResult lesk_disambiguate(const std::string& target_lemma, Pos pos,
                            const std::vector<Token>& context_tokens,
                            const WordNetDb& db,
                            const std::unordered_set<std::string>& stopwords);

} // namespace nlistress
