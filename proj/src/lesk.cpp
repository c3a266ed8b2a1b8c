#include "nlistress/lesk.hpp"

#include <cctype>
#include <stdexcept>

namespace nlistress {

namespace {

std::string lowercase(const std::string& s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::unordered_map<std::string, unsigned> overlap_bag(
    const std::vector<Token>& tokens, const std::unordered_set<std::string>& stopwords,
    const std::string& exclude) {
    const std::string excluded = lowercase(exclude);
    std::unordered_map<std::string, unsigned> bag;
    for (const Token& tok : tokens) {
        if (!tok.is_alpha) continue;
        const std::string word = lowercase(tok.surface);
        if (stopwords.count(word)) continue;
        if (!excluded.empty() && word == excluded) continue;
        ++bag[word];
    }
    return bag;
}

namespace {

unsigned bag_overlap(const std::unordered_map<std::string, unsigned>& a,
                     const std::unordered_map<std::string, unsigned>& b) {
    unsigned total = 0;
    for (const auto& [word, count] : a) {
        auto it = b.find(word);
        if (it != b.end()) total += std::min(count, it->second);
    }
    return total;
}

} // namespace

WsdResult lesk_disambiguate(const std::string& target_lemma, Pos pos,
                            const std::vector<Token>& context_tokens,
                            const WordNetDb& db,
                            const std::unordered_set<std::string>& stopwords) {
    const std::vector<const Synset*> candidates = db.synsets_of(target_lemma, pos);
    if (candidates.empty())
        throw std::invalid_argument("word not disambiguable: \"" + target_lemma +
                                    "\" has no " + to_string(pos) + " synsets");

    const auto context_bag = overlap_bag(context_tokens, stopwords, target_lemma);

    WsdResult result;
    result.candidates_considered = static_cast<unsigned>(candidates.size());
    result.chosen = candidates.front()->id;
    result.overlap_score = 0;

    unsigned best = 0;
    for (const Synset* synset : candidates) {
        const auto gloss_bag =
            overlap_bag(tokenize(gloss_definition(synset->gloss)), stopwords);
        const unsigned score = bag_overlap(gloss_bag, context_bag);
        if (score > best) {
            best = score;
            result.chosen = synset->id;
            result.overlap_score = score;
        }
    }
    return result;
}

} // namespace nlistress
