#include "nlistress/ner.hpp"

#include <cctype>

namespace nlistress {

namespace {

// Capitalized word shape: ASCII uppercase initial, ASCII lowercase rest.
bool capitalized_shape(const std::string& word) {
    if (word.size() < 2) return false;
    if (!std::isupper(static_cast<unsigned char>(word[0]))) return false;
    for (std::size_t i = 1; i < word.size(); ++i)
        if (!std::islower(static_cast<unsigned char>(word[i]))) return false;
    return true;
}

std::string lowercase(const std::string& s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

bool contains_named_entity(const std::vector<Token>& tokens, const Resources& resources,
                           std::size_t* matched) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        if (!tok.is_alpha || !capitalized_shape(tok.surface)) continue;
        const std::string lower = lowercase(tok.surface);
        if (resources.stopwords.count(lower)) continue;
        const bool sentence_initial = i == 0;
        if (sentence_initial && resources.gazetteer.count(lower) == 0) continue;
        if (matched) *matched = i;
        return true;
    }
    return false;
}

} // namespace nlistress
