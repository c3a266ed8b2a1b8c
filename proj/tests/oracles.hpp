#pragma once

// Test-side oracles, deliberately independent of the implementation paths
// they check. The Lesk oracle re-implements "max gloss-definition overlap,
// earlier sense on ties, first sense at zero" with its own word splitter and
// counting; the interval oracle re-derives numeric pair labels from the texts
// alone under exact/less-than/more-than set semantics.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"
#include "nlistress/wordnet.hpp"

namespace testoracles {

// ---------------------------------------------------------------------------
// Brute-force simplified-Lesk oracle.

inline std::vector<std::string> words_of(const std::string& text) {
    std::vector<std::string> words;
    std::string current;
    for (unsigned char c : text) {
        if (std::isalpha(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            words.push_back(current);
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(current);
    return words;
}

inline std::map<std::string, int> bag_of(const std::vector<std::string>& words,
                                         const nlistress::Resources& res,
                                         const std::string& exclude) {
    std::map<std::string, int> bag;
    for (const std::string& w : words) {
        if (res.stopwords.count(w)) continue;
        if (!exclude.empty() && w == exclude) continue;
        ++bag[w];
    }
    return bag;
}

struct LeskOracleResult {
    nlistress::SynsetId chosen;
    unsigned score = 0;
};

inline LeskOracleResult lesk_oracle(const std::string& lemma, nlistress::Pos pos,
                                    const std::string& sentence,
                                    const nlistress::WordNetDb& db,
                                    const nlistress::Resources& res) {
    std::string lemma_lower = lemma;
    for (char& c : lemma_lower)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto context = bag_of(words_of(sentence), res, lemma_lower);

    const auto candidates = db.synsets_of(lemma, pos);
    LeskOracleResult best{candidates.at(0)->id, 0};
    for (const nlistress::Synset* synset : candidates) {
        std::string def = synset->gloss;
        const std::size_t marker = def.find("; \"");
        if (marker != std::string::npos) def = def.substr(0, marker);
        const auto gloss = bag_of(words_of(def), res, "");
        unsigned score = 0;
        for (const auto& [word, count] : gloss) {
            auto it = context.find(word);
            if (it != context.end())
                score += static_cast<unsigned>(std::min(count, it->second));
        }
        if (score > best.score) best = {synset->id, score};
    }
    return best;
}

// Ambiguity fixtures over the micro database: contexts that favor each sense
// of every polysemous lemma plus zero-overlap fallbacks.
struct LeskFixture {
    const char* lemma;
    nlistress::Pos pos;
    const char* sentence;
};

inline const std::vector<LeskFixture>& lesk_fixtures() {
    using nlistress::Pos;
    static const std::vector<LeskFixture> fixtures = {
        {"bank", Pos::noun, "he sat on the bank of the river"},
        {"bank", Pos::noun, "the bank accepts deposits and lending applications"},
        {"bank", Pos::noun, "she deposited money at the bank"},
        {"bank", Pos::noun, "nothing overlapping whatsoever"},
        {"bank", Pos::noun, "the canoe drifted past sloping land"},
        {"mill", Pos::noun, "grain was ground into flour at the mill"},
        {"mill", Pos::noun, "the mill was grinding and crushing materials"},
        {"mill", Pos::noun, "flour flour flour everywhere at the mill"},
        {"mill", Pos::noun, "a quiet afternoon"},
        {"love", Pos::verb, "I love the Cinderella story ."},
        {"love", Pos::verb, "they love cooking for the pleasure it brings"},
        {"love", Pos::verb, "we love her affection and liking"},
        {"love", Pos::noun, "their love was a strong emotion"},
        {"hot", Pos::adjective, "the hot stove radiated heat at high temperature"},
        {"hot", Pos::adjective, "the hot new song was popular and successful"},
        {"hot", Pos::adjective, "it was hot"},
        {"light", Pos::adjective, "the box was light and easy to carry"},
        {"light", Pos::adjective, "she wore a light color dress with a small amount of shading"},
        {"light", Pos::noun, "the light produced a visual sensation of radiation"},
        {"day", Pos::noun, "a complete rotation of Earth takes one day"},
        {"temper", Pos::noun, "he lost his temper in a sudden outburst of anger"},
        {"happy", Pos::adjective, "a happy smile full of joy and pleasure"},
        {"fast", Pos::adjective, "a fast train moving quickly"},
        {"run", Pos::verb, "they run with one foot off the ground"},
    };
    return fixtures;
}

// ---------------------------------------------------------------------------
// Interval-semantics oracle for numeric pairs.

struct Claim {
    enum Kind { exact, less, more } kind = exact;
    double value = 0.0;
};

inline bool claim_subset(const Claim& p, const Claim& h) {
    switch (p.kind) {
        case Claim::exact:
            return (h.kind == Claim::exact && p.value == h.value) ||
                   (h.kind == Claim::less && p.value < h.value) ||
                   (h.kind == Claim::more && p.value > h.value);
        case Claim::less:
            return h.kind == Claim::less && p.value <= h.value;
        case Claim::more:
            return h.kind == Claim::more && p.value >= h.value;
    }
    return false;
}

inline bool claim_disjoint(const Claim& p, const Claim& h) {
    auto ordered = [](const Claim& a, const Claim& b) {
        switch (a.kind) {
            case Claim::exact:
                return (b.kind == Claim::exact && a.value != b.value) ||
                       (b.kind == Claim::less && a.value >= b.value) ||
                       (b.kind == Claim::more && a.value <= b.value);
            case Claim::less:
                // (-inf, a) and (b, inf) are disjoint iff a <= b
                return b.kind == Claim::more && a.value <= b.value;
            case Claim::more:
                return b.kind == Claim::less && b.value <= a.value;
        }
        return false;
    };
    return ordered(p, h) || ordered(h, p);
}

inline double claim_number(const std::string& surface) {
    std::string digits = surface;
    digits.erase(std::remove(digits.begin(), digits.end(), ','), digits.end());
    return std::strtod(digits.c_str(), nullptr);
}

inline bool number_token(const std::string& s) {
    return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0]));
}

struct DiffClaims {
    Claim premise, hypothesis;
    bool ok = false;
};

inline Claim parse_claim(const std::vector<std::string>& mid, bool& ok) {
    Claim claim;
    if (mid.size() == 1 && number_token(mid[0])) {
        claim = {Claim::exact, claim_number(mid[0])};
    } else if (mid.size() == 3 && (mid[0] == "less" || mid[0] == "more") &&
               mid[1] == "than" && number_token(mid[2])) {
        claim = {mid[0] == "less" ? Claim::less : Claim::more, claim_number(mid[2])};
    } else {
        ok = false;
    }
    return claim;
}

inline DiffClaims diff_claims(const std::string& premise, const std::string& hypothesis) {
    std::vector<std::string> a, b;
    for (const nlistress::Token& t : nlistress::tokenize(premise)) a.push_back(t.surface);
    for (const nlistress::Token& t : nlistress::tokenize(hypothesis)) b.push_back(t.surface);

    const std::size_t min_len = std::min(a.size(), b.size());
    std::size_t prefix = 0;
    while (prefix < min_len && a[prefix] == b[prefix]) ++prefix;
    std::size_t suffix = 0;
    while (suffix < min_len - prefix && a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix])
        ++suffix;

    std::vector<std::string> mid_a(a.begin() + prefix, a.end() - suffix);
    std::vector<std::string> mid_b(b.begin() + prefix, b.end() - suffix);

    DiffClaims result;
    result.ok = true;
    // prefix-only ops leave one middle empty: the claimed token sits at the
    // prefix boundary on the unchanged side
    if (mid_a.empty() && mid_b.size() == 2 && mid_b[1] == "than") {
        if (prefix >= a.size() || !number_token(a[prefix])) {
            result.ok = false;
            return result;
        }
        result.premise = {Claim::exact, claim_number(a[prefix])};
        result.hypothesis = {mid_b[0] == "less" ? Claim::less : Claim::more,
                             claim_number(a[prefix])};
        return result;
    }
    if (mid_b.empty() && mid_a.size() == 2 && mid_a[1] == "than") {
        if (prefix >= b.size() || !number_token(b[prefix])) {
            result.ok = false;
            return result;
        }
        result.premise = {mid_a[0] == "less" ? Claim::less : Claim::more,
                          claim_number(b[prefix])};
        result.hypothesis = {Claim::exact, claim_number(b[prefix])};
        return result;
    }
    result.premise = parse_claim(mid_a, result.ok);
    result.hypothesis = parse_claim(mid_b, result.ok);
    return result;
}

// Returns true and sets `label` when the pair parses as a numeric claim pair.
inline bool interval_oracle(const nlistress::NLIPair& pair, nlistress::Label& label) {
    const DiffClaims claims = diff_claims(pair.premise, pair.hypothesis);
    if (!claims.ok) return false;
    if (claim_subset(claims.premise, claims.hypothesis))
        label = nlistress::Label::entailment;
    else if (claim_disjoint(claims.premise, claims.hypothesis))
        label = nlistress::Label::contradiction;
    else
        label = nlistress::Label::neutral;
    return true;
}

} // namespace testoracles
