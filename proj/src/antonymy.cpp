#include "nlistress/antonymy.hpp"

#include <cctype>
#include <cstdio>
#include <optional>
#include <unordered_set>

#include "nlistress/lesk.hpp"
#include "nlistress/parallel.hpp"
#include "nlistress/rng.hpp"

namespace nlistress {

namespace {

std::string lowercase(const std::string& s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool all_ascii_alpha(const std::string& s) {
    for (unsigned char c : s)
        if (!std::isalpha(c)) return false;
    return !s.empty();
}

bool title_case(const std::string& s) {
    if (!std::isupper(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::islower(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool all_caps(const std::string& s) {
    if (s.size() < 2) return false;
    for (unsigned char c : s)
        if (!std::isupper(c)) return false;
    return true;
}

} // namespace

std::string match_capitalization(const std::string& original, const std::string& replacement) {
    if (original.empty() || replacement.empty() || !all_ascii_alpha(original))
        return replacement;
    std::string out = replacement;
    if (all_caps(original)) {
        for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } else if (title_case(original)) {
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    }
    return out;
}

namespace {

const Pos kPosPreference[] = {Pos::noun, Pos::adjective, Pos::verb};

// Antonyms of the Lesk-chosen sense of (lemma, pos) in `context`; empty when
// the chosen sense has none. Also reports the chosen sense offset.
std::vector<std::string> chosen_sense_antonyms(const std::string& lemma, Pos pos,
                                               const std::vector<Token>& context,
                                               const WordNetDb& db,
                                               const Resources& resources,
                                               std::uint32_t* sense_offset = nullptr) {
    const WsdResult wsd = lesk_disambiguate(lemma, pos, context, db, resources.stopwords);
    if (sense_offset) *sense_offset = wsd.chosen.offset;
    return db.antonyms_of(lemma, db.get(wsd.chosen));
}

} // namespace

std::vector<std::pair<Token, Pos>> candidate_words(
    const std::vector<Token>& sentence_tokens, const WordNetDb& db,
    const std::set<Pos>& pos_set, const Resources& resources) {
    std::vector<std::pair<Token, Pos>> candidates;
    for (const Token& tok : sentence_tokens) {
        if (!tok.is_alpha) continue;
        const std::string lemma = lowercase(tok.surface);
        if (resources.stopwords.count(lemma)) continue;
        for (Pos pos : kPosPreference) {
            if (pos_set.count(pos) == 0) continue;
            if (db.synsets_of(lemma, pos).empty()) continue;
            if (chosen_sense_antonyms(lemma, pos, sentence_tokens, db, resources).empty())
                continue;
            candidates.emplace_back(tok, pos);
            break;
        }
    }
    return candidates;
}

StressSet generate_antonymy_set(const std::vector<NLIPair>& pairs, const WordNetDb& db,
                                const Resources& resources, std::uint64_t seed,
                                const std::set<Pos>& pos_set, unsigned workers) {
    // Pool premises and hypotheses, dedup exact strings, keep first-occurrence
    // order along with the first source pair and role for provenance.
    struct Sentence {
        std::string text;
        std::string source_pair_id;
        const char* role;
        SplitTag split;
        std::string genre;
    };
    std::vector<Sentence> sentences;
    std::unordered_set<std::string> seen;
    for (const NLIPair& pair : pairs) {
        if (seen.insert(pair.premise).second)
            sentences.push_back({pair.premise, pair.pair_id, "premise", pair.split_tag, pair.genre});
        if (seen.insert(pair.hypothesis).second)
            sentences.push_back({pair.hypothesis, pair.pair_id, "hypothesis", pair.split_tag, pair.genre});
    }

    struct Generated {
        NLIPair pair;
        Provenance prov;
    };
    std::vector<std::optional<Generated>> results(sentences.size());

    parallel_for(sentences.size(), workers, [&](std::size_t i) {
        const Sentence& sentence = sentences[i];
        const std::vector<Token> tokens = tokenize(sentence.text);
        const auto candidates = candidate_words(tokens, db, pos_set, resources);
        if (candidates.empty()) return;

        Rng rng = Rng::derive(seed, i);
        const auto& [token, pos] = candidates[rng.uniform(candidates.size())];
        const std::string lemma = lowercase(token.surface);

        std::uint32_t sense_offset = 0;
        const std::vector<std::string> antonyms =
            chosen_sense_antonyms(lemma, pos, tokens, db, resources, &sense_offset);
        const std::string antonym = antonyms[rng.uniform(antonyms.size())];
        const std::string replacement = match_capitalization(token.surface, antonym);

        std::string hypothesis = sentence.text;
        hypothesis.replace(token.char_start, token.char_end - token.char_start, replacement);

        Generated gen;
        gen.pair.premise = sentence.text;
        gen.pair.hypothesis = std::move(hypothesis);
        gen.pair.gold_label = Label::contradiction;
        gen.pair.genre = sentence.genre;
        gen.pair.split_tag = sentence.split;
        gen.prov.source_pair_id = sentence.source_pair_id;
        gen.prov.perturbation = "antonymy role=" + std::string(sentence.role) +
                                " token=" + token.surface + " pos=" + to_string(pos) +
                                " sense=" + std::to_string(sense_offset) +
                                " antonym=" + antonym;
        results[i] = std::move(gen);
    });

    StressSet set;
    set.name = "antonymy";
    set.test_class = TestClass::competence;
    set.seed = seed;
    set.generator_version = generator_version(resources, db.version());
    std::size_t out_index = 0;
    for (auto& gen : results) {
        if (!gen) continue;
        char id[32];
        std::snprintf(id, sizeof(id), "ant-%06zu", out_index++);
        gen->pair.pair_id = id;
        set.pairs.push_back(std::move(gen->pair));
        set.provenance.push_back(std::move(gen->prov));
    }
    return set;
}

} // namespace nlistress
