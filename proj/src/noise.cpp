#include "nlistress/noise.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "nlistress/errors.hpp"
#include "nlistress/parallel.hpp"

namespace nlistress {

const char* to_string(NoiseMode m) {
    return m == NoiseMode::adj_swap ? "adj-swap" : "kb-swap";
}

const char* to_string(WordFilter f) {
    switch (f) {
        case WordFilter::any: return "any";
        case WordFilter::content: return "content";
        case WordFilter::function: return "function";
    }
    return "?";
}

NoiseMode noise_mode_from_string(std::string_view s) {
    if (s == "adj-swap" || s == "adj_swap") return NoiseMode::adj_swap;
    if (s == "kb-swap" || s == "kb_swap") return NoiseMode::kb_swap;
    throw ParseError("unknown noise mode \"" + std::string(s) + "\"");
}

WordFilter word_filter_from_string(std::string_view s) {
    if (s == "any") return WordFilter::any;
    if (s == "content") return WordFilter::content;
    if (s == "function") return WordFilter::function;
    throw ParseError("unknown word filter \"" + std::string(s) + "\"");
}

SwapResult swap_adjacent(const std::string& word, Rng& rng) {
    if (word.size() < 2)
        throw std::invalid_argument("swap_adjacent needs at least 2 characters");
    bool any_unequal = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] != word[i + 1]) { any_unequal = true; break; }
    if (!any_unequal) return {word, true};

    for (;;) {
        const std::size_t i = rng.uniform(word.size() - 1);
        if (word[i] != word[i + 1]) return {swap_adjacent_at(word, i), false};
    }
}

std::string swap_adjacent_at(const std::string& word, std::size_t i) {
    if (i + 1 >= word.size()) throw std::invalid_argument("swap position out of range");
    std::string out = word;
    std::swap(out[i], out[i + 1]);
    return out;
}

namespace {

// Same-row horizontal neighbors: q-w-e-r-t-y-u-i-o-p / a-s-d-f-g-h-j-k-l /
// z-x-c-v-b-n-m.
const std::array<std::vector<char>, 26> kQwertyNeighbors = [] {
    std::array<std::vector<char>, 26> table;
    const char* rows[] = {"qwertyuiop", "asdfghjkl", "zxcvbnm"};
    for (const char* row : rows) {
        for (std::size_t i = 0; row[i]; ++i) {
            std::vector<char>& neighbors = table[static_cast<std::size_t>(row[i] - 'a')];
            if (i > 0) neighbors.push_back(row[i - 1]);
            if (row[i + 1]) neighbors.push_back(row[i + 1]);
        }
    }
    return table;
}();

} // namespace

const std::vector<char>& qwerty_neighbors(char lower) {
    if (lower < 'a' || lower > 'z') {
        static const std::vector<char> empty;
        return empty;
    }
    return kQwertyNeighbors[static_cast<std::size_t>(lower - 'a')];
}

std::string keyboard_substitute_at(const std::string& word, std::size_t pos,
                                   std::size_t neighbor_index) {
    if (pos >= word.size()) throw std::invalid_argument("substitute position out of range");
    const unsigned char c = static_cast<unsigned char>(word[pos]);
    if (!std::isalpha(c)) throw std::invalid_argument("substitute position is not a letter");
    const char lower = static_cast<char>(std::tolower(c));
    const std::vector<char>& neighbors = qwerty_neighbors(lower);
    if (neighbor_index >= neighbors.size())
        throw std::invalid_argument("neighbor index out of range");
    char replacement = neighbors[neighbor_index];
    if (std::isupper(c)) replacement = static_cast<char>(std::toupper(replacement));
    std::string out = word;
    out[pos] = replacement;
    return out;
}

std::string keyboard_substitute(const std::string& word, Rng& rng) {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(word[i]);
        if (std::isalpha(c) &&
            !qwerty_neighbors(static_cast<char>(std::tolower(c))).empty())
            eligible.push_back(i);
    }
    if (eligible.empty())
        throw std::invalid_argument("keyboard_substitute needs an alphabetic character");
    const std::size_t pos = eligible[rng.uniform(eligible.size())];
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(word[pos])));
    const std::size_t neighbor = rng.uniform(qwerty_neighbors(lower).size());
    return keyboard_substitute_at(word, pos, neighbor);
}

namespace {

std::string lowercase(const std::string& s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool ascii_alpha_word(const std::string& s) {
    for (unsigned char c : s)
        if (!std::isalpha(c)) return false;
    return !s.empty();
}

bool word_eligible(const Token& tok, WordFilter filter, const Resources& resources,
                   const WordNetDb* db) {
    if (!tok.is_alpha || tok.surface.size() < 3 || !ascii_alpha_word(tok.surface))
        return false;
    switch (filter) {
        case WordFilter::any:
            return true;
        case WordFilter::content: {
            if (!db) throw ResourceError("content word filter requires a WordNet database");
            const std::string lemma = lowercase(tok.surface);
            return !db->synsets_of(lemma, Pos::noun).empty() ||
                   !db->synsets_of(lemma, Pos::adjective).empty();
        }
        case WordFilter::function:
            return resources.function_words.contains(lowercase(tok.surface));
    }
    return false;
}

} // namespace

PerturbResult perturb_pair(const NLIPair& pair, NoiseMode mode, WordFilter filter,
                           Rng& rng, const Resources& resources, const WordNetDb* db) {
    std::vector<Token> eligible;
    for (const Token& tok : tokenize(pair.hypothesis))
        if (word_eligible(tok, filter, resources, db)) eligible.push_back(tok);

    PerturbResult result;
    result.pair = pair;
    if (eligible.empty()) {
        result.skipped = true;
        result.prov = {pair.pair_id, std::string("noise mode=") + to_string(mode) +
                                         " filter=" + to_string(filter) + " skipped"};
        return result;
    }

    const Token& chosen = eligible[rng.uniform(eligible.size())];
    std::string perturbed;
    bool noop = false;
    if (mode == NoiseMode::adj_swap) {
        SwapResult swap = swap_adjacent(chosen.surface, rng);
        perturbed = std::move(swap.word);
        noop = swap.noop;
    } else {
        perturbed = keyboard_substitute(chosen.surface, rng);
    }

    result.pair.hypothesis.replace(chosen.char_start, chosen.char_end - chosen.char_start,
                                   perturbed);
    result.prov = {pair.pair_id, std::string("noise mode=") + to_string(mode) +
                                     " filter=" + to_string(filter) + " original=" +
                                     chosen.surface + " perturbed=" + perturbed +
                                     (noop ? " noop" : "")};
    return result;
}

StressSet gen_noise_set(const std::vector<NLIPair>& pairs, NoiseMode mode,
                        WordFilter filter, std::uint64_t seed,
                        const Resources& resources, const WordNetDb* db,
                        unsigned workers) {
    StressSet set;
    set.name = std::string("noise-") + to_string(mode) + "-" + to_string(filter);
    set.test_class = TestClass::noise;
    set.seed = seed;
    set.generator_version =
        generator_version(resources, db ? db->version() : std::string());
    set.pairs.resize(pairs.size());
    set.provenance.resize(pairs.size());

    parallel_for(pairs.size(), workers, [&](std::size_t i) {
        Rng rng = Rng::derive(seed, i);
        PerturbResult result = perturb_pair(pairs[i], mode, filter, rng, resources, db);
        result.pair.pair_id = pairs[i].pair_id + "-noise";
        set.pairs[i] = std::move(result.pair);
        set.provenance[i] = std::move(result.prov);
    });
    return set;
}

} // namespace nlistress
