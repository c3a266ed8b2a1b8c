#include "nlistress/tautology.hpp"

#include <stdexcept>

#include "nlistress/errors.hpp"

namespace nlistress {

const char* to_string(Target t) {
    return t == Target::premise ? "premise" : "hypothesis";
}

Target target_from_string(std::string_view s) {
    if (s == "premise") return Target::premise;
    if (s == "hypothesis") return Target::hypothesis;
    throw ParseError("unknown target \"" + std::string(s) + "\"");
}

NLIPair append_tautology(const NLIPair& pair, const std::string& taut, Target target,
                         unsigned repeat, const std::string& tag) {
    if (taut.empty()) throw std::invalid_argument("tautology must be non-empty");
    if (repeat == 0) throw std::invalid_argument("repeat must be >= 1");

    std::string suffix;
    suffix.reserve((taut.size() + 5) * repeat);
    for (unsigned i = 0; i < repeat; ++i) suffix += " and " + taut;

    NLIPair out = pair;
    std::string& sentence = target == Target::premise ? out.premise : out.hypothesis;
    if (!sentence.empty() &&
        (sentence.back() == '.' || sentence.back() == '!' || sentence.back() == '?')) {
        sentence.insert(sentence.size() - 1, suffix);
    } else {
        sentence += suffix;
    }
    out.pair_id = pair.pair_id + "-" + tag;
    return out;
}

namespace {

StressSet map_tautology(const std::vector<NLIPair>& pairs, const std::string& taut,
                        Target target, unsigned repeat, const std::string& tag,
                        const std::string& name, const Resources& resources) {
    StressSet set;
    set.name = name;
    set.test_class = TestClass::distraction;
    set.generator_version = generator_version(resources);
    set.pairs.reserve(pairs.size());
    set.provenance.reserve(pairs.size());
    const std::string perturbation = "tautology taut=\"" + taut +
                                     "\" target=" + to_string(target) +
                                     " repeat=" + std::to_string(repeat);
    for (const NLIPair& pair : pairs) {
        set.pairs.push_back(append_tautology(pair, taut, target, repeat, tag));
        set.provenance.push_back({pair.pair_id, perturbation});
    }
    return set;
}

} // namespace

StressSet gen_word_overlap(const std::vector<NLIPair>& pairs, const Resources& resources) {
    return map_tautology(pairs, "true is true", Target::hypothesis, 1, "wo",
                         "word-overlap", resources);
}

StressSet gen_negation(const std::vector<NLIPair>& pairs, const Resources& resources) {
    return map_tautology(pairs, "false is not true", Target::hypothesis, 1, "neg",
                         "negation", resources);
}

StressSet gen_length_mismatch(const std::vector<NLIPair>& pairs, const Resources& resources) {
    return map_tautology(pairs, "true is true", Target::premise, 5, "lm",
                         "length-mismatch", resources);
}

StressSet gen_custom(const std::vector<NLIPair>& pairs, const std::string& taut,
                     Target target, unsigned repeat, const Resources& resources) {
    return map_tautology(pairs, taut, target, repeat, "ct", "custom-tautology", resources);
}

} // namespace nlistress
