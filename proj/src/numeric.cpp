#include "nlistress/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "nlistress/ner.hpp"
#include "nlistress/parallel.hpp"

namespace nlistress {

std::vector<NumToken> numeric_tokens(std::string_view premise) {
    std::vector<NumToken> nums;
    for (const Token& tok : tokenize(premise)) {
        if (!tok.is_numeric) continue;
        NumToken num;
        num.surface = tok.surface;
        num.begin = tok.char_start;
        num.end = tok.char_end;
        num.grouped = tok.surface.find(',') != std::string::npos;
        num.integral = tok.surface.find('.') == std::string::npos;
        std::string digits = tok.surface;
        digits.erase(std::remove(digits.begin(), digits.end(), ','), digits.end());
        num.value = std::strtod(digits.c_str(), nullptr);
        if (!std::isfinite(num.value)) continue;
        nums.push_back(std::move(num));
    }
    return nums;
}

bool numeric_answer(const std::string& option_text) {
    std::string s = option_text;
    // option marker: leading "A)" / "b ." / "C :"
    {
        std::size_t i = 0;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])) &&
            std::toupper(static_cast<unsigned char>(s[i])) >= 'A' &&
            std::toupper(static_cast<unsigned char>(s[i])) <= 'E') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && (s[j] == ')' || s[j] == '.' || s[j] == ':'))
                s = s.substr(j + 1);
        }
    }
    // strip currency markers and grouping
    for (const char* sym : {"$", "\xC2\xA3", "\xE2\x82\xAC", "\xC2\xA5", "Rs.", "Rs"}) {
        std::size_t at;
        while ((at = s.find(sym)) != std::string::npos) s.erase(at, std::string(sym).size());
    }
    s.erase(std::remove(s.begin(), s.end(), ','), s.end());

    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    // anything left must be unit text with no further digits
    for (; i < s.size(); ++i)
        if (std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::vector<std::string> extract_premises(const std::vector<AquaProblem>& problems,
                                          const Resources& resources) {
    std::vector<std::string> premises;
    std::unordered_set<std::string> seen;
    for (const AquaProblem& problem : problems) {
        const std::size_t correct_idx = static_cast<std::size_t>(problem.correct - 'A');
        if (!numeric_answer(problem.options[correct_idx])) continue;
        if (split_sentences(problem.rationale).size() > 3) continue;
        for (const std::string& sentence : split_sentences(problem.question)) {
            const std::vector<Token> tokens = tokenize(sentence);
            const bool has_number =
                std::any_of(tokens.begin(), tokens.end(),
                            [](const Token& t) { return t.is_numeric; });
            if (!has_number) continue;
            if (!contains_named_entity(tokens, resources)) continue;
            if (seen.insert(sentence).second) premises.push_back(sentence);
        }
    }
    return premises;
}

std::string format_value(long long value, bool grouped) {
    std::string digits = std::to_string(value);
    if (!grouped) return digits;
    std::string out;
    const std::size_t start = digits[0] == '-' ? 1 : 0;
    const std::size_t len = digits.size() - start;
    out.reserve(digits.size() + len / 3);
    out.append(digits, 0, start);
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0 && (len - i) % 3 == 0) out.push_back(',');
        out.push_back(digits[start + i]);
    }
    return out;
}

long long sample_new_value(double value, Rng& rng) {
    bool above = rng.coin();
    for (int attempt = 0; attempt < 16; ++attempt) {
        if (attempt == 8) above = !above; // the other direction always works
        const double factor = rng.uniform_real(1.5, 3.0);
        const double raw = above ? value * factor : value / factor;
        long long candidate = std::llround(raw);
        if (candidate < 1) candidate = 1;
        if (static_cast<double>(candidate) != value) return candidate;
    }
    return std::llround(value) + 1; // unreachable for finite corpus values
}

namespace {

const NumToken& checked_token(const std::vector<NumToken>& nums, std::size_t index) {
    if (nums.empty()) throw std::invalid_argument("not a numeric premise");
    if (index >= nums.size())
        throw std::invalid_argument("numeric token index out of range");
    return nums[index];
}

NLIPair with_replacement(const std::string& premise, const NumToken& num,
                         const std::string& replacement, Label label) {
    NLIPair pair;
    pair.premise = premise;
    pair.hypothesis = premise;
    pair.hypothesis.replace(num.begin, num.end - num.begin, replacement);
    pair.gold_label = label;
    pair.genre = "aqua";
    pair.split_tag = SplitTag::other;
    return pair;
}

} // namespace

NLIPair entailed_with(const std::string& premise, std::size_t token_index,
                      long long new_value) {
    const std::vector<NumToken> nums = numeric_tokens(premise);
    const NumToken& num = checked_token(nums, token_index);
    if (static_cast<double>(new_value) == num.value)
        throw std::invalid_argument("new value must differ from the original");
    // higher bound entails "less than", lower bound "more than"
    const char* phrase = static_cast<double>(new_value) > num.value ? "less than " : "more than ";
    return with_replacement(premise, num, phrase + format_value(new_value, num.grouped),
                            Label::entailment);
}

NLIPair contradiction_change_with(const std::string& premise, std::size_t token_index,
                                  long long new_value) {
    const std::vector<NumToken> nums = numeric_tokens(premise);
    const NumToken& num = checked_token(nums, token_index);
    if (static_cast<double>(new_value) == num.value)
        throw std::invalid_argument("new value must differ from the original");
    return with_replacement(premise, num, format_value(new_value, num.grouped),
                            Label::contradiction);
}

NLIPair contradiction_prefix_with(const std::string& premise, std::size_t token_index,
                                  bool less_than) {
    const std::vector<NumToken> nums = numeric_tokens(premise);
    const NumToken& num = checked_token(nums, token_index);
    // exact-quantity reading: having exactly v excludes "less than v"
    const char* phrase = less_than ? "less than " : "more than ";
    return with_replacement(premise, num, phrase + num.surface, Label::contradiction);
}

NLIPair gen_entailed(const std::string& premise, Rng& rng) {
    const std::vector<NumToken> nums = numeric_tokens(premise);
    if (nums.empty()) throw std::invalid_argument("not a numeric premise");
    const std::size_t index = rng.uniform(nums.size());
    return entailed_with(premise, index, sample_new_value(nums[index].value, rng));
}

NLIPair gen_contradiction(const std::string& premise, Rng& rng) {
    const std::vector<NumToken> nums = numeric_tokens(premise);
    if (nums.empty()) throw std::invalid_argument("not a numeric premise");
    if (rng.coin()) {
        const std::size_t index = rng.uniform(nums.size());
        return contradiction_change_with(premise, index,
                                         sample_new_value(nums[index].value, rng));
    }
    const std::size_t index = rng.uniform(nums.size());
    return contradiction_prefix_with(premise, index, rng.coin());
}

NLIPair gen_neutral(const NLIPair& entailed) {
    NLIPair pair = entailed;
    std::swap(pair.premise, pair.hypothesis);
    pair.gold_label = Label::neutral;
    return pair;
}

StressSet generate_numeric_set(const std::vector<AquaProblem>& problems,
                               const Resources& resources, std::uint64_t seed,
                               unsigned workers) {
    const std::vector<std::string> premises = extract_premises(problems, resources);

    struct Triple {
        NLIPair entailed, contradiction, neutral;
    };
    std::vector<Triple> triples(premises.size());
    parallel_for(premises.size(), workers, [&](std::size_t i) {
        Rng rng = Rng::derive(seed, i);
        Triple& t = triples[i];
        t.entailed = gen_entailed(premises[i], rng);
        t.contradiction = gen_contradiction(premises[i], rng);
        t.neutral = gen_neutral(t.entailed);
    });

    StressSet set;
    set.name = "numeric";
    set.test_class = TestClass::competence;
    set.seed = seed;
    set.generator_version = generator_version(resources);
    set.pairs.reserve(premises.size() * 3);
    for (std::size_t i = 0; i < triples.size(); ++i) {
        auto push = [&](NLIPair pair, const char* kind, const std::string& prov) {
            char id[32];
            std::snprintf(id, sizeof(id), "num-%06zu-%s", i, kind);
            pair.pair_id = id;
            set.pairs.push_back(std::move(pair));
            set.provenance.push_back({"", prov});
        };
        const std::string index = std::to_string(i);
        push(std::move(triples[i].entailed), "e", "numeric rule=entailment premise_index=" + index);
        push(std::move(triples[i].contradiction), "c", "numeric rule=contradiction premise_index=" + index);
        char entailed_id[32];
        std::snprintf(entailed_id, sizeof(entailed_id), "num-%06zu-e", i);
        push(std::move(triples[i].neutral), "n",
             "numeric rule=neutral flip_of=" + std::string(entailed_id));
    }
    return set;
}

} // namespace nlistress
