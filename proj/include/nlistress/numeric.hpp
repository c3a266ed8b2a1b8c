#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"
#include "nlistress/rng.hpp"

namespace nlistress {

// One numeric quantity in a premise. Surface keeps the original grouping
// ("200,000"); value is the parsed decimal.
struct NumToken {
    double value = 0.0;
    bool integral = true;  // surface has no decimal point
    bool grouped = false;  // surface contains thousands commas
    std::string surface;
    std::size_t begin = 0; // byte span in the premise
    std::size_t end = 0;
};

std::vector<NumToken> numeric_tokens(std::string_view premise);

// AQuA filter pipeline: keep problems with a numeric correct answer and a
// rationale of at most 3 sentences; split questions into sentences; keep
// sentences with a number and a named entity; dedup exact strings in order.
std::vector<std::string> extract_premises(const std::vector<AquaProblem>& problems,
                                          const Resources& resources);

// True when the answer-option text is a plain number after stripping the
// option marker ("B)"), currency symbols, commas and trailing unit words.
bool numeric_answer(const std::string& option_text);

// Renders a sampled value in the style of the token it replaces (thousands
// commas iff the original surface had them).
std::string format_value(long long value, bool grouped);

// New value for a quantity: direction by fair coin, magnitude a factor in
// [1.5, 3) applied above (v*f) or below (v/f), rounded, clamped to >= 1 and
// forced != v (bounded retries, then the other direction).
long long sample_new_value(double value, Rng& rng);

// Deterministic cores (test hooks); `gen_*` wrappers sample their choices.
NLIPair entailed_with(const std::string& premise, std::size_t token_index,
                      long long new_value);
NLIPair contradiction_change_with(const std::string& premise, std::size_t token_index,
                                  long long new_value);
NLIPair contradiction_prefix_with(const std::string& premise, std::size_t token_index,
                                  bool less_than);

// Label rules. Throw std::invalid_argument("not a numeric premise") when the
// premise has no numeric token.
NLIPair gen_entailed(const std::string& premise, Rng& rng);
NLIPair gen_contradiction(const std::string& premise, Rng& rng);
// Flips an entailed pair; the weaker bound no longer pins the exact value.
NLIPair gen_neutral(const NLIPair& entailed);

// Full pipeline: one entailed + one contradiction + one neutral pair per
// extracted premise, split_tag other, test_class competence.
StressSet generate_numeric_set(const std::vector<AquaProblem>& problems,
                               const Resources& resources, std::uint64_t seed,
                               unsigned workers = 1);

} // namespace nlistress
