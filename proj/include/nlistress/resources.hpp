#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>

namespace nlistress {

// Closed-class word list used by the noise-test function-word filter.
// File format: one word per line with #conjunctions / #pronouns / #articles
// section markers.
struct FunctionWords {
    std::unordered_set<std::string> conjunctions;
    std::unordered_set<std::string> pronouns;
    std::unordered_set<std::string> articles;

    bool contains(const std::string& lower_word) const {
        return conjunctions.count(lower_word) != 0 ||
               pronouns.count(lower_word) != 0 || articles.count(lower_word) != 0;
    }
};

// Bundled word lists plus a fingerprint of their bytes. The fingerprint goes
// into generator_version so set provenance pins the exact resources used.
struct Resources {
    std::unordered_set<std::string> stopwords;
    std::unordered_set<std::string> gazetteer;
    FunctionWords function_words;
    std::string fingerprint;
};

// Loads stopwords.txt, gazetteer.txt and function_words.txt from `dir`.
// Lists are one lowercase entry per line, UTF-8, '#' comments and blank lines
// ignored. Throws ResourceError naming any missing file.
Resources load_resources(const std::string& dir);

// --resources flag > NLI_STRESS_RESOURCES env var > compiled-in data dir.
std::string default_resource_dir();

std::uint64_t fnv1a64(const std::string& bytes);

// Tool version plus algorithm variant tags and resource hashes; recorded in
// every StressSet. `wordnet_version` is empty for generators that load no
// WordNet database.
std::string generator_version(const Resources& resources,
                              const std::string& wordnet_version = "");

} // namespace nlistress
