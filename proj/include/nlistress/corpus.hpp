#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlistress {

enum class Label { entailment, neutral, contradiction };
enum class SplitTag { matched, mismatched, other };
enum class TestClass { competence, distraction, noise };

const char* to_string(Label l);
const char* to_string(SplitTag s);
const char* to_string(TestClass t);
// Case-insensitive; throws ParseError on unknown names.
Label label_from_string(std::string_view s);
SplitTag split_from_string(std::string_view s);
TestClass test_class_from_string(std::string_view s);

// One premise/hypothesis example. Pairs whose corpus record carries the
// no-consensus label "-" are never materialized as this type.
struct NLIPair {
    std::string pair_id;
    std::string premise;
    std::string hypothesis;
    Label gold_label = Label::neutral;
    std::string genre;
    SplitTag split_tag = SplitTag::other;

    bool operator==(const NLIPair&) const = default;
};

// Where a generated pair came from. source_pair_id is empty when the source
// has no corpus identity (e.g. AQuA question sentences).
struct Provenance {
    std::string source_pair_id;
    std::string perturbation;

    bool operator==(const Provenance&) const = default;
};

struct StressSet {
    std::string name;
    TestClass test_class = TestClass::competence;
    std::vector<NLIPair> pairs;
    std::vector<Provenance> provenance; // aligned with pairs by position
    std::uint64_t seed = 0;
    std::string generator_version;
};

struct Token {
    std::string surface;
    std::size_t char_start = 0; // byte offsets into the source string
    std::size_t char_end = 0;
    bool is_alpha = false;
    bool is_numeric = false;
};

struct AquaProblem {
    std::string question;
    std::vector<std::string> options;
    std::string rationale;
    char correct = 'A'; // A..E, must index an existing option
};

struct ReadStats {
    std::size_t skipped_no_consensus = 0;
};

// Newline-delimited JSON with fields sentence1, sentence2, gold_label, genre,
// pairID. Records labeled "-" are skipped and counted. Throws ParseError with
// the 1-based line number on malformed lines or missing fields.
std::vector<NLIPair> read_nli_jsonl(std::istream& in,
                                    SplitTag default_split = SplitTag::other,
                                    ReadStats* stats = nullptr);

// One JSON object per line, fixed key order, plus source_pairID/perturbation
// from the aligned provenance. Returns the number of bytes written.
std::size_t write_nli_jsonl(const StressSet& set, std::ostream& out);

// StressSet file pair: <path> holds the JSONL, <path>.meta.json the sidecar
// {name, test_class, split_tag, seed, generator_version, count}.
void write_stress_set(const StressSet& set, const std::string& path);
StressSet read_stress_set(const std::string& path);
std::string sidecar_path(const std::string& set_path);

// AQuA-RAT records: question, options, rationale, correct. Throws ParseError
// naming the offending line/record.
std::vector<AquaProblem> read_aqua(std::istream& in);

// Maximal alphabetic runs (non-ASCII bytes count as letters), digit runs with
// thousands commas and one interior decimal point, and single punctuation
// characters. Offsets are byte offsets; the token spans plus the skipped
// whitespace reconstruct the input exactly.
std::vector<Token> tokenize(std::string_view text);

// Byte ranges [begin, end) of each sentence. A sentence ends at '.', '?' or
// '!' followed by whitespace and an uppercase A-Z, unless the word ending at
// that period is a known abbreviation (Mr., Dr., e.g., ...). Inter-sentence
// whitespace belongs to no sentence.
std::vector<std::pair<std::size_t, std::size_t>> sentence_spans(std::string_view text);
std::vector<std::string> split_sentences(std::string_view text);

} // namespace nlistress
