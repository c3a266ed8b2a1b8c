#include "nlistress/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "nlistress/errors.hpp"

namespace nlistress {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Label l) {
    switch (l) {
        case Label::entailment: return "entailment";
        case Label::neutral: return "neutral";
        case Label::contradiction: return "contradiction";
    }
    return "?";
}

const char* to_string(SplitTag s) {
    switch (s) {
        case SplitTag::matched: return "matched";
        case SplitTag::mismatched: return "mismatched";
        case SplitTag::other: return "other";
    }
    return "?";
}

const char* to_string(TestClass t) {
    switch (t) {
        case TestClass::competence: return "competence";
        case TestClass::distraction: return "distraction";
        case TestClass::noise: return "noise";
    }
    return "?";
}

namespace {

std::string lowercase_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

Label label_from_string(std::string_view s) {
    const std::string l = lowercase_ascii(s);
    if (l == "entailment") return Label::entailment;
    if (l == "neutral") return Label::neutral;
    if (l == "contradiction") return Label::contradiction;
    throw ParseError("unknown label \"" + std::string(s) + "\"");
}

SplitTag split_from_string(std::string_view s) {
    const std::string l = lowercase_ascii(s);
    if (l == "matched") return SplitTag::matched;
    if (l == "mismatched") return SplitTag::mismatched;
    if (l == "other") return SplitTag::other;
    throw ParseError("unknown split tag \"" + std::string(s) + "\"");
}

TestClass test_class_from_string(std::string_view s) {
    const std::string l = lowercase_ascii(s);
    if (l == "competence") return TestClass::competence;
    if (l == "distraction") return TestClass::distraction;
    if (l == "noise") return TestClass::noise;
    throw ParseError("unknown test class \"" + std::string(s) + "\"");
}

namespace {

std::string require_string_field(const ordered_json& record, const char* field,
                                 std::size_t line_no) {
    auto it = record.find(field);
    if (it == record.end())
        throw ParseError("line " + std::to_string(line_no) + ": missing field \"" +
                         field + "\"");
    if (!it->is_string())
        throw ParseError("line " + std::to_string(line_no) + ": field \"" + field +
                         "\" is not a string");
    return it->get<std::string>();
}

ordered_json parse_line(const std::string& line, std::size_t line_no) {
    try {
        return ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed JSON");
    }
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

} // namespace

std::vector<NLIPair> read_nli_jsonl(std::istream& in, SplitTag default_split,
                                    ReadStats* stats) {
    std::vector<NLIPair> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const ordered_json record = parse_line(line, line_no);
        const std::string gold = require_string_field(record, "gold_label", line_no);
        if (gold == "-") {
            if (stats) ++stats->skipped_no_consensus;
            // still validate the remaining required fields exist
            require_string_field(record, "sentence1", line_no);
            require_string_field(record, "sentence2", line_no);
            continue;
        }
        NLIPair pair;
        pair.premise = require_string_field(record, "sentence1", line_no);
        pair.hypothesis = require_string_field(record, "sentence2", line_no);
        try {
            pair.gold_label = label_from_string(gold);
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": unknown gold_label \"" + gold + "\"");
        }
        pair.genre = require_string_field(record, "genre", line_no);
        pair.pair_id = require_string_field(record, "pairID", line_no);
        pair.split_tag = default_split;
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

std::size_t write_nli_jsonl(const StressSet& set, std::ostream& out) {
    std::size_t bytes = 0;
    for (std::size_t i = 0; i < set.pairs.size(); ++i) {
        const NLIPair& pair = set.pairs[i];
        ordered_json record;
        record["pairID"] = pair.pair_id;
        record["sentence1"] = pair.premise;
        record["sentence2"] = pair.hypothesis;
        record["gold_label"] = to_string(pair.gold_label);
        record["genre"] = pair.genre;
        if (i < set.provenance.size()) {
            const Provenance& prov = set.provenance[i];
            if (!prov.source_pair_id.empty())
                record["source_pairID"] = prov.source_pair_id;
            record["perturbation"] = prov.perturbation;
        }
        const std::string line = record.dump();
        out << line << '\n';
        bytes += line.size() + 1;
    }
    if (!out) throw ParseError("write failed");
    return bytes;
}

std::string sidecar_path(const std::string& set_path) {
    return set_path + ".meta.json";
}

void write_stress_set(const StressSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ResourceError("cannot open " + path + " for writing");
    write_nli_jsonl(set, out);
    out.close();
    if (!out) throw ResourceError("write failed: " + path);

    // uniform split of the set, "mixed" if generators ever produce one
    std::string split = "other";
    if (!set.pairs.empty()) {
        split = to_string(set.pairs.front().split_tag);
        for (const NLIPair& p : set.pairs)
            if (to_string(p.split_tag) != split) { split = "mixed"; break; }
    }

    ordered_json meta;
    meta["name"] = set.name;
    meta["test_class"] = to_string(set.test_class);
    meta["split_tag"] = split;
    meta["seed"] = set.seed;
    meta["generator_version"] = set.generator_version;
    meta["count"] = set.pairs.size();
    std::ofstream meta_out(sidecar_path(path), std::ios::binary);
    if (!meta_out) throw ResourceError("cannot open " + sidecar_path(path));
    meta_out << meta.dump(2) << '\n';
}

StressSet read_stress_set(const std::string& path) {
    StressSet set;
    SplitTag split = SplitTag::other;

    std::ifstream meta_in(sidecar_path(path), std::ios::binary);
    if (meta_in) {
        ordered_json meta;
        try {
            meta_in >> meta;
        } catch (const nlohmann::json::parse_error&) {
            throw ParseError("malformed sidecar: " + sidecar_path(path));
        }
        if (meta.contains("name")) set.name = meta["name"].get<std::string>();
        if (meta.contains("test_class"))
            set.test_class = test_class_from_string(meta["test_class"].get<std::string>());
        if (meta.contains("seed")) set.seed = meta["seed"].get<std::uint64_t>();
        if (meta.contains("generator_version"))
            set.generator_version = meta["generator_version"].get<std::string>();
        if (meta.contains("split_tag")) {
            const std::string s = meta["split_tag"].get<std::string>();
            if (s != "mixed") split = split_from_string(s);
        }
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("cannot open " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const ordered_json record = parse_line(line, line_no);
        NLIPair pair;
        pair.pair_id = require_string_field(record, "pairID", line_no);
        pair.premise = require_string_field(record, "sentence1", line_no);
        pair.hypothesis = require_string_field(record, "sentence2", line_no);
        pair.gold_label =
            label_from_string(require_string_field(record, "gold_label", line_no));
        pair.genre = require_string_field(record, "genre", line_no);
        pair.split_tag = split;
        Provenance prov;
        if (record.contains("source_pairID"))
            prov.source_pair_id = record["source_pairID"].get<std::string>();
        if (record.contains("perturbation"))
            prov.perturbation = record["perturbation"].get<std::string>();
        set.pairs.push_back(std::move(pair));
        set.provenance.push_back(std::move(prov));
    }
    return set;
}

std::vector<AquaProblem> read_aqua(std::istream& in) {
    std::vector<AquaProblem> problems;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const ordered_json record = parse_line(line, line_no);
        AquaProblem problem;
        problem.question = require_string_field(record, "question", line_no);
        problem.rationale = require_string_field(record, "rationale", line_no);
        auto options_it = record.find("options");
        if (options_it == record.end())
            throw ParseError("line " + std::to_string(line_no) +
                             ": missing field \"options\"");
        if (!options_it->is_array())
            throw ParseError("line " + std::to_string(line_no) +
                             ": field \"options\" is not an array");
        for (const auto& opt : *options_it) {
            if (!opt.is_string())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": non-string option");
            problem.options.push_back(opt.get<std::string>());
        }
        const std::string correct = require_string_field(record, "correct", line_no);
        const std::size_t record_index = problems.size();
        if (correct.size() != 1 || correct[0] < 'A' || correct[0] > 'E')
            throw ParseError("record " + std::to_string(record_index) +
                             ": correct option \"" + correct + "\" is not A-E");
        problem.correct = correct[0];
        if (static_cast<std::size_t>(problem.correct - 'A') >= problem.options.size())
            throw ParseError("record " + std::to_string(record_index) +
                             ": correct option \"" + correct +
                             "\" does not index an option");
        if (problem.question.empty())
            throw ParseError("record " + std::to_string(record_index) +
                             ": empty question");
        problems.push_back(std::move(problem));
    }
    return problems;
}

namespace {

inline bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }
inline bool is_digit_byte(unsigned char c) { return c >= '0' && c <= '9'; }
// Non-ASCII bytes are treated as letters so multibyte words stay one token.
inline bool is_word_byte(unsigned char c) {
    return std::isalpha(c) != 0 || c >= 0x80;
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        Token tok;
        tok.char_start = i;
        if (is_word_byte(c)) {
            while (i < n && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
            tok.is_alpha = true;
        } else if (is_digit_byte(c)) {
            bool decimal_seen = false;
            while (i < n && is_digit_byte(static_cast<unsigned char>(text[i]))) ++i;
            while (i + 1 < n) {
                const char sep = text[i];
                const bool digit_next = is_digit_byte(static_cast<unsigned char>(text[i + 1]));
                if (sep == ',' && digit_next) {
                    ++i;
                } else if (sep == '.' && digit_next && !decimal_seen) {
                    decimal_seen = true;
                    ++i;
                } else {
                    break;
                }
                while (i < n && is_digit_byte(static_cast<unsigned char>(text[i]))) ++i;
            }
            tok.is_numeric = true;
        } else {
            ++i; // single punctuation character
        }
        tok.char_end = i;
        tok.surface = std::string(text.substr(tok.char_start, tok.char_end - tok.char_start));
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

namespace {

// Small bundled abbreviation list; matched case-insensitively against the
// whitespace-delimited word ending at the candidate period (dots included).
const std::array<const char*, 44> kAbbreviations = {
    "mr.",   "mrs.",  "ms.",   "dr.",   "prof.", "st.",   "jr.",   "sr.",
    "vs.",   "etc.",  "e.g.",  "i.e.",  "cf.",   "a.m.",  "p.m.",  "u.s.",
    "u.k.",  "inc.",  "ltd.",  "co.",   "corp.", "no.",   "fig.",  "gen.",
    "col.",  "sgt.",  "capt.", "lt.",   "rev.",  "hon.",  "jan.",  "feb.",
    "mar.",  "apr.",  "jun.",  "jul.",  "aug.",  "sep.",  "sept.", "oct.",
    "nov.",  "dec.",  "approx.", "dept.",
};

bool is_abbreviation(std::string_view text, std::size_t period_pos) {
    std::size_t start = period_pos;
    while (start > 0 && !is_space_byte(static_cast<unsigned char>(text[start - 1])))
        --start;
    std::string word(text.substr(start, period_pos - start + 1));
    for (char& ch : word)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const char* abbr : kAbbreviations)
        if (word == abbr) return true;
    return false;
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> sentence_spans(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    const std::size_t n = text.size();
    std::size_t start = 0;
    // skip leading whitespace
    while (start < n && is_space_byte(static_cast<unsigned char>(text[start]))) ++start;
    if (start >= n) return spans;

    std::size_t i = start;
    while (i < n) {
        const char c = text[i];
        if (c == '.' || c == '?' || c == '!') {
            std::size_t j = i + 1;
            while (j < n && is_space_byte(static_cast<unsigned char>(text[j]))) ++j;
            const bool followed_by_upper = j < n && j > i + 1 && text[j] >= 'A' && text[j] <= 'Z';
            if (followed_by_upper && !(c == '.' && is_abbreviation(text, i))) {
                spans.emplace_back(start, i + 1);
                start = j;
                i = j;
                continue;
            }
        }
        ++i;
    }
    // final sentence, trailing whitespace excluded
    std::size_t end = n;
    while (end > start && is_space_byte(static_cast<unsigned char>(text[end - 1]))) --end;
    if (end > start) spans.emplace_back(start, end);
    return spans;
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    for (const auto& [begin, end] : sentence_spans(text))
        sentences.emplace_back(text.substr(begin, end - begin));
    return sentences;
}

} // namespace nlistress
