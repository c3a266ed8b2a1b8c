#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlistress/corpus.hpp"

namespace nlistress {

// One external model prediction, keyed by pair_id.
struct PredictionRecord {
    std::string pair_id;
    Label predicted = Label::neutral;

    bool operator==(const PredictionRecord&) const = default;
};

struct SplitStats {
    std::size_t n_correct = 0;
    std::size_t n_scored = 0;
    std::size_t n_missing = 0;

    double accuracy() const {
        return n_scored == 0 ? 0.0 : static_cast<double>(n_correct) / static_cast<double>(n_scored);
    }
    bool operator==(const SplitStats&) const = default;
};

// Error-type shares: false-neutral over all errors, and C-E / C-N over
// gold-contradiction errors (absent when no gold-contradiction error exists).
struct ErrorProportions {
    double false_neutral_pct = 0.0;
    std::optional<double> ce_pct;
    std::optional<double> cn_pct;

    bool operator==(const ErrorProportions&) const = default;
};

struct EvalReport {
    std::string set_name;
    std::map<SplitTag, SplitStats> accuracy_by_split;
    // confusion[gold][predicted], label order entailment/neutral/contradiction
    std::array<std::array<std::size_t, 3>, 3> confusion{};
    std::size_t n_scored = 0;
    std::size_t n_missing = 0;
    std::optional<ErrorProportions> error_proportions;

    bool operator==(const EvalReport&) const = default;
};

// Predictions file: TSV "pair_id<TAB>label", '#' comments and blank lines
// ignored, labels case-insensitive.
std::vector<PredictionRecord> read_predictions(std::istream& in);
void write_predictions(const std::vector<PredictionRecord>& records, std::ostream& out);

// Stress-test accuracy: the fraction of pairs whose prediction matches the
// gold label, per split. Duplicate pair_ids error; predictions that cover
// pairs outside the set are ignored. A missing prediction errors in strict
// mode (StrictMissingError naming the first missing id) and is otherwise
// counted in n_missing and excluded from the denominator.
EvalReport score(const StressSet& set, const std::vector<PredictionRecord>& predictions,
                 bool strict = false);

// Derives error-type shares from the confusion matrix. Throws
// std::invalid_argument("no errors to decompose") when the report has none.
ErrorProportions error_breakdown(const EvalReport& report);

enum class BaselineStrategy { majority, uniform_random, overlap_heuristic };
BaselineStrategy baseline_from_string(std::string_view s);
const char* to_string(BaselineStrategy s);

// Reference predictors for exercising the harness without an external model.
// majority: most frequent gold label (ties prefer entailment, then neutral);
// uniform_random: per-pair derived streams under `seed`; overlap_heuristic:
// contradiction when the hypothesis contains not/no/never, else entailment
// when Jaccard token overlap >= threshold, else neutral.
std::vector<PredictionRecord> baseline_predict(const std::vector<NLIPair>& pairs,
                                               BaselineStrategy strategy,
                                               std::uint64_t seed = 0,
                                               double threshold = 0.5);

enum class ReportFormat { tsv, json, markdown };
ReportFormat report_format_from_string(std::string_view s);

// tsv: set_name, split, n_scored, n_missing, accuracy, false_neutral_pct,
// ce_pct, cn_pct (one row per split present); markdown: the same as a table;
// json: mirrors EvalReport and round-trips via parse_report_json. Accuracy
// prints with 4 decimals, percentages with 1.
std::string render_report(const EvalReport& report, ReportFormat format);
EvalReport parse_report_json(const std::string& text);

} // namespace nlistress
