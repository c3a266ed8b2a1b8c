#include "nlistress/eval.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "nlistress/errors.hpp"
#include "nlistress/rng.hpp"

namespace nlistress {

using ordered_json = nlohmann::ordered_json;

BaselineStrategy baseline_from_string(std::string_view s) {
    if (s == "majority") return BaselineStrategy::majority;
    if (s == "uniform-random" || s == "uniform_random") return BaselineStrategy::uniform_random;
    if (s == "overlap-heuristic" || s == "overlap_heuristic")
        return BaselineStrategy::overlap_heuristic;
    throw ParseError("unknown baseline strategy \"" + std::string(s) + "\"");
}

const char* to_string(BaselineStrategy s) {
    switch (s) {
        case BaselineStrategy::majority: return "majority";
        case BaselineStrategy::uniform_random: return "uniform-random";
        case BaselineStrategy::overlap_heuristic: return "overlap-heuristic";
    }
    return "?";
}

ReportFormat report_format_from_string(std::string_view s) {
    if (s == "tsv") return ReportFormat::tsv;
    if (s == "json") return ReportFormat::json;
    if (s == "markdown" || s == "md") return ReportFormat::markdown;
    throw ParseError("unknown report format \"" + std::string(s) + "\"");
}

std::vector<PredictionRecord> read_predictions(std::istream& in) {
    std::vector<PredictionRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        if (start >= line.size() || line[start] == '#') continue;
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos)
            throw ParseError("predictions line " + std::to_string(line_no) +
                             ": expected pair_id<TAB>label");
        PredictionRecord record;
        record.pair_id = line.substr(start, tab - start);
        std::string label = line.substr(tab + 1);
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
            label.pop_back();
        try {
            record.predicted = label_from_string(label);
        } catch (const ParseError&) {
            throw ParseError("predictions line " + std::to_string(line_no) +
                             ": unknown label \"" + label + "\"");
        }
        if (record.pair_id.empty())
            throw ParseError("predictions line " + std::to_string(line_no) +
                             ": empty pair_id");
        records.push_back(std::move(record));
    }
    return records;
}

void write_predictions(const std::vector<PredictionRecord>& records, std::ostream& out) {
    for (const PredictionRecord& record : records)
        out << record.pair_id << '\t' << to_string(record.predicted) << '\n';
}

EvalReport score(const StressSet& set, const std::vector<PredictionRecord>& predictions,
                 bool strict) {
    std::unordered_map<std::string, Label> by_id;
    by_id.reserve(predictions.size());
    for (const PredictionRecord& record : predictions) {
        if (!by_id.emplace(record.pair_id, record.predicted).second)
            throw ParseError("duplicate prediction for pair_id \"" + record.pair_id + "\"");
    }

    EvalReport report;
    report.set_name = set.name;
    for (const NLIPair& pair : set.pairs) {
        auto it = by_id.find(pair.pair_id);
        SplitStats& stats = report.accuracy_by_split[pair.split_tag];
        if (it == by_id.end()) {
            if (strict)
                throw StrictMissingError("missing prediction for pair_id \"" +
                                             pair.pair_id + "\"",
                                         pair.pair_id);
            ++stats.n_missing;
            ++report.n_missing;
            continue;
        }
        ++stats.n_scored;
        ++report.n_scored;
        if (it->second == pair.gold_label) ++stats.n_correct;
        ++report.confusion[static_cast<std::size_t>(pair.gold_label)]
                          [static_cast<std::size_t>(it->second)];
    }
    return report;
}

ErrorProportions error_breakdown(const EvalReport& report) {
    std::size_t errors = 0;
    std::size_t false_neutral = 0;
    for (std::size_t gold = 0; gold < 3; ++gold) {
        for (std::size_t pred = 0; pred < 3; ++pred) {
            if (gold == pred) continue;
            errors += report.confusion[gold][pred];
            if (pred == static_cast<std::size_t>(Label::neutral))
                false_neutral += report.confusion[gold][pred];
        }
    }
    if (errors == 0) throw std::invalid_argument("no errors to decompose");

    ErrorProportions proportions;
    proportions.false_neutral_pct =
        100.0 * static_cast<double>(false_neutral) / static_cast<double>(errors);

    const std::size_t gold_c = static_cast<std::size_t>(Label::contradiction);
    const std::size_t ce = report.confusion[gold_c][static_cast<std::size_t>(Label::entailment)];
    const std::size_t cn = report.confusion[gold_c][static_cast<std::size_t>(Label::neutral)];
    if (ce + cn > 0) {
        // gold-contradiction errors are exactly C-E + C-N, so the complement
        // form keeps ce_pct + cn_pct == 100 exact in floating point
        proportions.ce_pct = 100.0 * static_cast<double>(ce) / static_cast<double>(ce + cn);
        proportions.cn_pct = 100.0 - *proportions.ce_pct;
    }
    return proportions;
}

namespace {

bool hypothesis_has_negation(const NLIPair& pair) {
    for (const Token& tok : tokenize(pair.hypothesis)) {
        if (!tok.is_alpha) continue;
        std::string word = tok.surface;
        for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (word == "not" || word == "no" || word == "never") return true;
    }
    return false;
}

std::unordered_set<std::string> alpha_token_set(const std::string& text) {
    std::unordered_set<std::string> words;
    for (const Token& tok : tokenize(text)) {
        if (!tok.is_alpha) continue;
        std::string word = tok.surface;
        for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        words.insert(std::move(word));
    }
    return words;
}

double jaccard(const std::unordered_set<std::string>& a,
               const std::unordered_set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t intersection = 0;
    for (const std::string& w : a) intersection += b.count(w);
    const std::size_t union_size = a.size() + b.size() - intersection;
    return union_size == 0 ? 1.0
                           : static_cast<double>(intersection) / static_cast<double>(union_size);
}

} // namespace

std::vector<PredictionRecord> baseline_predict(const std::vector<NLIPair>& pairs,
                                               BaselineStrategy strategy,
                                               std::uint64_t seed, double threshold) {
    std::vector<PredictionRecord> records;
    records.reserve(pairs.size());

    switch (strategy) {
        case BaselineStrategy::majority: {
            std::size_t counts[3] = {0, 0, 0};
            for (const NLIPair& pair : pairs)
                ++counts[static_cast<std::size_t>(pair.gold_label)];
            // ties resolve in label order: entailment, neutral, contradiction
            Label majority = Label::entailment;
            for (std::size_t i = 1; i < 3; ++i)
                if (counts[i] > counts[static_cast<std::size_t>(majority)])
                    majority = static_cast<Label>(i);
            for (const NLIPair& pair : pairs) records.push_back({pair.pair_id, majority});
            break;
        }
        case BaselineStrategy::uniform_random: {
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                Rng rng = Rng::derive(seed, i);
                records.push_back({pairs[i].pair_id, static_cast<Label>(rng.uniform(3))});
            }
            break;
        }
        case BaselineStrategy::overlap_heuristic: {
            if (threshold < 0.0 || threshold > 1.0)
                throw std::invalid_argument("overlap threshold must be in [0, 1]");
            for (const NLIPair& pair : pairs) {
                Label label;
                if (hypothesis_has_negation(pair)) {
                    label = Label::contradiction;
                } else if (jaccard(alpha_token_set(pair.premise),
                                   alpha_token_set(pair.hypothesis)) >= threshold) {
                    label = Label::entailment;
                } else {
                    label = Label::neutral;
                }
                records.push_back({pair.pair_id, label});
            }
            break;
        }
    }
    return records;
}

namespace {

std::string format_accuracy(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string format_pct(const std::optional<double>& value) {
    if (!value) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", *value);
    return buf;
}

const SplitTag kSplitOrder[] = {SplitTag::matched, SplitTag::mismatched, SplitTag::other};

} // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
    const std::optional<ErrorProportions>& props = report.error_proportions;
    const std::optional<double> false_neutral =
        props ? std::optional<double>(props->false_neutral_pct) : std::nullopt;
    const std::optional<double> ce = props ? props->ce_pct : std::nullopt;
    const std::optional<double> cn = props ? props->cn_pct : std::nullopt;

    if (format == ReportFormat::tsv || format == ReportFormat::markdown) {
        const bool md = format == ReportFormat::markdown;
        std::string out;
        if (md) {
            out += "| set | split | n_scored | n_missing | accuracy | false_neutral% | C-E% | C-N% |\n";
            out += "|---|---|---|---|---|---|---|---|\n";
        } else {
            out += "set_name\tsplit\tn_scored\tn_missing\taccuracy\tfalse_neutral_pct\tce_pct\tcn_pct\n";
        }
        for (SplitTag split : kSplitOrder) {
            auto it = report.accuracy_by_split.find(split);
            if (it == report.accuracy_by_split.end()) continue;
            const SplitStats& stats = it->second;
            const std::string fields[] = {
                report.set_name,
                to_string(split),
                std::to_string(stats.n_scored),
                std::to_string(stats.n_missing),
                format_accuracy(stats.accuracy()),
                format_pct(false_neutral),
                format_pct(ce),
                format_pct(cn),
            };
            if (md) {
                out += "|";
                for (const std::string& f : fields) out += " " + f + " |";
                out += "\n";
            } else {
                for (std::size_t i = 0; i < 8; ++i) {
                    out += fields[i];
                    out += i + 1 < 8 ? '\t' : '\n';
                }
            }
        }
        return out;
    }

    ordered_json doc;
    doc["set_name"] = report.set_name;
    ordered_json splits;
    for (SplitTag split : kSplitOrder) {
        auto it = report.accuracy_by_split.find(split);
        if (it == report.accuracy_by_split.end()) continue;
        ordered_json entry;
        entry["n_correct"] = it->second.n_correct;
        entry["n_scored"] = it->second.n_scored;
        entry["n_missing"] = it->second.n_missing;
        entry["accuracy"] = it->second.accuracy();
        splits[to_string(split)] = entry;
    }
    doc["accuracy_by_split"] = splits;
    doc["confusion"] = report.confusion;
    doc["n_scored"] = report.n_scored;
    doc["n_missing"] = report.n_missing;
    if (props) {
        ordered_json p;
        p["false_neutral_pct"] = props->false_neutral_pct;
        if (props->ce_pct) p["ce_pct"] = *props->ce_pct;
        if (props->cn_pct) p["cn_pct"] = *props->cn_pct;
        doc["error_proportions"] = p;
    }
    return doc.dump(2) + "\n";
}

EvalReport parse_report_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw ParseError("malformed report JSON");
    }
    EvalReport report;
    report.set_name = doc.at("set_name").get<std::string>();
    for (const auto& [split_name, entry] : doc.at("accuracy_by_split").items()) {
        SplitStats stats;
        stats.n_correct = entry.at("n_correct").get<std::size_t>();
        stats.n_scored = entry.at("n_scored").get<std::size_t>();
        stats.n_missing = entry.at("n_missing").get<std::size_t>();
        report.accuracy_by_split[split_from_string(split_name)] = stats;
    }
    const auto& confusion = doc.at("confusion");
    for (std::size_t gold = 0; gold < 3; ++gold)
        for (std::size_t pred = 0; pred < 3; ++pred)
            report.confusion[gold][pred] = confusion.at(gold).at(pred).get<std::size_t>();
    report.n_scored = doc.at("n_scored").get<std::size_t>();
    report.n_missing = doc.at("n_missing").get<std::size_t>();
    if (doc.contains("error_proportions")) {
        const auto& p = doc["error_proportions"];
        ErrorProportions props;
        props.false_neutral_pct = p.at("false_neutral_pct").get<double>();
        if (p.contains("ce_pct")) props.ce_pct = p["ce_pct"].get<double>();
        if (p.contains("cn_pct")) props.cn_pct = p["cn_pct"].get<double>();
        report.error_proportions = props;
    }
    return report;
}

} // namespace nlistress
