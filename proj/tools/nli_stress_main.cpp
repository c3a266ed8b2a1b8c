// nli-stress: build NLI stress-test sets from source corpora and score
// external prediction files against them.
//
// Exit codes: 0 success, 2 flag/usage error, 3 input parse error,
// 4 resource error (WordNet, word lists), 5 missing prediction in --strict.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nlistress/antonymy.hpp"
#include "nlistress/corpus.hpp"
#include "nlistress/errors.hpp"
#include "nlistress/eval.hpp"
#include "nlistress/noise.hpp"
#include "nlistress/numeric.hpp"
#include "nlistress/resources.hpp"
#include "nlistress/tautology.hpp"
#include "nlistress/wordnet.hpp"

namespace {

using namespace nlistress;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;
constexpr int kExitStrictMissing = 5;

// '-' means standard input/output.
std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open input file " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

struct GenerateArgs {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    std::string split_tag = "other";
    std::string resources_dir;
    std::string wordnet_dir;
    unsigned workers = 1;
    std::string name;

    std::string pos_set = "noun,adjective";
    std::string mode = "adj-swap";
    std::string word_filter = "any";
    std::string tautology;
    std::string target = "hypothesis";
    unsigned repeat = 1;
};

void add_common_generate_flags(CLI::App* cmd, GenerateArgs& args) {
    cmd->add_option("--input", args.input, "input corpus JSONL ('-' for stdin)")->required();
    cmd->add_option("--output", args.output, "output stress-set JSONL ('-' for stdout)")->required();
    cmd->add_option("--seed", args.seed, "generator seed")->default_val(0);
    cmd->add_option("--split-tag", args.split_tag,
                    "split of the input corpus: matched|mismatched|other")
        ->default_val("other")
        ->check(CLI::IsMember({"matched", "mismatched", "other"}));
    cmd->add_option("--resources", args.resources_dir,
                    "word-list directory (default: NLI_STRESS_RESOURCES or bundled data/)");
    cmd->add_option("--workers", args.workers, "worker threads")->default_val(1);
    cmd->add_option("--name", args.name, "stress-set name override");
}

// --pos-set entries must be noun/adjective/verb
const CLI::Validator PosSetValidator(
    [](std::string& csv) -> std::string {
        std::istringstream in(csv);
        std::string item;
        bool any = false;
        while (std::getline(in, item, ',')) {
            if (item.empty()) continue;
            any = true;
            if (item != "noun" && item != "adjective" && item != "adj" &&
                item != "verb")
                return "invalid pos \"" + item + "\" (use noun, adjective, verb)";
        }
        return any ? std::string() : std::string("empty pos set");
    },
    "POS_SET", "pos_set");

std::string resolve_wordnet_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("NLI_STRESS_WORDNET"); env && *env) return env;
    throw ResourceError("no WordNet directory (use --wordnet-dir or NLI_STRESS_WORDNET)");
}

Resources load_resources_for(const GenerateArgs& args) {
    return load_resources(args.resources_dir.empty() ? default_resource_dir()
                                                     : args.resources_dir);
}

std::vector<NLIPair> read_nli_input(const GenerateArgs& args, ReadStats* stats) {
    std::istringstream in(read_input(args.input));
    return read_nli_jsonl(in, split_from_string(args.split_tag), stats);
}

void emit_set(StressSet set, const GenerateArgs& args) {
    if (!args.name.empty()) set.name = args.name;
    set.seed = args.seed;
    if (args.output == "-") {
        write_nli_jsonl(set, std::cout);
    } else {
        write_stress_set(set, args.output);
    }
    std::cout << set.name << ": " << set.pairs.size() << " pairs";
    if (args.output != "-")
        std::cout << " -> " << args.output << " (+ " << sidecar_path(args.output) << ")";
    std::cout << "\n";
}

std::set<Pos> parse_pos_set(const std::string& csv) {
    std::set<Pos> pos_set;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const Pos pos = pos_from_string(item);
        if (pos == Pos::adverb) throw ParseError("adverbs are not a supported pos-set entry");
        pos_set.insert(pos);
    }
    if (pos_set.empty()) throw ParseError("empty --pos-set");
    return pos_set;
}

int run(int argc, char** argv) {
    CLI::App app{"NLI stress-test construction and evaluation"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* generate = app.add_subcommand("generate", "build a stress set");
    generate->require_subcommand(1);

    CLI::App* antonymy = generate->add_subcommand(
        "antonymy", "antonym-substitution contradictions (competence)");
    add_common_generate_flags(antonymy, gen_args);
    antonymy->add_option("--wordnet-dir", gen_args.wordnet_dir,
                         "WordNet 3.0 database directory (or NLI_STRESS_WORDNET)");
    antonymy->add_option("--pos-set", gen_args.pos_set,
                         "candidate parts of speech, CSV of noun,adjective,verb")
        ->default_val("noun,adjective")
        ->check(PosSetValidator);

    CLI::App* numeric = generate->add_subcommand(
        "numeric", "numerical-reasoning E/C/N triples from AQuA-RAT (competence)");
    add_common_generate_flags(numeric, gen_args);

    CLI::App* word_overlap =
        generate->add_subcommand("word-overlap", "append \"and true is true\" (distraction)");
    add_common_generate_flags(word_overlap, gen_args);
    CLI::App* negation =
        generate->add_subcommand("negation", "append \"and false is not true\" (distraction)");
    add_common_generate_flags(negation, gen_args);
    CLI::App* length_mismatch = generate->add_subcommand(
        "length-mismatch", "append \"and true is true\" x5 to the premise (distraction)");
    add_common_generate_flags(length_mismatch, gen_args);

    CLI::App* custom = generate->add_subcommand(
        "custom-tautology", "append a custom tautology (distraction / training data)");
    add_common_generate_flags(custom, gen_args);
    custom->add_option("--tautology", gen_args.tautology, "tautology text, without the connective")
        ->required();
    custom->add_option("--target", gen_args.target, "premise|hypothesis")
        ->default_val("hypothesis")
        ->check(CLI::IsMember({"premise", "hypothesis"}));
    custom->add_option("--repeat", gen_args.repeat, "number of conjuncts")->default_val(1);

    CLI::App* noise = generate->add_subcommand("noise", "spelling-error perturbations");
    add_common_generate_flags(noise, gen_args);
    noise->add_option("--mode", gen_args.mode, "adj-swap|kb-swap")
        ->default_val("adj-swap")
        ->check(CLI::IsMember({"adj-swap", "kb-swap"}));
    noise->add_option("--word-filter", gen_args.word_filter, "any|content|function")
        ->default_val("any")
        ->check(CLI::IsMember({"any", "content", "function"}));
    noise->add_option("--wordnet-dir", gen_args.wordnet_dir,
                      "WordNet directory (required for --word-filter content)");

    std::string eval_set_path, eval_predictions, eval_format = "tsv";
    bool eval_strict = false;
    CLI::App* evaluate = app.add_subcommand("evaluate", "score a predictions file");
    evaluate->add_option("--stress-set", eval_set_path, "stress-set JSONL path")->required();
    evaluate->add_option("--predictions", eval_predictions, "TSV pair_id<TAB>label ('-' for stdin)")
        ->required();
    evaluate->add_flag("--strict", eval_strict, "fail when a prediction is missing");
    evaluate->add_option("--format", eval_format, "tsv|json|markdown")
        ->default_val("tsv")
        ->check(CLI::IsMember({"tsv", "json", "markdown"}));

    std::string base_set_path, base_strategy = "majority", base_out;
    std::uint64_t base_seed = 0;
    double base_threshold = 0.5;
    CLI::App* baseline = app.add_subcommand("baseline", "write reference predictions");
    baseline->add_option("--stress-set", base_set_path, "stress-set JSONL path")->required();
    baseline->add_option("--strategy", base_strategy,
                         "majority|uniform-random|overlap-heuristic")
        ->default_val("majority")
        ->check(CLI::IsMember({"majority", "uniform-random", "overlap-heuristic"}));
    baseline->add_option("--seed", base_seed, "seed for uniform-random")->default_val(0);
    baseline->add_option("--threshold", base_threshold, "overlap-heuristic Jaccard threshold")
        ->default_val(0.5)
        ->check(CLI::Range(0.0, 1.0));
    baseline->add_option("--out", base_out, "output predictions TSV ('-' for stdout)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (generate->parsed()) {
        ReadStats stats;
        if (antonymy->parsed()) {
            const Resources resources = load_resources_for(gen_args);
            const WordNetDb db = WordNetDb::load(resolve_wordnet_dir(gen_args.wordnet_dir));
            std::cerr << "wordnet " << db.version() << ": " << db.synset_count(Pos::noun)
                      << " noun, " << db.synset_count(Pos::verb) << " verb, "
                      << db.synset_count(Pos::adjective) << " adjective, "
                      << db.synset_count(Pos::adverb) << " adverb synsets\n";
            const auto pairs = read_nli_input(gen_args, &stats);
            emit_set(generate_antonymy_set(pairs, db, resources, gen_args.seed,
                                           parse_pos_set(gen_args.pos_set), gen_args.workers),
                     gen_args);
        } else if (numeric->parsed()) {
            const Resources resources = load_resources_for(gen_args);
            std::istringstream in(read_input(gen_args.input));
            const auto problems = read_aqua(in);
            emit_set(generate_numeric_set(problems, resources, gen_args.seed, gen_args.workers),
                     gen_args);
        } else if (noise->parsed()) {
            const Resources resources = load_resources_for(gen_args);
            const WordFilter filter = word_filter_from_string(gen_args.word_filter);
            std::unique_ptr<WordNetDb> db;
            if (filter == WordFilter::content)
                db = std::make_unique<WordNetDb>(
                    WordNetDb::load(resolve_wordnet_dir(gen_args.wordnet_dir)));
            const auto pairs = read_nli_input(gen_args, &stats);
            emit_set(gen_noise_set(pairs, noise_mode_from_string(gen_args.mode), filter,
                                   gen_args.seed, resources, db.get(), gen_args.workers),
                     gen_args);
        } else {
            const Resources resources = load_resources_for(gen_args);
            const auto pairs = read_nli_input(gen_args, &stats);
            StressSet set;
            if (word_overlap->parsed()) set = gen_word_overlap(pairs, resources);
            else if (negation->parsed()) set = gen_negation(pairs, resources);
            else if (length_mismatch->parsed()) set = gen_length_mismatch(pairs, resources);
            else
                set = gen_custom(pairs, gen_args.tautology,
                                 target_from_string(gen_args.target), gen_args.repeat,
                                 resources);
            emit_set(std::move(set), gen_args);
        }
        if (stats.skipped_no_consensus > 0)
            std::cout << "skipped " << stats.skipped_no_consensus
                      << " records with no consensus label\n";
        return 0;
    }

    if (evaluate->parsed()) {
        const StressSet set = read_stress_set(eval_set_path);
        std::istringstream in(read_input(eval_predictions));
        const auto predictions = read_predictions(in);
        EvalReport report = score(set, predictions, eval_strict);
        bool any_error = false;
        for (std::size_t g = 0; g < 3 && !any_error; ++g)
            for (std::size_t p = 0; p < 3; ++p)
                if (g != p && report.confusion[g][p] > 0) { any_error = true; break; }
        if (any_error) report.error_proportions = error_breakdown(report);
        std::cout << render_report(report, report_format_from_string(eval_format));
        return 0;
    }

    // baseline
    const StressSet set = read_stress_set(base_set_path);
    const auto records = baseline_predict(set.pairs, baseline_from_string(base_strategy),
                                          base_seed, base_threshold);
    if (base_out == "-") {
        write_predictions(records, std::cout);
    } else {
        std::ofstream out(base_out, std::ios::binary);
        if (!out) throw ResourceError("cannot open " + base_out + " for writing");
        write_predictions(records, out);
    }
    std::cout << to_string(baseline_from_string(base_strategy)) << ": " << records.size()
              << " predictions";
    if (base_out != "-") std::cout << " -> " << base_out;
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nlistress::StrictMissingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStrictMissing;
    } catch (const nlistress::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const nlistress::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
