#include "nlistress/resources.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nlistress/errors.hpp"

#ifndef NLISTRESS_DATA_DIR
#define NLISTRESS_DATA_DIR "data"
#endif

#define NLISTRESS_VERSION "0.1.0"

namespace nlistress {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("cannot open resource file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

void load_word_list(const std::string& content, std::unordered_set<std::string>& out) {
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        const std::string word = trim(line);
        if (word.empty() || word[0] == '#') continue;
        out.insert(word);
    }
}

FunctionWords load_function_words(const std::string& content) {
    FunctionWords fw;
    std::unordered_set<std::string>* section = nullptr;
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        const std::string entry = trim(line);
        if (entry.empty()) continue;
        if (entry[0] == '#') {
            if (entry == "#conjunctions") section = &fw.conjunctions;
            else if (entry == "#pronouns") section = &fw.pronouns;
            else if (entry == "#articles") section = &fw.articles;
            // other '#' lines are comments
            continue;
        }
        if (section) section->insert(entry);
    }
    return fw;
}

} // namespace

Resources load_resources(const std::string& dir) {
    Resources res;
    const std::string stopwords_bytes = read_file(dir + "/stopwords.txt");
    const std::string gazetteer_bytes = read_file(dir + "/gazetteer.txt");
    const std::string function_bytes = read_file(dir + "/function_words.txt");

    load_word_list(stopwords_bytes, res.stopwords);
    load_word_list(gazetteer_bytes, res.gazetteer);
    res.function_words = load_function_words(function_bytes);

    res.fingerprint = "stopwords=" + hex16(fnv1a64(stopwords_bytes)) +
                      ";gazetteer=" + hex16(fnv1a64(gazetteer_bytes)) +
                      ";function_words=" + hex16(fnv1a64(function_bytes));
    return res;
}

std::string default_resource_dir() {
    if (const char* env = std::getenv("NLI_STRESS_RESOURCES"); env && *env)
        return env;
    return NLISTRESS_DATA_DIR;
}

std::string generator_version(const Resources& resources,
                              const std::string& wordnet_version) {
    std::string v = "nli-stress/" NLISTRESS_VERSION
                    ";lesk=simplified;tiebreak=sense-order;" +
                    resources.fingerprint;
    if (!wordnet_version.empty()) v += ";wordnet=" + wordnet_version;
    return v;
}

} // namespace nlistress
