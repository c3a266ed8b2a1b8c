#include "nlistress/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "nlistress/errors.hpp"

namespace nlistress {

const char* to_string(Pos pos) {
    switch (pos) {
        case Pos::noun: return "noun";
        case Pos::verb: return "verb";
        case Pos::adjective: return "adjective";
        case Pos::adverb: return "adverb";
    }
    return "?";
}

Pos pos_from_string(std::string_view s) {
    std::string l(s);
    for (char& c : l) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (l == "noun" || l == "n") return Pos::noun;
    if (l == "verb" || l == "v") return Pos::verb;
    if (l == "adjective" || l == "adj" || l == "a" || l == "s") return Pos::adjective;
    if (l == "adverb" || l == "adv" || l == "r") return Pos::adverb;
    throw ParseError("unknown part of speech \"" + std::string(s) + "\"");
}

std::string gloss_definition(std::string_view gloss) {
    const std::size_t marker = gloss.find("; \"");
    std::string_view def = marker == std::string_view::npos ? gloss : gloss.substr(0, marker);
    while (!def.empty() && std::isspace(static_cast<unsigned char>(def.back())))
        def.remove_suffix(1);
    return std::string(def);
}

namespace {

// Pointer symbols of the WordNet 3.0 database (all POS files).
const std::set<std::string> kPointerSymbols = {
    "!",  "@",  "@i", "~",  "~i", "#m", "#s", "#p", "%m", "%s", "%p",
    "=",  "+",  ";c", "-c", ";r", "-r", ";u", "-u", "*",  ">",  "^",
    "$",  "&",  "<",  "\\",
};

Pos pos_from_ss_type(char c, const std::string& where) {
    switch (c) {
        case 'n': return Pos::noun;
        case 'v': return Pos::verb;
        case 'a':
        case 's': return Pos::adjective;
        case 'r': return Pos::adverb;
    }
    throw ParseError(where + ": unknown ss_type '" + std::string(1, c) + "'");
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Adjective lemmas may carry a syntactic-position marker: certain(p).
std::string strip_adj_marker(const std::string& lemma) {
    const std::size_t paren = lemma.find('(');
    if (paren != std::string::npos && lemma.back() == ')') return lemma.substr(0, paren);
    return lemma;
}

bool license_header_line(const std::string& line) {
    return line.empty() || std::isspace(static_cast<unsigned char>(line[0]));
}

unsigned long parse_number(const std::string& field, int base,
                           const std::string& where, const char* what) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(field, &used, base);
    } catch (const std::exception&) {
        throw ParseError(where + ": bad " + std::string(what) + " \"" + field + "\"");
    }
    if (used != field.size())
        throw ParseError(where + ": bad " + std::string(what) + " \"" + field + "\"");
    return value;
}

} // namespace

void WordNetDb::load_data_file(const std::string& path, Pos file_pos) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("missing WordNet file: " + path);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (license_header_line(line)) {
            if (version_ == "unknown") {
                const std::size_t at = line.find("WordNet ");
                if (at != std::string::npos && line.find("Copyright") != std::string::npos) {
                    std::istringstream ver(line.substr(at + 8));
                    std::string v;
                    ver >> v;
                    if (!v.empty()) version_ = v;
                }
            }
            continue;
        }
        const std::string where = path + ":" + std::to_string(line_no);

        const std::size_t bar = line.find(" | ");
        if (bar == std::string::npos) throw ParseError(where + ": no gloss separator");
        std::istringstream fields(line.substr(0, bar));

        Synset synset;
        synset.gloss = line.substr(bar + 3);
        while (!synset.gloss.empty() &&
               std::isspace(static_cast<unsigned char>(synset.gloss.back())))
            synset.gloss.pop_back();
        if (synset.gloss.empty()) throw ParseError(where + ": empty gloss");

        std::string offset_field, lex_filenum, ss_type, w_cnt_field;
        if (!(fields >> offset_field >> lex_filenum >> ss_type >> w_cnt_field))
            throw ParseError(where + ": truncated synset header");
        synset.id.offset =
            static_cast<std::uint32_t>(parse_number(offset_field, 10, where, "offset"));
        if (ss_type.size() != 1) throw ParseError(where + ": bad ss_type");
        synset.id.pos = pos_from_ss_type(ss_type[0], where);
        if (synset.id.pos != file_pos)
            throw ParseError(where + ": ss_type does not match data file");

        const unsigned long w_cnt = parse_number(w_cnt_field, 16, where, "word count");
        if (w_cnt == 0) throw ParseError(where + ": synset with no lemmas");
        for (unsigned long w = 0; w < w_cnt; ++w) {
            std::string word, lex_id;
            if (!(fields >> word >> lex_id))
                throw ParseError(where + ": truncated lemma list");
            synset.lemmas.push_back(strip_adj_marker(word));
        }

        std::string p_cnt_field;
        if (!(fields >> p_cnt_field))
            throw ParseError(where + ": missing pointer count");
        const unsigned long p_cnt = parse_number(p_cnt_field, 10, where, "pointer count");
        for (unsigned long p = 0; p < p_cnt; ++p) {
            std::string symbol, target_offset, target_pos, src_tgt;
            if (!(fields >> symbol >> target_offset >> target_pos >> src_tgt))
                throw ParseError(where + ": truncated pointer list");
            if (kPointerSymbols.find(symbol) == kPointerSymbols.end())
                throw ParseError(where + ": unknown pointer symbol \"" + symbol + "\"");
            Pointer ptr;
            ptr.symbol = symbol;
            ptr.target.offset = static_cast<std::uint32_t>(
                parse_number(target_offset, 10, where, "pointer offset"));
            if (target_pos.size() != 1) throw ParseError(where + ": bad pointer pos");
            ptr.target.pos = pos_from_ss_type(target_pos[0], where);
            if (src_tgt.size() != 4)
                throw ParseError(where + ": bad source/target field \"" + src_tgt + "\"");
            const unsigned long src = parse_number(src_tgt.substr(0, 2), 16, where, "source index");
            const unsigned long tgt = parse_number(src_tgt.substr(2, 2), 16, where, "target index");
            ptr.source_index = src == 0 ? Pointer::kAll : static_cast<int>(src - 1);
            ptr.target_index = tgt == 0 ? Pointer::kAll : static_cast<int>(tgt - 1);
            if (ptr.source_index != Pointer::kAll &&
                static_cast<std::size_t>(ptr.source_index) >= synset.lemmas.size())
                throw ParseError(where + ": source lemma index out of range");
            synset.pointers.push_back(std::move(ptr));
        }
        // trailing verb frames are ignored

        const std::uint64_t k = key(synset.id);
        if (synsets_.count(k))
            throw ParseError(where + ": duplicate synset offset");
        synsets_.emplace(k, std::move(synset));
        ++counts_[static_cast<int>(file_pos)];
    }
}

void WordNetDb::load_index_file(const std::string& path, Pos file_pos) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("missing WordNet file: " + path);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (license_header_line(line)) continue;
        const std::string where = path + ":" + std::to_string(line_no);
        std::istringstream fields(line);

        std::string lemma, pos_field, synset_cnt_field, p_cnt_field;
        if (!(fields >> lemma >> pos_field >> synset_cnt_field >> p_cnt_field))
            throw ParseError(where + ": truncated index entry");
        const unsigned long synset_cnt =
            parse_number(synset_cnt_field, 10, where, "synset count");
        const unsigned long p_cnt = parse_number(p_cnt_field, 10, where, "pointer count");
        std::string skip;
        for (unsigned long i = 0; i < p_cnt; ++i)
            if (!(fields >> skip)) throw ParseError(where + ": truncated pointer symbols");
        std::string sense_cnt, tagsense_cnt;
        if (!(fields >> sense_cnt >> tagsense_cnt))
            throw ParseError(where + ": truncated sense counts");

        std::vector<SynsetId> ids;
        ids.reserve(synset_cnt);
        for (unsigned long i = 0; i < synset_cnt; ++i) {
            std::string offset_field;
            if (!(fields >> offset_field))
                throw ParseError(where + ": truncated offset list");
            SynsetId id;
            id.pos = file_pos;
            id.offset = static_cast<std::uint32_t>(
                parse_number(offset_field, 10, where, "offset"));
            ids.push_back(id);
        }
        lemma_index_[{lowercase(lemma), file_pos}] = std::move(ids);
    }
}

void WordNetDb::check_pointer_targets() const {
    for (const auto& [k, synset] : synsets_) {
        (void)k;
        for (const Pointer& ptr : synset.pointers) {
            const Synset* target = find(ptr.target);
            if (!target)
                throw ParseError("dangling pointer from synset " +
                                 std::string(to_string(synset.id.pos)) + ":" +
                                 std::to_string(synset.id.offset) + " to " +
                                 std::string(to_string(ptr.target.pos)) + ":" +
                                 std::to_string(ptr.target.offset));
            if (ptr.target_index != Pointer::kAll &&
                static_cast<std::size_t>(ptr.target_index) >= target->lemmas.size())
                throw ParseError("pointer target lemma index out of range in synset " +
                                 std::to_string(synset.id.offset));
        }
    }
    for (const auto& [lemma_pos, ids] : lemma_index_) {
        for (const SynsetId& id : ids)
            if (!find(id))
                throw ParseError("index entry \"" + lemma_pos.first +
                                 "\" references missing synset " +
                                 std::to_string(id.offset));
    }
}

WordNetDb WordNetDb::load(const std::string& directory) {
    WordNetDb db;
    const std::pair<const char*, Pos> files[] = {
        {"noun", Pos::noun}, {"verb", Pos::verb},
        {"adj", Pos::adjective}, {"adv", Pos::adverb}};
    for (const auto& [suffix, pos] : files)
        db.load_data_file(directory + "/data." + suffix, pos);
    for (const auto& [suffix, pos] : files)
        db.load_index_file(directory + "/index." + suffix, pos);
    db.check_pointer_targets();
    return db;
}

const Synset* WordNetDb::find(SynsetId id) const {
    auto it = synsets_.find(key(id));
    return it == synsets_.end() ? nullptr : &it->second;
}

const Synset& WordNetDb::get(SynsetId id) const {
    const Synset* s = find(id);
    if (!s)
        throw ParseError("unknown synset " + std::string(to_string(id.pos)) + ":" +
                         std::to_string(id.offset));
    return *s;
}

std::vector<const Synset*> WordNetDb::synsets_of(std::string_view lemma, Pos pos) const {
    std::vector<const Synset*> result;
    auto it = lemma_index_.find({lowercase(lemma), pos});
    if (it == lemma_index_.end()) return result;
    result.reserve(it->second.size());
    for (const SynsetId& id : it->second) result.push_back(&get(id));
    return result;
}

std::vector<std::string> WordNetDb::antonyms_of(std::string_view lemma,
                                                const Synset& synset) const {
    const std::string needle = lowercase(lemma);

    // lemma index of `lemma` within the synset, if any
    int lemma_idx = -1;
    for (std::size_t i = 0; i < synset.lemmas.size(); ++i) {
        if (lowercase(synset.lemmas[i]) == needle) {
            lemma_idx = static_cast<int>(i);
            break;
        }
    }

    std::vector<std::string> result;
    auto add = [&result](const std::string& lemma_out) {
        if (lemma_out.find('_') != std::string::npos) return; // multiword
        if (std::find(result.begin(), result.end(), lemma_out) == result.end())
            result.push_back(lemma_out);
    };

    bool lemma_level_found = false;
    for (const Pointer& ptr : synset.pointers) {
        if (ptr.symbol != "!" || ptr.source_index == Pointer::kAll) continue;
        if (ptr.source_index != lemma_idx) continue;
        lemma_level_found = true;
        const Synset& target = get(ptr.target);
        if (ptr.target_index != Pointer::kAll)
            add(target.lemmas[static_cast<std::size_t>(ptr.target_index)]);
        else
            for (const std::string& l : target.lemmas) add(l);
    }
    if (lemma_level_found) return result;

    for (const Pointer& ptr : synset.pointers) {
        if (ptr.symbol != "!" || ptr.source_index != Pointer::kAll) continue;
        const Synset& target = get(ptr.target);
        for (const std::string& l : target.lemmas) add(l);
    }
    return result;
}

std::size_t WordNetDb::synset_count(Pos pos) const {
    return counts_[static_cast<int>(pos)];
}

} // namespace nlistress
