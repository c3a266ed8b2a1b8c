#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nlistress {

enum class Pos { noun, verb, adjective, adverb };

const char* to_string(Pos pos);
// "noun"/"verb"/"adjective"/"adverb" (also accepts n/v/a/r and "adj"/"adv").
Pos pos_from_string(std::string_view s);

// (pos, byte offset into the data file): the database key for one synset.
// Adjective satellites (ss_type 's') live in data.adj and fold into
// Pos::adjective.
struct SynsetId {
    Pos pos = Pos::noun;
    std::uint32_t offset = 0;

    auto operator<=>(const SynsetId&) const = default;
};

struct Pointer {
    static constexpr int kAll = -1; // synset-level (source/target 00 in the file)

    std::string symbol; // "!" = antonym
    SynsetId target;
    int source_index = kAll; // 0-based lemma index, or kAll
    int target_index = kAll;
};

struct Synset {
    SynsetId id;
    std::vector<std::string> lemmas; // underscores preserved as stored
    std::string gloss;               // full gloss, definition plus examples
    std::vector<Pointer> pointers;
};

// Definition segment of a gloss: text before the first `; "` example marker.
std::string gloss_definition(std::string_view gloss);

// Princeton WordNet 3.0 flat-file database. Immutable after load; concurrent
// readers need no synchronization.
class WordNetDb {
public:
    // Parses data.{noun,verb,adj,adv} and index.{noun,verb,adj,adv} from
    // `directory`. Throws ResourceError for missing files and ParseError for
    // malformed lines or dangling pointer targets.
    static WordNetDb load(const std::string& directory);

    const Synset* find(SynsetId id) const;
    const Synset& get(SynsetId id) const; // throws if absent

    // Synsets of a lemma in index (sense) order, most frequent sense first.
    // Case-insensitive; empty if absent.
    std::vector<const Synset*> synsets_of(std::string_view lemma, Pos pos) const;

    // Antonym lemmas of `lemma` within `synset`, following "!" pointers.
    // Lemma-level pointers for this lemma take precedence; otherwise
    // synset-level pointers contribute all target lemmas. Deduplicated,
    // pointer order, multiword lemmas excluded.
    std::vector<std::string> antonyms_of(std::string_view lemma,
                                         const Synset& synset) const;

    std::size_t synset_count(Pos pos) const;
    std::size_t total_synsets() const { return synsets_.size(); }

    // Version string detected from the database license header ("3.0" for a
    // stock distribution), "unknown" otherwise.
    const std::string& version() const { return version_; }

private:
    WordNetDb() = default;

    void load_data_file(const std::string& path, Pos pos);
    void load_index_file(const std::string& path, Pos pos);
    void check_pointer_targets() const;

    static std::uint64_t key(SynsetId id) {
        return (static_cast<std::uint64_t>(id.pos) << 32) | id.offset;
    }

    std::unordered_map<std::uint64_t, Synset> synsets_;
    std::map<std::pair<std::string, Pos>, std::vector<SynsetId>> lemma_index_;
    std::size_t counts_[4] = {0, 0, 0, 0};
    std::string version_ = "unknown";
};

} // namespace nlistress
