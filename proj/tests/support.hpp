#pragma once

// Shared test fixtures: a miniature WordNet-format database written to a temp
// directory, bundled-resource loading, and synthetic corpus builders.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"
#include "nlistress/rng.hpp"
#include "nlistress/wordnet.hpp"

namespace testsupport {

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("nlistress-" + tag + "-" + std::to_string(::getpid()) + "-" +
                      std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// ---------------------------------------------------------------------------
// Micro WordNet. Offsets: nouns 000010xx, verbs 000020xx, adjectives
// 000030xx, adverbs 000040xx. Antonym ("!") edges:
//   noun: love<->hate, light<->dark, day<->night, profit->loss (synset-level,
//         target includes multiword red_ink), temper->calmness (lemma-level)
//         with a synset-level pointer to composure/equanimity beside it
//   verb: love<->hate (sense 1 only; the enjoy sense has no antonym)
//   adj:  hot<->cold (sense 1 only), big<->little, large<->small,
//         happy<->unhappy, light<->heavy (weight), light<->dark (color),
//         fast<->slow (satellite synsets)
// calmness deliberately has no reverse pointer (antonymy is directional).

inline const char* kMicroHeader =
    "  1 This is a miniature database in the Princeton WordNet file format.  \n"
    "  2 WordNet 3.0 Copyright 2006 by Princeton University.  \n";

inline std::string micro_data_noun() {
    std::string s = kMicroHeader;
    s += "00001001 15 n 01 bank 0 000 | sloping land beside a river; \"they pulled the canoe up on the bank\"\n";
    s += "00001002 14 n 01 bank 0 000 | financial institution that accepts deposits and channels the money into lending activities\n";
    s += "00001003 10 n 01 love 0 001 ! 00001004 n 0101 | a strong positive emotion of regard and affection\n";
    s += "00001004 10 n 01 hate 0 001 ! 00001003 n 0101 | the emotion of intense dislike\n";
    s += "00001005 10 n 01 story 0 000 | a message that tells the particulars of an act or occurrence\n";
    s += "00001006 17 n 01 river 0 000 | a large natural stream of water\n";
    s += "00001007 19 n 01 light 0 001 ! 00001008 n 0101 | electromagnetic radiation that can produce a visual sensation\n";
    s += "00001008 19 n 02 dark 0 darkness 0 001 ! 00001007 n 0101 | absence of light or illumination\n";
    s += "00001009 28 n 01 day 0 001 ! 00001010 n 0101 | the time for Earth to make a complete rotation on its axis\n";
    s += "00001010 28 n 01 night 0 001 ! 00001009 n 0101 | the time after sunset and before sunrise while it is dark outside\n";
    s += "00001011 27 n 01 cement 0 000 | a building material made from calcined limestone and clay\n";
    s += "00001012 21 n 02 profit 0 gain 0 001 ! 00001013 n 0000 | the excess of revenues over outlays in a given period of time\n";
    s += "00001013 21 n 02 loss 0 red_ink 1 000 | the amount by which the cost of a business exceeds its revenue\n";
    s += "00001014 12 n 02 temper 0 mood 0 002 ! 00001015 n 0101 ! 00001016 n 0000 | a sudden outburst of anger\n";
    s += "00001015 12 n 01 calmness 0 000 | an absence of agitation or excitement\n";
    s += "00001016 12 n 02 composure 0 equanimity 0 000 | steadiness of mind under stress\n";
    s += "00001017 06 n 01 mill 0 000 | a plant where grain is ground into flour and flour is bagged\n";
    s += "00001018 06 n 01 mill 0 000 | machinery that processes materials by grinding or crushing\n";
    return s;
}

inline std::string micro_data_verb() {
    std::string s = kMicroHeader;
    s += "00002001 37 v 01 love 0 001 ! 00002002 v 0101 02 + 08 00 + 09 00 | have a great affection or liking for; \"I love French food\"\n";
    s += "00002002 37 v 02 hate 0 detest 0 001 ! 00002001 v 0101 01 + 08 00 | dislike intensely and feel antipathy towards\n";
    s += "00002003 34 v 02 love 0 enjoy 0 000 01 + 08 00 | get pleasure from; \"I love cooking\"\n";
    s += "00002004 38 v 01 run 0 000 01 + 02 00 | move fast by using one's feet with one foot off the ground at any given time\n";
    return s;
}

inline std::string micro_data_adj() {
    std::string s = kMicroHeader;
    s += "00003001 00 a 01 hot 0 001 ! 00003002 a 0101 | used of physical heat with a high or higher than desirable temperature\n";
    s += "00003002 00 a 01 cold 0 001 ! 00003001 a 0101 | having a low or inadequate temperature\n";
    s += "00003003 00 a 01 hot 0 000 | very popular or successful\n";
    s += "00003004 00 a 02 big 0 large 1 002 ! 00003005 a 0101 ! 00003005 a 0202 | above average in size or number or quantity\n";
    s += "00003005 00 a 02 little 0 small 1 002 ! 00003004 a 0101 ! 00003004 a 0202 | limited or below average in number or quantity or magnitude\n";
    s += "00003006 00 a 02 happy 0 content(p) 0 001 ! 00003007 a 0101 | enjoying or showing or marked by joy or pleasure; \"a happy smile\"\n";
    s += "00003007 00 a 01 unhappy 0 001 ! 00003006 a 0101 | experiencing or marked by or causing sadness or sorrow\n";
    s += "00003008 00 a 01 light 0 001 ! 00003009 a 0101 | of comparatively small physical weight or density\n";
    s += "00003009 00 a 01 heavy 0 001 ! 00003008 a 0101 | of comparatively great physical weight or density\n";
    s += "00003010 00 a 01 light 1 001 ! 00003011 a 0101 | used of color with a relatively small amount of coloring agent\n";
    s += "00003011 00 a 01 dark 0 001 ! 00003010 a 0101 | devoid of or deficient in light or brightness\n";
    s += "00003012 00 s 01 fast 0 001 ! 00003013 a 0101 | acting or moving or capable of acting or moving quickly\n";
    s += "00003013 00 s 01 slow 0 001 ! 00003012 a 0101 | not moving quickly and taking a comparatively long time\n";
    return s;
}

inline std::string micro_data_adv() {
    std::string s = kMicroHeader;
    s += "00004001 02 r 02 quickly 0 rapidly 0 000 | with speed; \"he works quickly\"\n";
    return s;
}

inline std::string micro_index_noun() {
    std::string s = kMicroHeader;
    s += "bank n 2 0 2 0 00001001 00001002\n";
    s += "calmness n 1 0 1 0 00001015\n";
    s += "cement n 1 0 1 0 00001011\n";
    s += "composure n 1 0 1 0 00001016\n";
    s += "dark n 1 1 ! 1 1 00001008\n";
    s += "darkness n 1 0 1 0 00001008\n";
    s += "day n 1 1 ! 1 1 00001009\n";
    s += "equanimity n 1 0 1 0 00001016\n";
    s += "gain n 1 0 1 0 00001012\n";
    s += "hate n 1 1 ! 1 1 00001004\n";
    s += "light n 1 1 ! 1 1 00001007\n";
    s += "loss n 1 0 1 0 00001013\n";
    s += "love n 1 1 ! 1 1 00001003\n";
    s += "mill n 2 0 2 0 00001017 00001018\n";
    s += "mood n 1 0 1 0 00001014\n";
    s += "night n 1 1 ! 1 1 00001010\n";
    s += "profit n 1 1 ! 1 1 00001012\n";
    s += "red_ink n 1 0 1 0 00001013\n";
    s += "river n 1 0 1 0 00001006\n";
    s += "story n 1 0 1 0 00001005\n";
    s += "temper n 1 1 ! 1 1 00001014\n";
    return s;
}

inline std::string micro_index_verb() {
    std::string s = kMicroHeader;
    s += "detest v 1 0 1 0 00002002\n";
    s += "enjoy v 1 0 1 0 00002003\n";
    s += "hate v 1 1 ! 1 1 00002002\n";
    s += "love v 2 1 ! 2 2 00002001 00002003\n";
    s += "run v 1 0 1 0 00002004\n";
    return s;
}

inline std::string micro_index_adj() {
    std::string s = kMicroHeader;
    s += "big a 1 1 ! 1 1 00003004\n";
    s += "cold a 1 1 ! 1 1 00003002\n";
    s += "content a 1 0 1 0 00003006\n";
    s += "dark a 1 1 ! 1 1 00003011\n";
    s += "fast a 1 1 ! 1 1 00003012\n";
    s += "happy a 1 1 ! 1 1 00003006\n";
    s += "heavy a 1 1 ! 1 1 00003009\n";
    s += "hot a 2 1 ! 2 2 00003001 00003003\n";
    s += "large a 1 1 ! 1 1 00003004\n";
    s += "light a 2 1 ! 2 2 00003008 00003010\n";
    s += "little a 1 1 ! 1 1 00003005\n";
    s += "slow a 1 1 ! 1 1 00003013\n";
    s += "small a 1 1 ! 1 1 00003005\n";
    s += "unhappy a 1 1 ! 1 1 00003007\n";
    return s;
}

inline std::string micro_index_adv() {
    std::string s = kMicroHeader;
    s += "quickly r 1 0 1 0 00004001\n";
    s += "rapidly r 1 0 1 0 00004001\n";
    return s;
}

inline std::string write_micro_wordnet() {
    const auto dir = fresh_temp_dir("wn");
    write_file(dir / "data.noun", micro_data_noun());
    write_file(dir / "data.verb", micro_data_verb());
    write_file(dir / "data.adj", micro_data_adj());
    write_file(dir / "data.adv", micro_data_adv());
    write_file(dir / "index.noun", micro_index_noun());
    write_file(dir / "index.verb", micro_index_verb());
    write_file(dir / "index.adj", micro_index_adj());
    write_file(dir / "index.adv", micro_index_adv());
    return dir.string();
}

inline const nlistress::WordNetDb& micro_wordnet() {
    static const nlistress::WordNetDb db = nlistress::WordNetDb::load(write_micro_wordnet());
    return db;
}

inline const nlistress::Resources& bundled_resources() {
    static const nlistress::Resources res =
        nlistress::load_resources(nlistress::default_resource_dir());
    return res;
}

// ---------------------------------------------------------------------------
// Synthetic corpora.

// NLI pairs over the micro-WordNet vocabulary, labels cycling E/N/C.
// Sentences are slot-filled so a large corpus has a large pool of distinct
// sentences (the antonymy generator dedups them).
inline std::string synthetic_sentence(nlistress::Rng& rng) {
    static const char* subjects[] = {"Tim",        "Sara",       "Karen",
                                     "Boris",      "Anna",       "Victor",
                                     "The crowd",  "The visitor", "A stranger",
                                     "The farmer", "Her brother", "My neighbor"};
    static const char* verbs[] = {"saw",      "reached",  "praised", "watched",
                                  "described", "remembered", "sketched", "passed",
                                  "admired",  "painted"};
    static const char* adjectives[] = {"big",   "small", "happy", "unhappy", "hot",
                                       "cold",  "light", "heavy", "dark",    "fast",
                                       "slow",  "little", "large", "quiet",  "busy"};
    static const char* nouns[] = {"bank",  "river",  "story", "mill",    "temper",
                                  "day",   "night",  "light", "profit",  "loss",
                                  "cement", "mood",  "train", "parade",  "table",
                                  "box",   "market", "road",  "letter",  "bridge"};
    static const char* endings[] = {".", "", "!", ".", ""};

    std::string s = subjects[rng.uniform(12)];
    s += " ";
    s += verbs[rng.uniform(10)];
    s += " the ";
    s += adjectives[rng.uniform(15)];
    s += " ";
    s += nouns[rng.uniform(20)];
    if (rng.coin()) {
        s += " near the ";
        s += nouns[rng.uniform(20)];
    }
    s += endings[rng.uniform(5)];
    return s;
}

inline std::vector<nlistress::NLIPair> synthetic_nli(std::size_t n, std::uint64_t seed,
                                                     nlistress::SplitTag split =
                                                         nlistress::SplitTag::other) {
    using namespace nlistress;
    std::vector<NLIPair> pairs;
    pairs.reserve(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        NLIPair pair;
        pair.pair_id = "syn-" + std::to_string(i);
        pair.premise = synthetic_sentence(rng);
        pair.hypothesis = synthetic_sentence(rng);
        pair.gold_label = static_cast<Label>(i % 3);
        pair.genre = i % 2 == 0 ? "fiction" : "travel";
        pair.split_tag = split;
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

// Number-bearing premise sentences in the style of filtered AQuA questions.
inline std::vector<std::string> synthetic_numeric_premises(std::size_t n,
                                                           std::uint64_t seed) {
    nlistress::Rng rng(seed);
    static const char* names[] = {"Tim", "Sara", "Karen", "Boris", "Anna", "Victor"};
    std::vector<std::string> premises;
    premises.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string name = names[rng.uniform(6)];
        const unsigned long a = 1 + rng.uniform(900);
        const unsigned long b = 1 + rng.uniform(90);
        std::string premise;
        switch (rng.uniform(4)) {
            case 0:
                premise = name + " has " + std::to_string(a) + " pounds of cement in " +
                          std::to_string(b) + " pound bags";
                break;
            case 1:
                premise = name + " bought " + std::to_string(a) + " apples and " +
                          std::to_string(b) + " oranges.";
                break;
            case 2:
                premise = name + " ran " + std::to_string(a) + " miles in " +
                          std::to_string(b) + " minutes.";
                break;
            default:
                premise = name + " paid $" + std::to_string(a) +
                          " for " + std::to_string(b) + " tickets.";
                break;
        }
        // letters-only distinctness tag so no extra numeric token appears
        std::string tag;
        for (std::size_t v = i + 1; v > 0; v /= 26)
            tag.push_back(static_cast<char>('a' + v % 26));
        premise += " on trip " + tag;
        premises.push_back(std::move(premise));
    }
    return premises;
}

} // namespace testsupport
