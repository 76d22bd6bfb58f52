#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "voctra/corpus.hpp"
#include "voctra/vocab.hpp"

namespace voctra {

// Byte-pair-encoding model: the learned merge list plus the vocabulary it
// induces (specials, then every character seen in training, then one token
// per merge in rank order). Words are segmented with the boundary marker
// prepended as its own initial symbol, so merges may absorb it.
struct BpeModel {
    Vocabulary vocab;
    std::vector<std::pair<std::string, std::string>> merges;

    // (left, right) -> rank; rebuilt on load.
    const std::unordered_map<std::string, int>& merge_ranks() const;

    void save(const std::string& path) const;
    std::string serialize() const;
    static BpeModel load(const std::string& path);
    static BpeModel parse(std::string_view data, const std::string& origin);

private:
    mutable std::unordered_map<std::string, int> ranks_;  // key: left + '\x01' + right
};

// Greedy pair-merge training. Deterministic: the highest-count pair wins
// each round, ties broken by lexicographic (left, right); stops when the
// vocabulary reaches vocab_size or no pair occurs at least twice.
// vocab_size must cover the specials plus every distinct character.
BpeModel train_bpe(const Corpus& corpus, std::size_t vocab_size);

// Deterministic segmentation: per word, start from codepoints (marker
// first) and repeatedly apply the lowest-ranked applicable merge at its
// leftmost position. Characters missing from the vocabulary become UNK.
std::vector<int> segment_bpe(const BpeModel& model, std::string_view text);

// BPE-dropout: identical walk, but each individual merge application is
// skipped with probability p (a skipped application is never retried for
// the same symbol pair). p=0 reproduces segment_bpe; p=1 leaves characters.
std::vector<int> segment_bpe_dropout(const BpeModel& model, std::string_view text,
                                     double p, std::uint64_t seed);

// Shared helper: normalized words of `text`, each prefixed with the
// boundary marker.
std::vector<std::string> marked_words(std::string_view text);

}  // namespace voctra
