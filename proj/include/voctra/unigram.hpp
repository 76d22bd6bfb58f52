#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "voctra/corpus.hpp"
#include "voctra/vocab.hpp"

namespace voctra {

// Unigram language-model tokenizer. The vocabulary scores of non-special
// tokens are natural-log probabilities; exp(score) sums to 1 over them.
struct UnigramModel {
    Vocabulary vocab;

    void save(const std::string& path) const { vocab.save(path); }
    static UnigramModel load(const std::string& path) { return {Vocabulary::load(path)}; }
};

// Simplified unigram trainer: seeds the candidate set with the
// seed_multiplier * vocab_size most frequent substrings (length <= 16
// codepoints) of the marker-prefixed words plus every character, runs
// hard (Viterbi) EM, and prunes the lowest-loss-increase candidates in
// rounds of 20% until vocab_size is reached. Characters are never pruned.
// Deterministic.
UnigramModel train_unigram(const Corpus& corpus, std::size_t vocab_size,
                           std::size_t seed_multiplier = 4);

// Per word, the segmentation maximizing the sum of token log-probabilities;
// ties prefer fewer tokens, then the lexicographically smallest token
// sequence. Unknown characters become UNK.
std::vector<int> segment_unigram(const UnigramModel& model, std::string_view text);

// Viterbi over a single already-marked word; exposed for the trainer and
// the brute-force comparison tests. Returns token strings ("" marks an
// unknown-character UNK position).
struct ViterbiResult {
    double score = 0.0;
    std::vector<std::string> pieces;
};
ViterbiResult viterbi_segment_word(const Vocabulary& vocab, std::string_view word,
                                   int skip_id = -1);

// Log-probability charged per unknown character during segmentation.
inline constexpr double kUnknownCharLogProb = -100.0;

}  // namespace voctra
