#include "voctra/unigram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "voctra/bpe.hpp"
#include "voctra/errors.hpp"
#include "voctra/text.hpp"

namespace voctra {

namespace {

constexpr std::size_t kMaxPieceCp = 16;
constexpr int kEmItersPerRound = 2;
const double kFloorLogProb = std::log(1e-9);   // zero-count tokens during EM
constexpr double kFinalFloorProb = 1e-12;      // zero-count tokens in the final model

// Byte offsets of codepoint boundaries: 0, each start, then s.size().
std::vector<std::size_t> cp_offsets(std::string_view s) {
    std::vector<std::size_t> offs;
    offs.push_back(0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) offs.push_back(i);
    }
    if (!s.empty()) offs.push_back(s.size());
    return offs;
}

struct Cell {
    bool reached = false;
    double score = 0.0;
    std::size_t count = 0;
    std::vector<std::string> pieces;
};

bool better(double score, std::size_t count, const std::vector<std::string>& prefix,
            const std::string& piece, const Cell& inc) {
    if (!inc.reached) return true;
    if (score != inc.score) return score > inc.score;
    if (count != inc.count) return count < inc.count;
    // Equal count means equal sequence length; compare prefix + [piece]
    // element-wise against the incumbent.
    for (std::size_t k = 0; k < inc.pieces.size(); ++k) {
        const std::string& lhs = k < prefix.size() ? prefix[k] : piece;
        if (lhs != inc.pieces[k]) return lhs < inc.pieces[k];
    }
    return false;
}

}  // namespace

ViterbiResult viterbi_segment_word(const Vocabulary& vocab, std::string_view word,
                                   int skip_id) {
    std::vector<std::size_t> offs = cp_offsets(word);
    if (word.empty()) return {};
    std::size_t n = offs.size() - 1;  // codepoints

    std::vector<Cell> dp(n + 1);
    dp[0].reached = true;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t max_len = std::min(kMaxPieceCp, i);
        bool any = false;
        for (std::size_t l = 1; l <= max_len; ++l) {
            std::size_t j = i - l;
            if (!dp[j].reached) continue;
            std::string piece(word.substr(offs[j], offs[i] - offs[j]));
            std::optional<int> id = vocab.find(piece);
            if (!id || *id < Vocabulary::kNumSpecials || *id == skip_id) continue;
            any = true;
            double score = dp[j].score + vocab.score(*id);
            std::size_t count = dp[j].count + 1;
            if (better(score, count, dp[j].pieces, piece, dp[i])) {
                dp[i].reached = true;
                dp[i].score = score;
                dp[i].count = count;
                dp[i].pieces = dp[j].pieces;
                dp[i].pieces.push_back(std::move(piece));
            }
        }
        if (!any && !dp[i].reached) {
            // Unknown character: forced single-codepoint UNK emission.
            std::size_t j = i - 1;
            if (dp[j].reached) {
                dp[i].reached = true;
                dp[i].score = dp[j].score + kUnknownCharLogProb;
                dp[i].count = dp[j].count + 1;
                dp[i].pieces = dp[j].pieces;
                dp[i].pieces.emplace_back(word.substr(offs[j], offs[i] - offs[j]));
            }
        }
    }
    ViterbiResult r;
    r.score = dp[n].score;
    r.pieces = std::move(dp[n].pieces);
    return r;
}

namespace {

struct Candidate {
    double logprob;
    double count;  // weighted occurrence count from the last E-step
};

using CandidateMap = std::map<std::string, Candidate>;

Vocabulary build_vocab(const CandidateMap& cands) {
    Vocabulary v;
    for (const auto& [tok, c] : cands) v.add(tok, c.logprob);
    return v;
}

// One hard-EM iteration: Viterbi counts, then log relative frequencies.
void em_iteration(CandidateMap& cands, Vocabulary& vocab,
                  const std::vector<std::pair<std::string, std::uint64_t>>& words) {
    for (auto& [tok, c] : cands) c.count = 0.0;
    for (const auto& [word, wcount] : words) {
        ViterbiResult r = viterbi_segment_word(vocab, word);
        for (const std::string& piece : r.pieces) {
            auto it = cands.find(piece);
            if (it != cands.end()) it->second.count += static_cast<double>(wcount);
        }
    }
    double total = 0.0;
    for (const auto& [tok, c] : cands) total += c.count;
    for (auto& [tok, c] : cands) {
        c.logprob = c.count > 0.0 ? std::log(c.count / total) : kFloorLogProb;
        vocab.set_score(*vocab.find(tok), c.logprob);
    }
}

}  // namespace

UnigramModel train_unigram(const Corpus& corpus, std::size_t vocab_size,
                           std::size_t seed_multiplier) {
    if (seed_multiplier == 0) throw ContractError("seed_multiplier must be positive");

    std::map<std::string, std::uint64_t> word_counts;
    for (const Document& d : corpus.documents) {
        for (std::string& w : marked_words(d.text)) ++word_counts[std::move(w)];
    }
    std::vector<std::pair<std::string, std::uint64_t>> words(word_counts.begin(),
                                                             word_counts.end());

    // Character inventory (with weighted counts) and weighted substring counts.
    std::map<std::string, std::uint64_t> char_counts;
    std::map<std::string, std::uint64_t> substr_counts;
    for (const auto& [word, wcount] : words) {
        std::vector<std::size_t> offs = cp_offsets(word);
        std::size_t n = offs.empty() ? 0 : offs.size() - 1;
        for (std::size_t a = 0; a < n; ++a) {
            char_counts[word.substr(offs[a], offs[a + 1] - offs[a])] += wcount;
            for (std::size_t l = 2; l <= kMaxPieceCp && a + l <= n; ++l) {
                substr_counts[word.substr(offs[a], offs[a + l] - offs[a])] += wcount;
            }
        }
    }

    std::size_t min_size = Vocabulary::kNumSpecials + char_counts.size();
    if (vocab_size < min_size) {
        throw ContractError("vocab_size " + std::to_string(vocab_size) +
                            " too small; minimum feasible size is " +
                            std::to_string(min_size));
    }
    std::size_t target_multis = vocab_size - min_size;

    // Seed candidates: top substrings by (count desc, string asc), plus chars.
    std::vector<std::pair<std::string, std::uint64_t>> ranked(substr_counts.begin(),
                                                              substr_counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::size_t seed_count = std::min(ranked.size(), seed_multiplier * vocab_size);

    CandidateMap cands;
    double total_seed = 0.0;
    for (const auto& [c, cnt] : char_counts) {
        cands[c] = {0.0, static_cast<double>(cnt)};
        total_seed += static_cast<double>(cnt);
    }
    for (std::size_t i = 0; i < seed_count; ++i) {
        cands[ranked[i].first] = {0.0, static_cast<double>(ranked[i].second)};
        total_seed += static_cast<double>(ranked[i].second);
    }
    for (auto& [tok, c] : cands) {
        c.logprob = c.count > 0.0 ? std::log(c.count / total_seed) : kFloorLogProb;
    }

    if (words.empty()) {
        // Degenerate corpus: specials only.
        UnigramModel model;
        model.vocab = build_vocab(cands);
        return model;
    }

    Vocabulary vocab = build_vocab(cands);
    for (int it = 0; it < kEmItersPerRound; ++it) em_iteration(cands, vocab, words);

    // Prune 20% of the multi-codepoint candidates per round, lowest loss
    // increase first, until the requested size is reached.
    for (;;) {
        std::vector<std::string> multis;
        for (const auto& [tok, c] : cands) {
            if (text::codepoint_count(tok) >= 2) multis.push_back(tok);
        }
        if (multis.size() <= target_multis) break;

        struct Loss {
            double loss;
            std::string token;
        };
        std::vector<Loss> losses;
        losses.reserve(multis.size());
        for (const std::string& tok : multis) {
            const Candidate& c = cands.at(tok);
            double loss = 0.0;
            if (c.count > 0.0) {
                int id = *vocab.find(tok);
                ViterbiResult alt = viterbi_segment_word(vocab, tok, id);
                loss = c.count * (c.logprob - alt.score);
            }
            losses.push_back({loss, tok});
        }
        std::sort(losses.begin(), losses.end(), [](const Loss& a, const Loss& b) {
            return a.loss != b.loss ? a.loss < b.loss : a.token < b.token;
        });
        std::size_t excess = multis.size() - target_multis;
        std::size_t round = (multis.size() + 4) / 5;  // ceil(20%)
        std::size_t to_prune = std::max<std::size_t>(1, std::min(round, excess));
        for (std::size_t i = 0; i < to_prune; ++i) cands.erase(losses[i].token);

        vocab = build_vocab(cands);
        for (int it = 0; it < kEmItersPerRound; ++it) em_iteration(cands, vocab, words);
    }

    // Final pass, then exact normalization: zero-count tokens get a tiny
    // floor probability and counted tokens are scaled so the total is 1.
    em_iteration(cands, vocab, words);
    double total = 0.0;
    std::size_t floored = 0;
    for (const auto& [tok, c] : cands) {
        if (c.count > 0.0) {
            total += c.count;
        } else {
            ++floored;
        }
    }
    double counted_mass = 1.0 - static_cast<double>(floored) * kFinalFloorProb;
    UnigramModel model;
    for (const auto& [tok, c] : cands) {
        double p = c.count > 0.0 ? (c.count / total) * counted_mass : kFinalFloorProb;
        model.vocab.add(tok, std::log(p));
    }
    return model;
}

std::vector<int> segment_unigram(const UnigramModel& model, std::string_view text) {
    std::vector<int> out;
    for (const std::string& word : marked_words(text)) {
        ViterbiResult r = viterbi_segment_word(model.vocab, word);
        for (const std::string& piece : r.pieces) {
            std::optional<int> id = model.vocab.find(piece);
            if (id && *id >= Vocabulary::kNumSpecials) {
                out.push_back(*id);
            } else {
                out.push_back(Vocabulary::kUnk);
            }
        }
    }
    return out;
}

}  // namespace voctra
