#include "voctra/bpe.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "voctra/errors.hpp"
#include "voctra/rng.hpp"
#include "voctra/text.hpp"

namespace voctra {

namespace {

constexpr char kRankSep = '\x01';
constexpr std::string_view kMergeSentinel = "#MERGES";

std::string rank_key(std::string_view left, std::string_view right) {
    std::string k;
    k.reserve(left.size() + right.size() + 1);
    k += left;
    k += kRankSep;
    k += right;
    return k;
}

struct PairCount {
    std::uint64_t count;
    std::string left, right;
};

// Max by count; ties go to the lexicographically smallest (left, right).
struct PairLess {
    bool operator()(const PairCount& a, const PairCount& b) const {
        if (a.count != b.count) return a.count < b.count;
        if (a.left != b.left) return a.left > b.left;
        return a.right > b.right;
    }
};

}  // namespace

std::vector<std::string> marked_words(std::string_view text) {
    std::vector<std::string> words = text::split_words(text::normalize(text));
    for (std::string& w : words) w.insert(0, text::kBoundaryMarker);
    return words;
}

const std::unordered_map<std::string, int>& BpeModel::merge_ranks() const {
    if (ranks_.empty() && !merges.empty()) {
        for (std::size_t r = 0; r < merges.size(); ++r) {
            ranks_.emplace(rank_key(merges[r].first, merges[r].second),
                           static_cast<int>(r));
        }
    }
    return ranks_;
}

BpeModel train_bpe(const Corpus& corpus, std::size_t vocab_size) {
    // Unique marker-prefixed words with frequencies.
    std::map<std::string, std::uint64_t> word_counts;
    for (const Document& d : corpus.documents) {
        for (std::string& w : marked_words(d.text)) ++word_counts[std::move(w)];
    }

    // Character alphabet (the boundary marker counts as a character).
    std::set<std::string> alphabet;
    std::vector<std::vector<std::string>> words;
    std::vector<std::uint64_t> counts;
    words.reserve(word_counts.size());
    for (const auto& [w, c] : word_counts) {
        std::vector<std::string> symbols = text::codepoint_strings(w);
        for (const std::string& s : symbols) alphabet.insert(s);
        words.push_back(std::move(symbols));
        counts.push_back(c);
    }

    std::size_t min_size = Vocabulary::kNumSpecials + alphabet.size();
    if (vocab_size < min_size) {
        throw ContractError("vocab_size " + std::to_string(vocab_size) +
                            " too small; minimum feasible size is " +
                            std::to_string(min_size));
    }

    BpeModel model;
    for (const std::string& ch : alphabet) model.vocab.add(ch, 0.0);

    // Pair counts plus, per pair, the set of word indices containing it.
    std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts;
    std::map<std::pair<std::string, std::string>, std::set<std::size_t>> pair_words;
    auto add_word_pairs = [&](std::size_t wi, std::int64_t sign) {
        const auto& syms = words[wi];
        for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
            auto key = std::make_pair(syms[i], syms[i + 1]);
            if (sign > 0) {
                pair_counts[key] += counts[wi];
                pair_words[key].insert(wi);
            } else {
                pair_counts[key] -= counts[wi];
            }
        }
    };
    for (std::size_t wi = 0; wi < words.size(); ++wi) add_word_pairs(wi, +1);

    std::priority_queue<PairCount, std::vector<PairCount>, PairLess> heap;
    for (const auto& [key, c] : pair_counts) heap.push({c, key.first, key.second});

    while (model.vocab.size() < vocab_size && !heap.empty()) {
        PairCount top = heap.top();
        heap.pop();
        auto key = std::make_pair(top.left, top.right);
        auto it = pair_counts.find(key);
        if (it == pair_counts.end() || it->second != top.count) continue;  // stale
        if (top.count < 2) break;

        model.merges.emplace_back(top.left, top.right);
        std::string merged = top.left + top.right;
        if (!model.vocab.contains(merged)) model.vocab.add(merged, double(model.merges.size() - 1));

        // Rewrite every word containing the pair and refresh its pair counts.
        std::set<std::size_t> affected;
        affected.swap(pair_words[key]);
        pair_words.erase(key);
        std::set<std::pair<std::string, std::string>> touched;
        for (std::size_t wi : affected) {
            auto& syms = words[wi];
            for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
                touched.emplace(syms[i], syms[i + 1]);
            }
            add_word_pairs(wi, -1);
            std::vector<std::string> out;
            out.reserve(syms.size());
            std::size_t i = 0;
            while (i < syms.size()) {
                if (i + 1 < syms.size() && syms[i] == top.left && syms[i + 1] == top.right) {
                    out.push_back(merged);
                    i += 2;
                } else {
                    out.push_back(syms[i]);
                    ++i;
                }
            }
            syms = std::move(out);
            add_word_pairs(wi, +1);
            for (std::size_t i2 = 0; i2 + 1 < syms.size(); ++i2) {
                touched.emplace(syms[i2], syms[i2 + 1]);
            }
        }
        pair_counts.erase(key);
        for (const auto& t : touched) {
            auto cit = pair_counts.find(t);
            if (cit != pair_counts.end() && cit->second > 0) {
                heap.push({cit->second, t.first, t.second});
            } else if (cit != pair_counts.end() && cit->second == 0) {
                pair_counts.erase(cit);
            }
        }
    }
    return model;
}

namespace {

struct Symbol {
    std::string piece;
    bool known;        // false -> emits UNK
    std::uint64_t id;  // instance id for dropout vetoes
};

std::vector<int> run_bpe(const BpeModel& model, std::string_view text, double p,
                         std::uint64_t seed, bool dropout) {
    const auto& ranks = model.merge_ranks();
    Rng rng(derive_seed(seed, "bpe-dropout"));
    std::vector<int> out;

    for (const std::string& word : marked_words(text)) {
        std::vector<Symbol> syms;
        std::uint64_t next_id = 0;
        for (std::string& cp : text::codepoint_strings(word)) {
            bool known = model.vocab.contains(cp);
            syms.push_back({std::move(cp), known, next_id++});
        }
        // (left instance, right instance) pairs whose merge was dropped.
        std::set<std::pair<std::uint64_t, std::uint64_t>> vetoed;

        for (;;) {
            int best_rank = -1;
            std::size_t best_pos = 0;
            for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
                if (!syms[i].known || !syms[i + 1].known) continue;
                if (vetoed.count({syms[i].id, syms[i + 1].id})) continue;
                auto it = ranks.find(rank_key(syms[i].piece, syms[i + 1].piece));
                if (it == ranks.end()) continue;
                if (best_rank < 0 || it->second < best_rank) {
                    best_rank = it->second;
                    best_pos = i;
                }
            }
            if (best_rank < 0) break;
            if (dropout && rng.uniform01() < p) {
                vetoed.insert({syms[best_pos].id, syms[best_pos + 1].id});
                continue;
            }
            syms[best_pos].piece += syms[best_pos + 1].piece;
            syms[best_pos].id = next_id++;
            syms.erase(syms.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1);
        }

        for (const Symbol& s : syms) {
            if (!s.known) {
                out.push_back(Vocabulary::kUnk);
            } else {
                out.push_back(*model.vocab.find(s.piece));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<int> segment_bpe(const BpeModel& model, std::string_view text) {
    return run_bpe(model, text, 0.0, 0, false);
}

std::vector<int> segment_bpe_dropout(const BpeModel& model, std::string_view text,
                                     double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw ContractError("dropout probability outside [0, 1]");
    return run_bpe(model, text, p, seed, true);
}

std::string BpeModel::serialize() const {
    std::string out = vocab.serialize();
    out += kMergeSentinel;
    out += '\n';
    for (const auto& [l, r] : merges) {
        out += l;
        out += ' ';
        out += r;
        out += '\n';
    }
    return out;
}

void BpeModel::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write model file: " + path);
    out << serialize();
    if (!out) throw Error("write failed: " + path);
}

BpeModel BpeModel::parse(std::string_view data, const std::string& origin) {
    std::size_t sentinel = data.find(std::string(kMergeSentinel) + "\n");
    if (sentinel == std::string_view::npos) {
        throw ParseError(origin + ": missing " + std::string(kMergeSentinel) + " section");
    }
    BpeModel model;
    model.vocab = Vocabulary::parse(data.substr(0, sentinel), origin);
    std::size_t pos = sentinel + kMergeSentinel.size() + 1;
    while (pos < data.size()) {
        std::size_t eol = data.find('\n', pos);
        if (eol == std::string_view::npos) eol = data.size();
        std::string_view line = data.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos) {
            throw ParseError(origin + ": malformed merge line");
        }
        model.merges.emplace_back(std::string(line.substr(0, sp)),
                                  std::string(line.substr(sp + 1)));
    }
    return model;
}

BpeModel BpeModel::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return BpeModel::parse(ss.str(), path);
}

}  // namespace voctra
