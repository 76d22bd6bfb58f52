#pragma once

#include <memory>
#include <string>
#include <variant>

#include "voctra/bpe.hpp"
#include "voctra/unigram.hpp"

namespace voctra {

// Uniform handle over the two trained tokenizer families. Deterministic
// segmentation only (plain BPE, Viterbi unigram).
class Segmenter {
public:
    explicit Segmenter(BpeModel model) : model_(std::move(model)) {}
    explicit Segmenter(UnigramModel model) : model_(std::move(model)) {}

    std::vector<int> segment(std::string_view text) const;
    const Vocabulary& vocab() const;
    bool is_bpe() const { return std::holds_alternative<BpeModel>(model_); }

    void save(const std::string& path) const;
    // Detects the family by the #MERGES sentinel.
    static Segmenter load(const std::string& path);

private:
    std::variant<BpeModel, UnigramModel> model_;
};

}  // namespace voctra
