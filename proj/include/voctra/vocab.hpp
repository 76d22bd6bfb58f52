#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace voctra {

// Ordered token inventory. Ids are positions; the five special tokens
// always occupy ids 0..4 in the fixed order below. Scores are unigram
// log-probabilities or BPE merge ranks depending on the owning model.
class Vocabulary {
public:
    enum SpecialId : int { kPad = 0, kUnk = 1, kCls = 2, kSep = 3, kMask = 4 };
    static constexpr int kNumSpecials = 5;
    static const std::array<std::string_view, 5>& special_names();

    // Constructs a vocabulary holding only the five specials (score 0).
    Vocabulary();

    // Appends a token; throws ContractError on duplicates or on strings
    // containing tab/newline (they would break the file format).
    int add(std::string token, double score);

    std::size_t size() const { return entries_.size(); }
    const std::string& token(int id) const { return entries_[id].token; }
    double score(int id) const { return entries_[id].score; }
    void set_score(int id, double score) { entries_[id].score = score; }
    bool is_special(int id) const { return id < kNumSpecials; }

    std::optional<int> find(std::string_view token) const;
    bool contains(std::string_view token) const { return find(token).has_value(); }

    // One `token<TAB>score` line per entry, in id order.
    void save(const std::string& path) const;
    std::string serialize() const;
    static Vocabulary load(const std::string& path);
    static Vocabulary parse(std::string_view data, const std::string& origin);

    // FNV-1a 64 of the serialized form, as fixed-width hex.
    std::string fingerprint() const;

private:
    struct Entry {
        std::string token;
        double score;
    };
    std::vector<Entry> entries_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace voctra
