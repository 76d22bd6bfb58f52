#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace voctra {

struct Document {
    std::string text;
    std::optional<std::string> label;
};

struct Corpus {
    std::string name;
    std::vector<Document> documents;

    std::size_t size() const { return documents.size(); }
    bool fully_labeled() const;
};

enum class CorpusFormat {
    Lines,       // one document per non-empty line
    LabeledTsv,  // label<TAB>text, no header, no escaping
};

CorpusFormat corpus_format_from_string(const std::string& s);

// Loads a UTF-8 text file. Empty lines are skipped in both formats; a
// non-empty LabeledTsv line without a tab or with an empty label is a
// ParseError naming the 1-based line number.
Corpus load_corpus(const std::string& path, CorpusFormat format);

// Inverse of load_corpus; load -> save -> load is byte-identical.
void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format);

struct SplitSpec {
    double train = 0.5;
    double dev = 0.25;
    double test = 0.25;
    bool stratified = true;
    std::uint64_t seed = 0;

    void validate() const;  // throws ContractError
};

struct CorpusSplit {
    Corpus train;
    Corpus dev;
    Corpus test;
};

// Deterministic (seeded) split. When stratified, documents are grouped by
// label and apportioned per group so each split's per-label count is within
// one document of the ideal fraction.
CorpusSplit split(const Corpus& corpus, const SplitSpec& spec);

// Distinct whitespace-delimited words after normalization (NFC + lowercase).
std::size_t count_unique_words(const Corpus& corpus);

// Normalized word -> occurrence count over the whole corpus.
std::vector<std::pair<std::string, std::uint64_t>> word_frequencies(const Corpus& corpus);

}  // namespace voctra
