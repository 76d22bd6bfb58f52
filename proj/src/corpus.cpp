#include "voctra/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "voctra/errors.hpp"
#include "voctra/rng.hpp"
#include "voctra/text.hpp"

namespace voctra {

bool Corpus::fully_labeled() const {
    return std::all_of(documents.begin(), documents.end(),
                       [](const Document& d) { return d.label.has_value(); });
}

CorpusFormat corpus_format_from_string(const std::string& s) {
    if (s == "lines") return CorpusFormat::Lines;
    if (s == "labeled-tsv") return CorpusFormat::LabeledTsv;
    throw ContractError("unknown corpus format: " + s);
}

Corpus load_corpus(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open corpus file: " + path);

    Corpus corpus;
    corpus.name = path;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!text::is_valid_utf8(line)) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": invalid UTF-8");
        }
        if (format == CorpusFormat::Lines) {
            corpus.documents.push_back({line, std::nullopt});
        } else {
            std::size_t tab = line.find('\t');
            if (tab == std::string::npos) {
                throw ParseError(path + ":" + std::to_string(line_no) +
                                 ": expected label<TAB>text");
            }
            std::string label = line.substr(0, tab);
            if (label.empty()) {
                throw ParseError(path + ":" + std::to_string(line_no) + ": empty label");
            }
            corpus.documents.push_back({line.substr(tab + 1), std::move(label)});
        }
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write corpus file: " + path);
    for (const Document& d : corpus.documents) {
        if (format == CorpusFormat::LabeledTsv) {
            if (!d.label) throw ContractError("labeled-tsv output requires labels");
            out << *d.label << '\t';
        }
        out << d.text << '\n';
    }
    if (!out) throw Error("write failed: " + path);
}

void SplitSpec::validate() const {
    for (double f : {train, dev, test}) {
        if (!(f >= 0.0 && f <= 1.0)) {
            throw ContractError("split fractions must lie in [0, 1]");
        }
    }
    if (std::abs(train + dev + test - 1.0) > 1e-9) {
        throw ContractError("split fractions must sum to 1");
    }
}

namespace {

// Apportions n into three parts proportional to the fractions: floor each
// ideal count, then hand leftover units to the largest fractional
// remainders (ties prefer test, then dev, then train). Every part ends
// within one document of its ideal count.
std::array<std::size_t, 3> apportion(std::size_t n, const SplitSpec& spec) {
    double ideal[3] = {spec.train * static_cast<double>(n),
                       spec.dev * static_cast<double>(n),
                       spec.test * static_cast<double>(n)};
    std::array<std::size_t, 3> out{};
    double rem[3];
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        out[i] = static_cast<std::size_t>(std::floor(ideal[i] + 1e-12));
        rem[i] = ideal[i] - static_cast<double>(out[i]);
        assigned += out[i];
    }
    std::size_t leftover = n - assigned;
    int order[3] = {2, 1, 0};  // tie preference: test, dev, train
    std::stable_sort(order, order + 3, [&](int a, int b) { return rem[a] > rem[b]; });
    for (std::size_t u = 0; u < leftover; ++u) out[order[u % 3]] += 1;
    return out;
}

}  // namespace

CorpusSplit split(const Corpus& corpus, const SplitSpec& spec) {
    spec.validate();
    if (spec.stratified && !corpus.fully_labeled()) {
        throw ContractError("stratified split requires every document to be labeled");
    }

    // Group document indices; std::map keeps label order deterministic.
    std::map<std::string, std::vector<std::size_t>> groups;
    if (spec.stratified) {
        for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
            groups[*corpus.documents[i].label].push_back(i);
        }
    } else {
        for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
            groups[""].push_back(i);
        }
    }

    CorpusSplit result;
    result.train.name = corpus.name + "#train";
    result.dev.name = corpus.name + "#dev";
    result.test.name = corpus.name + "#test";
    for (auto& [label, indices] : groups) {
        Rng rng(derive_seed(spec.seed, "split:" + label));
        rng.shuffle(indices);
        auto sizes = apportion(indices.size(), spec);
        std::size_t pos = 0;
        Corpus* dests[3] = {&result.train, &result.dev, &result.test};
        for (int part = 0; part < 3; ++part) {
            for (std::size_t k = 0; k < sizes[part]; ++k, ++pos) {
                dests[part]->documents.push_back(corpus.documents[indices[pos]]);
            }
        }
    }
    return result;
}

std::size_t count_unique_words(const Corpus& corpus) {
    std::unordered_set<std::string> words;
    for (const Document& d : corpus.documents) {
        for (std::string& w : text::split_words(text::normalize(d.text))) {
            words.insert(std::move(w));
        }
    }
    return words.size();
}

std::vector<std::pair<std::string, std::uint64_t>> word_frequencies(const Corpus& corpus) {
    std::unordered_map<std::string, std::uint64_t> counts;
    for (const Document& d : corpus.documents) {
        for (std::string& w : text::split_words(text::normalize(d.text))) {
            ++counts[std::move(w)];
        }
    }
    std::vector<std::pair<std::string, std::uint64_t>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
}

}  // namespace voctra
