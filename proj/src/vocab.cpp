#include "voctra/vocab.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "voctra/errors.hpp"
#include "voctra/rng.hpp"
#include "voctra/text.hpp"

namespace voctra {

const std::array<std::string_view, 5>& Vocabulary::special_names() {
    static const std::array<std::string_view, 5> names = {
        "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"};
    return names;
}

Vocabulary::Vocabulary() {
    for (std::string_view name : special_names()) add(std::string(name), 0.0);
}

int Vocabulary::add(std::string token, double score) {
    if (token.empty()) throw ContractError("vocabulary token must be non-empty");
    if (token.find('\t') != std::string::npos || token.find('\n') != std::string::npos) {
        throw ContractError("vocabulary token contains tab or newline");
    }
    if (index_.count(token)) {
        throw ContractError("duplicate vocabulary token: " + token);
    }
    int id = static_cast<int>(entries_.size());
    index_.emplace(token, id);
    entries_.push_back({std::move(token), score});
    return id;
}

std::optional<int> Vocabulary::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Vocabulary::serialize() const {
    std::string out;
    char buf[64];
    for (const Entry& e : entries_) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.score);
        out += e.token;
        out += '\t';
        out += buf;
        out += '\n';
    }
    return out;
}

void Vocabulary::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write vocabulary file: " + path);
    out << serialize();
    if (!out) throw Error("write failed: " + path);
}

Vocabulary Vocabulary::parse(std::string_view data, const std::string& origin) {
    Vocabulary vocab;
    vocab.entries_.clear();
    vocab.index_.clear();

    std::size_t pos = 0, line_no = 0;
    while (pos < data.size()) {
        std::size_t eol = data.find('\n', pos);
        if (eol == std::string_view::npos) eol = data.size();
        std::string_view line = data.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError(origin + ":" + std::to_string(line_no) +
                             ": expected token<TAB>score");
        }
        std::string token(line.substr(0, tab));
        if (!text::is_valid_utf8(token)) {
            throw ParseError(origin + ":" + std::to_string(line_no) + ": invalid UTF-8");
        }
        std::string score_str(line.substr(tab + 1));
        char* endp = nullptr;
        double score = std::strtod(score_str.c_str(), &endp);
        if (endp == score_str.c_str() || *endp != '\0') {
            throw ParseError(origin + ":" + std::to_string(line_no) + ": bad score");
        }
        vocab.add(std::move(token), score);
    }
    if (vocab.size() < kNumSpecials) {
        throw ParseError(origin + ": vocabulary is missing special tokens");
    }
    for (int i = 0; i < kNumSpecials; ++i) {
        if (vocab.token(i) != special_names()[i]) {
            throw ParseError(origin + ": line " + std::to_string(i + 1) +
                             " must be " + std::string(special_names()[i]));
        }
    }
    return vocab;
}

Vocabulary Vocabulary::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open vocabulary file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::string Vocabulary::fingerprint() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(serialize())));
    return buf;
}

}  // namespace voctra
