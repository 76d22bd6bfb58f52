#include "voctra/segmenter.hpp"

#include <fstream>
#include <sstream>

#include "voctra/errors.hpp"

namespace voctra {

std::vector<int> Segmenter::segment(std::string_view text) const {
    if (const BpeModel* bpe = std::get_if<BpeModel>(&model_)) {
        return segment_bpe(*bpe, text);
    }
    return segment_unigram(std::get<UnigramModel>(model_), text);
}

const Vocabulary& Segmenter::vocab() const {
    if (const BpeModel* bpe = std::get_if<BpeModel>(&model_)) return bpe->vocab;
    return std::get<UnigramModel>(model_).vocab;
}

void Segmenter::save(const std::string& path) const {
    if (const BpeModel* bpe = std::get_if<BpeModel>(&model_)) {
        bpe->save(path);
    } else {
        std::get<UnigramModel>(model_).save(path);
    }
}

Segmenter Segmenter::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string data = ss.str();
    if (data.find("\n#MERGES\n") != std::string::npos ||
        data.rfind("#MERGES\n", 0) == 0) {
        return Segmenter(BpeModel::parse(data, path));
    }
    return Segmenter(UnigramModel{Vocabulary::parse(data, path)});
}

}  // namespace voctra
