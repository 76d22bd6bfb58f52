#include "voctra/partition.hpp"

#include <algorithm>
#include <limits>

#include "voctra/errors.hpp"
#include "voctra/text.hpp"

namespace voctra {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

// Forward DP over codepoint boundaries: fewest pieces covering the prefix.
// Matching is exact string equality against non-special vocabulary tokens.
struct Dp {
    std::vector<std::size_t> offs;   // byte offset per boundary
    std::vector<std::size_t> fwd;    // min pieces for prefix
    std::size_t n = 0;               // codepoint count
};

Dp forward_dp(std::string_view token, const Vocabulary& vocab) {
    Dp dp;
    dp.offs.push_back(0);
    for (std::size_t i = 1; i < token.size(); ++i) {
        if ((static_cast<unsigned char>(token[i]) & 0xC0) != 0x80) dp.offs.push_back(i);
    }
    dp.offs.push_back(token.size());
    dp.n = dp.offs.size() - 1;

    dp.fwd.assign(dp.n + 1, kUnreachable);
    dp.fwd[0] = 0;
    for (std::size_t i = 1; i <= dp.n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (dp.fwd[j] == kUnreachable) continue;
            std::string_view piece = token.substr(dp.offs[j], dp.offs[i] - dp.offs[j]);
            std::optional<int> id = vocab.find(piece);
            if (!id || *id < Vocabulary::kNumSpecials) continue;
            dp.fwd[i] = std::min(dp.fwd[i], dp.fwd[j] + 1);
        }
    }
    return dp;
}

}  // namespace

std::optional<std::size_t> min_partition_length(std::string_view token,
                                                const Vocabulary& old_vocab) {
    if (token.empty()) throw ContractError("min_partition_length: empty token");
    Dp dp = forward_dp(token, old_vocab);
    if (dp.fwd[dp.n] == kUnreachable) return std::nullopt;
    return dp.fwd[dp.n];
}

PartitionQueryResult select_vipi_partitions(std::string_view token,
                                            const Vocabulary& old_vocab,
                                            std::size_t cap) {
    if (token.empty()) throw ContractError("select_vipi_partitions: empty token");
    PartitionQueryResult result;

    Dp dp = forward_dp(token, old_vocab);
    std::size_t n = dp.n;
    if (dp.fwd[n] == kUnreachable) return result;
    std::size_t min_len = dp.fwd[n];

    // Backward DP (min pieces for the suffix) to identify edges that lie on
    // some minimal-length path.
    std::vector<std::size_t> bwd(n + 1, kUnreachable);
    bwd[n] = 0;
    for (std::size_t j = n; j-- > 0;) {
        for (std::size_t i = j + 1; i <= n; ++i) {
            if (bwd[i] == kUnreachable) continue;
            std::string_view piece = token.substr(dp.offs[j], dp.offs[i] - dp.offs[j]);
            std::optional<int> id = old_vocab.find(piece);
            if (!id || *id < Vocabulary::kNumSpecials) continue;
            bwd[j] = std::min(bwd[j], bwd[i] + 1);
        }
    }

    auto on_minimal_path = [&](std::size_t j, std::size_t i) {
        if (dp.fwd[j] == kUnreachable || bwd[i] == kUnreachable) return false;
        std::string_view piece = token.substr(dp.offs[j], dp.offs[i] - dp.offs[j]);
        std::optional<int> id = old_vocab.find(piece);
        if (!id || *id < Vocabulary::kNumSpecials) return false;
        return dp.fwd[j] + 1 + bwd[i] == min_len;
    };

    // Count minimal paths (saturating at cap + 1) before enumerating.
    std::vector<std::size_t> path_count(n + 1, 0);
    path_count[n] = 1;
    for (std::size_t j = n; j-- > 0;) {
        for (std::size_t i = j + 1; i <= n; ++i) {
            if (!on_minimal_path(j, i)) continue;
            path_count[j] = std::min(path_count[j] + path_count[i], cap + 1);
        }
    }
    if (path_count[0] > cap) {
        throw CapacityError("minimal-length partition count for token \"" +
                            std::string(token) + "\" exceeds cap " + std::to_string(cap));
    }

    // Enumerate in lexicographic cut-position order (DFS, ascending i).
    std::vector<Partition> minimal;
    Partition current;
    auto dfs = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            minimal.push_back(current);
            return;
        }
        for (std::size_t i = j + 1; i <= n; ++i) {
            if (!on_minimal_path(j, i)) continue;
            current.pieces.emplace_back(token.substr(dp.offs[j], dp.offs[i] - dp.offs[j]));
            self(self, i);
            current.pieces.pop_back();
        }
    };
    dfs(dfs, 0);

    std::size_t longest = 0;
    std::vector<std::size_t> piece_max(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::size_t m = 0;
        for (const std::string& p : minimal[k].pieces) {
            m = std::max(m, text::codepoint_count(p));
        }
        piece_max[k] = m;
        longest = std::max(longest, m);
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (piece_max[k] == longest) result.partitions.push_back(std::move(minimal[k]));
    }
    result.min_length = min_len;
    result.longest_piece_len = longest;
    return result;
}

}  // namespace voctra
