#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voctra/vocab.hpp"

namespace voctra {

// A decomposition of a target token into old-vocabulary token strings;
// the concatenation of pieces equals the target exactly.
struct Partition {
    std::vector<std::string> pieces;
};

struct PartitionQueryResult {
    // Minimal-length partitions that contain a piece of the globally
    // longest achievable length, ordered lexicographically by cut
    // positions. Empty when the token cannot be decomposed.
    std::vector<Partition> partitions;
    std::optional<std::size_t> min_length;
    std::optional<std::size_t> longest_piece_len;  // in codepoints
};

inline constexpr std::size_t kDefaultPartitionCap = 10000;

// Length of the shortest decomposition of `token` into old-vocabulary
// tokens (special tokens never match), or nullopt if none exists.
std::optional<std::size_t> min_partition_length(std::string_view token,
                                                const Vocabulary& old_vocab);

// Enumerates minimal-length partitions by DP backtracking, then keeps the
// ones containing the longest piece. Throws CapacityError (naming the
// token) when more than `cap` minimal-length partitions exist.
PartitionQueryResult select_vipi_partitions(std::string_view token,
                                            const Vocabulary& old_vocab,
                                            std::size_t cap = kDefaultPartitionCap);

}  // namespace voctra
