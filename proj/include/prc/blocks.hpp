#ifndef PRC_BLOCKS_HPP
#define PRC_BLOCKS_HPP

#include <bit>
#include <cstdint>
#include <map>

namespace prc {

/// Blocks of a point set {0,...,v-1} with positive multiplicities.
/// Blocks are bitmasks, so v <= 63.
struct BlockMultiset {
    int v = 0;
    std::map<std::uint64_t, long long> blocks;

    void add(std::uint64_t mask, long long mult = 1) { blocks[mask] += mult; }

    long long total_blocks() const {
        long long n = 0;
        for (const auto& [mask, mult] : blocks) n += mult;
        return n;
    }

    bool empty() const { return blocks.empty(); }

    // Common block size, or -1 when sizes differ (or the multiset is empty).
    int uniform_block_size() const {
        int h = -1;
        for (const auto& [mask, mult] : blocks) {
            int s = std::popcount(mask);
            if (h == -1) h = s;
            else if (h != s) return -1;
        }
        return h;
    }

    bool operator==(const BlockMultiset& o) const { return v == o.v && blocks == o.blocks; }
};

} // namespace prc

#endif
