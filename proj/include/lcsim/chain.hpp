#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace lcsim {

struct Block {
    BlockId id = kNoBlock;
    BlockId parent = kNoBlock;  // kNoBlock only for the original genesis
    int height = 0;
    NodeId miner = kOracleMiner;
    Round mined_round = 0;
    std::vector<TxId> payload;
};

/// Append-only store of every block minted in a run. Ids are dense and
/// monotonically increasing in creation order, so a parent's id is always
/// smaller than its children's.
class BlockStore {
public:
    /// Registers a block. `parent == nullopt` creates a genesis (height 0).
    BlockId make_block(std::optional<BlockId> parent, std::vector<TxId> payload,
                       NodeId miner, Round round) {
        Block b;
        b.id = static_cast<BlockId>(blocks_.size());
        if (parent) {
            if (*parent < 0 || *parent >= static_cast<BlockId>(blocks_.size()))
                throw std::invalid_argument("make_block: unknown parent id");
            b.parent = *parent;
            b.height = blocks_[*parent].height + 1;
        } else {
            b.parent = kNoBlock;
            b.height = 0;
        }
        std::unordered_set<TxId> seen(payload.begin(), payload.end());
        if (seen.size() != payload.size())
            throw std::invalid_argument("make_block: duplicate payload tx ids");
        b.miner = miner;
        b.mined_round = round;
        b.payload = std::move(payload);
        blocks_.push_back(std::move(b));
        return blocks_.back().id;
    }

    const Block& operator[](BlockId id) const { return blocks_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(blocks_.size()); }

    /// Full chain from the tip's root genesis to the tip, in height order.
    std::vector<BlockId> chain_of(BlockId tip) const {
        std::vector<BlockId> out;
        BlockId cur = tip;
        int expect_height = (*this)[tip].height;
        while (cur != kNoBlock) {
            const Block& b = (*this)[cur];
            require(b.height == expect_height, "chain_of: broken parent link");
            out.push_back(cur);
            cur = b.parent;
            --expect_height;
        }
        require(expect_height == -1, "chain_of: chain does not reach a genesis");
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// Ancestor of `tip` at the given height, or kNoBlock if height is out of range.
    BlockId ancestor_at(BlockId tip, int height) const {
        if (height < 0 || height > (*this)[tip].height) return kNoBlock;
        BlockId cur = tip;
        while ((*this)[cur].height > height) cur = (*this)[cur].parent;
        return cur;
    }

    /// tip.height − block.height if `block` is an ancestor-or-self of `tip`;
    /// nullopt (NOT_IN_CHAIN) otherwise. Fork queries are routine, not errors.
    std::optional<int> depth(BlockId block, BlockId tip) const {
        const int h = (*this)[block].height;
        if (ancestor_at(tip, h) != block) return std::nullopt;
        return (*this)[tip].height - h;
    }

    /// Two distinct blocks of the same height can never share a chain.
    bool conflicts(BlockId a, BlockId b) const {
        return a != b && (*this)[a].height == (*this)[b].height;
    }

    bool descends_from(BlockId b, BlockId ancestor) const {
        return ancestor_at(b, (*this)[ancestor].height) == ancestor;
    }

    /// All tx ids contained in the chain ending at `tip`.
    std::unordered_set<TxId> txs_in_chain(BlockId tip) const {
        std::unordered_set<TxId> out;
        for (BlockId cur = tip; cur != kNoBlock; cur = (*this)[cur].parent)
            for (TxId t : (*this)[cur].payload) out.insert(t);
        return out;
    }

private:
    std::vector<Block> blocks_;
};

/// Logs are chains; two logs are prefix-comparable iff the shorter is a prefix
/// of the longer — equivalently, no height present in both holds different blocks.
inline bool prefix_comparable(const std::vector<BlockId>& a, const std::vector<BlockId>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace lcsim
