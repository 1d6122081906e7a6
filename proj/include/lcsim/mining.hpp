#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

namespace lcsim {

// One hash attempt per unit of mining power per round; each attempt wins with
// probability p = 1/D. A node with power m owns m units.
struct MiningParams {
    double p = 0.0;
    int n = 0;  // total unit count
    std::uint64_t rng_seed = 0;
};

struct MiningOutcome {
    Round round = 0;
    std::vector<int> successes;  // winning unit ids, ascending
};

/// Draws the round's lottery for the given units (ascending unit-id order).
/// Counter-based: the draw for (seed, trial, round, unit) is a pure function,
/// so replays and paired runs are exact.
inline MiningOutcome draw_round(const std::vector<int>& active_units, const MiningParams& params,
                                std::uint64_t trial, Round round) {
    MiningOutcome out;
    out.round = round;
    for (int u : active_units) {
        if (draw_u01(params.rng_seed, trial, static_cast<std::uint64_t>(round),
                     static_cast<std::uint64_t>(u)) < params.p)
            out.successes.push_back(u);
    }
    return out;
}

/// Expected hash attempts per mined block: 1/p (the difficulty D).
inline double expected_hashes_per_block(const MiningParams& params) {
    if (params.p <= 0.0) throw config_error("expected_hashes_per_block: p must be positive");
    return 1.0 / params.p;
}

}  // namespace lcsim
