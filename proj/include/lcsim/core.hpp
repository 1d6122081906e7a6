#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcsim {

// Discrete protocol time. Round 0 is setup (genesis); the engine steps rounds 1..max_rounds.
using Round = int;

using BlockId = int;
using TxId = int;
using NodeId = int;

inline constexpr BlockId kNoBlock = -1;
inline constexpr Round kNoRound = -1;

// Miner tag for setup and recovery-oracle genesis blocks.
inline constexpr NodeId kOracleMiner = -1;

enum class NodeKind { HonestNakamoto, HonestStubborn, Observer, Corrupt };

inline bool is_honest(NodeKind k) { return k != NodeKind::Corrupt; }

enum class Protocol { Nakamoto, Stubborn };

inline const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::HonestNakamoto: return "HONEST_NAKAMOTO";
        case NodeKind::HonestStubborn: return "HONEST_STUBBORN";
        case NodeKind::Observer: return "OBSERVER";
        case NodeKind::Corrupt: return "CORRUPT";
    }
    return "?";
}

inline const char* to_string(Protocol p) {
    return p == Protocol::Nakamoto ? "NAKAMOTO" : "STUBBORN";
}

// A state the protocol rules out was reached: a bug in the simulator or a
// violated theorem, never a user error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Bad scenario/config/trace input.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace lcsim
