#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace lcsim {

// All USD accounting is exact: gross − recouped = net holds bit-for-bit.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct EconParams {
    Rat c;          // USD per hash attempt
    Rat D;          // difficulty: expected hashes per block (= 1/p)
    Rat p_b;        // USD block reward
    Rat p_b_tilde;  // USD bribe per attack block (bribery model)
    Rat psi_a;      // USD per-miner harm if the attack succeeds (bribery model)
};

enum class MinerAction { MineAttack, MineHonest, NoMine };
enum class AttackOutcome { Succeed, Fail };
enum class CommunityResponse { None, NoRecoup };

inline const char* to_string(MinerAction a) {
    switch (a) {
        case MinerAction::MineAttack: return "MINE_ATTACK";
        case MinerAction::MineHonest: return "MINE_HONEST";
        case MinerAction::NoMine: return "NO_MINE";
    }
    return "?";
}

// Fixed miner population; the attacker commits to paying p̃_b per attack-chain
// block. x is the number of hashes a miner computes during the attack.
struct BriberyParams {
    Rat p_b;
    Rat p_b_tilde;
    Rat c;
    Rat D;
    Rat psi_a;
    Rat x;
    int n_miners = 0;
    int k = 0;  // attack chain length
    // One miner's power share must stay below this for the dominance argument
    // (a pivotal miner internalizes the attack's success).
    Rat pivotality_threshold = Rat(1, 100);
};

/// The six-cell miner payoff matrix under the bribery contract.
inline Rat bribery_payoff(MinerAction action, AttackOutcome outcome, const BriberyParams& p) {
    const bool succeed = outcome == AttackOutcome::Succeed;
    switch (action) {
        case MinerAction::MineAttack: {
            Rat base = p.x * (p.p_b_tilde / p.D - p.c);
            return succeed ? base - p.psi_a : base;
        }
        case MinerAction::MineHonest:
            return succeed ? -p.x * p.c - p.psi_a : p.x * (p.p_b / p.D - p.c);
        case MinerAction::NoMine:
            return succeed ? -p.psi_a : Rat(0);
    }
    return Rat(0);
}

struct BriberyEquilibrium {
    MinerAction per_miner_action = MinerAction::MineHonest;
    AttackOutcome outcome = AttackOutcome::Fail;
    Rat attacker_net_cost;
    bool dominant = false;  // MINE_ATTACK strictly dominant, verified cell by cell
};

/// Resolves the simultaneous-move game analytically. MINE_ATTACK is strictly
/// dominant iff p̃_b > p_b and honest participation holds (p_b/D ≥ c), checked
/// cell by cell rather than assumed. Refuses when a single miner is pivotal.
inline BriberyEquilibrium bribery_equilibrium(const BriberyParams& p) {
    if (p.n_miners < 1) throw config_error("bribery_equilibrium: need at least one miner");
    Rat share(1, p.n_miners);
    if (share >= p.pivotality_threshold)
        throw config_error(
            "bribery_equilibrium: a single miner's power share " + to_string(share) +
            " reaches the pivotality threshold " + to_string(p.pivotality_threshold) +
            "; the dominance argument does not apply");
    if (p.p_b / p.D < p.c)
        throw config_error("bribery_equilibrium: honest participation violated (p_b/D < c)");
    if (p.x <= 0) throw config_error("bribery_equilibrium: x must be positive");

    auto pay = [&](MinerAction a, AttackOutcome o) { return bribery_payoff(a, o, p); };
    const bool dominant =
        pay(MinerAction::MineAttack, AttackOutcome::Succeed) > pay(MinerAction::MineHonest, AttackOutcome::Succeed) &&
        pay(MinerAction::MineAttack, AttackOutcome::Succeed) > pay(MinerAction::NoMine, AttackOutcome::Succeed) &&
        pay(MinerAction::MineAttack, AttackOutcome::Fail) > pay(MinerAction::MineHonest, AttackOutcome::Fail) &&
        pay(MinerAction::MineAttack, AttackOutcome::Fail) > pay(MinerAction::NoMine, AttackOutcome::Fail);

    BriberyEquilibrium eq;
    eq.dominant = dominant;
    if (dominant) {
        eq.per_miner_action = MinerAction::MineAttack;
        eq.outcome = AttackOutcome::Succeed;
        eq.attacker_net_cost = Rat(p.k) * (p.p_b_tilde - p.p_b);
    } else {
        // Without p̃_b > p_b, honest mining is weakly better when the attack
        // would fail, so it fails.
        eq.per_miner_action = MinerAction::MineHonest;
        eq.outcome = AttackOutcome::Fail;
        eq.attacker_net_cost = Rat(0);
    }
    return eq;
}

struct CostReport {
    Rat gross_cost;
    Rat rewards_recouped;
    Rat net_cost;
    std::vector<std::pair<BlockId, Rat>> per_block;  // recouped rewards per attack block

    void check_identity() const {
        require(gross_cost - rewards_recouped == net_cost, "CostReport identity violated");
    }
};

/// Rental-model accounting: gross = hash attempts · c, recouped = attack blocks
/// that sit in the final honest consensus chain · p_b (zero under NO_RECOUP).
inline CostReport rental_cost(long long hash_attempts, const std::vector<BlockId>& recouped_blocks,
                              const EconParams& econ, CommunityResponse response) {
    CostReport r;
    r.gross_cost = Rat(hash_attempts) * econ.c;
    r.rewards_recouped = Rat(0);
    if (response == CommunityResponse::None) {
        for (BlockId b : recouped_blocks) {
            r.per_block.emplace_back(b, econ.p_b);
            r.rewards_recouped += econ.p_b;
        }
    }
    r.net_cost = r.gross_cost - r.rewards_recouped;
    r.check_identity();
    return r;
}

/// Bribery-model accounting for a k-block attack chain. Requires the dominance
/// conditions to have been established.
inline CostReport bribery_cost(int k, const EconParams& econ, CommunityResponse response,
                               const BriberyEquilibrium& eq) {
    if (!eq.dominant) throw config_error("bribery_cost: dominance not established");
    CostReport r;
    r.gross_cost = Rat(k) * econ.p_b_tilde;  // bribes paid, one per attack block
    r.rewards_recouped = response == CommunityResponse::None ? Rat(k) * econ.p_b : Rat(0);
    r.net_cost = r.gross_cost - r.rewards_recouped;
    for (int i = 0; i < k; ++i)
        r.per_block.emplace_back(kNoBlock, response == CommunityResponse::None ? econ.p_b : Rat(0));
    r.check_identity();
    return r;
}

enum class CostModel { Rental, Bribery };

struct SecuritySummary {
    bool infinite = false;
    Rat value;            // meaningful when !infinite
    bool attained = true;  // false: infimum only ("arbitrarily close to zero")
};

/// Economic security = minimal attacker cost to violate consistency.
inline SecuritySummary economic_security_summary(Protocol protocol, CostModel model,
                                                 const EconParams&) {
    SecuritySummary s;
    if (protocol == Protocol::Stubborn) {
        s.infinite = true;  // consistency holds against unbounded attackers
        return s;
    }
    s.value = Rat(0);
    s.attained = model == CostModel::Rental;  // bribery: infimum 0, not attained
    return s;
}

}  // namespace lcsim
