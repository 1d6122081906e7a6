#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chain.hpp"
#include "core.hpp"

namespace lcsim {

enum class EventKind {
    Mine,
    Send,
    Deliver,
    Confirm,
    Finalize,
    Halt,
    Join,
    Leave,
    Recovery,
    TxIssue,
};

inline const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::Mine: return "MINE";
        case EventKind::Send: return "SEND";
        case EventKind::Deliver: return "DELIVER";
        case EventKind::Confirm: return "CONFIRM";
        case EventKind::Finalize: return "FINALIZE";
        case EventKind::Halt: return "HALT";
        case EventKind::Join: return "JOIN";
        case EventKind::Leave: return "LEAVE";
        case EventKind::Recovery: return "RECOVERY";
        case EventKind::TxIssue: return "TX_ISSUE";
    }
    return "?";
}

enum class MsgKind { Block, Tx };

// One totally ordered record per protocol event. `id` is a block id except
// for Deliver/Send (block or tx, see msg), TxIssue (tx id) and Recovery
// (new genesis id, with `aux` = chosen node).
struct TraceEvent {
    EventKind kind;
    Round round = 0;
    NodeId node = -1;
    int id = -1;
    MsgKind msg = MsgKind::Block;
    int aux = -1;
};

struct TraceNode {
    NodeId id = -1;
    NodeKind kind = NodeKind::HonestNakamoto;
    int power = 0;
    Protocol protocol = Protocol::Nakamoto;
    int k = 0;
    Round join_round = 0;
    Round leave_round = kNoRound;  // kNoRound = never leaves
};

struct NodeSnapshot {
    NodeId id = -1;
    bool halted = false;
    bool ever_halted = false;
    BlockId genesis = kNoBlock;
    BlockId finalized_tip = kNoBlock;
    int finalized_count = 0;
};

// Complete, replayable record of one trial.
struct RunTrace {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
    std::string scenario;
    double p = 0.0;
    int delta = 0;
    int k = 0;
    Round rounds = 0;

    std::vector<TraceNode> nodes;
    std::vector<Block> blocks;  // snapshot of the block store
    std::vector<TraceEvent> events;
    std::vector<NodeSnapshot> snapshots;

    const TraceNode& node_info(NodeId id) const {
        for (const auto& n : nodes)
            if (n.id == id) return n;
        throw config_error("trace references unknown node " + std::to_string(id));
    }

    bool node_is_honest(NodeId id) const { return is_honest(node_info(id).kind); }
};

// ── Line-delimited trace format ─────────────────────────────────────────────
//
//   # lcsim-trace v1
//   meta seed=<u64> trial=<u64> scenario=<name> p=<float> delta=<int> k=<int> rounds=<int>
//   node id=<i> kind=<KIND> power=<i> protocol=<P> k=<i> join=<r> leave=<r|->
//   block id=<i> parent=<i|-> height=<i> miner=<i> round=<r> txs=<a,b,...|->
//   event round=<r> kind=<KIND> node=<i> id=<i> msg=<block|tx> aux=<i>
//   snap node=<i> halted=<0|1> ever_halted=<0|1> genesis=<i> final_tip=<i|-> final_count=<i>
//
// Field order is fixed;文ields never contain spaces. Replaying a trial with the
// same (scenario, seed, trial) must reproduce these bytes exactly.

inline constexpr const char* kTraceHeader = "# lcsim-trace v1";

namespace trace_detail {

inline std::string opt_id(int v) { return v == kNoBlock ? std::string("-") : std::to_string(v); }

inline int parse_opt_id(const std::string& s) {
    return s == "-" ? kNoBlock : std::stoi(s);
}

// Parses "key=value" returning value; enforces the expected key.
inline std::string field(std::istringstream& in, const char* key) {
    std::string tok;
    if (!(in >> tok)) throw config_error(std::string("trace: missing field ") + key);
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw config_error(std::string("trace: expected field ") + key + ", got " + tok);
    return tok.substr(eq + 1);
}

inline NodeKind parse_kind(const std::string& s) {
    if (s == "HONEST_NAKAMOTO") return NodeKind::HonestNakamoto;
    if (s == "HONEST_STUBBORN") return NodeKind::HonestStubborn;
    if (s == "OBSERVER") return NodeKind::Observer;
    if (s == "CORRUPT") return NodeKind::Corrupt;
    throw config_error("trace: unknown node kind " + s);
}

inline EventKind parse_event_kind(const std::string& s) {
    for (EventKind k : {EventKind::Mine, EventKind::Send, EventKind::Deliver, EventKind::Confirm,
                        EventKind::Finalize, EventKind::Halt, EventKind::Join, EventKind::Leave,
                        EventKind::Recovery, EventKind::TxIssue})
        if (s == to_string(k)) return k;
    throw config_error("trace: unknown event kind " + s);
}

}  // namespace trace_detail

inline void write_trace(const RunTrace& t, std::ostream& os) {
    using trace_detail::opt_id;
    os << kTraceHeader << "\n";
    os << "meta seed=" << t.seed << " trial=" << t.trial << " scenario=" << t.scenario
       << " p=" << t.p << " delta=" << t.delta << " k=" << t.k << " rounds=" << t.rounds << "\n";
    for (const auto& n : t.nodes)
        os << "node id=" << n.id << " kind=" << to_string(n.kind) << " power=" << n.power
           << " protocol=" << to_string(n.protocol) << " k=" << n.k << " join=" << n.join_round
           << " leave=" << (n.leave_round == kNoRound ? std::string("-") : std::to_string(n.leave_round))
           << "\n";
    for (const auto& b : t.blocks) {
        os << "block id=" << b.id << " parent=" << opt_id(b.parent) << " height=" << b.height
           << " miner=" << b.miner << " round=" << b.mined_round << " txs=";
        if (b.payload.empty()) {
            os << "-";
        } else {
            for (std::size_t i = 0; i < b.payload.size(); ++i)
                os << (i ? "," : "") << b.payload[i];
        }
        os << "\n";
    }
    for (const auto& e : t.events)
        os << "event round=" << e.round << " kind=" << to_string(e.kind) << " node=" << e.node
           << " id=" << e.id << " msg=" << (e.msg == MsgKind::Block ? "block" : "tx")
           << " aux=" << e.aux << "\n";
    for (const auto& s : t.snapshots)
        os << "snap node=" << s.id << " halted=" << (s.halted ? 1 : 0)
           << " ever_halted=" << (s.ever_halted ? 1 : 0) << " genesis=" << s.genesis
           << " final_tip=" << opt_id(s.finalized_tip) << " final_count=" << s.finalized_count
           << "\n";
}

inline std::string trace_to_string(const RunTrace& t) {
    std::ostringstream os;
    write_trace(t, os);
    return os.str();
}

inline RunTrace read_trace(std::istream& is) {
    using namespace trace_detail;
    RunTrace t;
    std::string line;
    if (!std::getline(is, line) || line != kTraceHeader)
        throw config_error("trace: bad or missing header line");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "meta") {
            t.seed = std::stoull(field(in, "seed"));
            t.trial = std::stoull(field(in, "trial"));
            t.scenario = field(in, "scenario");
            t.p = std::stod(field(in, "p"));
            t.delta = std::stoi(field(in, "delta"));
            t.k = std::stoi(field(in, "k"));
            t.rounds = std::stoi(field(in, "rounds"));
        } else if (tag == "node") {
            TraceNode n;
            n.id = std::stoi(field(in, "id"));
            n.kind = parse_kind(field(in, "kind"));
            n.power = std::stoi(field(in, "power"));
            n.protocol = field(in, "protocol") == "NAKAMOTO" ? Protocol::Nakamoto : Protocol::Stubborn;
            n.k = std::stoi(field(in, "k"));
            n.join_round = std::stoi(field(in, "join"));
            std::string lv = field(in, "leave");
            n.leave_round = lv == "-" ? kNoRound : std::stoi(lv);
            t.nodes.push_back(n);
        } else if (tag == "block") {
            Block b;
            b.id = std::stoi(field(in, "id"));
            b.parent = parse_opt_id(field(in, "parent"));
            b.height = std::stoi(field(in, "height"));
            b.miner = std::stoi(field(in, "miner"));
            b.mined_round = std::stoi(field(in, "round"));
            std::string txs = field(in, "txs");
            if (txs != "-") {
                std::istringstream ts(txs);
                std::string item;
                while (std::getline(ts, item, ',')) b.payload.push_back(std::stoi(item));
            }
            t.blocks.push_back(std::move(b));
        } else if (tag == "event") {
            TraceEvent e;
            e.round = std::stoi(field(in, "round"));
            e.kind = parse_event_kind(field(in, "kind"));
            e.node = std::stoi(field(in, "node"));
            e.id = std::stoi(field(in, "id"));
            e.msg = field(in, "msg") == "tx" ? MsgKind::Tx : MsgKind::Block;
            e.aux = std::stoi(field(in, "aux"));
            t.events.push_back(e);
        } else if (tag == "snap") {
            NodeSnapshot s;
            s.id = std::stoi(field(in, "node"));
            s.halted = field(in, "halted") == "1";
            s.ever_halted = field(in, "ever_halted") == "1";
            s.genesis = std::stoi(field(in, "genesis"));
            s.finalized_tip = parse_opt_id(field(in, "final_tip"));
            s.finalized_count = std::stoi(field(in, "final_count"));
            t.snapshots.push_back(s);
        } else {
            throw config_error("trace: unknown record tag " + tag);
        }
    }
    return t;
}

}  // namespace lcsim
