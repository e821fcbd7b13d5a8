#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abovelp/flownet.hpp"

namespace abovelp {

struct MultiwayInstance {
    int n = 0;
    std::vector<std::pair<int32_t, int32_t>> edges;
    std::vector<int32_t> terminals;
    int k = 0;
    void validate() const;
};

struct MultiwayStats {
    int64_t branch_nodes = 0;
    int64_t flows_built = 0;
    int64_t augmentations = 0;
};

// Vertex-capacity flow net isolating `t` from the remaining terminals: every
// vertex v is split into in(v) -> out(v) with capacity 1 (unbounded for
// terminals and for vertices absorbed into t's region); edges become
// unbounded arcs both ways; the other terminals drain into a super sink.
struct IsolatingNet {
    DirectedNet net;
    static int in_node(int v) { return 2 * v; }
    static int out_node(int v) { return 2 * v + 1; }
    int split_arc(int v) const { return split_arc_of[v]; }
    std::vector<int32_t> split_arc_of;
};

IsolatingNet build_isolating_net(int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
                                 const std::vector<char>& alive, const std::vector<char>& in_region,
                                 const std::vector<char>& is_terminal, int t);

// Maximum flow from t to the other terminals, aborted as soon as the amount
// exceeds `cap`. Returns the flow or nothing ("too big").
std::optional<FlowState> min_isolating_flow(const IsolatingNet& inet, int cap,
                                            MultiwayStats* stats = nullptr);

struct IsolatingCutResult {
    std::vector<int32_t> cut;     // vertices whose split arc crosses into the sink side
    std::vector<int32_t> region;  // vertices with both split nodes on the source side
    int amount = 0;
};

// The unique minimum isolating cut with the largest region, read off the
// residual graph: sink-co-reachable nodes form the far side.
IsolatingCutResult farthest_min_isolating_cut(const IsolatingNet& inet, const FlowState& flow);

struct MultiwayResult {
    std::optional<std::vector<int32_t>> cut;
    MultiwayStats stats;
};

// Finds a multiway cut of size <= k (terminals are never deletable) or
// reports that none exists.
MultiwayResult solve_multiway(const MultiwayInstance& inst);

// test helper: true iff no two distinct terminals are connected once `cut`
// is removed
bool multiway_cut_separates(const MultiwayInstance& inst, const std::vector<int32_t>& cut);

}  // namespace abovelp
