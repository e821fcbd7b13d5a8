#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abovelp/halfint.hpp"

namespace abovelp {

// Directed network over half-integral capacities. Arcs are stored once and
// addressed by half-arc ids: 2*a traverses arc a forward, 2*a+1 traverses it
// backward, so residual walks need no hashing.
struct DirectedNet {
    struct Arc {
        int32_t from = -1;
        int32_t to = -1;
        HalfInt cap;           // ignored when unbounded
        bool unbounded = false;
    };

    int node_count = 0;
    int source = -1;
    int sink = -1;
    std::vector<Arc> arcs;
    std::vector<std::vector<int32_t>> adj;  // half-arc ids with tail at the node
    std::vector<char> node_enabled;

    int add_node();
    int add_arc(int from, int to, HalfInt cap);
    int add_unbounded_arc(int from, int to);
    void disable_node(int v) { node_enabled[v] = 0; }
    bool enabled(int v) const { return node_enabled[v] != 0; }

    static int arc_of(int half) { return half >> 1; }
    static bool is_backward(int half) { return (half & 1) != 0; }
    int half_head(int half) const {
        const Arc& a = arcs[arc_of(half)];
        return is_backward(half) ? a.from : a.to;
    }
    int half_tail(int half) const {
        const Arc& a = arcs[arc_of(half)];
        return is_backward(half) ? a.to : a.from;
    }
};

// Per-arc flow plus the cached amount leaving the source.
struct FlowState {
    std::vector<HalfInt> flow;
    HalfInt amount;
};

FlowState zero_flow(const DirectedNet& net);

// residual capacity of a half-arc: nullopt = unbounded
std::optional<HalfInt> residual_cap(const DirectedNet& net, const FlowState& f, int half);
bool residual_positive(const DirectedNet& net, const FlowState& f, int half);

// View of the residual graph; arcs are derived on the fly from net + flow.
struct ResidualView {
    const DirectedNet* net = nullptr;
    const FlowState* flow = nullptr;

    // visits every residual arc leaving u (enabled heads only)
    template <class Fn>
    void arcs_from(int u, Fn&& fn) const {
        for (int32_t h : net->adj[u]) {
            int v = net->half_head(h);
            if (!net->enabled(v)) continue;
            if (residual_positive(*net, *flow, h)) fn(v, h);
        }
    }
    std::vector<std::pair<int, int>> materialize() const;  // (u,v) arcs, tests only
};

inline ResidualView residual(const DirectedNet& net, const FlowState& flow) {
    return ResidualView{&net, &flow};
}

// Ford-Fulkerson augmentation to a maximum flow. Deterministic DFS in arc
// insertion order; returns the total increase. Throws std::runtime_error if
// an all-unbounded augmenting path exists (structurally invalid net).
// When stop_above is set, augmentation aborts once the amount exceeds it
// (used by budgeted searches that only care whether the cut fits).
HalfInt augment_to_max(const DirectedNet& net, FlowState& flow, int64_t* path_count = nullptr,
                       std::optional<HalfInt> stop_above = std::nullopt);

// true iff an augmenting path exists (flow not maximum); no mutation
bool has_augmenting_path(const DirectedNet& net, const FlowState& flow);

// forward reachability over residual arcs; returns a node mask
std::vector<char> reachable_from(const ResidualView& view, int origin);

// Strongly connected components of the residual graph induced on a node set.
// Arcs leaving the set do not affect membership; tail status counts only
// condensation arcs between components inside the set.
struct SccDecomposition {
    std::vector<int32_t> comp;                    // -1 outside the restricted set
    std::vector<std::vector<int32_t>> members;    // component -> nodes, topological order
    std::vector<int32_t> succ_count;              // distinct successors inside the set
    std::vector<std::vector<int32_t>> preds;      // distinct predecessors inside the set
    bool is_tail(int c) const { return succ_count[c] == 0; }
};

SccDecomposition scc_condense(const ResidualView& view, const std::vector<char>& restricted_to);

// Cancels all flow passing through `node` by walking flow paths back to the
// source and forward to the sink; flow cycles met on the way are cancelled
// too. Returns the amount removed from the flow. Conservation holds on exit.
HalfInt remove_node_flow(const DirectedNet& net, FlowState& flow, int node);

// conservation + capacity check, used by tests and debug assertions
bool flow_is_feasible(const DirectedNet& net, const FlowState& flow);

}  // namespace abovelp
