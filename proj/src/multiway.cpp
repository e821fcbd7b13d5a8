#include "abovelp/multiway.hpp"

#include <algorithm>
#include <set>

namespace abovelp {

void MultiwayInstance::validate() const {
    ABOVELP_CHECK(k >= 0, "budget must be nonnegative");
    std::set<int32_t> seen;
    for (int t : terminals) {
        ABOVELP_CHECK(0 <= t && t < n, "terminal out of range");
        ABOVELP_CHECK(seen.insert(t).second, "duplicate terminal");
    }
    for (auto [u, v] : edges) {
        ABOVELP_CHECK(0 <= u && u < n && 0 <= v && v < n, "edge endpoint out of range");
        ABOVELP_CHECK(u != v, "self-loop");
    }
}

IsolatingNet build_isolating_net(int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
                                 const std::vector<char>& alive, const std::vector<char>& in_region,
                                 const std::vector<char>& is_terminal, int t) {
    IsolatingNet inet;
    DirectedNet& net = inet.net;
    for (int i = 0; i < 2 * n + 1; i++) net.add_node();
    const int sink = 2 * n;
    net.source = IsolatingNet::out_node(t);
    net.sink = sink;
    inet.split_arc_of.assign(n, -1);
    for (int v = 0; v < n; v++) {
        if (!alive[v]) {
            net.disable_node(IsolatingNet::in_node(v));
            net.disable_node(IsolatingNet::out_node(v));
            continue;
        }
        if (is_terminal[v] || in_region[v])
            inet.split_arc_of[v] =
                net.add_unbounded_arc(IsolatingNet::in_node(v), IsolatingNet::out_node(v));
        else
            inet.split_arc_of[v] = net.add_arc(IsolatingNet::in_node(v),
                                               IsolatingNet::out_node(v), HalfInt::from_int(1));
    }
    for (auto [u, v] : edges) {
        if (!alive[u] || !alive[v]) continue;
        net.add_unbounded_arc(IsolatingNet::out_node(u), IsolatingNet::in_node(v));
        net.add_unbounded_arc(IsolatingNet::out_node(v), IsolatingNet::in_node(u));
    }
    for (int v = 0; v < n; v++)
        if (alive[v] && is_terminal[v] && v != t)
            net.add_unbounded_arc(IsolatingNet::out_node(v), sink);
    return inet;
}

std::optional<FlowState> min_isolating_flow(const IsolatingNet& inet, int cap,
                                            MultiwayStats* stats) {
    FlowState flow = zero_flow(inet.net);
    int64_t paths = 0;
    augment_to_max(inet.net, flow, &paths, HalfInt::from_int(cap));
    if (stats) stats->augmentations += paths;
    if (flow.amount > HalfInt::from_int(cap)) return std::nullopt;
    return flow;
}

IsolatingCutResult farthest_min_isolating_cut(const IsolatingNet& inet, const FlowState& flow) {
    const DirectedNet& net = inet.net;
    // B = nodes that can still reach the sink in the residual graph; walk
    // residual arcs backward from the sink
    std::vector<char> in_b(net.node_count, 0);
    std::vector<int> stack{net.sink};
    in_b[net.sink] = 1;
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (int h : net.adj[y]) {
            int x = net.half_head(h);  // candidate tail of a residual arc x -> y
            if (in_b[x] || !net.enabled(x)) continue;
            if (residual_positive(net, flow, h ^ 1)) {
                in_b[x] = 1;
                stack.push_back(x);
            }
        }
    }
    IsolatingCutResult out;
    ABOVELP_CHECK(flow.amount.is_integral(), "vertex-capacity flow must be integral");
    out.amount = (int)flow.amount.as_int();
    const int n = (int)inet.split_arc_of.size();
    for (int v = 0; v < n; v++) {
        int a = inet.split_arc_of[v];
        if (a < 0 || !net.enabled(IsolatingNet::in_node(v))) continue;
        if (net.arcs[a].unbounded) continue;  // terminals and absorbed vertices are uncuttable
        bool bi = in_b[IsolatingNet::in_node(v)], bo = in_b[IsolatingNet::out_node(v)];
        if (!bi && bo)
            out.cut.push_back(v);
        else if (!bi && !bo)
            out.region.push_back(v);
    }
    // uncuttable source-side vertices belong to the region as well
    for (int v = 0; v < n; v++) {
        int a = inet.split_arc_of[v];
        if (a < 0 || !net.enabled(IsolatingNet::in_node(v)) || !net.arcs[a].unbounded) continue;
        if (!in_b[IsolatingNet::in_node(v)] && !in_b[IsolatingNet::out_node(v)])
            out.region.push_back(v);
    }
    std::sort(out.region.begin(), out.region.end());
    ABOVELP_CHECK((int)out.cut.size() == out.amount, "cut size disagrees with the flow amount");
    return out;
}

namespace {

struct State {
    const MultiwayInstance* inst;
    std::vector<char> alive;
    std::vector<char> in_region;
    std::vector<char> is_terminal;
    std::vector<char> done;  // indexed by terminal position
    std::vector<int32_t> cut;
    int k_rem;
    bool active = false;
    int current_t = -1;
    IsolatingNet inet;
    FlowState flow;
};

std::vector<int> component_of(const State& st, int start) {
    std::vector<char> seen(st.inst->n, 0);
    std::vector<int> stack{start}, comp{start};
    seen[start] = 1;
    std::vector<std::vector<int>> adj(st.inst->n);
    for (auto [u, v] : st.inst->edges)
        if (st.alive[u] && st.alive[v]) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                comp.push_back(v);
                stack.push_back(v);
            }
    }
    return comp;
}

// alive neighbors of the current region, ascending
std::vector<int> region_neighbors(const State& st) {
    std::set<int> nb;
    for (auto [u, v] : st.inst->edges) {
        if (!st.alive[u] || !st.alive[v]) continue;
        if (st.in_region[u] && !st.in_region[v]) nb.insert(v);
        if (st.in_region[v] && !st.in_region[u]) nb.insert(u);
    }
    return {nb.begin(), nb.end()};
}

void absorb_into_region(State& st, const std::vector<int32_t>& vertices) {
    for (int v : vertices) {
        if (st.in_region[v]) continue;
        st.in_region[v] = 1;
        int a = st.inet.split_arc_of[v];
        st.inet.net.arcs[a].unbounded = true;  // absorbed vertices can no longer be cut
    }
}

bool region_touches_terminal(const State& st) {
    for (int v : region_neighbors(st))
        if (st.is_terminal[v]) return true;
    return false;
}

// region absorption invariant: the farthest minimum cut is now exactly N(region)
void check_farthest_is_boundary(const State& st) {
    auto far2 = farthest_min_isolating_cut(st.inet, st.flow);
    auto nb = region_neighbors(st);
    std::vector<int32_t> nb32(nb.begin(), nb.end());
    ABOVELP_CHECK(far2.cut == nb32, "farthest cut is not the region boundary");
}

std::optional<std::vector<int32_t>> solve_rec(State st, MultiwayStats& stats) {
    for (;;) {
        if (!st.active) {
            int remaining = 0, t = -1;
            for (size_t i = 0; i < st.inst->terminals.size(); i++)
                if (!st.done[i]) {
                    remaining++;
                    if (t < 0) t = st.inst->terminals[i];
                }
            if (remaining <= 1) {
                std::sort(st.cut.begin(), st.cut.end());
                return st.cut;
            }
            auto comp = component_of(st, t);
            bool with_other_terminal = false;
            for (int v : comp)
                if (st.is_terminal[v] && v != t) with_other_terminal = true;
            if (!with_other_terminal) {
                // already separated: its whole component is out of play
                for (int v : comp) st.alive[v] = 0;
                for (size_t i = 0; i < st.inst->terminals.size(); i++)
                    if (st.inst->terminals[i] == t) st.done[i] = 1;
                continue;
            }
            std::fill(st.in_region.begin(), st.in_region.end(), 0);
            st.in_region[t] = 1;
            if (region_touches_terminal(st)) return std::nullopt;  // adjacent terminals
            st.inet = build_isolating_net(st.inst->n, st.inst->edges, st.alive, st.in_region,
                                          st.is_terminal, t);
            stats.flows_built++;
            auto flow = min_isolating_flow(st.inet, st.k_rem, &stats);
            if (!flow) return std::nullopt;  // the cheapest isolating cut already exceeds the budget
            st.flow = std::move(*flow);
            ABOVELP_CHECK(st.flow.amount.doubled > 0, "connected terminal with zero flow");
            auto far = farthest_min_isolating_cut(st.inet, st.flow);
            absorb_into_region(st, far.region);
            check_farthest_is_boundary(st);
            st.active = true;
            st.current_t = t;
        }

        if (st.flow.amount.is_zero()) {
            // all connections consumed by earlier deletions
            auto comp = component_of(st, st.current_t);
            for (int v : comp) st.alive[v] = 0;
            for (size_t i = 0; i < st.inst->terminals.size(); i++)
                if (st.inst->terminals[i] == st.current_t) st.done[i] = 1;
            st.active = false;
            continue;
        }
        if (region_touches_terminal(st)) return std::nullopt;

        auto nb = region_neighbors(st);
        ABOVELP_CHECK(!nb.empty(), "positive flow with an empty boundary");
        int v = nb.front();
        stats.branch_nodes++;
        int lambda = (int)st.flow.amount.as_int();

        // branch 1: v joins the cut
        if (st.k_rem >= 1) {
            State child = st;
            child.cut.push_back(v);
            child.k_rem--;
            HalfInt removed = remove_node_flow(child.inet.net, child.flow,
                                               IsolatingNet::in_node(v));
            ABOVELP_CHECK(removed == HalfInt::from_int(1), "cut vertex carried no unit of flow");
            child.inet.net.disable_node(IsolatingNet::in_node(v));
            child.inet.net.disable_node(IsolatingNet::out_node(v));
            child.alive[v] = 0;
            if (auto r = solve_rec(std::move(child), stats)) return r;
        }

        // branch 2: v is absorbed into the region
        {
            State child = std::move(st);
            absorb_into_region(child, {v});
            if (region_touches_terminal(child)) return std::nullopt;
            int64_t paths = 0;
            HalfInt delta = augment_to_max(child.inet.net, child.flow, &paths,
                                           HalfInt::from_int(child.k_rem));
            stats.augmentations += paths;
            if (child.flow.amount > HalfInt::from_int(child.k_rem)) return std::nullopt;
            // the boundary was the unique minimum cut, so excluding one of its
            // vertices strictly raises the connectivity
            ABOVELP_CHECK(delta >= HalfInt::from_int(1), "absorbing a cut vertex did not raise flow");
            ABOVELP_CHECK(2 * child.k_rem - (lambda + delta.as_int()) < 2 * child.k_rem - lambda,
                          "branch measure failed to decrease");
            auto far = farthest_min_isolating_cut(child.inet, child.flow);
            absorb_into_region(child, far.region);
            check_farthest_is_boundary(child);
            return solve_rec(std::move(child), stats);
        }
    }
}

}  // namespace

MultiwayResult solve_multiway(const MultiwayInstance& inst) {
    inst.validate();
    MultiwayResult out;
    State st;
    st.inst = &inst;
    st.alive.assign(inst.n, 1);
    st.in_region.assign(inst.n, 0);
    st.is_terminal.assign(inst.n, 0);
    for (int t : inst.terminals) st.is_terminal[t] = 1;
    st.done.assign(inst.terminals.size(), 0);
    st.k_rem = inst.k;
    auto cut = solve_rec(std::move(st), out.stats);
    if (cut) {
        ABOVELP_CHECK(multiway_cut_separates(inst, *cut), "returned set is not a multiway cut");
        out.cut = std::move(cut);
    }
    return out;
}

bool multiway_cut_separates(const MultiwayInstance& inst, const std::vector<int32_t>& cut) {
    std::vector<char> removed(inst.n, 0);
    for (int v : cut) removed[v] = 1;
    std::vector<std::vector<int>> adj(inst.n);
    for (auto [u, v] : inst.edges)
        if (!removed[u] && !removed[v]) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    std::vector<int> owner(inst.n, -1);
    for (int t : inst.terminals) {
        if (removed[t]) return false;  // terminals are not deletable
        std::vector<int> stack{t};
        if (owner[t] != -1) return false;
        owner[t] = t;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (owner[v] == -1) {
                    owner[v] = t;
                    stack.push_back(v);
                } else if (owner[v] != t) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace abovelp
