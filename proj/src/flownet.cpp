#include "abovelp/flownet.hpp"

#include <algorithm>
#include <stdexcept>

namespace abovelp {

int DirectedNet::add_node() {
    adj.emplace_back();
    node_enabled.push_back(1);
    return node_count++;
}

int DirectedNet::add_arc(int from, int to, HalfInt cap) {
    ABOVELP_CHECK(cap.doubled >= 0, "negative arc capacity");
    int id = (int)arcs.size();
    arcs.push_back(Arc{(int32_t)from, (int32_t)to, cap, false});
    adj[from].push_back(2 * id);
    adj[to].push_back(2 * id + 1);
    return id;
}

int DirectedNet::add_unbounded_arc(int from, int to) {
    int id = (int)arcs.size();
    arcs.push_back(Arc{(int32_t)from, (int32_t)to, HalfInt{}, true});
    adj[from].push_back(2 * id);
    adj[to].push_back(2 * id + 1);
    return id;
}

FlowState zero_flow(const DirectedNet& net) {
    FlowState f;
    f.flow.assign(net.arcs.size(), HalfInt{});
    f.amount = HalfInt{};
    return f;
}

std::optional<HalfInt> residual_cap(const DirectedNet& net, const FlowState& f, int half) {
    int a = DirectedNet::arc_of(half);
    if (DirectedNet::is_backward(half)) return f.flow[a];
    if (net.arcs[a].unbounded) return std::nullopt;
    return net.arcs[a].cap - f.flow[a];
}

bool residual_positive(const DirectedNet& net, const FlowState& f, int half) {
    int a = DirectedNet::arc_of(half);
    if (DirectedNet::is_backward(half)) return f.flow[a].doubled > 0;
    if (net.arcs[a].unbounded) return true;
    return f.flow[a] < net.arcs[a].cap;
}

std::vector<std::pair<int, int>> ResidualView::materialize() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < net->node_count; u++) {
        if (!net->enabled(u)) continue;
        arcs_from(u, [&](int v, int) { out.emplace_back(u, v); });
    }
    return out;
}

namespace {

// One DFS attempt for an augmenting path from `start_half`'s head to the sink.
// visited[] carries a timestamp so resets are O(1). Fills parent half-arcs.
bool dfs_to_sink(const DirectedNet& net, const FlowState& f, int start_half,
                 std::vector<int64_t>& visited, int64_t stamp, std::vector<int32_t>& parent) {
    int first = net.half_head(start_half);
    if (!net.enabled(first)) return false;
    if (!residual_positive(net, f, start_half)) return false;
    parent[first] = start_half;
    if (first == net.sink) return true;
    visited[first] = stamp;
    std::vector<std::pair<int, size_t>> stack;
    stack.emplace_back(first, 0);
    while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        if (idx >= net.adj[u].size()) {
            stack.pop_back();
            continue;
        }
        int h = net.adj[u][idx++];
        int v = net.half_head(h);
        if (v == net.source || visited[v] == stamp || !net.enabled(v)) continue;
        if (!residual_positive(net, f, h)) continue;
        parent[v] = h;
        if (v == net.sink) return true;
        visited[v] = stamp;
        stack.emplace_back(v, 0);
    }
    return false;
}

// Applies the found path (walk parents from sink) and returns the bottleneck.
HalfInt apply_path(const DirectedNet& net, FlowState& f, const std::vector<int32_t>& parent) {
    std::optional<HalfInt> bottleneck;
    for (int v = net.sink; v != net.source;) {
        int h = parent[v];
        auto rc = residual_cap(net, f, h);
        if (rc) bottleneck = bottleneck ? min(*bottleneck, *rc) : *rc;
        v = net.half_tail(h);
    }
    if (!bottleneck) throw std::runtime_error("unbounded flow: all-unbounded augmenting path");
    for (int v = net.sink; v != net.source;) {
        int h = parent[v];
        int a = DirectedNet::arc_of(h);
        if (DirectedNet::is_backward(h))
            f.flow[a] -= *bottleneck;
        else
            f.flow[a] += *bottleneck;
        v = net.half_tail(h);
    }
    f.amount += *bottleneck;
    return *bottleneck;
}

}  // namespace

HalfInt augment_to_max(const DirectedNet& net, FlowState& flow, int64_t* path_count,
                       std::optional<HalfInt> stop_above) {
    HalfInt delta;
    std::vector<int64_t> visited(net.node_count, 0);
    std::vector<int32_t> parent(net.node_count, -1);
    int64_t stamp = 0;
    // Sweep the source arcs with a persistent cursor. Saturated source arcs
    // stay saturated (paths never revisit the source), so skipping them is
    // safe; a dead end can reopen after later augmentations, hence the
    // restart-on-progress outer loop. The final clean sweep certifies
    // maximality.
    const auto& src_arcs = net.adj[net.source];
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (size_t cur = 0; cur < src_arcs.size();) {
            int h = src_arcs[cur];
            if (!residual_positive(net, flow, h) || !net.enabled(net.half_head(h))) {
                cur++;
                continue;
            }
            if (dfs_to_sink(net, flow, h, visited, ++stamp, parent)) {
                delta += apply_path(net, flow, parent);
                if (path_count) (*path_count)++;
                progressed = true;
                if (stop_above && flow.amount > *stop_above) return delta;
            } else {
                cur++;
            }
        }
    }
    return delta;
}

bool has_augmenting_path(const DirectedNet& net, const FlowState& flow) {
    std::vector<int64_t> visited(net.node_count, 0);
    std::vector<int32_t> parent(net.node_count, -1);
    int64_t stamp = 0;
    for (int h : net.adj[net.source])
        if (dfs_to_sink(net, flow, h, visited, ++stamp, parent)) return true;
    return false;
}

std::vector<char> reachable_from(const ResidualView& view, int origin) {
    const DirectedNet& net = *view.net;
    std::vector<char> seen(net.node_count, 0);
    if (!net.enabled(origin)) return seen;
    std::vector<int> stack{origin};
    seen[origin] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        view.arcs_from(u, [&](int v, int) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        });
    }
    return seen;
}

SccDecomposition scc_condense(const ResidualView& view, const std::vector<char>& restricted_to) {
    const DirectedNet& net = *view.net;
    const int n = net.node_count;
    SccDecomposition out;
    out.comp.assign(n, -1);

    auto inside = [&](int v) { return restricted_to[v] && net.enabled(v); };

    // iterative Tarjan; components complete in reverse topological order
    std::vector<int32_t> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int32_t> comp_stack;
    int32_t next_index = 0;
    std::vector<std::vector<int32_t>> completed;

    struct Frame {
        int v;
        size_t adj_idx;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; root++) {
        if (!inside(root) || index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        comp_stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            int u = fr.v;
            bool descended = false;
            while (fr.adj_idx < net.adj[u].size()) {
                int h = net.adj[u][fr.adj_idx++];
                int v = net.half_head(h);
                if (!inside(v) || !residual_positive(net, *view.flow, h)) continue;
                if (index[v] == -1) {
                    index[v] = low[v] = next_index++;
                    comp_stack.push_back(v);
                    on_stack[v] = 1;
                    frames.push_back({v, 0});
                    descended = true;
                    break;
                }
                if (on_stack[v]) low[u] = std::min(low[u], index[v]);
            }
            if (descended) continue;
            if (low[u] == index[u]) {
                std::vector<int32_t> members;
                for (;;) {
                    int w = comp_stack.back();
                    comp_stack.pop_back();
                    on_stack[w] = 0;
                    members.push_back(w);
                    if (w == u) break;
                }
                std::sort(members.begin(), members.end());
                completed.push_back(std::move(members));
            }
            frames.pop_back();
            if (!frames.empty()) {
                int p = frames.back().v;
                low[p] = std::min(low[p], low[u]);
            }
        }
    }

    // completion order is reverse topological; publish in topological order
    const int nc = (int)completed.size();
    out.members.resize(nc);
    for (int i = 0; i < nc; i++) out.members[i] = std::move(completed[nc - 1 - i]);
    for (int c = 0; c < nc; c++)
        for (int v : out.members[c]) out.comp[v] = c;

    out.succ_count.assign(nc, 0);
    out.preds.assign(nc, {});
    std::vector<std::pair<int32_t, int32_t>> cross;
    for (int u = 0; u < n; u++) {
        if (!inside(u)) continue;
        view.arcs_from(u, [&](int v, int) {
            if (!restricted_to[v]) return;
            if (out.comp[u] != out.comp[v]) cross.emplace_back(out.comp[u], out.comp[v]);
        });
    }
    std::sort(cross.begin(), cross.end());
    cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
    for (auto [cu, cv] : cross) {
        out.succ_count[cu]++;
        out.preds[cv].push_back(cu);
    }
    return out;
}

HalfInt remove_node_flow(const DirectedNet& net, FlowState& flow, int node) {
    ABOVELP_CHECK(node != net.source && node != net.sink, "cannot remove source/sink flow");
    HalfInt removed;

    auto in_flow_half = [&](int u) -> int {
        for (int h : net.adj[u]) {
            // incoming flow shows up as a backward half-arc with positive flow
            if (DirectedNet::is_backward(h) && flow.flow[DirectedNet::arc_of(h)].doubled > 0)
                return h;
        }
        return -1;
    };
    auto out_flow_half = [&](int u) -> int {
        for (int h : net.adj[u]) {
            if (!DirectedNet::is_backward(h) && flow.flow[DirectedNet::arc_of(h)].doubled > 0)
                return h;
        }
        return -1;
    };
    auto cancel = [&](const std::vector<int>& arcs_on_cycle_or_path) -> HalfInt {
        HalfInt bn = flow.flow[arcs_on_cycle_or_path.front()];
        for (int a : arcs_on_cycle_or_path) bn = min(bn, flow.flow[a]);
        for (int a : arcs_on_cycle_or_path) flow.flow[a] -= bn;
        return bn;
    };

    // Each round traces one flow path through `node` (backward to the source,
    // forward to the sink) and cancels its bottleneck. Revisiting a walk node
    // exposes a flow cycle, which is cancelled without changing the amount.
    // Every cancellation zeroes at least one arc, so the loop terminates.
    std::vector<int32_t> pos_b(net.node_count, -1), pos_f(net.node_count, -1);
    for (;;) {
        if (in_flow_half(node) < 0 && out_flow_half(node) < 0) break;

        std::fill(pos_b.begin(), pos_b.end(), -1);
        std::fill(pos_f.begin(), pos_f.end(), -1);
        bool retry = false;

        // backward: nodes_b[i+1] --arcs_b[i]--> nodes_b[i], nodes_b[0] = node
        std::vector<int> nodes_b{node}, arcs_b;
        pos_b[node] = 0;
        int u = node;
        while (u != net.source) {
            int h = in_flow_half(u);
            ABOVELP_CHECK(h >= 0 && u != net.sink, "flow conservation broken in walk");
            int prev = net.half_head(h);
            int arc = DirectedNet::arc_of(h);
            if (prev != net.source && pos_b[prev] >= 0) {
                // cycle: prev -> nodes_b.back() -> ... -> nodes_b[pos_b[prev]] == prev
                std::vector<int> cyc{arc};
                for (size_t i = pos_b[prev]; i < arcs_b.size(); i++) cyc.push_back(arcs_b[i]);
                cancel(cyc);
                retry = true;
                break;
            }
            arcs_b.push_back(arc);
            nodes_b.push_back(prev);
            pos_b[prev] = (int32_t)arcs_b.size();
            u = prev;
        }
        if (retry) continue;

        // forward: node --arcs_f[0]--> ... --> sink
        std::vector<int> arcs_f;
        pos_f[node] = 0;  // returning to node closes a cycle over arcs_f
        int v = node;
        while (v != net.sink) {
            int h = out_flow_half(v);
            ABOVELP_CHECK(h >= 0 && v != net.source, "flow conservation broken in walk");
            int nxt = net.half_head(h);
            int arc = DirectedNet::arc_of(h);
            if (nxt != net.sink && pos_f[nxt] >= 0) {
                // cycle within the forward walk
                std::vector<int> cyc;
                for (size_t i = pos_f[nxt]; i < arcs_f.size(); i++) cyc.push_back(arcs_f[i]);
                cyc.push_back(arc);
                cancel(cyc);
                retry = true;
                break;
            }
            if (nxt != net.sink && nxt != node && pos_b[nxt] >= 0) {
                // cycle through both walks: node ->fwd-> nxt ->back-> node
                std::vector<int> cyc(arcs_f);
                cyc.push_back(arc);
                for (int i = pos_b[nxt] - 1; i >= 0; i--) cyc.push_back(arcs_b[i]);
                cancel(cyc);
                retry = true;
                break;
            }
            arcs_f.push_back(arc);
            if (nxt != net.sink) pos_f[nxt] = (int32_t)arcs_f.size();
            v = nxt;
        }
        if (retry) continue;

        std::vector<int> path(arcs_b.rbegin(), arcs_b.rend());
        path.insert(path.end(), arcs_f.begin(), arcs_f.end());
        ABOVELP_CHECK(!path.empty(), "empty flow path");
        HalfInt bn = cancel(path);
        removed += bn;
        flow.amount -= bn;
    }
    return removed;
}

bool flow_is_feasible(const DirectedNet& net, const FlowState& flow) {
    std::vector<HalfInt> balance(net.node_count);
    for (size_t a = 0; a < net.arcs.size(); a++) {
        const auto& arc = net.arcs[a];
        HalfInt f = flow.flow[a];
        if (f.doubled < 0) return false;
        if (!arc.unbounded && f > arc.cap) return false;
        balance[arc.from] -= f;
        balance[arc.to] += f;
    }
    for (int v = 0; v < net.node_count; v++) {
        if (v == net.source || v == net.sink) continue;
        if (!balance[v].is_zero()) return false;
    }
    if (balance[net.source] + flow.amount != HalfInt{}) return false;
    if (balance[net.sink] != flow.amount) return false;
    return true;
}

}  // namespace abovelp
