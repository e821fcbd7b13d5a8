#include "abovelp/vclp.hpp"

#include <algorithm>
#include <stdexcept>

namespace abovelp {

VcInstance VcInstance::make(int n, std::vector<int64_t> weight,
                            std::vector<std::pair<int32_t, int32_t>> edges) {
    VcInstance inst;
    inst.n = n;
    inst.weight = std::move(weight);
    ABOVELP_CHECK((int)inst.weight.size() == n, "weight vector size mismatch");
    for (auto& [u, v] : edges) {
        ABOVELP_CHECK(u != v, "self-loop");
        ABOVELP_CHECK(0 <= u && u < n && 0 <= v && v < n, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    inst.edges = std::move(edges);
    for (int64_t w : inst.weight) ABOVELP_CHECK(w >= 0, "negative vertex weight");
    inst.alive.assign(n, 1);
    return inst;
}

int64_t VcInstance::total_weight() const {
    int64_t s = 0;
    for (int v = 0; v < n; v++)
        if (alive[v]) s += weight[v];
    return s;
}

HalfInt PrimalVc::value(const VcInstance& inst) const {
    HalfInt s;
    for (int v = 0; v < inst.n; v++)
        if (inst.alive[v]) s += x[v] * inst.weight[v];
    return s;
}

HalfInt DualVc::value(const VcInstance& inst) const {
    HalfInt s;
    for (size_t e = 0; e < inst.edges.size(); e++)
        if (inst.edge_alive((int)e)) s += y[e];
    return s;
}

std::string DualVc::feasibility_violation(const VcInstance& inst) const {
    if (y.size() != inst.edges.size()) return "dual size mismatch";
    for (size_t e = 0; e < y.size(); e++)
        if (inst.edge_alive((int)e) && y[e].doubled < 0)
            return "negative dual on edge " + std::to_string(e);
    std::vector<HalfInt> load(inst.n);
    for (size_t e = 0; e < y.size(); e++) {
        if (!inst.edge_alive((int)e)) continue;
        load[inst.edges[e].first] += y[e];
        load[inst.edges[e].second] += y[e];
    }
    for (int v = 0; v < inst.n; v++)
        if (inst.alive[v] && load[v] > HalfInt::from_int(inst.weight[v]))
            return "dual capacity exceeded at vertex " + std::to_string(v) + ": " +
                   load[v].str() + " > " + std::to_string(inst.weight[v]);
    return {};
}

void VcFlowBundle::kill_vertex(int v) {
    inst.alive[v] = 0;
    net.disable_node(left_node(v));
    net.disable_node(right_node(v));
}

HalfInt VcFlowBundle::lp_value() const { return flow.amount.halve(); }

VcFlowBundle build_network(VcInstance inst) {
    VcFlowBundle b;
    b.inst = std::move(inst);
    const auto& g = b.inst;
    DirectedNet& net = b.net;
    for (int i = 0; i < 2 + 2 * g.n; i++) net.add_node();
    net.source = 0;
    net.sink = 1;
    for (int v = 0; v < g.n; v++)
        net.add_arc(net.source, VcFlowBundle::left_node(v), HalfInt::from_int(g.weight[v]));
    for (auto [u, v] : g.edges) {
        net.add_unbounded_arc(VcFlowBundle::left_node(u), VcFlowBundle::right_node(v));
        net.add_unbounded_arc(VcFlowBundle::left_node(v), VcFlowBundle::right_node(u));
    }
    for (int v = 0; v < g.n; v++)
        net.add_arc(VcFlowBundle::right_node(v), net.sink, HalfInt::from_int(g.weight[v]));
    for (int v = 0; v < g.n; v++)
        if (!g.alive[v]) {
            net.disable_node(VcFlowBundle::left_node(v));
            net.disable_node(VcFlowBundle::right_node(v));
        }
    b.flow = zero_flow(net);
    return b;
}

FlowState dual_to_flow(const VcFlowBundle& bundle, const DualVc& y) {
    std::string bad = y.feasibility_violation(bundle.inst);
    if (!bad.empty()) throw std::invalid_argument("infeasible dual: " + bad);
    FlowState f = zero_flow(bundle.net);
    const auto& inst = bundle.inst;
    for (size_t e = 0; e < inst.edges.size(); e++) {
        if (!inst.edge_alive((int)e)) continue;
        auto [u, v] = inst.edges[e];
        f.flow[bundle.edge_arc_lr((int)e)] = y.y[e];
        f.flow[bundle.edge_arc_rl((int)e)] = y.y[e];
        f.flow[bundle.source_arc(u)] += y.y[e];
        f.flow[bundle.source_arc(v)] += y.y[e];
        f.flow[bundle.sink_arc(u)] += y.y[e];
        f.flow[bundle.sink_arc(v)] += y.y[e];
        f.amount += y.y[e] + y.y[e];
    }
    return f;
}

DualVc flow_to_dual(const VcFlowBundle& bundle) {
    DualVc d;
    d.y.assign(bundle.inst.edges.size(), HalfInt{});
    for (size_t e = 0; e < bundle.inst.edges.size(); e++) {
        if (!bundle.inst.edge_alive((int)e)) continue;
        HalfInt sum = bundle.flow.flow[bundle.edge_arc_lr((int)e)] +
                      bundle.flow.flow[bundle.edge_arc_rl((int)e)];
        ABOVELP_CHECK(sum.is_integral(), "edge flow pair sums to an odd half");
        d.y[e] = sum.halve();
    }
    return d;
}

PrimalVc primal_from_residual(const VcFlowBundle& bundle) {
    auto seen = reachable_from(residual(bundle.net, bundle.flow), bundle.net.source);
    PrimalVc p;
    p.x.assign(bundle.inst.n, HalfInt{});
    for (int v = 0; v < bundle.inst.n; v++) {
        if (!bundle.inst.alive[v]) continue;
        bool l = seen[VcFlowBundle::left_node(v)], r = seen[VcFlowBundle::right_node(v)];
        if (l && !r)
            p.x[v] = HalfInt{};
        else if (r && !l)
            p.x[v] = HalfInt::from_int(1);
        else
            p.x[v] = HalfInt::half();
    }
    // strong duality certificate
    ABOVELP_CHECK(p.value(bundle.inst) == flow_to_dual(bundle).value(bundle.inst),
                  "primal from residual does not certify against the dual");
    return p;
}

namespace {

// Drops a set of vertices whose copies carry no flow to/from the remaining
// graph: zeroes their arcs and fixes the cached amount.
void retire_vertices(VcFlowBundle& b, const std::vector<FixedVertex>& fixed) {
    for (auto [v, val] : fixed) {
        (void)val;
        b.flow.amount -= b.flow.flow[b.source_arc(v)];
        b.flow.flow[b.source_arc(v)] = HalfInt{};
        b.flow.flow[b.sink_arc(v)] = HalfInt{};
    }
    std::vector<char> dead(b.inst.n, 0);
    for (auto [v, val] : fixed) {
        (void)val;
        dead[v] = 1;
    }
    for (size_t e = 0; e < b.inst.edges.size(); e++) {
        auto [u, v] = b.inst.edges[e];
        if (!dead[u] && !dead[v]) continue;
        if (!b.inst.edge_alive((int)e)) continue;
        // arcs between a retired and a live vertex never carry flow here
        if (!dead[u] || !dead[v]) {
            ABOVELP_CHECK(b.flow.flow[b.edge_arc_lr((int)e)].is_zero() &&
                              b.flow.flow[b.edge_arc_rl((int)e)].is_zero(),
                          "flow crosses the retired boundary");
        }
        b.flow.flow[b.edge_arc_lr((int)e)] = HalfInt{};
        b.flow.flow[b.edge_arc_rl((int)e)] = HalfInt{};
    }
    for (auto [v, val] : fixed) {
        (void)val;
        b.kill_vertex(v);
    }
}

}  // namespace

std::vector<FixedVertex> peel_integral(VcFlowBundle& bundle, const PrimalVc& x_star) {
    std::vector<FixedVertex> fixed;
    for (int v = 0; v < bundle.inst.n; v++) {
        if (!bundle.inst.alive[v] || !x_star.x[v].is_integral()) continue;
        fixed.push_back({(int32_t)v, (int8_t)x_star.x[v].as_int()});
    }
    retire_vertices(bundle, fixed);
    return fixed;
}

std::vector<FixedVertex> fix_tail_sccs(VcFlowBundle& bundle) {
    std::vector<FixedVertex> fixed;
    // One condensation per pass, swept in reverse topological order with
    // successor counts. A popped component is examined on its live members
    // only (members can die through fixes elsewhere); it qualifies when the
    // left/right vertex sets are disjoint. Non-qualifying components block
    // their predecessors for the rest of the pass. A pass that fixes nothing
    // certifies that no independent set S with w(S) = w(N(S)) remains.
    for (;;) {
        std::vector<char> restricted(bundle.net.node_count, 0);
        for (int v = 0; v < bundle.inst.n; v++)
            if (bundle.inst.alive[v]) {
                restricted[VcFlowBundle::left_node(v)] = 1;
                restricted[VcFlowBundle::right_node(v)] = 1;
            }
        auto scc = scc_condense(residual(bundle.net, bundle.flow), restricted);
        const int nc = (int)scc.members.size();
        if (nc == 0) break;

        std::vector<int32_t> succ(scc.succ_count);
        std::vector<int> work;
        for (int c = nc - 1; c >= 0; c--)
            if (succ[c] == 0) work.push_back(c);

        bool fixed_any = false;
        std::vector<char> is_left(bundle.net.node_count, 0);
        for (int v = 0; v < bundle.inst.n; v++) is_left[VcFlowBundle::left_node(v)] = 1;
        auto vertex_of = [&](int node) { return (node - 2) / 2; };

        while (!work.empty()) {
            int c = work.back();
            work.pop_back();
            std::vector<int32_t> live_left, live_right;
            for (int node : scc.members[c]) {
                int v = vertex_of(node);
                if (!bundle.inst.alive[v]) continue;
                (is_left[node] ? live_left : live_right).push_back(v);
            }
            bool removable = true;
            if (!live_left.empty() || !live_right.empty()) {
                std::vector<int32_t> both;
                std::set_intersection(live_left.begin(), live_left.end(), live_right.begin(),
                                      live_right.end(), std::back_inserter(both));
                if (!both.empty()) {
                    removable = false;  // blocks ancestors
                } else {
                    std::vector<FixedVertex> batch;
                    for (int v : live_left) batch.push_back({v, 0});
                    for (int v : live_right) batch.push_back({v, 1});
                    retire_vertices(bundle, batch);
                    fixed.insert(fixed.end(), batch.begin(), batch.end());
                    fixed_any = true;
                }
            }
            if (removable)
                for (int p : scc.preds[c])
                    if (--succ[p] == 0) work.push_back(p);
        }
        if (!fixed_any) break;
    }
    return fixed;
}

}  // namespace abovelp
