#include "abovelp/vc_solver.hpp"

#include <algorithm>

namespace abovelp {

namespace {

std::string primal_violation(const VcInstance& inst, const PrimalVc& p) {
    if ((int)p.x.size() != inst.n) return "primal size mismatch";
    for (int v = 0; v < inst.n; v++)
        if (inst.alive[v] && p.x[v].doubled < 0) return "negative primal at vertex " + std::to_string(v);
    for (size_t e = 0; e < inst.edges.size(); e++) {
        if (!inst.edge_alive((int)e)) continue;
        auto [u, v] = inst.edges[e];
        if (p.x[u] + p.x[v] < HalfInt::from_int(1))
            return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} uncovered: x_u + x_v = " +
                   (p.x[u] + p.x[v]).str();
    }
    return {};
}

struct SearchCtx {
    HalfInt k_init;
    SearchStats stats;
    BranchObserver* observer = nullptr;
    std::optional<VcSolution> best;
    HalfInt best_consumed;
    int64_t original_edges = 0;
};

// Runs the integral peel and the tail-component fixing, collecting the fixed
// ones into `ones`. Returns true when no live edge remains.
bool simplify(VcFlowBundle& b, std::vector<int32_t>& ones) {
    auto x = primal_from_residual(b);
    for (auto [v, val] : peel_integral(b, x))
        if (val == 1) ones.push_back(v);
    for (auto [v, val] : fix_tail_sccs(b))
        if (val == 1) ones.push_back(v);
    for (size_t e = 0; e < b.inst.edges.size(); e++)
        if (b.inst.edge_alive((int)e)) return false;
    return true;
}

int pick_branch_edge(const VcInstance& inst) {
    for (size_t e = 0; e < inst.edges.size(); e++)
        if (inst.edge_alive((int)e)) return (int)e;  // edges sorted, so lexicographically least
    return -1;
}

void search(VcFlowBundle bundle, HalfInt k_remaining, int depth, std::vector<int32_t> ones,
            SearchCtx& ctx) {
    ctx.stats.depth = std::max(ctx.stats.depth, depth);
    if (simplify(bundle, ones)) {
        ctx.stats.leaves++;
        HalfInt consumed = ctx.k_init - k_remaining;
        int64_t w = 0;
        for (int v : ones) w += bundle.inst.weight[v];
        if (!ctx.best || w < ctx.best->weight) {
            std::sort(ones.begin(), ones.end());
            ctx.best = VcSolution{std::move(ones), w, false};
            ctx.best_consumed = consumed;
        }
        return;
    }
    // best-known bound: deeper leaves only consume more
    if (ctx.best && ctx.k_init - k_remaining >= ctx.best_consumed) {
        ctx.stats.leaves++;
        return;
    }
    int e = pick_branch_edge(bundle.inst);
    auto [u, v] = bundle.inst.edges[e];
    ctx.stats.branch_nodes++;
    bool expanded = false;
    for (int pick : {u, v}) {
        VcFlowBundle child = bundle;
        HalfInt delta = branch_fix_one(child, pick, &ctx.stats);
        if (ctx.observer) (*ctx.observer)(bundle.inst, pick, delta);
        HalfInt spent = delta.halve();
        if (spent > k_remaining) continue;  // prune before recursing
        expanded = true;
        auto child_ones = ones;
        child_ones.push_back(pick);
        search(std::move(child), k_remaining - spent, depth + 1, std::move(child_ones), ctx);
    }
    if (!expanded) ctx.stats.leaves++;
}

}  // namespace

HalfInt branch_fix_one(VcFlowBundle& bundle, int v, SearchStats* stats) {
    ABOVELP_CHECK(bundle.inst.alive[v], "branching on a dead vertex");
    remove_node_flow(bundle.net, bundle.flow, VcFlowBundle::left_node(v));
    remove_node_flow(bundle.net, bundle.flow, VcFlowBundle::right_node(v));
    bundle.kill_vertex(v);
    int64_t paths = 0;
    HalfInt delta = augment_to_max(bundle.net, bundle.flow, &paths);
    if (stats) stats->augmentations += paths;
    // the all-half vector was the unique LP optimum, so fixing any vertex
    // strictly raises the LP value
    ABOVELP_CHECK(delta.doubled >= 2 && delta.is_integral(), "branch did not raise the LP value");
    return delta;
}

VcFlowBundle prepare_bundle(const VcInstance& inst, const PrimalVc& primal, const DualVc& dual) {
    std::string bad = primal_violation(inst, primal);
    if (!bad.empty()) throw PairError("invalid primal: " + bad);
    bad = dual.feasibility_violation(inst);
    if (!bad.empty()) throw PairError("invalid dual: " + bad);
    HalfInt pv = primal.value(inst), dv = dual.value(inst);
    if (pv != dv)
        throw PairError("pair values differ: primal " + pv.str() + " vs dual " + dv.str());
    VcFlowBundle b = build_network(inst);
    b.flow = dual_to_flow(b, dual);
    HalfInt extra = augment_to_max(b.net, b.flow);
    ABOVELP_CHECK(extra.is_zero(), "optimal dual did not induce a maximum flow");
    return b;
}

VcSolveResult solve_above_lp(const VcInstance& inst, const PrimalVc& primal, const DualVc& dual,
                             HalfInt k, BranchObserver* observer) {
    VcFlowBundle root = prepare_bundle(inst, primal, dual);
    SearchCtx ctx;
    ctx.k_init = k;
    ctx.observer = observer;
    if (k.doubled >= 0) search(std::move(root), k, 0, {}, ctx);

    VcSolveResult out;
    out.stats = ctx.stats;
    if (ctx.best) {
        // independent coverage check over the original instance
        std::vector<char> in_cover(inst.n, 0);
        for (int v : ctx.best->selected) in_cover[v] = 1;
        for (size_t e = 0; e < inst.edges.size(); e++) {
            if (!inst.edge_alive((int)e)) continue;
            auto [u, v] = inst.edges[e];
            ABOVELP_CHECK(in_cover[u] || in_cover[v], "returned set is not a cover");
        }
        ctx.best->certified = true;
        out.solution = std::move(ctx.best);
        out.consumed = ctx.best_consumed;
    }
    return out;
}

VcSolveResult solve_auto(const VcInstance& inst, const PrimalVc& primal, const DualVc& dual) {
    int64_t cap = 2 * inst.total_weight() + 2;
    SearchStats accumulated;
    for (HalfInt k; k.doubled <= cap; k += HalfInt::half()) {
        VcSolveResult r = solve_above_lp(inst, primal, dual, k);
        accumulated.branch_nodes += r.stats.branch_nodes;
        accumulated.leaves += r.stats.leaves;
        accumulated.augmentations += r.stats.augmentations;
        accumulated.depth = std::max(accumulated.depth, r.stats.depth);
        if (r.solution) {
            r.stats = accumulated;
            return r;
        }
    }
    throw std::logic_error("solve_auto: no cover within the trivial budget");
}

}  // namespace abovelp
