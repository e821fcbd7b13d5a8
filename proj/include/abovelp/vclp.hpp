#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abovelp/flownet.hpp"
#include "abovelp/halfint.hpp"

namespace abovelp {

// Vertex-weighted undirected graph; the LP/IP instance being solved.
// Vertices are masked dead via the alive flags, never physically deleted,
// so node ids stay stable across branching.
struct VcInstance {
    int n = 0;
    std::vector<int64_t> weight;
    std::vector<std::pair<int32_t, int32_t>> edges;  // normalized u < v
    std::vector<char> alive;

    static VcInstance make(int n, std::vector<int64_t> weight,
                           std::vector<std::pair<int32_t, int32_t>> edges);
    bool edge_alive(int e) const { return alive[edges[e].first] && alive[edges[e].second]; }
    int64_t total_weight() const;
};

// per-vertex LP values in {0, 1/2, 1}
struct PrimalVc {
    std::vector<HalfInt> x;
    HalfInt value(const VcInstance& inst) const;  // over alive vertices
};

// per-edge dual values
struct DualVc {
    std::vector<HalfInt> y;
    HalfInt value(const VcInstance& inst) const;  // over alive edges
    // empty string = feasible, otherwise a description of the violation
    std::string feasibility_violation(const VcInstance& inst) const;
};

// Instance + its bipartite flow network + the current maximum flow.
// Nodes: 0 = source, 1 = sink, left(v) = 2+2v, right(v) = 3+2v.
// Arcs: [0..n) source arcs, [n..n+2m) edge arcs (two per edge), then sinks.
struct VcFlowBundle {
    VcInstance inst;
    DirectedNet net;
    FlowState flow;

    static int left_node(int v) { return 2 + 2 * v; }
    static int right_node(int v) { return 3 + 2 * v; }
    int source_arc(int v) const { return v; }
    int sink_arc(int v) const { return inst.n + 2 * (int)inst.edges.size() + v; }
    int edge_arc_lr(int e) const { return inst.n + 2 * e; }      // l_u -> r_v for edge (u,v)
    int edge_arc_rl(int e) const { return inst.n + 2 * e + 1; }  // l_v -> r_u

    void kill_vertex(int v);  // disables both copies; flow must already avoid v
    HalfInt lp_value() const;  // amount/2, valid when the flow is maximum
};

// network exactly mirroring the instance, with zero flow
VcFlowBundle build_network(VcInstance inst);

// flow induced by a feasible dual; throws std::invalid_argument on infeasible y
FlowState dual_to_flow(const VcFlowBundle& bundle, const DualVc& y);

// dual read back from the current flow: y(u,v) = (f(lu,rv) + f(lv,ru)) / 2
DualVc flow_to_dual(const VcFlowBundle& bundle);

// Optimal primal from residual reachability at maximum flow: 0 when only the
// left copy is reachable from the source, 1 when only the right copy is,
// 1/2 otherwise. Checks the strong-duality certificate against the dual.
PrimalVc primal_from_residual(const VcFlowBundle& bundle);

struct FixedVertex {
    int32_t vertex;
    int8_t value;  // 0 or 1
};

// Fixes every integrally valued vertex of x* and removes it; the restricted
// flow stays maximum for the reduced instance.
std::vector<FixedVertex> peel_integral(VcFlowBundle& bundle, const PrimalVc& x_star);

// Repeatedly fixes tail components of the residual graph restricted to the
// live copies whose left and right vertex sets are disjoint: the left side is
// an independent set S with w(S) = w(N(S)), fixed to 0 with N(S) fixed to 1.
// On return the all-half vector is the unique optimal LP solution of the
// remaining instance. Requires peel_integral to have run (all-half optimal).
std::vector<FixedVertex> fix_tail_sccs(VcFlowBundle& bundle);

}  // namespace abovelp
