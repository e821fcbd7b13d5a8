#include "abovelp/oracle.hpp"

#include <algorithm>
#include <set>

namespace abovelp::oracle {

namespace {

struct NodeCounter {
    int64_t left;
    void tick() {
        if (--left < 0) throw BudgetExceeded("oracle enumeration budget exceeded");
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// vertex cover
// ---------------------------------------------------------------------------

namespace {

struct VcSearch {
    int n;
    const std::vector<int64_t>* w;
    const std::vector<std::pair<int32_t, int32_t>>* edges;
    std::vector<char> in_cover;
    int64_t best;
    std::vector<int32_t> best_cover;
    NodeCounter nodes;

    // greedy matching bound on the uncovered remainder
    int64_t lower_bound() const {
        std::vector<char> used(n, 0);
        int64_t lb = 0;
        for (auto [u, v] : *edges) {
            if (in_cover[u] || in_cover[v] || used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            lb += std::min((*w)[u], (*w)[v]);
        }
        return lb;
    }

    void rec(int64_t weight) {
        nodes.tick();
        int eu = -1, ev = -1;
        for (auto [u, v] : *edges)
            if (!in_cover[u] && !in_cover[v]) {
                eu = u;
                ev = v;
                break;
            }
        if (eu < 0) {
            if (weight < best) {
                best = weight;
                best_cover.clear();
                for (int v = 0; v < n; v++)
                    if (in_cover[v]) best_cover.push_back(v);
            }
            return;
        }
        if (weight + lower_bound() >= best) return;
        for (int pick : {eu, ev}) {
            in_cover[pick] = 1;
            rec(weight + (*w)[pick]);
            in_cover[pick] = 0;
        }
    }
};

}  // namespace

BruteVcResult brute_vc(int n, const std::vector<int64_t>& weight,
                       const std::vector<std::pair<int32_t, int32_t>>& edges,
                       OracleBudget budget) {
    VcSearch s;
    s.n = n;
    s.w = &weight;
    s.edges = &edges;
    s.in_cover.assign(n, 0);
    s.best = 0;
    for (int64_t wv : weight) s.best += wv;
    s.best++;  // take-everything is always a cover; keep it reachable
    s.nodes = {budget.max_nodes};
    s.rec(0);
    return {s.best, s.best_cover};
}

namespace {

struct VcLpSearch {
    int n;
    const std::vector<int64_t>* w;
    const std::vector<std::vector<std::pair<int, int>>>* earlier;  // v -> (u < v, edge id)
    std::vector<int> x2;  // doubled values 0,1,2
    int64_t best2;        // doubled best value
    std::vector<HalfInt> best_x;
    NodeCounter nodes;

    void rec(int v, int64_t value2) {
        nodes.tick();
        if (value2 >= best2) return;
        if (v == n) {
            best2 = value2;
            best_x.assign(n, HalfInt{});
            for (int i = 0; i < n; i++) best_x[i] = HalfInt::from_doubled(x2[i]);
            return;
        }
        for (int val : {0, 1, 2}) {
            bool ok = true;
            for (auto [u, e] : (*earlier)[v]) {
                (void)e;
                if (x2[u] + val < 2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            x2[v] = val;
            rec(v + 1, value2 + val * (*w)[v]);
        }
        x2[v] = 0;
    }
};

struct VcDualSearch {
    const std::vector<int64_t>* w;
    const std::vector<std::pair<int32_t, int32_t>>* edges;
    std::vector<int64_t> cap2;      // doubled remaining capacity per vertex
    std::vector<int64_t> rest_max;  // doubled optimistic value of edges e..m
    int64_t target2;
    std::vector<int> y2;
    bool found = false;
    NodeCounter nodes;

    void rec(size_t e, int64_t value2) {
        if (found) return;
        nodes.tick();
        if (value2 == target2) {
            found = true;
            return;
        }
        if (e == edges->size() || value2 + rest_max[e] < target2) return;
        auto [u, v] = (*edges)[e];
        int64_t hi = std::min({cap2[u], cap2[v], target2 - value2});
        for (int64_t y = hi; y >= 0 && !found; y--) {
            y2[e] = (int)y;
            cap2[u] -= y;
            cap2[v] -= y;
            rec(e + 1, value2 + y);
            cap2[u] += y;
            cap2[v] += y;
        }
        y2[e] = 0;
    }
};

}  // namespace

HalfLpResult brute_halfint_lp_vc(int n, const std::vector<int64_t>& weight,
                                 const std::vector<std::pair<int32_t, int32_t>>& edges,
                                 OracleBudget budget) {
    std::vector<std::vector<std::pair<int, int>>> earlier(n);
    for (size_t e = 0; e < edges.size(); e++) {
        auto [u, v] = edges[e];
        earlier[std::max(u, v)].push_back({std::min(u, v), (int)e});
    }
    VcLpSearch s;
    s.n = n;
    s.w = &weight;
    s.earlier = &earlier;
    s.x2.assign(n, 0);
    s.best2 = 0;
    for (int64_t wv : weight) s.best2 += 2 * wv;
    s.best2++;
    s.nodes = {budget.max_nodes};
    s.rec(0, 0);

    // the half-integral grid is exact for the relaxation; certify with a dual
    VcDualSearch d;
    d.w = &weight;
    d.edges = &edges;
    d.cap2.assign(n, 0);
    for (int v = 0; v < n; v++) d.cap2[v] = 2 * weight[v];
    d.rest_max.assign(edges.size() + 1, 0);
    for (int e = (int)edges.size() - 1; e >= 0; e--) {
        auto [u, v] = edges[e];
        d.rest_max[e] = d.rest_max[e + 1] + 2 * std::min(weight[u], weight[v]);
    }
    d.target2 = s.best2;
    d.y2.assign(edges.size(), 0);
    d.nodes = {budget.max_nodes};
    d.rec(0, 0);
    ABOVELP_CHECK(d.found, "cover LP dual certification failed");

    HalfLpResult out;
    out.value = HalfInt::from_doubled(s.best2);
    out.primal = s.best_x;
    out.dual.resize(edges.size());
    for (size_t e = 0; e < edges.size(); e++) out.dual[e] = HalfInt::from_doubled(d.y2[e]);
    return out;
}

// ---------------------------------------------------------------------------
// binary integer programs
// ---------------------------------------------------------------------------

namespace {

int64_t eval_bip2(const Bip2Instance& inst, const std::vector<int>& x, bool* feasible) {
    int64_t obj = 0;
    *feasible = true;
    for (int i = 0; i < inst.nvars(); i++)
        obj += inst.weight[i].as_half().as_int() * x[i];
    for (const auto& con : inst.cons) {
        int64_t lhs = (int64_t)con.a * x[con.i] + (con.j >= 0 ? (int64_t)con.b * x[con.j] : 0);
        int64_t deficit = con.c - lhs;
        if (deficit <= 0) continue;
        if (con.hard) {
            *feasible = false;
            return 0;
        }
        obj += con.d.as_half().as_int() * deficit;
    }
    return obj;
}

}  // namespace

std::optional<int64_t> brute_ip_bip2(const Bip2Instance& inst, OracleBudget budget) {
    inst.validate();
    ABOVELP_CHECK(inst.all_binary(), "IP enumeration expects a binary instance");
    const int n = inst.nvars();
    ABOVELP_CHECK(n <= 24, "too many variables for IP enumeration");
    NodeCounter nodes{budget.max_nodes};
    std::optional<int64_t> best;
    std::vector<int> x(n, 0);
    for (int64_t mask = 0; mask < (1LL << n); mask++) {
        nodes.tick();
        for (int i = 0; i < n; i++) x[i] = (mask >> i) & 1;
        bool feasible;
        int64_t obj = eval_bip2(inst, x, &feasible);
        if (feasible && (!best || obj < *best)) best = obj;
    }
    return best;
}

namespace {

struct Bip2LpSearch {
    const Bip2Instance* inst;
    std::vector<std::vector<int>> cons_ready;  // var -> constraints checkable at that depth
    std::vector<int> x2;
    int64_t best2;
    std::vector<HalfInt> best_x;
    NodeCounter nodes;

    // doubled objective of a full assignment, including minimal z values
    int64_t value2(const std::vector<int>& xs) const {
        int64_t v = 0;
        for (int i = 0; i < inst->nvars(); i++)
            v += inst->weight[i].as_half().as_int() * xs[i];  // xs doubled, so v is doubled
        for (const auto& con : inst->cons) {
            if (con.hard) continue;
            int64_t lhs2 = (int64_t)con.a * xs[con.i] + (con.j >= 0 ? (int64_t)con.b * xs[con.j] : 0);
            int64_t deficit2 = 2 * con.c - lhs2;
            if (deficit2 > 0) v += con.d.as_half().as_int() * deficit2;
        }
        return v;
    }

    bool hard_ok_upto(int v) const {
        for (int c : cons_ready[v]) {
            const auto& con = inst->cons[c];
            if (!con.hard) continue;
            int64_t lhs2 = (int64_t)con.a * x2[con.i] + (con.j >= 0 ? (int64_t)con.b * x2[con.j] : 0);
            if (lhs2 < 2 * con.c) return false;
        }
        return true;
    }

    void rec(int v) {
        nodes.tick();
        if (v == inst->nvars()) {
            int64_t val = value2(x2);
            if (val < best2) {
                best2 = val;
                best_x.assign(inst->nvars(), HalfInt{});
                for (int i = 0; i < inst->nvars(); i++) best_x[i] = HalfInt::from_doubled(x2[i]);
            }
            return;
        }
        for (int val : {0, 1, 2}) {
            x2[v] = val;
            if (hard_ok_upto(v)) rec(v + 1);
        }
        x2[v] = 0;
    }
};

struct Bip2DualSearch {
    const Bip2Instance* inst;
    std::vector<int64_t> cap_hi2;  // per constraint: doubled upper bound on y
    std::vector<int64_t> rest_pos; // optimistic doubled value of constraints k..m
    int64_t target2;
    std::vector<int64_t> y2;
    std::vector<int64_t> load2;    // signed doubled load per variable
    std::vector<int64_t> slack_in2;  // how much negative mass can still arrive per var
    bool found = false;
    NodeCounter nodes;

    bool loads_ok() const {
        for (int i = 0; i < inst->nvars(); i++)
            if (load2[i] - slack_in2[i] > 2 * inst->weight[i].as_half().as_int()) return false;
        return true;
    }

    void apply(int k, int64_t y, int sign) {
        const auto& con = inst->cons[k];
        if (con.a == 1) load2[con.i] += sign * y;
        if (con.a == -1) load2[con.i] -= sign * y;
        if (con.j >= 0) {
            if (con.b == 1) load2[con.j] += sign * y;
            if (con.b == -1) load2[con.j] -= sign * y;
        }
        if (con.a == -1) slack_in2[con.i] -= sign * (cap_hi2[k] - y);
        if (con.j >= 0 && con.b == -1) slack_in2[con.j] -= sign * (cap_hi2[k] - y);
    }

    void rec(size_t k, int64_t value2) {
        if (found) return;
        nodes.tick();
        if (value2 == target2 && k == inst->cons.size()) {
            found = true;
            return;
        }
        if (k == inst->cons.size()) return;
        if (value2 + rest_pos[k] < target2) return;
        const auto& con = inst->cons[k];
        // still need loads to be coverable; prune eagerly
        for (int64_t y = cap_hi2[k]; y >= 0 && !found; y -= 1) {
            y2[k] = y;
            apply((int)k, y, +1);
            if (loads_ok()) rec(k + 1, value2 + con.c * y);
            apply((int)k, y, -1);
        }
        y2[k] = 0;
    }
};

}  // namespace

HalfLpResult brute_halfint_lp_bip2(const Bip2Instance& inst, OracleBudget budget) {
    inst.validate();
    ABOVELP_CHECK(inst.all_binary(), "LP enumeration expects a binary instance");
    const int n = inst.nvars();
    Bip2LpSearch s;
    s.inst = &inst;
    s.cons_ready.assign(n, {});
    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        int last = con.i;
        if (con.j >= 0 && con.b != 0) last = std::max(last, (int)con.j);
        s.cons_ready[last].push_back((int)k);
    }
    s.x2.assign(n, 0);
    s.best2 = 1;
    for (int i = 0; i < n; i++) s.best2 += 2 * inst.weight[i].as_half().as_int();
    for (const auto& con : inst.cons)
        if (!con.hard) s.best2 += 2 * con.d.as_half().as_int() * (std::abs(con.c) + 2);
    s.nodes = {budget.max_nodes};
    s.rec(0);
    ABOVELP_CHECK(!s.best_x.empty(), "binary LP relaxation has no feasible point");

    // dual certificate: y = 0 on negative-c constraints at any optimum
    Bip2DualSearch d;
    d.inst = &inst;
    d.cap_hi2.assign(inst.cons.size(), 0);
    int64_t wsum2 = 0;
    for (int i = 0; i < n; i++) wsum2 += 2 * inst.weight[i].as_half().as_int();
    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        if (con.c < 0)
            d.cap_hi2[k] = 0;
        else if (!con.hard)
            d.cap_hi2[k] = con.d.as_half().doubled;
        else
            d.cap_hi2[k] = wsum2;  // generous; pruned by the load checks
    }
    d.rest_pos.assign(inst.cons.size() + 1, 0);
    for (int k = (int)inst.cons.size() - 1; k >= 0; k--) {
        int64_t contrib = inst.cons[k].c > 0 ? inst.cons[k].c * d.cap_hi2[k] : 0;
        d.rest_pos[k] = d.rest_pos[k + 1] + contrib;
    }
    d.target2 = s.best2;
    d.y2.assign(inst.cons.size(), 0);
    d.load2.assign(n, 0);
    d.slack_in2.assign(n, 0);
    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        if (con.a == -1) d.slack_in2[con.i] += d.cap_hi2[k];
        if (con.j >= 0 && con.b == -1) d.slack_in2[con.j] += d.cap_hi2[k];
    }
    d.nodes = {budget.max_nodes};
    d.rec(0, 0);
    ABOVELP_CHECK(d.found, "binary LP dual certification failed");

    HalfLpResult out;
    out.value = HalfInt::from_doubled(s.best2);
    out.primal = s.best_x;
    out.dual.resize(inst.cons.size());
    for (size_t k = 0; k < inst.cons.size(); k++) out.dual[k] = HalfInt::from_doubled(d.y2[k]);
    return out;
}

// ---------------------------------------------------------------------------
// problem variants
// ---------------------------------------------------------------------------

namespace {

bool oracle_bipartite(int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
                      const std::vector<char>& rm_vertex, const std::vector<char>& rm_edge) {
    std::vector<int> color(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (size_t e = 0; e < edges.size(); e++) {
        if (!rm_edge.empty() && rm_edge[e]) continue;
        auto [u, v] = edges[e];
        if (!rm_vertex.empty() && (rm_vertex[u] || rm_vertex[v])) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < n; s++) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u])
                    return false;
            }
        }
    }
    return true;
}

bool oracle_split(int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
                  const std::vector<char>& removed) {
    // try every clique-side subset of the remaining vertices (n is small)
    std::vector<int> alive;
    for (int v = 0; v < n; v++)
        if (!removed[v]) alive.push_back(v);
    int m = (int)alive.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges)
        if (!removed[u] && !removed[v]) adj[u][v] = adj[v][u] = 1;
    for (int mask = 0; mask < (1 << m); mask++) {
        bool ok = true;
        for (int i = 0; i < m && ok; i++)
            for (int j = i + 1; j < m && ok; j++) {
                bool ci = mask & (1 << i), cj = mask & (1 << j);
                if (ci && cj && !adj[alive[i]][alive[j]]) ok = false;
                if (!ci && !cj && adj[alive[i]][alive[j]]) ok = false;
            }
        if (ok) return true;
    }
    return m == 0;
}

bool lit_holds(int lit, int64_t mask) {
    int v = std::abs(lit) - 1;
    bool val = (mask >> v) & 1;
    return lit > 0 ? val : !val;
}

}  // namespace

std::optional<int64_t> brute_problem(const ProblemInstance& p, OracleBudget budget) {
    NodeCounter nodes{budget.max_nodes};
    return std::visit(
        [&](const auto& inst) -> std::optional<int64_t> {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, VcProblem>) {
                return brute_vc(inst.g.n, inst.g.vweight, inst.g.edges, budget).value;
            } else if constexpr (std::is_same_v<T, OctProblem>) {
                int n = inst.g.n;
                std::optional<int64_t> best;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    std::vector<char> rm(n, 0);
                    int64_t w = 0;
                    for (int v = 0; v < n; v++)
                        if ((mask >> v) & 1) {
                            rm[v] = 1;
                            w += inst.g.vweight[v];
                        }
                    if (best && w >= *best) continue;
                    if (oracle_bipartite(n, inst.g.edges, rm, {})) best = w;
                }
                return best;
            } else if constexpr (std::is_same_v<T, A2SatProblem>) {
                int n = inst.f.nvars;
                int64_t best = INT64_MAX;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    int64_t unsat = 0;
                    for (const auto& cl : inst.f.clauses)
                        if (!lit_holds(cl[0], mask) && !lit_holds(cl[1], mask)) unsat++;
                    best = std::min(best, unsat);
                }
                return best;
            } else if constexpr (std::is_same_v<T, EdgeBipProblem>) {
                int n = inst.g.n;
                int64_t best = INT64_MAX;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    int64_t w = 0;
                    for (size_t e = 0; e < inst.g.edges.size(); e++) {
                        auto [u, v] = inst.g.edges[e];
                        if (((mask >> u) & 1) == ((mask >> v) & 1)) w += inst.g.eweight[e];
                    }
                    best = std::min(best, w);
                }
                return best;
            } else if constexpr (std::is_same_v<T, MinSatProblem>) {
                int n = inst.f.nvars;
                int64_t best = INT64_MAX;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    int64_t sat = 0;
                    for (const auto& cl : inst.f.clauses)
                        for (int lit : cl)
                            if (lit_holds(lit, mask)) {
                                sat++;
                                break;
                            }
                    best = std::min(best, sat);
                }
                return best;
            } else if constexpr (std::is_same_v<T, GvcProblem>) {
                int n = inst.g.n;
                int64_t best = INT64_MAX;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    int64_t w = 0;
                    for (int v = 0; v < n; v++)
                        if ((mask >> v) & 1) w += inst.g.vweight[v];
                    for (size_t e = 0; e < inst.g.edges.size(); e++) {
                        auto [u, v] = inst.g.edges[e];
                        w += inst.d[e][((mask >> u) & 1) + ((mask >> v) & 1)];
                    }
                    best = std::min(best, w);
                }
                return best;
            } else if constexpr (std::is_same_v<T, Gen2SatProblem>) {
                int n = inst.f.nvars;
                std::optional<int64_t> best;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    bool ok = true;
                    for (const auto& cl : inst.f.clauses) {
                        bool sat = false;
                        for (int lit : cl) sat |= lit_holds(lit, mask);
                        if (!sat) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    int64_t w = 0;
                    for (int v = 0; v < n; v++)
                        if ((mask >> v) & 1) w += inst.vweight[v];
                    if (!best || w < *best) best = w;
                }
                return best;
            } else if constexpr (std::is_same_v<T, CliqueComplementProblem>) {
                int n = inst.g.n;
                std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
                for (auto [u, v] : inst.g.edges) adj[u][v] = adj[v][u] = 1;
                std::optional<int64_t> best;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    bool clique = true;
                    for (int u = 0; u < n && clique; u++)
                        for (int v = u + 1; v < n && clique; v++)
                            if (!((mask >> u) & 1) && !((mask >> v) & 1) && !adj[u][v])
                                clique = false;
                    if (!clique) continue;
                    int64_t w = 0;
                    for (int v = 0; v < n; v++)
                        if ((mask >> v) & 1) w += inst.g.vweight[v];
                    if (!best || w < *best) best = w;
                }
                return best;
            } else if constexpr (std::is_same_v<T, A2CspProblem>) {
                int n = inst.nvars;
                int64_t best = INT64_MAX;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    int64_t unsat = 0;
                    for (const auto& con : inst.cons) {
                        int combo = (int)((mask >> con.u) & 1) + 2 * (int)((mask >> con.v) & 1);
                        if (!(con.allowed & (1 << combo))) unsat++;
                    }
                    best = std::min(best, unsat);
                }
                return best;
            } else if constexpr (std::is_same_v<T, DirMinUncutProblem>) {
                int n = inst.g.n;
                int64_t best = INT64_MAX;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    int64_t w = 0;
                    for (size_t e = 0; e < inst.g.edges.size(); e++) {
                        auto [u, v] = inst.g.edges[e];
                        if (!(((mask >> u) & 1) == 1 && ((mask >> v) & 1) == 0))
                            w += inst.g.eweight[e];
                    }
                    best = std::min(best, w);
                }
                return best;
            } else {  // SplitVdProblem
                int n = inst.g.n;
                std::optional<int64_t> best;
                for (int64_t mask = 0; mask < (1LL << n); mask++) {
                    nodes.tick();
                    std::vector<char> rm(n, 0);
                    int64_t w = 0;
                    for (int v = 0; v < n; v++)
                        if ((mask >> v) & 1) {
                            rm[v] = 1;
                            w += inst.g.vweight[v];
                        }
                    if (best && w >= *best) continue;
                    if (oracle_split(n, inst.g.edges, rm)) best = w;
                }
                return best;
            }
        },
        p);
}

std::optional<std::vector<int32_t>> brute_multiway_cut(
    int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
    const std::vector<int32_t>& terminals, int max_size, OracleBudget budget) {
    NodeCounter nodes{budget.max_nodes};
    std::vector<int> candidates;
    std::vector<char> is_terminal(n, 0);
    for (int t : terminals) is_terminal[t] = 1;
    for (int v = 0; v < n; v++)
        if (!is_terminal[v]) candidates.push_back(v);
    int m = (int)candidates.size();
    std::optional<std::vector<int32_t>> best;
    MultiwayInstance probe{n, edges, terminals, 0};
    for (int mask = 0; mask < (1 << m); mask++) {
        nodes.tick();
        std::vector<int32_t> cut;
        for (int i = 0; i < m; i++)
            if (mask & (1 << i)) cut.push_back(candidates[i]);
        if ((int)cut.size() > max_size) continue;
        if (best && cut.size() >= best->size()) continue;
        if (multiway_cut_separates(probe, cut)) best = cut;
    }
    return best;
}

IsolatingCutEnum enumerate_min_isolating_cuts(int n,
                                              const std::vector<std::pair<int32_t, int32_t>>& edges,
                                              const std::vector<int32_t>& terminals, int t) {
    std::vector<char> is_terminal(n, 0);
    for (int w : terminals) is_terminal[w] = 1;
    std::vector<int> candidates;
    for (int v = 0; v < n; v++)
        if (!is_terminal[v]) candidates.push_back(v);
    int m = (int)candidates.size();

    auto separated_region = [&](const std::vector<char>& removed) -> std::optional<std::vector<int32_t>> {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges)
            if (!removed[u] && !removed[v]) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        std::vector<char> seen(n, 0);
        std::vector<int> stack{t};
        seen[t] = 1;
        std::vector<int32_t> region{(int32_t)t};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (seen[v]) continue;
                if (is_terminal[v] && v != t) return std::nullopt;
                seen[v] = 1;
                region.push_back(v);
                stack.push_back(v);
            }
        }
        std::sort(region.begin(), region.end());
        return region;
    };

    IsolatingCutEnum out;
    for (int mask = 0; mask < (1 << m); mask++) {
        std::vector<char> removed(n, 0);
        std::vector<int32_t> cut;
        for (int i = 0; i < m; i++)
            if (mask & (1 << i)) {
                removed[candidates[i]] = 1;
                cut.push_back(candidates[i]);
            }
        auto region = separated_region(removed);
        if (!region) continue;
        int size = (int)cut.size();
        if (out.min_size == -1 || size < out.min_size) {
            out.min_size = size;
            out.cuts.clear();
        }
        if (size == out.min_size) out.cuts.push_back({cut, *region});
    }
    return out;
}

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

namespace {

int64_t pick(Rng& rng, int64_t lo, int64_t hi) { return lo + (int64_t)(rng() % (hi - lo + 1)); }

std::vector<std::pair<int32_t, int32_t>> random_edges(int n, int m, Rng& rng) {
    std::set<std::pair<int32_t, int32_t>> es;
    int64_t all = (int64_t)n * (n - 1) / 2;
    m = (int)std::min<int64_t>(m, all);
    while ((int)es.size() < m) {
        int u = (int)pick(rng, 0, n - 1), v = (int)pick(rng, 0, n - 1);
        if (u == v) continue;
        es.insert(std::minmax(u, v));
    }
    return {es.begin(), es.end()};
}

}  // namespace

VcInstance gen_random_vc(int n, int m, int64_t min_w, int64_t max_w, Rng& rng) {
    std::vector<int64_t> w(n);
    for (auto& x : w) x = pick(rng, min_w, max_w);
    return VcInstance::make(n, w, random_edges(n, m, rng));
}

VcInstance gen_bipartite_family(int n, int64_t max_w, Rng& rng) {
    std::vector<int64_t> w(n);
    for (auto& x : w) x = pick(rng, 1, max_w);
    std::vector<std::pair<int32_t, int32_t>> edges;
    int v = 0;
    while (v + 1 < n) {
        if (v + 3 < n && rng() % 2) {
            edges.push_back({v, v + 1});
            edges.push_back({v + 1, v + 2});
            edges.push_back({v + 2, v + 3});
            v += 4;
        } else {
            edges.push_back({v, v + 1});
            v += 2;
        }
    }
    return VcInstance::make(n, w, edges);
}

VcInstance gen_k3path(int n) {
    ABOVELP_CHECK(n >= 3, "family needs at least a triangle");
    std::vector<std::pair<int32_t, int32_t>> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; v++) edges.push_back({v - 1, v});
    return VcInstance::make(n, std::vector<int64_t>(n, 1), edges);
}

Cnf gen_random_cnf2(int nvars, int m, Rng& rng) {
    Cnf f;
    f.nvars = nvars;
    for (int c = 0; c < m; c++) {
        int u = (int)pick(rng, 1, nvars), v = (int)pick(rng, 1, nvars);
        while (v == u && nvars > 1) v = (int)pick(rng, 1, nvars);
        int lu = rng() % 2 ? u : -u, lv = rng() % 2 ? v : -v;
        f.clauses.push_back({lu, lv});
    }
    return f;
}

WeightedGraph gen_random_graph(int n, int m, int64_t min_w, int64_t max_w, Rng& rng) {
    WeightedGraph g;
    g.n = n;
    g.edges = random_edges(n, m, rng);
    g.vweight.resize(n);
    for (auto& x : g.vweight) x = pick(rng, min_w, max_w);
    return g;
}

Bip2Instance gen_random_binary_bip2(int nvars, int ncons, bool clause_only, Rng& rng) {
    Bip2Instance inst;
    for (int v = 0; v < nvars; v++) {
        inst.weight.push_back(BigHalf::from_int(pick(rng, 0, 4)));
        inst.domain.push_back(Domain::binary);
    }
    for (int c = 0; c < ncons; c++) {
        Bip2Constraint con;
        con.i = (int32_t)pick(rng, 0, nvars - 1);
        do con.j = (int32_t)pick(rng, 0, nvars - 1);
        while (con.j == con.i);
        if (clause_only) {
            bool p1 = rng() % 2, p2 = rng() % 2;
            con.a = p1 ? 1 : -1;
            con.b = p2 ? 1 : -1;
            con.c = 1 - (p1 ? 0 : 1) - (p2 ? 0 : 1);
        } else {
            con.a = (int8_t)pick(rng, -1, 1);
            con.b = (int8_t)pick(rng, -1, 1);
            if (con.a == 0 && con.b == 0) con.a = 1;
            if (con.b == 0) con.j = -1;
            con.c = pick(rng, -2, 2);
        }
        con.hard = rng() % 3 == 0;
        if (!con.hard) con.d = BigHalf::from_int(pick(rng, 1, 3));
        inst.cons.push_back(con);
    }
    return inst;
}

MultiwayInstance gen_random_multiway(int n, int m, int nterm, int k, Rng& rng) {
    MultiwayInstance inst;
    inst.n = n;
    inst.edges = random_edges(n, m, rng);
    std::vector<int32_t> ids(n);
    for (int i = 0; i < n; i++) ids[i] = i;
    for (int i = n - 1; i > 0; i--) std::swap(ids[i], ids[pick(rng, 0, i)]);
    inst.terminals.assign(ids.begin(), ids.begin() + nterm);
    std::sort(inst.terminals.begin(), inst.terminals.end());
    inst.k = k;
    return inst;
}

}  // namespace abovelp::oracle
