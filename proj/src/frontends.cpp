#include "abovelp/frontends.hpp"

#include <algorithm>
#include <set>

namespace abovelp {

void WeightedGraph::validate(bool allow_self_loops) const {
    ABOVELP_CHECK((int)vweight.size() == n, "weight vector size mismatch");
    for (auto [u, v] : edges) {
        ABOVELP_CHECK(0 <= u && u < n && 0 <= v && v < n, "edge endpoint out of range");
        if (!allow_self_loops) ABOVELP_CHECK(u != v, "self-loop");
    }
    for (int64_t w : vweight) ABOVELP_CHECK(w >= 0, "negative vertex weight");
}

void EdgeWeightedGraph::validate() const {
    ABOVELP_CHECK(eweight.size() == edges.size(), "edge weight size mismatch");
    for (auto [u, v] : edges) {
        ABOVELP_CHECK(0 <= u && u < n && 0 <= v && v < n, "edge endpoint out of range");
        ABOVELP_CHECK(u != v, "self-loop");
    }
    for (int64_t w : eweight) ABOVELP_CHECK(w >= 0, "negative edge weight");
}

void Cnf::validate() const {
    for (const auto& cl : clauses)
        for (int lit : cl)
            ABOVELP_CHECK(lit != 0 && std::abs(lit) <= nvars, "literal out of range");
}

namespace {

struct Builder {
    Bip2Instance inst;

    int add_var(int64_t w) {
        inst.weight.push_back(BigHalf::from_int(w));
        inst.domain.push_back(Domain::binary);
        return inst.nvars() - 1;
    }
    // clause over two distinct literals; soft with weight d, or hard (d < 0)
    void clause(int v1, bool pos1, int v2, bool pos2, int64_t d) {
        if (d == 0) return;
        Bip2Constraint con;
        con.i = v1;
        con.j = v2;
        con.a = pos1 ? 1 : -1;
        con.b = pos2 ? 1 : -1;
        con.c = 1 - (pos1 ? 0 : 1) - (pos2 ? 0 : 1);
        con.hard = d < 0;
        if (!con.hard) con.d = BigHalf::from_int(d);
        inst.cons.push_back(con);
    }
    void hard_clause(int v1, bool pos1, int v2, bool pos2) { clause(v1, pos1, v2, pos2, -1); }
};

bool bipartite_after_removal(int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
                             const std::vector<char>& removed_vertex,
                             const std::vector<char>& removed_edge) {
    std::vector<std::vector<int>> adj(n);
    for (size_t e = 0; e < edges.size(); e++) {
        if (!removed_edge.empty() && removed_edge[e]) continue;
        auto [u, v] = edges[e];
        if (!removed_vertex.empty() && (removed_vertex[u] || removed_vertex[v])) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; s++) {
        if (color[s] != -1 || (!removed_vertex.empty() && removed_vertex[s])) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Hammer-Simeone: a graph is split iff its degree sequence d1>=...>=dn with
// h = max{i : d_i >= i-1} satisfies sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i.
bool is_split_graph(int n, const std::vector<std::pair<int32_t, int32_t>>& edges,
                    const std::vector<char>& removed) {
    std::vector<int64_t> deg(n, 0);
    std::vector<int> alive;
    for (auto [u, v] : edges)
        if (!removed[u] && !removed[v]) {
            deg[u]++;
            deg[v]++;
        }
    for (int v = 0; v < n; v++)
        if (!removed[v]) alive.push_back(v);
    std::vector<int64_t> d;
    for (int v : alive) d.push_back(deg[v]);
    std::sort(d.rbegin(), d.rend());
    int m = (int)d.size();
    int h = 0;
    for (int i = 1; i <= m; i++)
        if (d[i - 1] >= i - 1) h = i;
    int64_t lhs = 0, rhs = (int64_t)h * (h - 1);
    for (int i = 0; i < h; i++) lhs += d[i];
    for (int i = h; i < m; i++) rhs += d[i];
    return lhs == rhs;
}

int lit_var(int lit) { return std::abs(lit) - 1; }
bool lit_true(int lit, const std::vector<int8_t>& assign) {
    return lit > 0 ? assign[lit_var(lit)] == 1 : assign[lit_var(lit)] == 0;
}

// ---------------------------------------------------------------------------
// encoders
// ---------------------------------------------------------------------------

Encoded encode_vc(const VcProblem& p) {
    p.g.validate();
    Builder b;
    for (int v = 0; v < p.g.n; v++) b.add_var(p.g.vweight[v]);
    for (auto [u, v] : p.g.edges) b.hard_clause(u, true, v, true);
    return {std::move(b.inst), {}};
}

Encoded encode_oct(const OctProblem& p) {
    p.g.validate();
    Builder b;
    for (int v = 0; v < p.g.n; v++) {
        b.add_var(0);  // left-side flag, var 2v
        b.add_var(0);  // right-side flag, var 2v+1
    }
    for (int v = 0; v < p.g.n; v++) b.clause(2 * v, true, 2 * v + 1, true, p.g.vweight[v]);
    for (auto [u, v] : p.g.edges) {
        b.hard_clause(2 * u, false, 2 * v, false);          // not both left
        b.hard_clause(2 * u + 1, false, 2 * v + 1, false);  // not both right
    }
    return {std::move(b.inst), {}};
}

Encoded encode_a2sat(const A2SatProblem& p) {
    p.f.validate();
    Builder b;
    for (int v = 0; v < p.f.nvars; v++) b.add_var(0);
    for (const auto& cl : p.f.clauses) {
        ABOVELP_CHECK(cl.size() == 2, "clauses must have exactly two literals");
        int u = lit_var(cl[0]), v = lit_var(cl[1]);
        bool pu = cl[0] > 0, pv = cl[1] > 0;
        if (u == v) {
            if (pu != pv) continue;  // tautology, never violated
            // duplicated literal: route the penalty through an equal copy
            int mirror = b.add_var(0);
            b.hard_clause(u, false, mirror, true);  // mirror >= x
            b.hard_clause(u, true, mirror, false);  // mirror <= x
            b.clause(u, pu, mirror, pv, 1);
        } else {
            b.clause(u, pu, v, pv, 1);
        }
    }
    return {std::move(b.inst), {}};
}

Encoded encode_edge_bip(const EdgeBipProblem& p) {
    p.g.validate();
    Builder b;
    for (int v = 0; v < p.g.n; v++) b.add_var(0);  // side flag
    for (size_t e = 0; e < p.g.edges.size(); e++) {
        auto [u, v] = p.g.edges[e];
        b.clause(u, true, v, true, p.g.eweight[e]);    // both on side 0
        b.clause(u, false, v, false, p.g.eweight[e]);  // both on side 1
    }
    return {std::move(b.inst), {}};
}

Encoded encode_minsat(const MinSatProblem& p) {
    p.f.validate();
    Builder b;
    for (int v = 0; v < p.f.nvars; v++) b.add_var(0);
    for (const auto& cl : p.f.clauses) {
        int t = b.add_var(1);  // satisfaction indicator, pushed above every literal
        for (int lit : cl) b.hard_clause(t, true, lit_var(lit), lit < 0);
    }
    return {std::move(b.inst), {}};
}

Encoded encode_gvc(const GvcProblem& p) {
    p.g.validate();
    ABOVELP_CHECK(p.d.size() == p.g.edges.size(), "edge cost triple count mismatch");
    Builder b;
    for (int v = 0; v < p.g.n; v++) b.add_var(p.g.vweight[v]);
    for (size_t e = 0; e < p.g.edges.size(); e++) {
        auto [d0, d1, d2] = p.d[e];
        ABOVELP_CHECK(d0 >= d1 && d1 >= d2 && d2 >= 0, "edge costs must satisfy d0>=d1>=d2>=0");
        auto [u, v] = p.g.edges[e];
        // f(taken endpoints) = d2 + (d0-d2)*[taken=0] + (d1-d2)*[taken=1]
        b.clause(u, true, v, true, d0 - d2);
        if (d1 - d2 > 0) {
            Bip2Constraint c1{(int32_t)u, (int32_t)v, 1, -1, 0, false, BigHalf::from_int(d1 - d2)};
            Bip2Constraint c2{(int32_t)v, (int32_t)u, 1, -1, 0, false, BigHalf::from_int(d1 - d2)};
            b.inst.cons.push_back(c1);
            b.inst.cons.push_back(c2);
        }
    }
    return {std::move(b.inst), {}};
}

Encoded encode_gen2sat(const Gen2SatProblem& p) {
    p.f.validate();
    ABOVELP_CHECK((int)p.vweight.size() == p.f.nvars, "weight vector size mismatch");
    Builder b;
    for (int v = 0; v < p.f.nvars; v++) b.add_var(p.vweight[v]);
    for (const auto& cl : p.f.clauses) {
        ABOVELP_CHECK(cl.size() == 2, "clauses must have exactly two literals");
        int u = lit_var(cl[0]), v = lit_var(cl[1]);
        bool pu = cl[0] > 0, pv = cl[1] > 0;
        if (u == v) {
            if (pu != pv) continue;  // tautology
            // single-literal requirement expressed as a one-variable constraint
            Bip2Constraint con;
            con.i = u;
            con.j = -1;
            con.a = pu ? 1 : -1;
            con.c = pu ? 1 : 0;
            con.hard = true;
            b.inst.cons.push_back(con);
        } else {
            b.hard_clause(u, pu, v, pv);
        }
    }
    return {std::move(b.inst), {}};
}

Encoded encode_clique_complement(const CliqueComplementProblem& p) {
    p.g.validate();
    Builder b;
    for (int v = 0; v < p.g.n; v++) b.add_var(p.g.vweight[v]);
    std::set<std::pair<int32_t, int32_t>> present;
    for (auto [u, v] : p.g.edges) present.insert(std::minmax(u, v));
    for (int32_t u = 0; u < p.g.n; u++)
        for (int32_t v = u + 1; v < p.g.n; v++)
            if (!present.count({u, v})) b.hard_clause(u, true, v, true);
    return {std::move(b.inst), {}};
}

Encoded encode_a2csp(const A2CspProblem& p) {
    Builder b;
    for (int v = 0; v < p.nvars; v++) b.add_var(0);
    for (const auto& con : p.cons) {
        ABOVELP_CHECK(0 <= con.u && con.u < p.nvars && 0 <= con.v && con.v < p.nvars &&
                          con.u != con.v,
                      "constraint variables out of range");
        for (int combo = 0; combo < 4; combo++) {
            if (con.allowed & (1 << combo)) continue;
            int xu = combo & 1, xv = combo >> 1;
            b.clause(con.u, xu == 0, con.v, xv == 0, 1);  // violated exactly at the combo
        }
    }
    return {std::move(b.inst), {}};
}

Encoded encode_dir_min_uncut(const DirMinUncutProblem& p) {
    p.g.validate();
    Builder b;
    for (int v = 0; v < p.g.n; v++) b.add_var(0);
    for (size_t e = 0; e < p.g.edges.size(); e++) {
        auto [u, v] = p.g.edges[e];
        int64_t w = p.g.eweight[e];
        // an arc is satisfied only when u is inside and v outside
        b.clause(u, true, v, true, w);    // (0,0)
        b.clause(u, true, v, false, w);   // (0,1)
        b.clause(u, false, v, false, w);  // (1,1)
    }
    return {std::move(b.inst), {}};
}

Encoded encode_split_vd(const SplitVdProblem& p) {
    p.g.validate();
    Builder b;
    for (int v = 0; v < p.g.n; v++) {
        b.add_var(0);  // clique-side flag, 2v
        b.add_var(0);  // independent-side flag, 2v+1
    }
    for (int v = 0; v < p.g.n; v++) b.clause(2 * v, true, 2 * v + 1, true, p.g.vweight[v]);
    std::set<std::pair<int32_t, int32_t>> present;
    for (auto [u, v] : p.g.edges) present.insert(std::minmax(u, v));
    for (auto [u, v] : p.g.edges) b.hard_clause(2 * u + 1, false, 2 * v + 1, false);
    for (int32_t u = 0; u < p.g.n; u++)
        for (int32_t v = u + 1; v < p.g.n; v++)
            if (!present.count({u, v})) b.hard_clause(2 * u, false, 2 * v, false);
    return {std::move(b.inst), {}};
}

// ---------------------------------------------------------------------------
// decoders (objectives recomputed from the decoded structure)
// ---------------------------------------------------------------------------

ProblemSolution decode_vertex_set(const std::vector<int32_t>& vs, const std::vector<int64_t>& w) {
    int64_t obj = 0;
    for (int v : vs) obj += w[v];
    return {VertexSetSolution{vs}, obj};
}

}  // namespace

Encoded encode(const ProblemInstance& p) {
    Encoded out = std::visit(
        [](const auto& inst) -> Encoded {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, VcProblem>) return encode_vc(inst);
            else if constexpr (std::is_same_v<T, OctProblem>) return encode_oct(inst);
            else if constexpr (std::is_same_v<T, A2SatProblem>) return encode_a2sat(inst);
            else if constexpr (std::is_same_v<T, EdgeBipProblem>) return encode_edge_bip(inst);
            else if constexpr (std::is_same_v<T, MinSatProblem>) return encode_minsat(inst);
            else if constexpr (std::is_same_v<T, GvcProblem>) return encode_gvc(inst);
            else if constexpr (std::is_same_v<T, Gen2SatProblem>) return encode_gen2sat(inst);
            else if constexpr (std::is_same_v<T, CliqueComplementProblem>)
                return encode_clique_complement(inst);
            else if constexpr (std::is_same_v<T, A2CspProblem>) return encode_a2csp(inst);
            else if constexpr (std::is_same_v<T, DirMinUncutProblem>)
                return encode_dir_min_uncut(inst);
            else return encode_split_vd(inst);
        },
        p);
    out.inst.validate();
    return out;
}

ProblemSolution decode(const ProblemInstance& p, const DecoderCtx&, const std::vector<int64_t>& x) {
    return std::visit(
        [&](const auto& inst) -> ProblemSolution {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, VcProblem> || std::is_same_v<T, CliqueComplementProblem>) {
                std::vector<int32_t> vs;
                for (int v = 0; v < inst.g.n; v++)
                    if (x[v] == 1) vs.push_back(v);
                return decode_vertex_set(vs, inst.g.vweight);
            } else if constexpr (std::is_same_v<T, OctProblem> || std::is_same_v<T, SplitVdProblem>) {
                std::vector<int32_t> vs;
                for (int v = 0; v < inst.g.n; v++)
                    if (x[2 * v] == 0 && x[2 * v + 1] == 0) vs.push_back(v);
                return decode_vertex_set(vs, inst.g.vweight);
            } else if constexpr (std::is_same_v<T, A2SatProblem>) {
                std::vector<int8_t> assign(x.begin(), x.begin() + inst.f.nvars);
                int64_t unsat = 0;
                for (const auto& cl : inst.f.clauses)
                    if (!lit_true(cl[0], assign) && !lit_true(cl[1], assign)) unsat++;
                return {AssignmentSolution{std::move(assign)}, unsat};
            } else if constexpr (std::is_same_v<T, EdgeBipProblem>) {
                std::vector<int32_t> cut;
                int64_t obj = 0;
                for (size_t e = 0; e < inst.g.edges.size(); e++) {
                    auto [u, v] = inst.g.edges[e];
                    if (x[u] == x[v]) {
                        cut.push_back((int32_t)e);
                        obj += inst.g.eweight[e];
                    }
                }
                return {EdgeSetSolution{std::move(cut)}, obj};
            } else if constexpr (std::is_same_v<T, MinSatProblem>) {
                std::vector<int8_t> assign(x.begin(), x.begin() + inst.f.nvars);
                int64_t sat = 0;
                for (const auto& cl : inst.f.clauses)
                    for (int lit : cl)
                        if (lit_true(lit, assign)) {
                            sat++;
                            break;
                        }
                return {AssignmentSolution{std::move(assign)}, sat};
            } else if constexpr (std::is_same_v<T, GvcProblem>) {
                std::vector<int32_t> vs;
                int64_t obj = 0;
                for (int v = 0; v < inst.g.n; v++)
                    if (x[v] == 1) {
                        vs.push_back(v);
                        obj += inst.g.vweight[v];
                    }
                for (size_t e = 0; e < inst.g.edges.size(); e++) {
                    auto [u, v] = inst.g.edges[e];
                    obj += inst.d[e][(x[u] == 1) + (x[v] == 1)];
                }
                return {VertexSetSolution{std::move(vs)}, obj};
            } else if constexpr (std::is_same_v<T, Gen2SatProblem>) {
                std::vector<int8_t> assign(x.begin(), x.begin() + inst.f.nvars);
                int64_t obj = 0;
                for (int v = 0; v < inst.f.nvars; v++)
                    if (assign[v]) obj += inst.vweight[v];
                return {AssignmentSolution{std::move(assign)}, obj};
            } else if constexpr (std::is_same_v<T, A2CspProblem>) {
                std::vector<int8_t> assign(x.begin(), x.begin() + inst.nvars);
                int64_t unsat = 0;
                for (const auto& con : inst.cons)
                    if (!(con.allowed & (1 << (assign[con.u] + 2 * assign[con.v])))) unsat++;
                return {AssignmentSolution{std::move(assign)}, unsat};
            } else {  // DirMinUncutProblem
                std::vector<int8_t> assign(x.begin(), x.begin() + inst.g.n);
                int64_t obj = 0;
                for (size_t e = 0; e < inst.g.edges.size(); e++) {
                    auto [u, v] = inst.g.edges[e];
                    if (!(assign[u] == 1 && assign[v] == 0)) obj += inst.g.eweight[e];
                }
                return {AssignmentSolution{std::move(assign)}, obj};
            }
        },
        p);
}

VerifyResult verify(const ProblemInstance& p, const ProblemSolution& sol) {
    VerifyResult out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.violations.push_back(std::move(msg));
    };

    std::visit(
        [&](const auto& inst) {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, VcProblem>) {
                const auto* vs = std::get_if<VertexSetSolution>(&sol.payload);
                if (!vs) return fail("wrong solution shape");
                std::vector<char> in(inst.g.n, 0);
                for (int v : vs->vertices) in[v] = 1, out.objective += inst.g.vweight[v];
                for (auto [u, v] : inst.g.edges)
                    if (!in[u] && !in[v])
                        fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} uncovered");
            } else if constexpr (std::is_same_v<T, OctProblem>) {
                const auto* vs = std::get_if<VertexSetSolution>(&sol.payload);
                if (!vs) return fail("wrong solution shape");
                std::vector<char> rem(inst.g.n, 0);
                for (int v : vs->vertices) rem[v] = 1, out.objective += inst.g.vweight[v];
                if (!bipartite_after_removal(inst.g.n, inst.g.edges, rem, {}))
                    fail("an odd cycle survives the removal");
            } else if constexpr (std::is_same_v<T, A2SatProblem>) {
                const auto* as = std::get_if<AssignmentSolution>(&sol.payload);
                if (!as || (int)as->values.size() != inst.f.nvars)
                    return fail("wrong solution shape");
                for (const auto& cl : inst.f.clauses)
                    if (!lit_true(cl[0], as->values) && !lit_true(cl[1], as->values))
                        out.objective++;
            } else if constexpr (std::is_same_v<T, EdgeBipProblem>) {
                const auto* es = std::get_if<EdgeSetSolution>(&sol.payload);
                if (!es) return fail("wrong solution shape");
                std::vector<char> rem(inst.g.edges.size(), 0);
                for (int e : es->edges) rem[e] = 1, out.objective += inst.g.eweight[e];
                if (!bipartite_after_removal(inst.g.n, inst.g.edges, {}, rem))
                    fail("an odd cycle survives the deletion");
            } else if constexpr (std::is_same_v<T, MinSatProblem>) {
                const auto* as = std::get_if<AssignmentSolution>(&sol.payload);
                if (!as || (int)as->values.size() != inst.f.nvars)
                    return fail("wrong solution shape");
                for (const auto& cl : inst.f.clauses)
                    for (int lit : cl)
                        if (lit_true(lit, as->values)) {
                            out.objective++;
                            break;
                        }
            } else if constexpr (std::is_same_v<T, GvcProblem>) {
                const auto* vs = std::get_if<VertexSetSolution>(&sol.payload);
                if (!vs) return fail("wrong solution shape");
                std::vector<char> in(inst.g.n, 0);
                for (int v : vs->vertices) in[v] = 1, out.objective += inst.g.vweight[v];
                for (size_t e = 0; e < inst.g.edges.size(); e++) {
                    auto [u, v] = inst.g.edges[e];
                    out.objective += inst.d[e][in[u] + in[v]];
                }
            } else if constexpr (std::is_same_v<T, Gen2SatProblem>) {
                const auto* as = std::get_if<AssignmentSolution>(&sol.payload);
                if (!as || (int)as->values.size() != inst.f.nvars)
                    return fail("wrong solution shape");
                for (size_t c = 0; c < inst.f.clauses.size(); c++) {
                    const auto& cl = inst.f.clauses[c];
                    bool sat = false;
                    for (int lit : cl) sat |= lit_true(lit, as->values);
                    if (!sat) fail("clause " + std::to_string(c) + " unsatisfied");
                }
                for (int v = 0; v < inst.f.nvars; v++)
                    if (as->values[v]) out.objective += inst.vweight[v];
            } else if constexpr (std::is_same_v<T, CliqueComplementProblem>) {
                const auto* vs = std::get_if<VertexSetSolution>(&sol.payload);
                if (!vs) return fail("wrong solution shape");
                std::vector<char> rem(inst.g.n, 0);
                for (int v : vs->vertices) rem[v] = 1, out.objective += inst.g.vweight[v];
                std::set<std::pair<int32_t, int32_t>> present;
                for (auto [u, v] : inst.g.edges) present.insert(std::minmax(u, v));
                for (int32_t u = 0; u < inst.g.n; u++)
                    for (int32_t v = u + 1; v < inst.g.n; v++)
                        if (!rem[u] && !rem[v] && !present.count({u, v}))
                            fail("vertices " + std::to_string(u) + "," + std::to_string(v) +
                                 " remain non-adjacent");
            } else if constexpr (std::is_same_v<T, A2CspProblem>) {
                const auto* as = std::get_if<AssignmentSolution>(&sol.payload);
                if (!as || (int)as->values.size() != inst.nvars) return fail("wrong solution shape");
                for (const auto& con : inst.cons)
                    if (!(con.allowed & (1 << (as->values[con.u] + 2 * as->values[con.v]))))
                        out.objective++;
            } else if constexpr (std::is_same_v<T, DirMinUncutProblem>) {
                const auto* as = std::get_if<AssignmentSolution>(&sol.payload);
                if (!as || (int)as->values.size() != inst.g.n) return fail("wrong solution shape");
                for (size_t e = 0; e < inst.g.edges.size(); e++) {
                    auto [u, v] = inst.g.edges[e];
                    if (!(as->values[u] == 1 && as->values[v] == 0))
                        out.objective += inst.g.eweight[e];
                }
            } else {  // SplitVdProblem
                const auto* vs = std::get_if<VertexSetSolution>(&sol.payload);
                if (!vs) return fail("wrong solution shape");
                std::vector<char> rem(inst.g.n, 0);
                for (int v : vs->vertices) rem[v] = 1, out.objective += inst.g.vweight[v];
                if (!is_split_graph(inst.g.n, inst.g.edges, rem))
                    fail("the remaining graph is not split");
            }
        },
        p);
    if (out.ok && out.objective != sol.objective)
        fail("objective claim " + std::to_string(sol.objective) + " != recomputed " +
             std::to_string(out.objective));
    return out;
}

FrontendResult solve_problem(const ProblemInstance& p, std::optional<HalfInt> k) {
    Encoded enc = encode(p);
    Bip2SolveResult r = solve_bip2(enc.inst, k);
    FrontendResult out;
    out.status = r.status;
    out.lp = r.lp;
    out.consumed = r.consumed;
    out.stats = r.stats;
    if (r.solution) {
        ProblemSolution sol = decode(p, enc.ctx, r.solution->x);
        VerifyResult check = verify(p, sol);
        ABOVELP_CHECK(check.ok, "decoded solution failed verification: " +
                                    (check.violations.empty() ? "" : check.violations.front()));
        out.solution = std::move(sol);
    }
    return out;
}

const char* problem_name(const ProblemInstance& p) {
    static const char* names[] = {"vc",      "oct",     "a2sat",    "edge-bipartization",
                                  "minsat",  "gvc",     "gen2sat",  "clique-complement",
                                  "a2csp",   "dirmu",   "split-vd"};
    return names[p.index()];
}

}  // namespace abovelp
