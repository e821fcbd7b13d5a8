#include "abovelp/bip2.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace abovelp {

HalfInt BigHalf::concretize(int64_t m0) const {
    __int128 v = (__int128)mu_doubled * m0 + base_doubled;
    ABOVELP_CHECK(v > INT64_MIN / 2 && v < INT64_MAX / 2, "overflow concretizing weight");
    return HalfInt::from_doubled((int64_t)v);
}

std::string BigHalf::str() const {
    std::string s;
    if (mu_doubled != 0) s += HalfInt::from_doubled(mu_doubled).str() + "M";
    if (base_doubled != 0 || mu_doubled == 0) {
        if (mu_doubled != 0 && base_doubled > 0) s += "+";
        s += HalfInt::from_doubled(base_doubled).str();
    }
    return s;
}

void Bip2Instance::validate() const {
    for (const auto& w : weight)
        ABOVELP_CHECK(BigHalf{} <= w, "negative variable weight");
    ABOVELP_CHECK(weight.size() == domain.size(), "domain size mismatch");
    for (const auto& con : cons) {
        ABOVELP_CHECK(0 <= con.i && con.i < nvars(), "constraint var out of range");
        ABOVELP_CHECK(con.a >= -1 && con.a <= 1 && con.b >= -1 && con.b <= 1,
                      "coefficient outside {-1,0,1}");
        if (con.j >= 0) {
            ABOVELP_CHECK(con.j < nvars(), "constraint var out of range");
            ABOVELP_CHECK(con.i != con.j, "constraint repeats a variable");
        }
        if (!con.hard) ABOVELP_CHECK(BigHalf{} <= con.d, "negative independent-variable weight");
    }
}

bool Bip2Instance::all_binary() const {
    for (Domain d : domain)
        if (d != Domain::binary) return false;
    return true;
}

HalfInt z_min(const Bip2Constraint& con, const std::vector<HalfInt>& x) {
    HalfInt def = HalfInt::from_int(con.c) - x[con.i] * con.a;
    if (con.j >= 0 && con.b != 0) def -= x[con.j] * con.b;
    return max(HalfInt{}, def);
}

BigHalf LpPair::primal_value(const Bip2Instance& inst) const {
    BigHalf v;
    for (int i = 0; i < inst.nvars(); i++) v += inst.weight[i].times(x[i]);
    for (const auto& con : inst.cons)
        if (!con.hard) v += con.d.times(z_min(con, x));
    return v;
}

BigHalf LpPair::dual_value(const Bip2Instance& inst) const {
    BigHalf v;
    for (size_t k = 0; k < inst.cons.size(); k++) v += y[k] * inst.cons[k].c;
    return v;
}

std::string LpPair::violation(const Bip2Instance& inst) const {
    if ((int)x.size() != inst.nvars()) return "primal size mismatch";
    if (y.size() != inst.cons.size()) return "dual size mismatch";
    for (int i = 0; i < inst.nvars(); i++) {
        if (x[i].doubled < 0) return "negative primal x" + std::to_string(i);
        if (inst.domain[i] == Domain::binary && x[i] > HalfInt::from_int(1))
            return "binary primal above one at x" + std::to_string(i);
    }
    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        if (con.hard) {
            HalfInt lhs = x[con.i] * con.a;
            if (con.j >= 0 && con.b != 0) lhs += x[con.j] * con.b;
            if (lhs < HalfInt::from_int(con.c))
                return "hard constraint " + std::to_string(k) + " violated";
        }
        if (y[k] < BigHalf{}) return "negative dual y" + std::to_string(k);
        if (!con.hard && con.d < y[k]) return "dual above weight at y" + std::to_string(k);
    }
    std::vector<BigHalf> load(inst.nvars());
    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        if (con.a == 1) load[con.i] += y[k];
        if (con.a == -1) load[con.i] -= y[k];
        if (con.j >= 0) {
            if (con.b == 1) load[con.j] += y[k];
            if (con.b == -1) load[con.j] -= y[k];
        }
    }
    for (int i = 0; i < inst.nvars(); i++)
        if (inst.weight[i] < load[i])
            return "dual load exceeds weight at variable " + std::to_string(i) + ": " +
                   load[i].str() + " > " + inst.weight[i].str();
    if (primal_value(inst) != dual_value(inst))
        return "pair values differ: primal " + primal_value(inst).str() + " vs dual " +
               dual_value(inst).str();
    return {};
}

// ---------------------------------------------------------------------------
// normalization to clause form
// ---------------------------------------------------------------------------

namespace {

struct Combo {
    int xi, xj;
};
constexpr std::array<Combo, 4> kCombos{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};

int64_t deficit(const Bip2Constraint& con, int xi, int xj) {
    int64_t lhs = (int64_t)con.a * xi + (con.j >= 0 ? (int64_t)con.b * xj : 0);
    return con.c - lhs;
}

// clause constraint over two distinct literals; c = 1 - (#negative literals)
Bip2Constraint make_clause(int var1, bool pos1, int var2, bool pos2, bool hard, BigHalf d) {
    Bip2Constraint con;
    con.i = var1;
    con.j = var2;
    con.a = pos1 ? 1 : -1;
    con.b = pos2 ? 1 : -1;
    con.c = 1 - (pos1 ? 0 : 1) - (pos2 ? 0 : 1);
    con.hard = hard;
    con.d = d;
    return con;
}

}  // namespace

NormalizeResult normalize_binary(const Bip2Instance& inst) {
    inst.validate();
    ABOVELP_CHECK(inst.all_binary(), "normalization expects a binary instance");
    for (const auto& w : inst.weight)
        ABOVELP_CHECK(w.is_plain() && w.base_doubled % 2 == 0, "binary instance weights must be integers");
    for (const auto& con : inst.cons)
        if (!con.hard)
            ABOVELP_CHECK(con.d.is_plain() && con.d.base_doubled % 2 == 0,
                          "binary instance d-weights must be integers");

    const int n = inst.nvars();
    NormalizeResult out;
    out.n_original = n;
    out.fixed.assign(n, -1);
    out.cons_map.assign(inst.cons.size(), -1);

    // propagate forced values of hard constraints until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& con : inst.cons) {
            if (!con.hard) continue;
            bool i_free = out.fixed[con.i] < 0;
            bool j_free = con.j >= 0 && con.b != 0 && out.fixed[con.j] < 0;
            std::vector<Combo> allowed;
            for (auto [xi, xj] : kCombos) {
                int vi = i_free ? xi : out.fixed[con.i];
                int vj = (con.j >= 0 && con.b != 0) ? (j_free ? xj : out.fixed[con.j]) : 0;
                if (!i_free && xi != 0) continue;
                if (!j_free && xj != 0) continue;
                if (deficit(con, vi, vj) <= 0) allowed.push_back({i_free ? vi : -1, j_free ? vj : -1});
            }
            if (allowed.empty()) throw InfeasibleError("hard constraints are infeasible");
            if (i_free) {
                bool all0 = true, all1 = true;
                for (auto cb : allowed) (cb.xi == 0 ? all1 : all0) = false;
                if (all0 || all1) {
                    out.fixed[con.i] = all1 ? 1 : 0;
                    out.native = false;
                    changed = true;
                }
            }
            if (j_free) {
                bool all0 = true, all1 = true;
                for (auto cb : allowed) (cb.xj == 0 ? all1 : all0) = false;
                if (all0 || all1) {
                    out.fixed[con.j] = all1 ? 1 : 0;
                    out.native = false;
                    changed = true;
                }
            }
        }
    }

    Bip2Instance norm;
    norm.weight = inst.weight;
    norm.domain.assign(n, Domain::binary);
    for (int v = 0; v < n; v++) {
        if (out.fixed[v] >= 0) {
            if (out.fixed[v] == 1) out.offset += inst.weight[v].as_half().as_int();
            norm.weight[v] = BigHalf{};
        }
        out.aux_of_var.push_back(-1);
        out.aux_positive.push_back(0);
    }

    // cost d*(1 - lit): realized as an auxiliary variable of weight d forced
    // above 1 - lit by a hard clause
    auto add_unit = [&](int var, bool positive, int64_t w) {
        if (w == 0) return;
        int aux = norm.nvars();
        norm.weight.push_back(BigHalf::from_int(w));
        norm.domain.push_back(Domain::binary);
        out.aux_of_var.push_back(var);
        out.aux_positive.push_back(positive ? 1 : 0);
        norm.cons.push_back(make_clause(aux, true, var, positive, true, BigHalf{}));
        out.native = false;
    };

    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        auto value_of = [&](int v) { return out.fixed[v]; };
        bool i_free = value_of(con.i) < 0;
        bool has_j = con.j >= 0 && con.b != 0;
        bool j_free = has_j && value_of(con.j) < 0;
        int64_t d_int = con.hard ? 0 : con.d.as_half().as_int();

        // residual z over free combos (substituting fixed values)
        auto zval = [&](int xi, int xj) {
            int vi = i_free ? xi : (value_of(con.i) < 0 ? 0 : value_of(con.i));
            int vj = has_j ? (j_free ? xj : value_of(con.j)) : 0;
            return std::max<int64_t>(0, deficit(con, vi, vj));
        };

        if (con.hard) {
            if (!i_free && !j_free) continue;  // feasibility already enforced
            if (i_free && j_free) {
                std::vector<Combo> bad;
                for (auto [xi, xj] : kCombos)
                    if (zval(xi, xj) > 0) bad.push_back({xi, xj});
                if (bad.empty()) continue;  // vacuous
                ABOVELP_CHECK(bad.size() == 1, "hard constraint not reduced by propagation");
                out.cons_map[k] = (int)norm.cons.size();
                norm.cons.push_back(make_clause(con.i, bad[0].xi == 0, con.j, bad[0].xj == 0,
                                                true, BigHalf{}));
            }
            // single free var: both values allowed (else propagation fixed it) -> vacuous
            continue;
        }

        // soft constraint: base shift, then a core clause or unit costs
        int free_count = (i_free ? 1 : 0) + (j_free ? 1 : 0);
        if (free_count == 0) {
            out.offset += d_int * zval(0, 0);
            continue;
        }
        if (free_count == 1) {
            int var = i_free ? con.i : con.j;
            int64_t z0 = i_free ? zval(0, 0) : zval(0, 0);
            int64_t z1 = i_free ? zval(1, 0) : zval(0, 1);
            int64_t base = std::min(z0, z1);
            out.offset += d_int * base;
            if (z0 != z1) {
                // cost d*span when the var sits at its expensive value
                bool cheap_is_one = z1 < z0;
                add_unit(var, cheap_is_one, d_int * std::abs(z1 - z0));
            }
            continue;
        }
        int64_t r00 = zval(0, 0), r10 = zval(1, 0), r01 = zval(0, 1), r11 = zval(1, 1);
        int64_t base = std::min(std::min(r00, r10), std::min(r01, r11));
        out.offset += d_int * base;
        r00 -= base; r10 -= base; r01 -= base; r11 -= base;
        if (r00 == 0 && r10 == 0 && r01 == 0 && r11 == 0) continue;
        if (r00 + r11 == r10 + r01) {
            // separable: unit costs on each variable around a zero combo
            int pi = (r10 < r00 || r11 < r01) ? 1 : 0;  // cheap value of x_i
            int pj = (r01 < r00 || r11 < r10) ? 1 : 0;
            auto at = [&](int xi, int xj) { return xi ? (xj ? r11 : r10) : (xj ? r01 : r00); };
            ABOVELP_CHECK(at(pi, pj) == 0, "separable pattern without a zero combo");
            add_unit(con.i, pi == 1, d_int * at(1 - pi, pj));
            add_unit(con.j, pj == 1, d_int * at(pi, 1 - pj));
        } else {
            // exactly one expensive combo of cost 1: a genuine clause
            int64_t ones = (r00 == 1) + (r10 == 1) + (r01 == 1) + (r11 == 1);
            int64_t zeros = (r00 == 0) + (r10 == 0) + (r01 == 0) + (r11 == 0);
            ABOVELP_CHECK(ones == 1 && zeros == 3, "soft constraint has an unexpected pattern");
            int bi = r10 == 1 || r11 == 1, bj = r01 == 1 || r11 == 1;
            out.cons_map[k] = (int)norm.cons.size();
            norm.cons.push_back(make_clause(con.i, bi == 0, con.j, bj == 0, false,
                                            BigHalf::from_int(d_int)));
        }
    }
    norm.offset = inst.offset + BigHalf::from_int(out.offset);
    out.norm = std::move(norm);
    return out;
}

// ---------------------------------------------------------------------------
// half-integral pair via the polarity-literal network
// ---------------------------------------------------------------------------

PairResult compute_halfint_pair(const Bip2Instance& inst) {
    PairResult out;
    out.norm = normalize_binary(inst);
    const Bip2Instance& cn = out.norm.norm;
    const int n = cn.nvars();

    // nodes: 0 source, 1 sink, neg(v) = 2+2v, pos(v) = 3+2v
    DirectedNet net;
    for (int i = 0; i < 2 + 2 * n; i++) net.add_node();
    net.source = 0;
    net.sink = 1;
    auto neg_node = [](int v) { return 2 + 2 * v; };
    auto pos_node = [](int v) { return 3 + 2 * v; };
    auto lit_node = [&](int v, bool positive) { return positive ? pos_node(v) : neg_node(v); };

    for (int v = 0; v < n; v++) net.add_arc(net.source, neg_node(v), cn.weight[v].as_half());
    for (int v = 0; v < n; v++) net.add_arc(pos_node(v), net.sink, cn.weight[v].as_half());

    std::vector<std::pair<int, int>> clause_arcs(cn.cons.size());
    for (size_t k = 0; k < cn.cons.size(); k++) {
        const auto& con = cn.cons[k];
        bool p1 = con.a > 0, p2 = con.b > 0;
        // the clause routes flow from the falsifying side of one literal into
        // the satisfying side of the other, in both directions
        int a1, a2;
        if (con.hard) {
            a1 = net.add_unbounded_arc(lit_node(con.i, !p1), lit_node(con.j, p2));
            a2 = net.add_unbounded_arc(lit_node(con.j, !p2), lit_node(con.i, p1));
        } else {
            HalfInt d = con.d.as_half();
            a1 = net.add_arc(lit_node(con.i, !p1), lit_node(con.j, p2), d);
            a2 = net.add_arc(lit_node(con.j, !p2), lit_node(con.i, p1), d);
        }
        clause_arcs[k] = {a1, a2};
    }

    FlowState flow = zero_flow(net);
    augment_to_max(net, flow);

    LpPair pair;
    pair.y.resize(cn.cons.size());
    for (size_t k = 0; k < cn.cons.size(); k++) {
        HalfInt sum = flow.flow[clause_arcs[k].first] + flow.flow[clause_arcs[k].second];
        ABOVELP_CHECK(sum.is_integral(), "clause flow sums to an odd half");
        pair.y[k] = BigHalf::from_half(sum.halve());
    }
    auto seen = reachable_from(residual(net, flow), net.source);
    pair.x.resize(n);
    for (int v = 0; v < n; v++) {
        bool ng = seen[neg_node(v)], ps = seen[pos_node(v)];
        if (ng && !ps)
            pair.x[v] = HalfInt{};
        else if (ps && !ng)
            pair.x[v] = HalfInt::from_int(1);
        else
            pair.x[v] = HalfInt::half();
    }

    std::string bad = pair.violation(cn);
    ABOVELP_CHECK(bad.empty(), "literal-network pair failed verification: " + bad);
    ABOVELP_CHECK(flow.amount.is_integral(), "flow amount not integral");
    out.lp_norm = flow.amount.halve();
    ABOVELP_CHECK(pair.primal_value(cn) == BigHalf::from_half(out.lp_norm),
                  "pair value disagrees with the flow amount");
    out.pair = std::move(pair);

    if (out.norm.native) {
        LpPair orig;
        orig.x = out.pair.x;
        orig.x.resize(inst.nvars());
        orig.y.assign(inst.cons.size(), BigHalf{});
        for (size_t k = 0; k < inst.cons.size(); k++)
            if (out.norm.cons_map[k] >= 0) orig.y[k] = out.pair.y[out.norm.cons_map[k]];
        std::string bad2 = orig.violation(inst);
        ABOVELP_CHECK(bad2.empty(), "lifted pair failed verification: " + bad2);
        out.pair_for_original = std::move(orig);
    }
    return out;
}

// ---------------------------------------------------------------------------
// reduction chain
// ---------------------------------------------------------------------------

std::pair<Bip2Instance, LpPair> add_independent_vars(const Bip2Instance& inst, const LpPair& pair,
                                                     std::vector<char>* added) {
    Bip2Instance next = inst;
    if (added) added->assign(inst.cons.size(), 0);
    for (size_t k = 0; k < next.cons.size(); k++) {
        if (!next.cons[k].hard) continue;
        next.cons[k].hard = false;
        next.cons[k].d = BigHalf::big();
        if (added) (*added)[k] = 1;
    }
    LpPair moved = pair;
    std::string bad = moved.violation(next);
    ABOVELP_CHECK(bad.empty(), "stage-1 pair transport failed: " + bad);
    ABOVELP_CHECK(moved.primal_value(next) == pair.primal_value(inst),
                  "stage-1 changed the objective");
    return {std::move(next), std::move(moved)};
}

std::pair<Bip2Instance, LpPair> monotonize(const Bip2Instance& inst, const LpPair& pair,
                                           Stage2Rec* rec) {
    const int n = inst.nvars();
    int64_t max_abs_c = 1;
    for (const auto& con : inst.cons) max_abs_c = std::max(max_abs_c, std::abs(con.c));
    int64_t max_x = 0;
    for (const auto& v : pair.x) max_x = std::max(max_x, v.ceil_int());
    const int64_t X = std::max(2 * max_abs_c + 2, 2 * max_x + 2);
    if (rec) {
        rec->X = X;
        rec->n_before = n;
    }

    Bip2Instance next;
    next.offset = inst.offset;
    for (int i = 0; i < n; i++) {
        next.weight.push_back(BigHalf::big() + inst.weight[i]);  // plus copy 2i
        next.weight.push_back(BigHalf::big());                   // minus copy 2i+1
        next.domain.push_back(Domain::nonneg);
        next.domain.push_back(Domain::nonneg);
    }
    auto plus = [](int i) { return 2 * i; };
    auto minus = [](int i) { return 2 * i + 1; };

    LpPair moved;
    for (int i = 0; i < n; i++) {
        moved.x.push_back(pair.x[i]);
        HalfInt neg = HalfInt::from_int(X) - pair.x[i];
        ABOVELP_CHECK(neg.doubled >= 0, "X too small for the supplied primal");
        moved.x.push_back(neg);
    }

    std::vector<BigHalf> neg_load(n);  // dual mass on negative occurrences
    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        ABOVELP_CHECK(!con.hard, "monotonize requires independent variables everywhere");
        Bip2Constraint mapped;
        mapped.hard = false;
        mapped.d = con.d;
        int8_t a = con.a, b = con.b;
        int32_t ci = con.i, cj = con.j;
        ABOVELP_CHECK(a != 0 || (cj >= 0 && b != 0),
                      "degenerate constraint must be resolved at parse time");
        if (a == 0) {  // active variable goes first
            std::swap(ci, cj);
            std::swap(a, b);
            cj = -1;
            b = 0;
        }
        if (cj >= 0 && b != 0 && a == -1 && b == 1) {
            std::swap(ci, cj);
            std::swap(a, b);
        }
        if (cj < 0 || b == 0) {
            mapped.j = -1;
            mapped.b = 0;
            mapped.a = 1;
            if (a == 1) {
                mapped.i = plus(ci);
                mapped.c = con.c;
            } else {
                mapped.i = minus(ci);
                mapped.c = con.c + X;
                neg_load[ci] += pair.y[k];
            }
        } else {
            mapped.a = mapped.b = 1;
            if (a == 1 && b == 1) {
                mapped.i = plus(ci);
                mapped.j = plus(cj);
                mapped.c = con.c;
            } else if (a == 1 && b == -1) {
                mapped.i = plus(ci);
                mapped.j = minus(cj);
                mapped.c = con.c + X;
                neg_load[cj] += pair.y[k];
            } else {
                mapped.i = minus(ci);
                mapped.j = minus(cj);
                mapped.c = con.c + 2 * X;
                neg_load[ci] += pair.y[k];
                neg_load[cj] += pair.y[k];
            }
        }
        next.cons.push_back(mapped);
        moved.y.push_back(pair.y[k]);
    }
    // one coupling constraint per variable keeps the copies complementary
    for (int i = 0; i < n; i++) {
        Bip2Constraint bound;
        bound.i = plus(i);
        bound.j = minus(i);
        bound.a = bound.b = 1;
        bound.c = X;
        bound.hard = false;
        bound.d = BigHalf::big();
        next.cons.push_back(bound);
        moved.y.push_back(BigHalf::big() - neg_load[i]);
    }

    std::string bad = moved.violation(next);
    ABOVELP_CHECK(bad.empty(), "stage-2 pair transport failed: " + bad);
    BigHalf shift = BigHalf::big(n * X);
    ABOVELP_CHECK(moved.primal_value(next) == pair.primal_value(inst) + shift,
                  "stage-2 objective shift mismatch");
    return {std::move(next), std::move(moved)};
}

std::pair<Bip2Instance, LpPair> eliminate_independent(const Bip2Instance& inst, const LpPair& pair,
                                                      Stage3Rec* rec) {
    const int n = inst.nvars();
    Bip2Instance next;
    next.offset = inst.offset;
    next.weight = inst.weight;
    next.domain = inst.domain;
    LpPair moved;
    moved.x = pair.x;
    if (rec) {
        rec->n_before = n;
        rec->gadgets.clear();
    }
    BigHalf shift;

    for (size_t k = 0; k < inst.cons.size(); k++) {
        const auto& con = inst.cons[k];
        ABOVELP_CHECK(!con.hard, "eliminate_independent requires independent variables");
        ABOVELP_CHECK(con.a == 1 && (con.j < 0 || con.b == 1), "constraints must be monotone");
        if (con.j < 0 || con.b == 0) {
            // the independent variable simply becomes a regular one
            int zj = next.nvars();
            next.weight.push_back(con.d);
            next.domain.push_back(Domain::nonneg);
            moved.x.push_back(z_min(con, pair.x));
            Bip2Constraint c1{con.i, (int32_t)zj, 1, 1, con.c, true, {}};
            if (rec) rec->gadgets.push_back({(int32_t)k, (int32_t)zj, -1});
            next.cons.push_back(c1);
            moved.y.push_back(pair.y[k]);
            continue;
        }
        int zi = next.nvars(), zj = next.nvars() + 1;
        next.weight.push_back(con.d);
        next.weight.push_back(con.d);
        next.domain.push_back(Domain::nonneg);
        next.domain.push_back(Domain::nonneg);
        HalfInt c_half = HalfInt::from_int(con.c);
        HalfInt zi_val = max(HalfInt{}, c_half - pair.x[con.i]);
        HalfInt zj_val = max(HalfInt{}, max(c_half - zi_val, c_half - pair.x[con.j]));
        moved.x.push_back(zi_val);
        moved.x.push_back(zj_val);
        if (rec) rec->gadgets.push_back({(int32_t)k, (int32_t)zi, (int32_t)zj});
        next.cons.push_back({con.i, (int32_t)zi, 1, 1, con.c, true, {}});
        next.cons.push_back({con.j, (int32_t)zj, 1, 1, con.c, true, {}});
        next.cons.push_back({(int32_t)zi, (int32_t)zj, 1, 1, con.c, true, {}});
        if (con.c >= 0) {
            moved.y.push_back(pair.y[k]);
            moved.y.push_back(pair.y[k]);
            moved.y.push_back(con.d - pair.y[k]);
            shift += con.d * con.c;
        } else {
            ABOVELP_CHECK(pair.y[k] == BigHalf{}, "positive dual on a vacuous constraint");
            moved.y.push_back(BigHalf{});
            moved.y.push_back(BigHalf{});
            moved.y.push_back(BigHalf{});
        }
    }

    std::string bad = moved.violation(next);
    ABOVELP_CHECK(bad.empty(), "stage-3 pair transport failed: " + bad);
    ABOVELP_CHECK(moved.primal_value(next) == pair.primal_value(inst) + shift,
                  "stage-3 objective shift mismatch");
    return {std::move(next), std::move(moved)};
}

BinarizeResult binarize_to_vc(const Bip2Instance& i3, const LpPair& p3, int64_t m0) {
    const int n = i3.nvars();
    BinarizeResult out;
    out.rec.m0 = m0;
    out.rec.x_star = p3.x;

    std::vector<int64_t> weight(n);
    for (int v = 0; v < n; v++) {
        HalfInt w = i3.weight[v].concretize(m0);
        ABOVELP_CHECK(w.is_integral() && w.doubled >= 0, "concretized weight not a nonnegative integer");
        weight[v] = w.as_int();
    }

    // tight constraints between two half-valued variables become edges;
    // parallel edges merge with their duals summed
    std::map<std::pair<int32_t, int32_t>, std::pair<BigHalf, int32_t>> edge_dual;
    for (size_t k = 0; k < i3.cons.size(); k++) {
        const auto& con = i3.cons[k];
        ABOVELP_CHECK(con.hard && con.a == 1 && con.b == 1 && con.j >= 0,
                      "binarize expects hard monotone two-variable constraints");
        HalfInt lhs = p3.x[con.i] + p3.x[con.j];
        ABOVELP_CHECK(lhs >= HalfInt::from_int(con.c), "stage-3 primal infeasible");
        bool tight = lhs == HalfInt::from_int(con.c);
        if (!tight) {
            ABOVELP_CHECK(p3.y[k] == BigHalf{}, "slack constraint carries positive dual");
            continue;
        }
        bool i_half = !p3.x[con.i].is_integral(), j_half = !p3.x[con.j].is_integral();
        ABOVELP_CHECK(i_half == j_half, "tight constraint mixes half and integral variables");
        if (!i_half) continue;  // both integral: satisfied by the rounding offsets alone
        auto key = std::minmax(con.i, con.j);
        auto [it, fresh] = edge_dual.try_emplace({key.first, key.second},
                                                 std::make_pair(p3.y[k], (int32_t)k));
        if (!fresh) it->second.first += p3.y[k];
    }

    std::vector<std::pair<int32_t, int32_t>> edges;
    DualVc dual;
    for (const auto& [key, val] : edge_dual) {
        edges.push_back(key);
        HalfInt y = val.first.concretize(m0);
        ABOVELP_CHECK(y.doubled >= 0, "negative concretized dual");
        dual.y.push_back(y);
        out.rec.edge_source_cons.push_back(val.second);
    }

    out.vc = VcInstance::make(n, weight, edges);
    PrimalVc primal;
    primal.x.resize(n);
    for (int v = 0; v < n; v++)
        primal.x[v] = p3.x[v] - HalfInt::from_int(p3.x[v].floor_int());
    out.primal = std::move(primal);
    out.dual = std::move(dual);

    std::string bad = out.dual.feasibility_violation(out.vc);
    ABOVELP_CHECK(bad.empty(), "vertex-cover dual transport failed: " + bad);
    ABOVELP_CHECK(out.primal.value(out.vc) == out.dual.value(out.vc),
                  "vertex-cover pair values differ");
    return out;
}

ChainResult reduce_to_vc(const Bip2Instance& inst, const LpPair& pair) {
    inst.validate();
    std::string bad = pair.violation(inst);
    if (!bad.empty()) throw PairError("invalid pair for the reduction chain: " + bad);
    for (const auto& w : inst.weight)
        ABOVELP_CHECK(w.is_plain(), "chain input weights must be plain");

    ChainResult out;
    out.trace.i0 = inst;
    out.trace.p0 = pair;
    std::tie(out.trace.i1, out.trace.p1) =
        add_independent_vars(inst, pair, &out.trace.s1_added_z);
    std::tie(out.trace.i2, out.trace.p2) =
        monotonize(out.trace.i1, out.trace.p1, &out.trace.s2);
    std::tie(out.trace.i3, out.trace.p3) =
        eliminate_independent(out.trace.i2, out.trace.p2, &out.trace.s3);

    // concretization bound: any violation of the intended tight structure
    // costs more than everything the plain weights can pay for
    int64_t m0 = 1;
    for (const auto& w : inst.weight) m0 += w.as_half().as_int();
    for (const auto& con : inst.cons)
        if (!con.hard && con.d.is_plain())
            m0 += con.d.as_half().as_int() * (std::abs(con.c) + 2 * out.trace.s2.X);
    m0 = std::max<int64_t>(m0, 2 * out.trace.s2.X + 2);

    BinarizeResult bin = binarize_to_vc(out.trace.i3, out.trace.p3, m0);
    out.trace.vc_rec = std::move(bin.rec);
    out.vc = std::move(bin.vc);
    out.vc_primal = std::move(bin.primal);
    out.vc_dual = std::move(bin.dual);
    return out;
}

std::vector<int64_t> decode_chain(const ChainResult& chain, const VcSolution& cover) {
    const auto& tr = chain.trace;
    const int n3 = tr.i3.nvars();
    std::vector<char> selected(n3, 0);
    for (int v : cover.selected) selected[v] = 1;
    std::vector<int64_t> x3(n3);
    for (int v = 0; v < n3; v++) x3[v] = tr.vc_rec.x_star[v].floor_int() + (selected[v] ? 1 : 0);
    for (const auto& con : tr.i3.cons) {
        ABOVELP_CHECK(x3[con.i] + x3[con.j] >= con.c, "decoded stage-3 solution infeasible");
    }
    // drop gadget variables
    std::vector<int64_t> x2(x3.begin(), x3.begin() + tr.s3.n_before);
    // merge the plus/minus copies
    std::vector<int64_t> x1(tr.s2.n_before);
    for (int i = 0; i < tr.s2.n_before; i++) {
        ABOVELP_CHECK(x2[2 * i] + x2[2 * i + 1] == tr.s2.X,
                      "decoded copies do not sum to the coupling constant");
        x1[i] = x2[2 * i];
    }
    // stage 1 changed no variables
    for (const auto& con : tr.i0.cons) {
        if (!con.hard) continue;
        int64_t lhs = (int64_t)con.a * x1[con.i] + (con.j >= 0 ? (int64_t)con.b * x1[con.j] : 0);
        ABOVELP_CHECK(lhs >= con.c, "decoded solution violates a hard constraint");
    }
    return x1;
}

int64_t bip2_objective(const Bip2Instance& inst, const std::vector<int64_t>& x) {
    int64_t obj = 0;
    for (int i = 0; i < inst.nvars(); i++) {
        ABOVELP_CHECK(x[i] >= 0, "negative variable value");
        if (inst.domain[i] == Domain::binary) ABOVELP_CHECK(x[i] <= 1, "binary variable above one");
        obj += inst.weight[i].as_half().as_int() * x[i];
    }
    for (const auto& con : inst.cons) {
        int64_t lhs = (int64_t)con.a * x[con.i] + (con.j >= 0 ? (int64_t)con.b * x[con.j] : 0);
        int64_t z = std::max<int64_t>(0, con.c - lhs);
        if (con.hard)
            ABOVELP_CHECK(z == 0, "hard constraint violated");
        else
            obj += con.d.as_half().as_int() * z;
    }
    return obj;
}

Bip2SolveResult solve_bip2(const Bip2Instance& inst, std::optional<HalfInt> k,
                           const LpPair* supplied_pair) {
    inst.validate();
    Bip2SolveResult out;

    const Bip2Instance* chain_input = nullptr;
    const LpPair* chain_pair = nullptr;
    PairResult computed;
    LpPair supplied_copy;
    int64_t decode_offset = 0;

    if (supplied_pair) {
        if (!k)
            throw std::invalid_argument(
                "auto-deepening needs a binary instance; give an explicit budget with a supplied pair");
        std::string bad = supplied_pair->violation(inst);
        if (!bad.empty()) throw PairError("supplied pair rejected: " + bad);
        supplied_copy = *supplied_pair;
        chain_input = &inst;
        chain_pair = &supplied_copy;
        BigHalf lp = supplied_copy.primal_value(inst);
        ABOVELP_CHECK(lp.is_plain(), "supplied pair has a symbolic value");
        out.lp = lp.as_half();
    } else {
        if (!inst.all_binary())
            throw std::runtime_error("pair required: instance has non-binary variables");
        try {
            computed = compute_halfint_pair(inst);
        } catch (const InfeasibleError&) {
            out.status = SolveStatus::infeasible;
            return out;
        }
        chain_input = &computed.norm.norm;
        chain_pair = &computed.pair;
        decode_offset = computed.norm.offset;
        out.lp = computed.lp_original();
    }

    ChainResult chain = reduce_to_vc(*chain_input, *chain_pair);

    // a feasible instance never needs more gap than the plain weights total
    int64_t budget_cap = 0;
    for (const auto& w : chain_input->weight) budget_cap += w.as_half().as_int();
    for (const auto& con : chain_input->cons)
        if (!con.hard && con.d.is_plain()) budget_cap += con.d.as_half().as_int();

    VcSolveResult vc_result;
    if (k) {
        vc_result = solve_above_lp(chain.vc, chain.vc_primal, chain.vc_dual, *k);
    } else {
        for (HalfInt kk; kk.doubled <= 2 * budget_cap + 2; kk += HalfInt::half()) {
            vc_result = solve_above_lp(chain.vc, chain.vc_primal, chain.vc_dual, kk);
            if (vc_result.solution) break;
        }
        if (!vc_result.solution) {
            out.status = SolveStatus::infeasible;
            return out;
        }
    }
    out.stats = vc_result.stats;
    if (!vc_result.solution) {
        out.status = SolveStatus::no_solution_within_k;
        return out;
    }

    std::vector<int64_t> xin = decode_chain(chain, *vc_result.solution);
    Bip2Solution sol;
    if (supplied_pair) {
        sol.x = std::move(xin);
    } else {
        sol.x.resize(inst.nvars());
        for (int v = 0; v < inst.nvars(); v++)
            sol.x[v] = computed.norm.fixed[v] >= 0 ? computed.norm.fixed[v] : xin[v];
        (void)decode_offset;
    }
    sol.objective = bip2_objective(inst, sol.x);
    out.consumed = vc_result.consumed;
    ABOVELP_CHECK(HalfInt::from_int(sol.objective) == out.lp + out.consumed,
                  "decoded objective does not equal lp + consumed gap");
    out.solution = std::move(sol);
    out.status = SolveStatus::optimal;
    return out;
}

}  // namespace abovelp
