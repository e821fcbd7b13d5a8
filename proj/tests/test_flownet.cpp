#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "abovelp/flownet.hpp"

using namespace abovelp;

namespace {

HalfInt hi(int64_t v) { return HalfInt::from_int(v); }

DirectedNet make_net(int nodes) {
    DirectedNet net;
    for (int i = 0; i < nodes; i++) net.add_node();
    net.source = 0;
    net.sink = 1;
    return net;
}

// brute-force min cut over all source/sink node bipartitions
int64_t brute_min_cut_doubled(const DirectedNet& net) {
    int n = net.node_count;
    int64_t best = INT64_MAX;
    for (int mask = 0; mask < (1 << n); mask++) {
        if (!(mask & (1 << net.source)) || (mask & (1 << net.sink))) continue;
        int64_t cut = 0;
        bool infinite = false;
        for (const auto& arc : net.arcs) {
            bool from_in = mask & (1 << arc.from), to_in = mask & (1 << arc.to);
            if (from_in && !to_in) {
                if (arc.unbounded) { infinite = true; break; }
                cut += arc.cap.doubled;
            }
        }
        if (!infinite) best = std::min(best, cut);
    }
    return best;
}

}  // namespace

TEST_CASE("augment single path") {
    auto net = make_net(3);
    net.add_arc(0, 2, hi(1));
    net.add_arc(2, 1, hi(1));
    auto f = zero_flow(net);
    HalfInt d = augment_to_max(net, f);
    CHECK(d == hi(1));
    CHECK(f.amount == hi(1));
    CHECK(flow_is_feasible(net, f));
    CHECK(augment_to_max(net, f) == HalfInt{});  // idempotent
}

TEST_CASE("augment from partial flow on disjoint paths") {
    auto net = make_net(4);
    int sa = net.add_arc(0, 2, hi(1));
    net.add_arc(0, 3, hi(1));
    int at = net.add_arc(2, 1, hi(1));
    net.add_arc(3, 1, hi(1));
    auto f = zero_flow(net);
    f.flow[sa] = f.flow[at] = hi(1);
    f.amount = hi(1);
    REQUIRE(flow_is_feasible(net, f));
    HalfInt d = augment_to_max(net, f);
    CHECK(d == hi(1));
    CHECK(f.amount == hi(2));
}

TEST_CASE("bipartite cover net of a weighted edge maxes at 2") {
    // s=0 t=1 lu=2 lv=3 ru=4 rv=5, w(u)=1 w(v)=2
    auto net = make_net(6);
    net.add_arc(0, 2, hi(1));
    net.add_arc(0, 3, hi(2));
    net.add_unbounded_arc(2, 5);
    net.add_unbounded_arc(3, 4);
    net.add_arc(4, 1, hi(1));
    net.add_arc(5, 1, hi(2));
    auto f = zero_flow(net);
    augment_to_max(net, f);
    CHECK(f.amount.doubled == 4);
    CHECK(flow_is_feasible(net, f));

    // residual reachability from s establishes the integral optimum
    auto seen = reachable_from(residual(net, f), 0);
    CHECK(seen[0]);
    CHECK(seen[3]);   // l_v
    CHECK(seen[4]);   // r_u
    CHECK(!seen[2]);  // l_u
    CHECK(!seen[5]);  // r_v
}

TEST_CASE("residual arc definitions") {
    auto net = make_net(3);
    int a = net.add_arc(0, 2, hi(2));
    net.add_arc(2, 1, hi(2));
    auto f = zero_flow(net);

    SUBCASE("zero flow: residual equals original arcs") {
        auto arcs = residual(net, f).materialize();
        CHECK(arcs == std::vector<std::pair<int, int>>{{0, 2}, {2, 1}});
    }
    SUBCASE("saturated: only backward") {
        f.flow[a] = hi(2);
        auto view = residual(net, f);
        bool fwd = false, back = false;
        view.arcs_from(0, [&](int v, int) { fwd |= (v == 2); });
        view.arcs_from(2, [&](int v, int) { back |= (v == 0); });
        CHECK(!fwd);
        CHECK(back);
    }
    SUBCASE("partially used: both directions") {
        f.flow[a] = hi(1);
        auto view = residual(net, f);
        bool fwd = false, back = false;
        view.arcs_from(0, [&](int v, int) { fwd |= (v == 2); });
        view.arcs_from(2, [&](int v, int) { back |= (v == 0); });
        CHECK(fwd);
        CHECK(back);
    }
}

TEST_CASE("reachability basics") {
    SUBCASE("isolated origin") {
        auto net = make_net(3);
        auto f = zero_flow(net);
        auto seen = reachable_from(residual(net, f), 2);
        CHECK(seen[2]);
        CHECK(!seen[0]);
    }
    SUBCASE("chain") {
        auto net = make_net(5);
        net.add_arc(2, 3, hi(1));
        net.add_arc(3, 4, hi(1));
        auto f = zero_flow(net);
        auto seen = reachable_from(residual(net, f), 2);
        CHECK(seen[2]);
        CHECK(seen[3]);
        CHECK(seen[4]);
        CHECK(!seen[0]);
    }
}

TEST_CASE("scc condensation basics") {
    SUBCASE("2-cycle is a single tail component") {
        auto net = make_net(4);
        net.add_arc(2, 3, hi(1));
        net.add_arc(3, 2, hi(1));
        auto f = zero_flow(net);
        std::vector<char> restricted(net.node_count, 0);
        restricted[2] = restricted[3] = 1;
        auto scc = scc_condense(residual(net, f), restricted);
        REQUIRE(scc.members.size() == 1);
        CHECK(scc.is_tail(0));
        CHECK(scc.members[0] == std::vector<int32_t>{2, 3});
    }
    SUBCASE("chain gives two components, head before tail") {
        auto net = make_net(4);
        net.add_arc(2, 3, hi(1));
        auto f = zero_flow(net);
        std::vector<char> restricted(net.node_count, 0);
        restricted[2] = restricted[3] = 1;
        auto scc = scc_condense(residual(net, f), restricted);
        REQUIRE(scc.members.size() == 2);
        CHECK(scc.members[0] == std::vector<int32_t>{2});  // topological order
        CHECK(scc.members[1] == std::vector<int32_t>{3});
        CHECK(!scc.is_tail(0));
        CHECK(scc.is_tail(1));
        CHECK(scc.preds[1] == std::vector<int32_t>{0});
    }
}

TEST_CASE("scc agrees with pairwise reachability on random digraphs") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 200; iter++) {
        int n = 3 + (int)(rng() % 10);  // up to 12
        auto net = make_net(n);
        int m = (int)(rng() % (2 * n));
        for (int e = 0; e < m; e++) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u != v) net.add_arc(u, v, hi(1));
        }
        auto f = zero_flow(net);
        std::vector<char> restricted(n, 1);
        auto scc = scc_condense(residual(net, f), restricted);

        // reference: transitive closure
        std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
        for (int v = 0; v < n; v++) reach[v][v] = 1;
        for (const auto& arc : net.arcs) reach[arc.from][arc.to] = 1;
        for (int k = 0; k < n; k++)
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = 1;

        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++) {
                bool same = scc.comp[u] == scc.comp[v];
                CHECK(same == (reach[u][v] && reach[v][u]));
            }
        // tail status: no arc leaves the component
        for (size_t c = 0; c < scc.members.size(); c++) {
            bool leaves = false;
            for (const auto& arc : net.arcs)
                if (scc.comp[arc.from] == (int)c && scc.comp[arc.to] != (int)c) leaves = true;
            CHECK(scc.is_tail((int)c) == !leaves);
        }
        // members lists are in topological order of the condensation
        for (const auto& arc : net.arcs) CHECK(scc.comp[arc.from] <= scc.comp[arc.to]);
    }
}

TEST_CASE("remove_node_flow cancels whole paths") {
    SUBCASE("single path") {
        auto net = make_net(3);
        int sa = net.add_arc(0, 2, hi(1));
        int at = net.add_arc(2, 1, hi(1));
        auto f = zero_flow(net);
        f.flow[sa] = f.flow[at] = hi(1);
        f.amount = hi(1);
        HalfInt removed = remove_node_flow(net, f, 2);
        CHECK(removed == hi(1));
        CHECK(f.amount == HalfInt{});
        CHECK(flow_is_feasible(net, f));
    }
    SUBCASE("parallel path untouched") {
        auto net = make_net(4);
        int sa = net.add_arc(0, 2, hi(1));
        int sb = net.add_arc(0, 3, hi(2));
        int at = net.add_arc(2, 1, hi(1));
        int bt = net.add_arc(3, 1, hi(2));
        auto f = zero_flow(net);
        f.flow[sa] = f.flow[at] = hi(1);
        f.flow[sb] = f.flow[bt] = hi(2);
        f.amount = hi(3);
        HalfInt removed = remove_node_flow(net, f, 2);
        CHECK(removed == hi(1));
        CHECK(f.amount == hi(2));
        CHECK(f.flow[sb] == hi(2));
        CHECK(flow_is_feasible(net, f));
    }
    SUBCASE("flow cycle through the node is cancelled") {
        auto net = make_net(4);
        int sa = net.add_arc(0, 2, hi(1));
        int ab = net.add_arc(2, 3, hi(2));
        int ba = net.add_arc(3, 2, hi(2));
        int at = net.add_arc(2, 1, hi(1));
        auto f = zero_flow(net);
        f.flow[sa] = f.flow[at] = hi(1);
        f.flow[ab] = f.flow[ba] = hi(2);  // circulation
        f.amount = hi(1);
        REQUIRE(flow_is_feasible(net, f));
        remove_node_flow(net, f, 3);
        CHECK(f.flow[ab] == HalfInt{});
        CHECK(f.flow[ba] == HalfInt{});
        CHECK(f.amount == hi(1));  // cycle removal keeps the amount
        CHECK(flow_is_feasible(net, f));
    }
}

TEST_CASE("max flow equals brute-force min cut on random nets") {
    std::mt19937_64 rng(98765);
    for (int iter = 0; iter < 300; iter++) {
        int n = 3 + (int)(rng() % 8);  // <= 10
        auto net = make_net(n);
        int m = 1 + (int)(rng() % (2 * n));
        for (int e = 0; e < m; e++) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v || v == net.source || u == net.sink) continue;
            net.add_arc(u, v, HalfInt::from_doubled(1 + (int64_t)(rng() % 4)));
        }
        auto f = zero_flow(net);
        augment_to_max(net, f);
        CHECK(flow_is_feasible(net, f));
        CHECK(f.amount.doubled == brute_min_cut_doubled(net));
    }
}
