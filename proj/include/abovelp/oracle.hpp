#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "abovelp/bip2.hpp"
#include "abovelp/frontends.hpp"
#include "abovelp/multiway.hpp"
#include "abovelp/vclp.hpp"

// Brute-force baselines, textually independent of the solver modules: they
// share no feasibility or LP code with the implementations they check.
namespace abovelp::oracle {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    int64_t max_nodes = 50'000'000;
};

struct BruteVcResult {
    int64_t value = 0;
    std::vector<int32_t> cover;
};
BruteVcResult brute_vc(int n, const std::vector<int64_t>& weight,
                       const std::vector<std::pair<int32_t, int32_t>>& edges,
                       OracleBudget budget = {});

struct HalfLpResult {
    HalfInt value;
    std::vector<HalfInt> primal;
    std::vector<HalfInt> dual;  // per edge / per constraint
};
// exact LP optimum of the cover relaxation: grid enumeration over {0,1/2,1}
// certified by an exhaustively found matching dual
HalfLpResult brute_halfint_lp_vc(int n, const std::vector<int64_t>& weight,
                                 const std::vector<std::pair<int32_t, int32_t>>& edges,
                                 OracleBudget budget = {});

// exact IP optimum of a binary instance (nullopt = hard constraints infeasible)
std::optional<int64_t> brute_ip_bip2(const Bip2Instance& inst, OracleBudget budget = {});

// exact LP optimum of a binary instance, certified by a dual witness
HalfLpResult brute_halfint_lp_bip2(const Bip2Instance& inst, OracleBudget budget = {});

// exact optimum per problem variant (nullopt = infeasible)
std::optional<int64_t> brute_problem(const ProblemInstance& p, OracleBudget budget = {});

std::optional<std::vector<int32_t>> brute_multiway_cut(int n,
                                                       const std::vector<std::pair<int32_t, int32_t>>& edges,
                                                       const std::vector<int32_t>& terminals,
                                                       int max_size, OracleBudget budget = {});

struct IsolatingCutEnum {
    int min_size = -1;
    std::vector<std::pair<std::vector<int32_t>, std::vector<int32_t>>> cuts;  // (cut, region)
};
// every minimum isolating cut of terminal t with its region
IsolatingCutEnum enumerate_min_isolating_cuts(int n,
                                              const std::vector<std::pair<int32_t, int32_t>>& edges,
                                              const std::vector<int32_t>& terminals, int t);

// ---------------------------------------------------------------------------
// seeded instance generators (shared by tests, the acceptance suite, and the
// CLI gen/bench commands)
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

VcInstance gen_random_vc(int n, int m, int64_t min_w, int64_t max_w, Rng& rng);
// forest of random single edges and 4-paths: the cover LP is integral
VcInstance gen_bipartite_family(int n, int64_t max_w, Rng& rng);
// a triangle with a pendant path: constant integrality gap of one half
VcInstance gen_k3path(int n);
Cnf gen_random_cnf2(int nvars, int m, Rng& rng);
WeightedGraph gen_random_graph(int n, int m, int64_t min_w, int64_t max_w, Rng& rng);
Bip2Instance gen_random_binary_bip2(int nvars, int ncons, bool clause_only, Rng& rng);
MultiwayInstance gen_random_multiway(int n, int m, int nterm, int k, Rng& rng);

}  // namespace abovelp::oracle
