#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "abovelp/bip2.hpp"

namespace abovelp {

struct WeightedGraph {
    int n = 0;
    std::vector<std::pair<int32_t, int32_t>> edges;
    std::vector<int64_t> vweight;  // defaults to 1 per vertex
    void validate(bool allow_self_loops = false) const;
};

struct EdgeWeightedGraph {
    int n = 0;
    std::vector<std::pair<int32_t, int32_t>> edges;
    std::vector<int64_t> eweight;
    void validate() const;
};

// clauses as signed 1-based literals (-v = negated v), any width
struct Cnf {
    int nvars = 0;
    std::vector<std::vector<int32_t>> clauses;
    void validate() const;
};

struct VcProblem { WeightedGraph g; };
struct OctProblem { WeightedGraph g; };
struct A2SatProblem { Cnf f; };  // every clause must have exactly two literals
struct EdgeBipProblem { EdgeWeightedGraph g; };
struct MinSatProblem { Cnf f; };
struct GvcProblem {
    WeightedGraph g;
    std::vector<std::array<int64_t, 3>> d;  // per edge: d0 >= d1 >= d2 >= 0
};
struct Gen2SatProblem { Cnf f; std::vector<int64_t> vweight; };
struct CliqueComplementProblem { WeightedGraph g; };
struct A2CspProblem {
    int nvars = 0;
    struct Constraint { int32_t u, v; uint8_t allowed; };  // bit p*1+q*2... mask over (xu,xv) combos
    std::vector<Constraint> cons;
};
struct DirMinUncutProblem { EdgeWeightedGraph g; };  // directed arcs (from,to)
struct SplitVdProblem { WeightedGraph g; };

using ProblemInstance =
    std::variant<VcProblem, OctProblem, A2SatProblem, EdgeBipProblem, MinSatProblem, GvcProblem,
                 Gen2SatProblem, CliqueComplementProblem, A2CspProblem, DirMinUncutProblem,
                 SplitVdProblem>;

struct VertexSetSolution { std::vector<int32_t> vertices; };
struct AssignmentSolution { std::vector<int8_t> values; };
struct EdgeSetSolution { std::vector<int32_t> edges; };

struct ProblemSolution {
    std::variant<VertexSetSolution, AssignmentSolution, EdgeSetSolution> payload;
    int64_t objective = 0;
};

// how the encoder laid out variables, needed to read a bip2 solution back
struct DecoderCtx {
    std::vector<int32_t> var_of;   // variant-specific primary variables
    std::vector<int32_t> var_aux;  // variant-specific secondary variables
};

struct Encoded {
    Bip2Instance inst;
    DecoderCtx ctx;
};

Encoded encode(const ProblemInstance& p);
ProblemSolution decode(const ProblemInstance& p, const DecoderCtx& ctx,
                       const std::vector<int64_t>& x);

struct VerifyResult {
    bool ok = true;
    int64_t objective = 0;  // recomputed from scratch
    std::vector<std::string> violations;
};

// Independent checker: recomputes feasibility and the objective without any
// solver machinery (two-coloring, clause counting, connectivity, ...).
VerifyResult verify(const ProblemInstance& p, const ProblemSolution& sol);

// end-to-end convenience: encode, solve, decode
struct FrontendResult {
    SolveStatus status = SolveStatus::no_solution_within_k;
    std::optional<ProblemSolution> solution;
    HalfInt lp;
    HalfInt consumed;
    SearchStats stats;
};
FrontendResult solve_problem(const ProblemInstance& p, std::optional<HalfInt> k);

const char* problem_name(const ProblemInstance& p);

}  // namespace abovelp
