#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abovelp/vc_solver.hpp"
#include "abovelp/vclp.hpp"

namespace abovelp {

// Weight with a symbolic "sufficiently large" component: value = mu*M + base,
// both stored doubled so half-integral quantities stay exact. Ordering is
// lexicographic, which matches the numeric order for every concretization of
// M that dominates the bases.
struct BigHalf {
    int64_t mu_doubled = 0;
    int64_t base_doubled = 0;

    static BigHalf from_int(int64_t v) { return {0, 2 * v}; }
    static BigHalf from_half(HalfInt h) { return {0, h.doubled}; }
    static BigHalf big(int64_t mu = 1) { return {2 * mu, 0}; }

    bool is_plain() const { return mu_doubled == 0; }
    HalfInt as_half() const {
        ABOVELP_CHECK(is_plain(), "symbolic weight where a plain value is required");
        return HalfInt::from_doubled(base_doubled);
    }

    BigHalf operator+(BigHalf o) const { return {mu_doubled + o.mu_doubled, base_doubled + o.base_doubled}; }
    BigHalf operator-(BigHalf o) const { return {mu_doubled - o.mu_doubled, base_doubled - o.base_doubled}; }
    BigHalf operator-() const { return {-mu_doubled, -base_doubled}; }
    BigHalf& operator+=(BigHalf o) { mu_doubled += o.mu_doubled; base_doubled += o.base_doubled; return *this; }
    BigHalf& operator-=(BigHalf o) { mu_doubled -= o.mu_doubled; base_doubled -= o.base_doubled; return *this; }
    BigHalf operator*(int64_t k) const { return {mu_doubled * k, base_doubled * k}; }
    // weight (integral) times a half-integral value
    BigHalf times(HalfInt h) const {
        ABOVELP_CHECK(mu_doubled % 2 == 0 && base_doubled % 2 == 0, "non-integral weight in product");
        return {(mu_doubled / 2) * h.doubled, (base_doubled / 2) * h.doubled};
    }
    bool operator==(const BigHalf&) const = default;
    auto operator<=>(const BigHalf&) const = default;

    // value with M = m0; throws on overflow or if m0 does not dominate
    HalfInt concretize(int64_t m0) const;
    std::string str() const;
};

enum class Domain : uint8_t { binary, nonneg };

// hard constraints admit no assignment at all
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One two-variable constraint a*x_i + b*x_j (+ z) >= c. j = -1 encodes a
// single-variable constraint. Soft constraints own an independent variable of
// weight d that appears nowhere else.
struct Bip2Constraint {
    int32_t i = -1, j = -1;
    int8_t a = 0, b = 0;
    int64_t c = 0;
    bool hard = true;
    BigHalf d;
};

struct Bip2Instance {
    std::vector<BigHalf> weight;
    std::vector<Domain> domain;
    std::vector<Bip2Constraint> cons;
    BigHalf offset;  // constant carried through transformations

    int nvars() const { return (int)weight.size(); }
    void validate() const;
    bool all_binary() const;
};

// minimal feasible independent variable for a constraint
HalfInt z_min(const Bip2Constraint& con, const std::vector<HalfInt>& x);

// Primal/dual pair for one instance. Independent variables are implicit
// (z_min); duals can be symbolic at intermediate reduction stages.
struct LpPair {
    std::vector<HalfInt> x;
    std::vector<BigHalf> y;
    BigHalf primal_value(const Bip2Instance& inst) const;
    BigHalf dual_value(const Bip2Instance& inst) const;
    // empty = feasible pair with equal values; otherwise the first violation
    std::string violation(const Bip2Instance& inst) const;
};

// ---------------------------------------------------------------------------
// Normalization of binary instances into two-literal clause form
// ---------------------------------------------------------------------------

struct NormalizeResult {
    Bip2Instance norm;               // constraints are all 2-var clauses (c = 1 - #negations)
    bool native = true;              // no fixings and no auxiliary variables were needed
    std::vector<int8_t> fixed;       // per original var: -1 free, else forced value
    std::vector<int32_t> cons_map;   // original constraint -> clause id (-1 = dropped/decomposed)
    std::vector<int64_t> aux_of_var; // aux var id -> covered original var (or -1), for decode
    std::vector<char> aux_positive;  // literal polarity covered by each aux var
    int64_t offset = 0;              // constant objective shift (fixed weights + base shifts)
    int n_original = 0;
};

// Turns any binary instance into clause form (possibly with auxiliary
// variables and propagated fixings). Throws std::runtime_error on hard
// infeasibility.
NormalizeResult normalize_binary(const Bip2Instance& inst);

// Half-integral optimal pair for a binary instance via one max-flow on the
// polarity-literal network. For clause-normal instances ("native") the pair
// maps one-to-one onto the original constraints; otherwise it certifies the
// normalized instance and `pair` refers to `norm.norm`.
struct PairResult {
    NormalizeResult norm;
    LpPair pair;        // for norm.norm
    HalfInt lp_norm;    // value of the pair
    HalfInt lp_original() const { return lp_norm + HalfInt::from_int(norm.offset); }
    std::optional<LpPair> pair_for_original;  // present when native
};
PairResult compute_halfint_pair(const Bip2Instance& inst);

// ---------------------------------------------------------------------------
// Reduction chain to Vertex Cover
// ---------------------------------------------------------------------------

struct Stage2Rec {
    int64_t X = 0;
    int n_before = 0;  // var i -> plus copy 2i, minus copy 2i+1
};

struct Stage3Rec {
    struct Gadget {
        int32_t cons_before;  // constraint id in the stage-2 instance
        int32_t zi, zj;       // fresh variable ids
    };
    std::vector<Gadget> gadgets;
    int n_before = 0;
};

struct BinarizeRec {
    int64_t m0 = 0;                          // concretization of M
    std::vector<HalfInt> x_star;             // stage-3 optimal primal used for rounding
    std::vector<int32_t> edge_source_cons;   // vc edge -> representative stage-3 constraint
};

// Everything needed to decode a cover of the produced instance back to the
// instance the chain started from.
struct ReductionTrace {
    Bip2Instance i0, i1, i2, i3;
    LpPair p0, p1, p2, p3;
    std::vector<char> s1_added_z;
    Stage2Rec s2;
    Stage3Rec s3;
    BinarizeRec vc_rec;
};

// Stage transforms; each verifies the transported pair (feasible, values
// equal, value shift as predicted) and throws std::logic_error on failure.
std::pair<Bip2Instance, LpPair> add_independent_vars(const Bip2Instance&, const LpPair&,
                                                     std::vector<char>* added = nullptr);
std::pair<Bip2Instance, LpPair> monotonize(const Bip2Instance&, const LpPair&, Stage2Rec* rec);
std::pair<Bip2Instance, LpPair> eliminate_independent(const Bip2Instance&, const LpPair&,
                                                      Stage3Rec* rec);

struct BinarizeResult {
    VcInstance vc;
    PrimalVc primal;
    DualVc dual;
    BinarizeRec rec;
};
BinarizeResult binarize_to_vc(const Bip2Instance& i3, const LpPair& p3);

struct ChainResult {
    ReductionTrace trace;
    VcInstance vc;
    PrimalVc vc_primal;
    DualVc vc_dual;
};
ChainResult reduce_to_vc(const Bip2Instance& inst, const LpPair& pair);

// integer values of the chain-input variables recovered from a cover
std::vector<int64_t> decode_chain(const ChainResult& chain, const VcSolution& cover);

// ---------------------------------------------------------------------------
// End-to-end solver
// ---------------------------------------------------------------------------

struct Bip2Solution {
    std::vector<int64_t> x;  // original shared variables
    int64_t objective = 0;   // recomputed directly on the original instance
};

enum class SolveStatus { optimal, no_solution_within_k, infeasible };

struct Bip2SolveResult {
    SolveStatus status = SolveStatus::no_solution_within_k;
    std::optional<Bip2Solution> solution;
    HalfInt lp;        // LP value of the original instance
    HalfInt consumed;  // objective - lp
    SearchStats stats;
};

// Binary instances compute their own pair; other instances require one.
// k empty = deepen from 0 until a solution appears.
Bip2SolveResult solve_bip2(const Bip2Instance& inst, std::optional<HalfInt> k,
                           const LpPair* supplied_pair = nullptr);

// objective of integral values on the original instance (z minimal); throws
// if a hard constraint is violated
int64_t bip2_objective(const Bip2Instance& inst, const std::vector<int64_t>& x);

}  // namespace abovelp
