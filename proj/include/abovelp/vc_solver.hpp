#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "abovelp/vclp.hpp"

namespace abovelp {

// rejection of a caller-supplied LP pair, with the failing constraint spelled out
struct PairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchStats {
    int64_t branch_nodes = 0;   // nodes where an edge was branched on
    int64_t leaves = 0;         // nodes with no expanded children
    int64_t augmentations = 0;  // augmenting paths found while re-maximizing
    int depth = 0;              // max branching depth reached
};

struct VcSolution {
    std::vector<int32_t> selected;  // ascending vertex ids
    int64_t weight = 0;
    bool certified = false;  // coverage of every original edge re-checked
};

struct VcSolveResult {
    std::optional<VcSolution> solution;
    HalfInt consumed;  // lp gap used by the returned cover
    SearchStats stats;
};

// test hook: called at every branch with the live subinstance (before the
// branch vertex is fixed) and the augmentation amount of the branch
using BranchObserver = std::function<void(const VcInstance& parent, int branch_vertex, HalfInt delta)>;

// Fixes the half-valued vertex v to 1: cancels the flow through both of its
// copies, removes them, and re-maximizes. Returns the augmentation amount;
// the LP value of the reduced instance is lp(old) - w(v)/2 + delta/2.
HalfInt branch_fix_one(VcFlowBundle& bundle, int v, SearchStats* stats = nullptr);

// Finds a vertex cover of weight <= lp + k of minimum weight among such
// covers, or nothing when every cover exceeds the budget. The supplied pair
// is verified (feasibility of both sides, equal values) and rejected with a
// PairError otherwise.
VcSolveResult solve_above_lp(const VcInstance& inst, const PrimalVc& primal, const DualVc& dual,
                             HalfInt k, BranchObserver* observer = nullptr);

// Deepening wrapper: tries k = 0, 1/2, 1, ... until a cover appears.
VcSolveResult solve_auto(const VcInstance& inst, const PrimalVc& primal, const DualVc& dual);

// helper shared with frontends/tests: pair checked, network built, flow set
// up from the dual and certified maximum
VcFlowBundle prepare_bundle(const VcInstance& inst, const PrimalVc& primal, const DualVc& dual);

}  // namespace abovelp
