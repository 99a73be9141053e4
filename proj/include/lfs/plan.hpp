// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "lfs/mask.hpp"

namespace lfs {

/// How one view is synthesized from its sources. Pair modes carry exactly
/// two sources, Quad exactly four.
enum class InterpMode {
    PairHorizontal,
    PairVertical,
    PairDiagonalTLBR,  // top-left to bottom-right baseline
    PairDiagonalTRBL,  // top-right to bottom-left baseline
    Quad,
};

/// One synthesis step. The target is always the exact angular midpoint of
/// the sources; t is the interpolation position along the baseline and is
/// fixed at the midpoint.
struct SynthesisStep {
    ViewIndex target;
    std::vector<ViewIndex> sources;
    InterpMode mode = InterpMode::PairHorizontal;
    double t = 0.5;

    friend bool operator==(const SynthesisStep&, const SynthesisStep&) = default;
};

/// Steps that may run in any order (or concurrently): disjoint targets,
/// and no step sources another step's target.
struct Stage {
    std::vector<SynthesisStep> steps;

    friend bool operator==(const Stage&, const Stage&) = default;
};

/// Ordered stages that take a masked light field to a complete one. Every
/// Output position is targeted exactly once, and every source is an Input
/// or an earlier stage's target.
struct ReconstructionPlan {
    std::string strategy_id;
    ViewMask mask;
    std::vector<Stage> stages;
    int halving_passes = 0;  // recursive plans only

    int step_count() const {
        int n = 0;
        for (const Stage& s : stages) n += static_cast<int>(s.steps.size());
        return n;
    }
};

/// The six ways to fill a 3x3 block from its four corners.
enum class CornerStrategy { HV, VH, Omni, Diag4, LeftDiag, RightDiag };

/// Axis-aligned 3x3 block in index space: corners at (u0, v0) and
/// (u0 + 2*half, v0 + 2*half), midpoints at spacing `half`.
struct CornerBlock {
    int u0 = 0;
    int v0 = 0;
    int half = 1;
};

const char* corner_strategy_name(CornerStrategy s);
const char* interp_mode_name(InterpMode m);

/// Single-stage plans for the three basic patterns. The mask must be the
/// one generated for the matching PatternKind.
ReconstructionPlan build_basic_plan(PatternKind kind, const ViewMask& mask);

/// Plan filling one 3x3 corner block on a rows x cols grid; positions
/// outside the block are Unused. Grid dims default to the block extent.
ReconstructionPlan build_corner_plan(CornerStrategy strategy, CornerBlock block,
                                     int rows = 0, int cols = 0);

/// Completes a GridLevel(k) sampling by halving the view spacing k times,
/// applying the inner corner strategy to every 2x2 block of current views
/// (row-major; shared block edges go to the first block that schedules
/// them). All blocks of one pass share the pass's stages.
ReconstructionPlan build_recursive_plan(int level, CornerStrategy inner,
                                        int rows, int cols);

/// Empty result means the plan is well-formed; otherwise one message per
/// violation (unique targeting, source availability, midpoint geometry,
/// stage-internal independence).
std::vector<std::string> validate_plan(const ReconstructionPlan& plan);

class Interpolator;

/// Runs the plan over a light field populated exactly at the mask's Input
/// positions. Input views are copied through unmodified.
LightField execute_plan(const LightField& sparse_lf,
                        const ReconstructionPlan& plan,
                        const Interpolator& interpolator);

} // namespace lfs
