// SPDX-License-Identifier: Apache-2.0

#include "lfs/plan.hpp"

#include <algorithm>
#include <set>

#include "lfs/interpolate.hpp"

namespace lfs {

namespace {

std::string idx_str(ViewIndex idx) {
    return "(" + std::to_string(idx.u) + "," + std::to_string(idx.v) + ")";
}

std::string step_id(int stage, const SynthesisStep& step) {
    return "stage " + std::to_string(stage) + " target " + idx_str(step.target);
}

SynthesisStep pair_step(ViewIndex a, ViewIndex b, InterpMode mode) {
    return {{(a.u + b.u) / 2, (a.v + b.v) / 2}, {a, b}, mode, 0.5};
}

// Named positions of a 3x3 corner block.
struct BlockViews {
    ViewIndex tl, tr, bl, br, tm, bm, lm, rm, c;
};

BlockViews block_views(CornerBlock b) {
    const int s = b.half;
    return {
        {b.u0, b.v0},             {b.u0, b.v0 + 2 * s},
        {b.u0 + 2 * s, b.v0},     {b.u0 + 2 * s, b.v0 + 2 * s},
        {b.u0, b.v0 + s},         {b.u0 + 2 * s, b.v0 + s},
        {b.u0 + s, b.v0},         {b.u0 + s, b.v0 + 2 * s},
        {b.u0 + s, b.v0 + s},
    };
}

// The two stages of one corner strategy on one block.
std::vector<Stage> corner_stages(CornerStrategy strategy, CornerBlock block) {
    const BlockViews w = block_views(block);
    const auto tm = pair_step(w.tl, w.tr, InterpMode::PairHorizontal);
    const auto bm = pair_step(w.bl, w.br, InterpMode::PairHorizontal);
    const auto lm = pair_step(w.tl, w.bl, InterpMode::PairVertical);
    const auto rm = pair_step(w.tr, w.br, InterpMode::PairVertical);

    switch (strategy) {
    case CornerStrategy::HV:
        return {Stage{{tm, bm}},
                Stage{{lm, rm, pair_step(w.tm, w.bm, InterpMode::PairVertical)}}};
    case CornerStrategy::VH:
        return {Stage{{lm, rm}},
                Stage{{tm, bm, pair_step(w.lm, w.rm, InterpMode::PairHorizontal)}}};
    case CornerStrategy::Omni:
        return {Stage{{tm, bm, lm, rm}},
                Stage{{SynthesisStep{w.c, {w.tm, w.bm, w.lm, w.rm},
                                     InterpMode::Quad, 0.5}}}};
    case CornerStrategy::Diag4:
        return {Stage{{SynthesisStep{w.c, {w.tl, w.tr, w.bl, w.br},
                                     InterpMode::Quad, 0.5}}},
                Stage{{tm, bm, lm, rm}}};
    case CornerStrategy::LeftDiag:
        return {Stage{{pair_step(w.tl, w.br, InterpMode::PairDiagonalTLBR)}},
                Stage{{tm, bm, lm, rm}}};
    case CornerStrategy::RightDiag:
        return {Stage{{pair_step(w.tr, w.bl, InterpMode::PairDiagonalTRBL)}},
                Stage{{tm, bm, lm, rm}}};
    }
    throw Error("corner_stages: unknown strategy");
}

} // namespace

const char* corner_strategy_name(CornerStrategy s) {
    switch (s) {
    case CornerStrategy::HV:        return "2d-hv";
    case CornerStrategy::VH:        return "2d-vh";
    case CornerStrategy::Omni:      return "4d-omni";
    case CornerStrategy::Diag4:     return "4d-diag";
    case CornerStrategy::LeftDiag:  return "2d-ldiag";
    case CornerStrategy::RightDiag: return "2d-rdiag";
    }
    return "?";
}

const char* interp_mode_name(InterpMode m) {
    switch (m) {
    case InterpMode::PairHorizontal:   return "pair-h";
    case InterpMode::PairVertical:     return "pair-v";
    case InterpMode::PairDiagonalTLBR: return "pair-dtlbr";
    case InterpMode::PairDiagonalTRBL: return "pair-dtrbl";
    case InterpMode::Quad:             return "quad";
    }
    return "?";
}

ReconstructionPlan build_basic_plan(PatternKind kind, const ViewMask& mask) {
    const ViewMask expected = generate_pattern(kind, mask.rows(), mask.cols());
    if (!(mask == expected))
        throw Error("build_basic_plan: mask does not match the requested pattern");

    const int rows = mask.rows();
    const int cols = mask.cols();
    Stage stage;

    using Tag = PatternKind::Tag;
    std::string id;
    switch (kind.tag) {
    case Tag::RowWise:
        id = "row-wise";
        for (int u = 1; u < rows; u += 2)
            for (int v = 0; v < cols; ++v)
                stage.steps.push_back(pair_step({u - 1, v}, {u + 1, v},
                                                InterpMode::PairVertical));
        break;
    case Tag::ColumnWise:
        id = "column-wise";
        for (int u = 0; u < rows; ++u)
            for (int v = 1; v < cols; v += 2)
                stage.steps.push_back(pair_step({u, v - 1}, {u, v + 1},
                                                InterpMode::PairHorizontal));
        break;
    case Tag::Checkerboard:
        id = "checkerboard";
        for (int u = 0; u < rows; ++u) {
            for (int v = 0; v < cols; ++v) {
                if ((u + v) % 2 == 0) continue;
                if (u == 0 || u == rows - 1)
                    stage.steps.push_back(pair_step({u, v - 1}, {u, v + 1},
                                                    InterpMode::PairHorizontal));
                else if (v == 0 || v == cols - 1)
                    stage.steps.push_back(pair_step({u - 1, v}, {u + 1, v},
                                                    InterpMode::PairVertical));
                else
                    stage.steps.push_back(SynthesisStep{
                        {u, v},
                        {{u - 1, v}, {u + 1, v}, {u, v - 1}, {u, v + 1}},
                        InterpMode::Quad,
                        0.5});
            }
        }
        break;
    case Tag::GridLevel:
        throw Error("build_basic_plan: grid levels use build_recursive_plan");
    }

    return {id, mask, {std::move(stage)}, 0};
}

ReconstructionPlan build_corner_plan(CornerStrategy strategy, CornerBlock block,
                                     int rows, int cols) {
    if (block.half < 1 || block.u0 < 0 || block.v0 < 0)
        throw Error("build_corner_plan: invalid block");
    const int extent_u = block.u0 + 2 * block.half + 1;
    const int extent_v = block.v0 + 2 * block.half + 1;
    if (rows == 0) rows = extent_u;
    if (cols == 0) cols = extent_v;
    if (rows < extent_u || cols < extent_v)
        throw Error("build_corner_plan: block exceeds grid");

    const BlockViews w = block_views(block);
    ViewMask mask(rows, cols, ViewRole::Unused);
    for (ViewIndex idx : {w.tl, w.tr, w.bl, w.br})
        mask.set_role(idx, ViewRole::Input);
    for (ViewIndex idx : {w.tm, w.bm, w.lm, w.rm, w.c})
        mask.set_role(idx, ViewRole::Output);

    return {corner_strategy_name(strategy), mask,
            corner_stages(strategy, block), 0};
}

ReconstructionPlan build_recursive_plan(int level, CornerStrategy inner,
                                        int rows, int cols) {
    const ViewMask mask =
        generate_pattern(PatternKind::grid_level(level), rows, cols);

    ReconstructionPlan plan{std::string("level") + std::to_string(level) + "+" +
                                corner_strategy_name(inner),
                            mask,
                            {},
                            level};

    std::set<std::pair<int, int>> claimed;
    for (int s = 1 << level; s >= 2; s /= 2) {
        // one halving pass: all blocks of 4 views at spacing s share stages
        std::vector<Stage> pass(2);
        for (int bu = 0; bu + s < rows; bu += s) {
            for (int bv = 0; bv + s < cols; bv += s) {
                const CornerBlock block{bu, bv, s / 2};
                const auto stages = corner_stages(inner, block);
                for (std::size_t i = 0; i < stages.size(); ++i) {
                    for (const SynthesisStep& step : stages[i].steps) {
                        if (claimed.insert({step.target.u, step.target.v}).second)
                            pass[i].steps.push_back(step);
                    }
                }
            }
        }
        for (Stage& st : pass)
            plan.stages.push_back(std::move(st));
    }
    return plan;
}

std::vector<std::string> validate_plan(const ReconstructionPlan& plan) {
    std::vector<std::string> violations;
    const ViewMask& mask = plan.mask;

    // (a) every Output targeted exactly once, and only Outputs targeted
    std::set<std::pair<int, int>> targets;
    for (std::size_t si = 0; si < plan.stages.size(); ++si) {
        for (const SynthesisStep& step : plan.stages[si].steps) {
            const auto key = std::make_pair(step.target.u, step.target.v);
            if (!mask.in_range(step.target)) {
                violations.push_back(step_id(static_cast<int>(si), step) +
                                     ": target out of range");
                continue;
            }
            if (mask.role(step.target) != ViewRole::Output)
                violations.push_back(step_id(static_cast<int>(si), step) +
                                     ": target is not an Output position");
            if (!targets.insert(key).second)
                violations.push_back(step_id(static_cast<int>(si), step) +
                                     ": duplicate target");
        }
    }
    for (ViewIndex out : mask.positions(ViewRole::Output))
        if (!targets.count({out.u, out.v}))
            violations.push_back("output " + idx_str(out) + " never targeted");

    // (b) source availability across stages
    std::set<std::pair<int, int>> available;
    for (ViewIndex in : mask.positions(ViewRole::Input))
        available.insert({in.u, in.v});
    for (std::size_t si = 0; si < plan.stages.size(); ++si) {
        const Stage& stage = plan.stages[si];
        std::set<std::pair<int, int>> stage_targets;
        for (const SynthesisStep& step : stage.steps)
            stage_targets.insert({step.target.u, step.target.v});
        for (const SynthesisStep& step : stage.steps) {
            const std::string id = step_id(static_cast<int>(si), step);
            for (ViewIndex src : step.sources) {
                if (!available.count({src.u, src.v}))
                    violations.push_back(id + ": source " + idx_str(src) +
                                         " not available");
                // (d) stage-internal independence
                if (stage_targets.count({src.u, src.v}))
                    violations.push_back(id + ": source " + idx_str(src) +
                                         " targeted in the same stage");
            }

            // (c) midpoint geometry and mode arity
            const std::size_t want =
                (step.mode == InterpMode::Quad) ? 4u : 2u;
            if (step.sources.size() != want) {
                violations.push_back(id + ": wrong source count");
                continue;
            }
            int su = 0, sv = 0;
            for (ViewIndex src : step.sources) {
                su += src.u;
                sv += src.v;
            }
            const int n = static_cast<int>(step.sources.size());
            if (su != n * step.target.u || sv != n * step.target.v)
                violations.push_back(id + ": target is not the source midpoint");
            if (step.mode != InterpMode::Quad) {
                const int du = step.sources[1].u - step.sources[0].u;
                const int dv = step.sources[1].v - step.sources[0].v;
                const bool ok =
                    (step.mode == InterpMode::PairHorizontal && du == 0 && dv != 0) ||
                    (step.mode == InterpMode::PairVertical && dv == 0 && du != 0) ||
                    (step.mode == InterpMode::PairDiagonalTLBR && du == dv && du != 0) ||
                    (step.mode == InterpMode::PairDiagonalTRBL && du == -dv && du != 0);
                if (!ok)
                    violations.push_back(id + ": sources do not lie on the " +
                                         std::string(interp_mode_name(step.mode)) +
                                         " baseline");
            } else {
                // each source must have its mirror about the target
                for (ViewIndex src : step.sources) {
                    const ViewIndex mirror{2 * step.target.u - src.u,
                                           2 * step.target.v - src.v};
                    if (std::find(step.sources.begin(), step.sources.end(),
                                  mirror) == step.sources.end())
                        violations.push_back(id + ": quad source " + idx_str(src) +
                                             " has no opposing source");
                }
            }
        }
        for (const SynthesisStep& step : stage.steps)
            available.insert({step.target.u, step.target.v});
    }

    return violations;
}

LightField execute_plan(const LightField& sparse_lf,
                        const ReconstructionPlan& plan,
                        const Interpolator& interpolator) {
    const ViewMask& mask = plan.mask;
    if (sparse_lf.rows() != mask.rows() || sparse_lf.cols() != mask.cols())
        throw Error("execute_plan: light field and mask dimensions differ");
    for (int u = 0; u < mask.rows(); ++u) {
        for (int v = 0; v < mask.cols(); ++v) {
            const bool want = mask.role({u, v}) == ViewRole::Input;
            if (want != sparse_lf.has_view({u, v}))
                throw Error("execute_plan: light field population does not match "
                            "the mask's Input set at " + idx_str({u, v}));
        }
    }

    LightField out(sparse_lf.rows(), sparse_lf.cols());
    for (ViewIndex in : mask.positions(ViewRole::Input))
        out.set_view(in, sparse_lf.view(in));

    for (std::size_t si = 0; si < plan.stages.size(); ++si) {
        for (const SynthesisStep& step : plan.stages[si].steps) {
            std::vector<const ViewImage*> sources;
            sources.reserve(step.sources.size());
            for (ViewIndex src : step.sources)
                sources.push_back(&out.view(src));
            try {
                out.set_view(step.target, interpolator.synthesize(step, sources));
            } catch (const Error& e) {
                throw Error(step_id(static_cast<int>(si), step) + ": " + e.what());
            }
        }
    }
    return out;
}

} // namespace lfs
