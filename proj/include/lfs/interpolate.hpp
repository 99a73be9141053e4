// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lfs/plan.hpp"

namespace lfs {

/// Which interpolator backs plan execution.
struct InterpolatorSpec {
    enum class Kind { Linear, ShiftCompensated, External };

    Kind kind = Kind::Linear;
    int block_size = 16;      // ShiftCompensated
    int search_radius = 8;    // ShiftCompensated
    std::string command;      // External: template with {src1}..{src4} {tu} {tv} {out}
    double timeout_seconds = 300.0;
    std::string scratch_dir;  // External: override temp location

    static InterpolatorSpec linear() { return {}; }
    static InterpolatorSpec shift(int block_size = 16, int search_radius = 8) {
        InterpolatorSpec s;
        s.kind = Kind::ShiftCompensated;
        s.block_size = block_size;
        s.search_radius = search_radius;
        return s;
    }
    static InterpolatorSpec external(std::string command_template) {
        InterpolatorSpec s;
        s.kind = Kind::External;
        s.command = std::move(command_template);
        return s;
    }

    void validate() const;
};

/// Pixel-space direction of the angular baseline between a source pair.
/// Angular columns map to horizontal parallax, rows to vertical.
struct BaselineDir {
    int dx = 1;
    int dy = 0;
};

BaselineDir baseline_for_mode(InterpMode mode);

/// Per-block integer displacement along one baseline.
struct DisparityField {
    int block_size = 16;
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<int> displacement;  // row-major, blocks_y x blocks_x

    int at(int bx, int by) const {
        return displacement[static_cast<std::size_t>(by) * blocks_x + bx];
    }
};

/// Per-pixel, per-channel rounded mean of two same-size views.
ViewImage interpolate_pair_linear(const ViewImage& a, const ViewImage& b);

/// Block-matching disparity along the baseline, minimizing SAD. Ties break
/// toward smaller magnitude, then toward negative.
DisparityField estimate_disparity(const ViewImage& a, const ViewImage& b,
                                  BaselineDir dir, int block_size,
                                  int search_radius);

/// Disparity-compensated midpoint: each block averages a shifted by +d/2
/// and b shifted by -d/2 along the baseline (half-pixel shifts resample
/// linearly). Pixels whose shifted sources leave the frame fall back to
/// the plain linear mean.
ViewImage interpolate_pair_shift(const ViewImage& a, const ViewImage& b,
                                 BaselineDir dir, const InterpolatorSpec& spec);

/// Four sources symmetric about the target. Linear averages all four;
/// shift-compensated averages the two opposing-pair interpolations.
ViewImage interpolate_quad(const std::vector<const ViewImage*>& views,
                           const std::vector<ViewIndex>& indices,
                           ViewIndex target, const InterpolatorSpec& spec);

/// Runs the external command for one step: writes sources as PNGs,
/// substitutes the placeholders, reads back and validates the output.
ViewImage interpolate_external(const SynthesisStep& step,
                               const std::vector<const ViewImage*>& sources,
                               const InterpolatorSpec& spec);

/// Stateless dispatcher used by execute_plan; safe for concurrent calls.
class Interpolator {
public:
    explicit Interpolator(InterpolatorSpec spec);

    ViewImage synthesize(const SynthesisStep& step,
                         const std::vector<const ViewImage*>& sources) const;

    const InterpolatorSpec& spec() const { return spec_; }

private:
    InterpolatorSpec spec_;
};

} // namespace lfs
