// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lfs/light_field.hpp"

namespace lfs {

/// Procedural periodic texture. Evaluated on continuous coordinates with
/// wrap-around, so layer shifts never expose undefined pixels. Noise and
/// Checker interpolate bilinearly between lattice values; Stripes and
/// SineMix are piecewise/analytic in the same lattice sense.
struct TextureSpec {
    enum class Kind { Solid, Stripes, Checker, SineMix, Noise };

    Kind kind = Kind::Solid;
    int period = 16;                           // wrap period in pixels
    std::array<std::uint8_t, 3> color_a{255, 255, 255};
    std::array<std::uint8_t, 3> color_b{0, 0, 0};
    std::uint32_t seed = 0;                    // Noise only
};

/// Opacity region in the layer's own frame; it translates with the layer.
struct RegionSpec {
    enum class Kind { Full, Rect, Disc };

    Kind kind = Kind::Full;
    double x = 0, y = 0;       // Rect top-left / Disc center
    double w = 0, h = 0;       // Rect extent
    double radius = 0;         // Disc
};

/// One depth layer: constant disparity in pixels per unit angular step.
struct LayerSpec {
    double disparity = 0.0;
    TextureSpec texture;
    RegionSpec region;
};

/// Layers ordered back-to-front over a solid background.
struct SyntheticSceneSpec {
    std::array<std::uint8_t, 3> background{32, 32, 32};
    std::vector<LayerSpec> layers;
};

/// Renders view (u,v) by translating each layer by
/// (disparity*(v-center_v), disparity*(u-center_u)) pixels and compositing
/// back to front. Deterministic for a fixed spec.
LightField generate_synthetic_lf(const SyntheticSceneSpec& spec, int rows,
                                 int cols, int width, int height);

/// Single view at angular offset (du, dv) from the grid center, in angular
/// steps. Exposed so tests can render ground truth at arbitrary offsets.
ViewImage render_synthetic_view(const SyntheticSceneSpec& spec, double du,
                                double dv, int width, int height);

} // namespace lfs
