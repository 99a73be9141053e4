// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "lfs/interpolate.hpp"
#include "lfs/metrics.hpp"
#include "lfs/synthetic.hpp"
#include "test_helpers.hpp"

using namespace lfs;
using namespace lfs::testing;

TEST(PairLinear, IdentityOnEqualInputs) {
    const ViewImage a = random_image(16, 16, 5);
    EXPECT_EQ(interpolate_pair_linear(a, a), a);
}

TEST(PairLinear, UniformMean) {
    const ViewImage a = uniform_image(8, 8, 0);
    const ViewImage b = uniform_image(8, 8, 100);
    EXPECT_EQ(interpolate_pair_linear(a, b), uniform_image(8, 8, 50));
}

TEST(PairLinear, SymmetricAndRounded) {
    const ViewImage a = random_image(32, 16, 1);
    const ViewImage b = random_image(32, 16, 2);
    const ViewImage ab = interpolate_pair_linear(a, b);
    EXPECT_EQ(ab, interpolate_pair_linear(b, a));
    // rounded half up: (1 + 2) / 2 -> 2
    const ViewImage one = uniform_image(4, 4, 1);
    const ViewImage two = uniform_image(4, 4, 2);
    EXPECT_EQ(interpolate_pair_linear(one, two), uniform_image(4, 4, 2));
}

TEST(PairLinear, DimensionMismatch) {
    EXPECT_THROW(interpolate_pair_linear(ViewImage(4, 4), ViewImage(5, 4)),
                 Error);
}

// Opposite shifts of an intensity ramp: the average is exactly the
// midpoint view wherever both shifted copies are defined.
TEST(PairLinear, RampShiftMidpointExact) {
    const int w = 32, h = 8, d = 3;
    auto ramp = [&](int shift) {
        ViewImage img(w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                for (int c = 0; c < 3; ++c)
                    img.at(x, y, c) = static_cast<std::uint8_t>(
                        std::clamp(4 * (x + shift) + 10, 0, 255));
        return img;
    };
    const ViewImage mid = interpolate_pair_linear(ramp(-d), ramp(d));
    const ViewImage expected = ramp(0);
    for (int y = 0; y < h; ++y)
        for (int x = d; x < w - d; ++x)
            for (int c = 0; c < 3; ++c)
                ASSERT_EQ(mid.at(x, y, c), expected.at(x, y, c));
}

TEST(Disparity, ZeroForEqualInputs) {
    const ViewImage a = random_image(64, 64, 9);
    const DisparityField f = estimate_disparity(a, a, {1, 0}, 16, 8);
    for (int d : f.displacement) EXPECT_EQ(d, 0);
}

TEST(Disparity, RecoversKnownShift) {
    // b equals a translated 3 px along the baseline (periodic texture)
    const auto spec = single_plane_scene(3.0, 31);
    const ViewImage a = render_synthetic_view(spec, 0, 0, 64, 64);
    const ViewImage b = render_synthetic_view(spec, 0, 1, 64, 64);
    const DisparityField f = estimate_disparity(a, b, {1, 0}, 16, 8);
    for (int d : f.displacement) EXPECT_EQ(d, 3);
}

TEST(Disparity, TieBreaksToZeroOnConstant) {
    const ViewImage a = uniform_image(32, 32, 80);
    const DisparityField f = estimate_disparity(a, a, {0, 1}, 8, 4);
    for (int d : f.displacement) EXPECT_EQ(d, 0);
}

TEST(Disparity, BlockLargerThanImage) {
    EXPECT_THROW(estimate_disparity(ViewImage(8, 8), ViewImage(8, 8), {1, 0},
                                    16, 2),
                 Error);
}

TEST(PairShift, ZeroDisparityMatchesLinear) {
    const ViewImage a = random_image(48, 48, 4);
    const auto spec = InterpolatorSpec::shift(16, 8);
    const ViewImage b = random_image(48, 48, 4);  // identical content
    EXPECT_EQ(interpolate_pair_shift(a, b, {1, 0}, spec),
              interpolate_pair_linear(a, b));
}

TEST(PairShift, EvenIntegerDisparityExactInterior) {
    // adjacent views 2 px apart; midpoint view is the ground truth
    const auto scene = single_plane_scene(2.0, 57);
    const ViewImage a = render_synthetic_view(scene, 0, -1, 96, 96);
    const ViewImage b = render_synthetic_view(scene, 0, 1, 96, 96);
    const ViewImage truth = render_synthetic_view(scene, 0, 0, 96, 96);

    const auto spec = InterpolatorSpec::shift(16, 8);
    const ViewImage mid = interpolate_pair_shift(a, b, {1, 0}, spec);
    const int border = spec.search_radius;
    for (int y = 0; y < 96; ++y)
        for (int x = border; x < 96 - border; ++x)
            for (int c = 0; c < 3; ++c)
                ASSERT_EQ(mid.at(x, y, c), truth.at(x, y, c))
                    << "at " << x << "," << y;
}

TEST(PairShift, MirroredInputsAgree) {
    const auto scene = layered_scene(0.8, 2.0, 13);
    const ViewImage a = render_synthetic_view(scene, 0, -1, 64, 64);
    const ViewImage b = render_synthetic_view(scene, 0, 1, 64, 64);
    const auto spec = InterpolatorSpec::shift(16, 8);
    EXPECT_EQ(interpolate_pair_shift(a, b, {1, 0}, spec),
              interpolate_pair_shift(b, a, {-1, 0}, spec));
}

TEST(PairShift, InvalidSearchRadius) {
    const ViewImage a = uniform_image(16, 16, 0);
    auto spec = InterpolatorSpec::shift(16, 8);
    spec.search_radius = 0;
    EXPECT_THROW(interpolate_pair_shift(a, a, {1, 0}, spec), Error);
    spec.search_radius = 8;
    spec.block_size = 2;
    EXPECT_THROW(interpolate_pair_shift(a, a, {1, 0}, spec), Error);
}

TEST(Quad, IdentityOnEqualInputs) {
    const ViewImage x = random_image(24, 24, 8);
    const std::vector<const ViewImage*> views{&x, &x, &x, &x};
    const std::vector<ViewIndex> indices{{0, 1}, {2, 1}, {1, 0}, {1, 2}};
    EXPECT_EQ(interpolate_quad(views, indices, {1, 1},
                               InterpolatorSpec::linear()),
              x);
    EXPECT_EQ(interpolate_quad(views, indices, {1, 1},
                               InterpolatorSpec::shift(8, 4)),
              x);
}

TEST(Quad, LinearMeanOfFour) {
    const ViewImage z = uniform_image(8, 8, 0);
    const ViewImage h = uniform_image(8, 8, 100);
    const std::vector<const ViewImage*> views{&z, &z, &h, &h};
    const std::vector<ViewIndex> indices{{0, 1}, {2, 1}, {1, 0}, {1, 2}};
    EXPECT_EQ(interpolate_quad(views, indices, {1, 1},
                               InterpolatorSpec::linear()),
              uniform_image(8, 8, 50));
}

TEST(Quad, ShiftEqualsLinearAtZeroDisparity) {
    const ViewImage x = random_image(32, 32, 21);
    const std::vector<const ViewImage*> views{&x, &x, &x, &x};
    const std::vector<ViewIndex> indices{{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    EXPECT_EQ(interpolate_quad(views, indices, {1, 1},
                               InterpolatorSpec::shift(16, 8)),
              interpolate_quad(views, indices, {1, 1},
                               InterpolatorSpec::linear()));
}

TEST(Quad, RejectsAsymmetricGeometry) {
    const ViewImage x = uniform_image(8, 8, 0);
    const std::vector<const ViewImage*> views{&x, &x, &x, &x};
    const std::vector<ViewIndex> indices{{0, 1}, {2, 1}, {1, 0}, {2, 2}};
    EXPECT_THROW(
        interpolate_quad(views, indices, {1, 1}, InterpolatorSpec::linear()),
        Error);
}

// Every interpolator kind stays inside [0,255] and maps equal inputs to
// themselves over random data.
TEST(Interpolators, IdempotentOnEqualInputsProperty) {
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
        const ViewImage x = random_image(32, 24, seed);
        EXPECT_EQ(interpolate_pair_linear(x, x), x);
        EXPECT_EQ(interpolate_pair_shift(x, x, {0, 1},
                                         InterpolatorSpec::shift(8, 2)),
                  x);
    }
}

TEST(Interpolator, DispatchesByMode) {
    const auto scene = single_plane_scene(2.0, 3);
    const ViewImage a = render_synthetic_view(scene, -1, 0, 48, 48);
    const ViewImage b = render_synthetic_view(scene, 1, 0, 48, 48);

    SynthesisStep step{{1, 1}, {{0, 1}, {2, 1}}, InterpMode::PairVertical, 0.5};
    const Interpolator shift{InterpolatorSpec::shift(16, 8)};
    const ViewImage out = shift.synthesize(step, {&a, &b});
    EXPECT_EQ(out, interpolate_pair_shift(a, b, {0, 1},
                                          InterpolatorSpec::shift(16, 8)));

    const Interpolator linear{InterpolatorSpec::linear()};
    EXPECT_EQ(linear.synthesize(step, {&a, &b}), interpolate_pair_linear(a, b));
}

// Headline property: single-plane periodic scenes with even integer
// disparity reconstruct exactly in the interior.
TEST(Interpolators, ShiftOracleExactness) {
    for (double disparity : {2.0, 4.0}) {
        const auto scene = single_plane_scene(disparity, 71);
        const ViewImage a = render_synthetic_view(scene, 0, -1, 64, 64);
        const ViewImage b = render_synthetic_view(scene, 0, 1, 64, 64);
        const ViewImage truth = render_synthetic_view(scene, 0, 0, 64, 64);
        const auto spec = InterpolatorSpec::shift(16, 8);
        const ViewImage mid = interpolate_pair_shift(a, b, {1, 0}, spec);
        int interior_errors = 0;
        for (int y = 0; y < 64; ++y)
            for (int x = 8; x < 56; ++x)
                for (int c = 0; c < 3; ++c)
                    if (mid.at(x, y, c) != truth.at(x, y, c)) ++interior_errors;
        EXPECT_EQ(interior_errors, 0) << "disparity " << disparity;
    }
}
