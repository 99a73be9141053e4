// SPDX-License-Identifier: Apache-2.0

#include "lfs/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lfs {

void InterpolatorSpec::validate() const {
    if (kind == Kind::ShiftCompensated) {
        if (block_size < 4)
            throw Error("InterpolatorSpec: block_size must be >= 4");
        if (search_radius < 1)
            throw Error("InterpolatorSpec: search_radius must be >= 1");
    }
    if (kind == Kind::External && command.empty())
        throw Error("InterpolatorSpec: external command template is empty");
}

BaselineDir baseline_for_mode(InterpMode mode) {
    switch (mode) {
    case InterpMode::PairHorizontal:   return {1, 0};
    case InterpMode::PairVertical:     return {0, 1};
    case InterpMode::PairDiagonalTLBR: return {1, 1};
    case InterpMode::PairDiagonalTRBL: return {-1, 1};
    case InterpMode::Quad:             break;
    }
    throw Error("baseline_for_mode: quad steps have no single baseline");
}

ViewImage interpolate_pair_linear(const ViewImage& a, const ViewImage& b) {
    if (!a.same_size(b))
        throw Error("interpolate_pair_linear: dimension mismatch");
    ViewImage out(a.width(), a.height());
    const auto& sa = a.samples();
    const auto& sb = b.samples();
    auto& so = out.samples();
    for (std::size_t i = 0; i < so.size(); ++i)
        so[i] = static_cast<std::uint8_t>((sa[i] + sb[i] + 1) / 2);
    return out;
}

namespace {

bool in_frame(const ViewImage& img, double fx, double fy) {
    return fx >= 0.0 && fy >= 0.0 && fx <= img.width() - 1 &&
           fy <= img.height() - 1;
}

// Bilinear sample; caller guarantees in_frame.
double sample_linear(const ViewImage& img, double fx, double fy, int c) {
    const int x0 = static_cast<int>(std::floor(fx));
    const int y0 = static_cast<int>(std::floor(fy));
    const double ax = fx - x0, ay = fy - y0;
    const int x1 = std::min(x0 + 1, img.width() - 1);
    const int y1 = std::min(y0 + 1, img.height() - 1);
    return img.at(x0, y0, c) * (1 - ax) * (1 - ay) +
           img.at(x1, y0, c) * ax * (1 - ay) +
           img.at(x0, y1, c) * (1 - ax) * ay + img.at(x1, y1, c) * ax * ay;
}

} // namespace

DisparityField estimate_disparity(const ViewImage& a, const ViewImage& b,
                                  BaselineDir dir, int block_size,
                                  int search_radius) {
    if (!a.same_size(b))
        throw Error("estimate_disparity: dimension mismatch");
    if (block_size > a.width() || block_size > a.height())
        throw Error("estimate_disparity: block larger than image");

    DisparityField field;
    field.block_size = block_size;
    field.blocks_x = (a.width() + block_size - 1) / block_size;
    field.blocks_y = (a.height() + block_size - 1) / block_size;
    field.displacement.resize(
        static_cast<std::size_t>(field.blocks_x) * field.blocks_y, 0);

    // candidate order encodes the tie-break: 0, -1, +1, -2, +2, ...
    std::vector<int> candidates{0};
    for (int d = 1; d <= search_radius; ++d) {
        candidates.push_back(-d);
        candidates.push_back(d);
    }

    for (int by = 0; by < field.blocks_y; ++by) {
        for (int bx = 0; bx < field.blocks_x; ++bx) {
            const int x0 = bx * block_size;
            const int y0 = by * block_size;
            const int x1 = std::min(x0 + block_size, a.width());
            const int y1 = std::min(y0 + block_size, a.height());

            const long full_count =
                static_cast<long>(x1 - x0) * (y1 - y0);
            double best_cost = std::numeric_limits<double>::infinity();
            int best_d = 0;
            for (int d : candidates) {
                // prune once the mean cost cannot beat the current best
                const double prune_at = best_cost * full_count;
                long sad = 0;
                long count = 0;
                for (int y = y0; y < y1 && sad <= prune_at; ++y) {
                    const int sy = y - d * dir.dy;
                    if (sy < 0 || sy >= a.height()) continue;
                    for (int x = x0; x < x1; ++x) {
                        const int sx = x - d * dir.dx;
                        if (sx < 0 || sx >= a.width()) continue;
                        for (int c = 0; c < 3; ++c)
                            sad += std::abs(static_cast<int>(b.at(x, y, c)) -
                                            static_cast<int>(a.at(sx, sy, c)));
                        ++count;
                    }
                }
                if (count == 0 || sad > prune_at) continue;
                const double cost = static_cast<double>(sad) / count;
                if (cost < best_cost) {
                    best_cost = cost;
                    best_d = d;
                }
            }
            field.displacement[static_cast<std::size_t>(by) * field.blocks_x +
                               bx] = best_d;
        }
    }
    return field;
}

ViewImage interpolate_pair_shift(const ViewImage& a, const ViewImage& b,
                                 BaselineDir dir, const InterpolatorSpec& spec) {
    if (spec.kind != InterpolatorSpec::Kind::ShiftCompensated)
        throw Error("interpolate_pair_shift: spec is not shift-compensated");
    spec.validate();
    if (!a.same_size(b))
        throw Error("interpolate_pair_shift: dimension mismatch");

    const DisparityField field =
        estimate_disparity(a, b, dir, spec.block_size, spec.search_radius);

    ViewImage out(a.width(), a.height());
    for (int y = 0; y < a.height(); ++y) {
        for (int x = 0; x < a.width(); ++x) {
            const int bx = x / spec.block_size;
            const int by = y / spec.block_size;
            const double h = field.at(bx, by) / 2.0;
            const double ax = x - h * dir.dx, ay = y - h * dir.dy;
            const double bxp = x + h * dir.dx, byp = y + h * dir.dy;
            if (in_frame(a, ax, ay) && in_frame(b, bxp, byp)) {
                for (int c = 0; c < 3; ++c)
                    out.at(x, y, c) = round_to_u8(
                        (sample_linear(a, ax, ay, c) +
                         sample_linear(b, bxp, byp, c)) / 2.0);
            } else {
                for (int c = 0; c < 3; ++c)
                    out.at(x, y, c) = static_cast<std::uint8_t>(
                        (a.at(x, y, c) + b.at(x, y, c) + 1) / 2);
            }
        }
    }
    return out;
}

ViewImage interpolate_quad(const std::vector<const ViewImage*>& views,
                           const std::vector<ViewIndex>& indices,
                           ViewIndex target, const InterpolatorSpec& spec) {
    if (views.size() != 4 || indices.size() != 4)
        throw Error("interpolate_quad: exactly four sources required");
    for (const ViewImage* v : views)
        if (!v->same_size(*views[0]))
            throw Error("interpolate_quad: dimension mismatch");
    for (ViewIndex idx : indices) {
        const ViewIndex mirror{2 * target.u - idx.u, 2 * target.v - idx.v};
        if (std::find(indices.begin(), indices.end(), mirror) == indices.end())
            throw Error("interpolate_quad: sources not symmetric about target");
    }

    if (spec.kind != InterpolatorSpec::Kind::ShiftCompensated) {
        ViewImage out(views[0]->width(), views[0]->height());
        auto& so = out.samples();
        for (std::size_t i = 0; i < so.size(); ++i) {
            const int sum = views[0]->samples()[i] + views[1]->samples()[i] +
                            views[2]->samples()[i] + views[3]->samples()[i];
            so[i] = static_cast<std::uint8_t>((sum + 2) / 4);
        }
        return out;
    }

    // split into the two opposing pairs and average their interpolations
    const ViewIndex first = indices[0];
    const ViewIndex mirror0{2 * target.u - first.u, 2 * target.v - first.v};
    std::vector<int> pair_a{0, 0}, pair_b;
    for (int i = 1; i < 4; ++i) {
        if (indices[i] == mirror0 && pair_a[1] == 0)
            pair_a[1] = i;
        else
            pair_b.push_back(i);
    }
    auto pair_interp = [&](int i, int j) {
        const ViewIndex d{indices[j].u - indices[i].u,
                          indices[j].v - indices[i].v};
        const BaselineDir dir{(d.v > 0) - (d.v < 0), (d.u > 0) - (d.u < 0)};
        return interpolate_pair_shift(*views[i], *views[j], dir, spec);
    };
    const ViewImage r1 = pair_interp(pair_a[0], pair_a[1]);
    const ViewImage r2 = pair_interp(pair_b[0], pair_b[1]);
    return interpolate_pair_linear(r1, r2);
}

Interpolator::Interpolator(InterpolatorSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
}

ViewImage Interpolator::synthesize(
    const SynthesisStep& step,
    const std::vector<const ViewImage*>& sources) const {
    if (spec_.kind == InterpolatorSpec::Kind::External)
        return interpolate_external(step, sources, spec_);

    if (step.mode == InterpMode::Quad)
        return interpolate_quad(sources, step.sources, step.target, spec_);

    if (sources.size() != 2)
        throw Error("synthesize: pair mode needs two sources");
    if (spec_.kind == InterpolatorSpec::Kind::Linear)
        return interpolate_pair_linear(*sources[0], *sources[1]);
    return interpolate_pair_shift(*sources[0], *sources[1],
                                  baseline_for_mode(step.mode), spec_);
}

} // namespace lfs
