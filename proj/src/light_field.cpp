// SPDX-License-Identifier: Apache-2.0

#include "lfs/light_field.hpp"

#include <string>

namespace lfs {

namespace {
std::string idx_str(ViewIndex idx) {
    return "(" + std::to_string(idx.u) + "," + std::to_string(idx.v) + ")";
}
} // namespace

void LightField::set_view(ViewIndex idx, ViewImage img) {
    if (!in_range(idx))
        throw Error("set_view: index " + idx_str(idx) + " out of range");
    if (view_width() > 0 &&
        (img.width() != view_width() || img.height() != view_height()))
        throw Error("set_view: view size mismatch at " + idx_str(idx));
    views_[slot(idx)] = std::move(img);
}

const ViewImage& LightField::view(ViewIndex idx) const {
    if (!in_range(idx))
        throw Error("view: index " + idx_str(idx) + " out of range");
    const auto& v = views_[slot(idx)];
    if (!v)
        throw Error("view: empty slot at " + idx_str(idx));
    return *v;
}

bool LightField::complete() const {
    for (const auto& v : views_)
        if (!v) return false;
    return true;
}

std::vector<ViewIndex> LightField::empty_slots() const {
    std::vector<ViewIndex> out;
    for (int u = 0; u < rows_; ++u)
        for (int v = 0; v < cols_; ++v)
            if (!views_[slot({u, v})]) out.push_back({u, v});
    return out;
}

int LightField::view_width() const {
    for (const auto& v : views_)
        if (v) return v->width();
    return 0;
}

int LightField::view_height() const {
    for (const auto& v : views_)
        if (v) return v->height();
    return 0;
}

LightField LightField::transposed() const {
    LightField t(cols_, rows_);
    for (int u = 0; u < rows_; ++u)
        for (int v = 0; v < cols_; ++v)
            if (has_view({u, v}))
                t.set_view({v, u}, view({u, v}).transposed());
    return t;
}

ViewImage get_view(const LightField& lf, ViewIndex idx) {
    return lf.view(idx);
}

EpiImage extract_epi(const LightField& lf, EpiOrientation orientation,
                     int fixed_angular, int fixed_spatial) {
    const int w = lf.view_width();
    const int h = lf.view_height();
    if (w == 0)
        throw Error("extract_epi: light field has no views");

    if (orientation == EpiOrientation::Horizontal) {
        if (fixed_angular < 0 || fixed_angular >= lf.rows())
            throw Error("extract_epi: angular row out of range");
        if (fixed_spatial < 0 || fixed_spatial >= h)
            throw Error("extract_epi: spatial row out of range");
        EpiImage epi{orientation, fixed_angular, fixed_spatial,
                     ViewImage(w, lf.cols())};
        for (int k = 0; k < lf.cols(); ++k) {
            const ViewImage& v = lf.view({fixed_angular, k});  // throws on gaps
            for (int x = 0; x < w; ++x)
                for (int c = 0; c < 3; ++c)
                    epi.pixels.at(x, k, c) = v.at(x, fixed_spatial, c);
        }
        return epi;
    }

    if (fixed_angular < 0 || fixed_angular >= lf.cols())
        throw Error("extract_epi: angular column out of range");
    if (fixed_spatial < 0 || fixed_spatial >= w)
        throw Error("extract_epi: spatial column out of range");
    EpiImage epi{orientation, fixed_angular, fixed_spatial,
                 ViewImage(h, lf.rows())};
    for (int k = 0; k < lf.rows(); ++k) {
        const ViewImage& v = lf.view({k, fixed_angular});
        for (int y = 0; y < h; ++y)
            for (int c = 0; c < 3; ++c)
                epi.pixels.at(y, k, c) = v.at(fixed_spatial, y, c);
    }
    return epi;
}

} // namespace lfs
