// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "lfs/image.hpp"

namespace lfs {

enum class EpiOrientation { Horizontal, Vertical };

/// EPI slice: one angular and one spatial coordinate fixed. For a
/// horizontal EPI the angular row u is fixed and the image has one row per
/// angular column v; vertical is the transpose arrangement.
struct EpiImage {
    EpiOrientation orientation;
    int fixed_angular = 0;
    int fixed_spatial = 0;
    ViewImage pixels;  // height = angular extent, width = spatial extent
};

/// Dense angular grid of optional RGB views. Immutable by convention after
/// construction; readers may share it across threads.
class LightField {
public:
    LightField(int rows, int cols) : rows_(rows), cols_(cols), views_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 2 || cols < 2)
            throw Error("LightField: grid must be at least 2x2");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool in_range(ViewIndex idx) const {
        return idx.u >= 0 && idx.u < rows_ && idx.v >= 0 && idx.v < cols_;
    }
    bool has_view(ViewIndex idx) const {
        return in_range(idx) && views_[slot(idx)].has_value();
    }

    void set_view(ViewIndex idx, ViewImage img);
    const ViewImage& view(ViewIndex idx) const;

    /// True when every slot is populated.
    bool complete() const;
    std::vector<ViewIndex> empty_slots() const;

    /// View dimensions, taken from the first populated slot.
    int view_width() const;
    int view_height() const;

    /// 4D transpose: swaps the angular axes and spatially transposes each view.
    LightField transposed() const;

    friend bool operator==(const LightField& a, const LightField& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.views_ == b.views_;
    }

private:
    std::size_t slot(ViewIndex idx) const {
        return static_cast<std::size_t>(idx.u) * cols_ + idx.v;
    }

    int rows_;
    int cols_;
    std::vector<std::optional<ViewImage>> views_;
};

ViewImage get_view(const LightField& lf, ViewIndex idx);

/// Horizontal: fixes angular row `fixed_angular` and spatial row
/// `fixed_spatial`; EPI row k is spatial row `fixed_spatial` of view
/// (fixed_angular, k). Vertical fixes the angular column and a spatial
/// column analogously.
EpiImage extract_epi(const LightField& lf, EpiOrientation orientation,
                     int fixed_angular, int fixed_spatial);

} // namespace lfs
