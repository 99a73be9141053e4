// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "lfs/light_field.hpp"

namespace lfs {

/// Role of one angular position: sampled input, reconstruction target, or
/// left out of both sets entirely.
enum class ViewRole { Input, Output, Unused };

/// Angular sampling pattern kinds. GridLevel(k) keeps views spaced 2^k
/// apart on both axes (input distance 2^k - 1 views), so k = 1..3 gives
/// the 1/3/7-view spacings.
struct PatternKind {
    enum class Tag { RowWise, ColumnWise, Checkerboard, GridLevel };

    Tag tag = Tag::RowWise;
    int level = 0;  // GridLevel only, 1..3

    static PatternKind row_wise() { return {Tag::RowWise, 0}; }
    static PatternKind column_wise() { return {Tag::ColumnWise, 0}; }
    static PatternKind checkerboard() { return {Tag::Checkerboard, 0}; }
    static PatternKind grid_level(int k) { return {Tag::GridLevel, k}; }

    friend bool operator==(const PatternKind&, const PatternKind&) = default;
};

/// Per-position role map over the angular grid.
class ViewMask {
public:
    ViewMask(int rows, int cols, ViewRole fill = ViewRole::Unused)
        : rows_(rows), cols_(cols),
          roles_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 1 || cols < 1)
            throw Error("ViewMask: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ViewRole role(ViewIndex idx) const { return roles_[slot(idx)]; }
    void set_role(ViewIndex idx, ViewRole r) { roles_[slot(idx)] = r; }

    bool in_range(ViewIndex idx) const {
        return idx.u >= 0 && idx.u < rows_ && idx.v >= 0 && idx.v < cols_;
    }

    int count(ViewRole r) const;
    std::vector<ViewIndex> positions(ViewRole r) const;

    ViewMask transposed() const;

    friend bool operator==(const ViewMask&, const ViewMask&) = default;

private:
    std::size_t slot(ViewIndex idx) const {
        return static_cast<std::size_t>(idx.u) * cols_ + idx.v;
    }

    int rows_;
    int cols_;
    std::vector<ViewRole> roles_;
};

/// Builds the mask for one pattern. Symmetric patterns require the outer
/// rows/columns/corners to be sampled, so even dimensions are rejected.
ViewMask generate_pattern(PatternKind kind, int rows, int cols);

/// N_Input / (N_Input + N_Output); Unused positions count toward neither.
double compute_input_ratio(const ViewMask& mask);

/// Keeps only the Input views of a complete light field.
LightField subsample(const LightField& lf, const ViewMask& mask);

} // namespace lfs
